// search.cpp — depth-bounded proof search: forward rule application, lemma
// citation up to substitution (multiset matching), and goal-directed
// decomposition through the second-degree combinators.
#include "alfa/search.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace alfa {

namespace {

using Subst = std::map<std::string, Graph>;
using Emit = std::function<void(const Subst&)>;

Graph remove_at(const Graph& g, std::size_t index) {
  std::vector<Item> items = g.items();
  items.erase(items.begin() + static_cast<std::ptrdiff_t>(index));
  return Graph(std::move(items));
}

Graph repeat(const Graph& g, std::size_t count) {
  Graph out;
  for (std::size_t i = 0; i < count; ++i) out = multiset_union(out, g);
  return out;
}

struct Matcher {
  const std::set<std::string>& vars;

  bool is_var_atom(const Item& it) const {
    const auto* a = std::get_if<Atom>(&it.node);
    return a && vars.count(a->name) > 0;
  }

  void match_region(const Graph& pattern, const Graph& subject,
                    const Subst& sigma, const Emit& emit) const {
    std::vector<Item> concrete;
    std::vector<std::pair<std::string, std::size_t>> var_counts;
    for (const Item& it : pattern.items()) {
      if (is_var_atom(it)) {
        const std::string& name = std::get<Atom>(it.node).name;
        auto found = std::find_if(var_counts.begin(), var_counts.end(),
                                  [&](const auto& p) { return p.first == name; });
        if (found == var_counts.end())
          var_counts.emplace_back(name, 1);
        else
          ++found->second;
      } else {
        concrete.push_back(it);
      }
    }
    match_concrete(concrete, 0, var_counts, subject, sigma, emit);
  }

  void match_concrete(const std::vector<Item>& concrete, std::size_t ci,
                      const std::vector<std::pair<std::string, std::size_t>>& var_counts,
                      const Graph& subject, const Subst& sigma,
                      const Emit& emit) const {
    if (ci == concrete.size()) {
      distribute(var_counts, 0, subject, sigma, emit);
      return;
    }
    const Item& p = concrete[ci];
    for (std::size_t i = 0; i < subject.items().size(); ++i) {
      if (i > 0 && cmp(subject.items()[i], subject.items()[i - 1]) == 0)
        continue;  // items are sorted; identical choices give identical branches
      Graph rest = remove_at(subject, i);
      match_item(p, subject.items()[i], sigma, [&](const Subst& s2) {
        match_concrete(concrete, ci + 1, var_counts, rest, s2, emit);
      });
    }
  }

  void match_item(const Item& p, const Item& s, const Subst& sigma,
                  const Emit& emit) const {
    if (p.node.index() != s.node.index()) return;
    if (const auto* pa = std::get_if<Atom>(&p.node)) {
      if (pa->name == std::get<Atom>(s.node).name) emit(sigma);
      return;
    }
    if (const auto* pc = std::get_if<Cut>(&p.node)) {
      match_region(pc->body, std::get<Cut>(s.node).body, sigma, emit);
      return;
    }
    if (const auto* ps = std::get_if<Scroll>(&p.node)) {
      const auto& ss = std::get<Scroll>(s.node);
      match_region(ps->antecedent, ss.antecedent, sigma, [&](const Subst& s1) {
        match_region(ps->consequent, ss.consequent, s1, emit);
      });
      return;
    }
    const auto& pd = std::get<Disj>(p.node);
    const auto& sd = std::get<Disj>(s.node);
    auto oriented = [&](const Graph& sl, const Graph& sr) {
      match_region(pd.left, sl, sigma, [&](const Subst& s1) {
        match_region(pd.right, sr, s1, emit);
      });
    };
    oriented(sd.left, sd.right);
    if (sd.left != sd.right) oriented(sd.right, sd.left);
  }

  void distribute(const std::vector<std::pair<std::string, std::size_t>>& var_counts,
                  std::size_t vi, const Graph& remaining, const Subst& sigma,
                  const Emit& emit) const {
    if (vi == var_counts.size()) {
      if (remaining.blank()) emit(sigma);
      return;
    }
    const auto& [name, count] = var_counts[vi];
    if (auto it = sigma.find(name); it != sigma.end()) {
      Graph need = repeat(it->second, count);
      if (submultiset(need, remaining))
        distribute(var_counts, vi + 1, multiset_minus(remaining, need), sigma, emit);
      return;
    }
    for (const auto& [cand, rest] : splits(remaining)) {
      Subst s2 = sigma;
      s2.emplace(name, cand);
      if (count == 1) {
        distribute(var_counts, vi + 1, rest, s2, emit);
      } else {
        Graph need = repeat(cand, count);
        if (submultiset(need, remaining))
          distribute(var_counts, vi + 1, multiset_minus(remaining, need), s2, emit);
      }
    }
  }
};

struct Searcher {
  const SystemRegistry& reg;
  const LemmaDb& db;
  const SearchOptions& opts;
  SearchStats stats;
  std::vector<Graph> pool;
  std::map<std::pair<Graph, Graph>, int> failed;
  int fresh_counter = 0;

  std::string fresh() { return "s" + std::to_string(++fresh_counter); }

  bool has_rule(RuleId r) const {
    return std::find(reg.basic.begin(), reg.basic.end(), r) != reg.basic.end();
  }

  bool too_big(const Graph& g) const { return measure(g).size > opts.max_size; }

  std::optional<std::vector<Step>> dfs(const Graph& g, const Graph& t, int budget) {
    if (g == t) return std::vector<Step>{};
    if (budget <= 0) return std::nullopt;
    auto key = std::make_pair(g, t);
    if (auto it = failed.find(key); it != failed.end() && it->second >= budget) {
      ++stats.pruned;
      return std::nullopt;
    }
    ++stats.visited;

    auto chain = [&](Step first, const Graph& next) -> std::optional<std::vector<Step>> {
      if (auto sub = dfs(next, t, budget - 1)) {
        std::vector<Step> steps;
        steps.push_back(std::move(first));
        for (Step& s : *sub) steps.push_back(std::move(s));
        return steps;
      }
      return std::nullopt;
    };

    // Forward application of the system's first-degree rules.
    for (RuleId r : reg.basic) {
      if (rule_degree(r) != 1) continue;
      std::vector<std::optional<Graph>> witnesses;
      if (rule_needs_witness(r))
        for (const Graph& w : pool) witnesses.emplace_back(w);
      else
        witnesses.emplace_back(std::nullopt);
      for (const auto& w : witnesses)
        for (const Graph& u : apply_first_degree(r, g, w)) {
          if (u == g || too_big(u)) continue;
          if (auto steps = chain({FirstDegreeStep{r, w, u}}, u)) return steps;
        }
    }

    // Lemma citations, instantiated by matching the claim source against g.
    if (opts.use_lemmas) {
      for (const LemmaInfo& li : db.entries()) {
        if (!system_subsumes(reg.id, li.derivation.system)) continue;
        for (const Subst& sigma :
             match_graph(li.claim.source, g, li.derivation.vars)) {
          std::vector<std::string> missing;
          for (const std::string& v : li.derivation.vars)
            if (!sigma.count(v)) missing.push_back(v);
          if (missing.size() > 2) continue;
          std::vector<Subst> fills = {sigma};
          for (const std::string& v : missing) {
            std::vector<Subst> next;
            for (const Subst& base : fills)
              for (const Graph& w : pool) {
                Subst s2 = base;
                s2.emplace(v, w);
                next.push_back(std::move(s2));
              }
            fills = std::move(next);
          }
          for (const Subst& full : fills) {
            Graph u = substitute(li.claim.target, full);
            if (u == g || too_big(u)) continue;
            if (auto steps = chain({LemmaStep{li.derivation.name, full, u}}, u))
              return steps;
          }
        }
      }
    }

    // Goal-directed discharge: a scroll target via R8I.
    if (t.arity() == 1 && has_rule(RuleId::R8I) && budget >= 2) {
      if (const auto* sc = std::get_if<Scroll>(&t.items()[0].node)) {
        Graph premise_src = multiset_union(g, sc->antecedent);
        if (!too_big(premise_src)) {
          if (auto sub = dfs(premise_src, sc->consequent, budget - 2)) {
            std::string h = fresh();
            std::vector<Step> steps;
            steps.push_back({HaveStep{h, {premise_src, sc->consequent}, std::move(*sub)}});
            steps.push_back({SecondDegreeStep{RuleId::R8I, {h}, g, t}});
            return steps;
          }
        }
      }
    }

    // Goal-directed discharge: a cut-shaped target via R8.
    if (t.arity() == 1 && has_rule(RuleId::R8) && budget >= 2) {
      if (const auto* tc = std::get_if<Cut>(&t.items()[0].node)) {
        for (std::size_t i = 0; i < tc->body.items().size(); ++i) {
          if (i > 0 && cmp(tc->body.items()[i], tc->body.items()[i - 1]) == 0)
            continue;
          const auto* inner = std::get_if<Cut>(&tc->body.items()[i].node);
          if (!inner) continue;
          Graph b = remove_at(tc->body, i);
          Graph premise_src = multiset_union(g, b);
          if (too_big(premise_src)) continue;
          if (auto sub = dfs(premise_src, inner->body, budget - 2)) {
            std::string h = fresh();
            std::vector<Step> steps;
            steps.push_back({HaveStep{h, {premise_src, inner->body}, std::move(*sub)}});
            steps.push_back({SecondDegreeStep{RuleId::R8, {h}, g, t}});
            return steps;
          }
        }
      }
    }

    // Backward closing rules: reach a pre-image of the target first.
    if (t.arity() == 1) {
      if (const auto* tc = std::get_if<Cut>(&t.items()[0].node)) {
        if (has_rule(RuleId::E_P)) {
          for (std::size_t i = 0; i < tc->body.items().size(); ++i) {
            if (i > 0 && cmp(tc->body.items()[i], tc->body.items()[i - 1]) == 0)
              continue;
            const auto* inner = std::get_if<Cut>(&tc->body.items()[i].node);
            if (!inner) continue;
            Graph pre = sheet({scroll(remove_at(tc->body, i), inner->body)});
            if (too_big(pre)) continue;
            if (auto sub = dfs(g, pre, budget - 1)) {
              sub->push_back({FirstDegreeStep{RuleId::E_P, std::nullopt, t}});
              return sub;
            }
          }
        }
        if (has_rule(RuleId::E_NEG)) {
          Graph pre = sheet({scroll(tc->body, falsum())});
          if (!too_big(pre)) {
            if (auto sub = dfs(g, pre, budget - 1)) {
              sub->push_back({FirstDegreeStep{RuleId::E_NEG, std::nullopt, t}});
              return sub;
            }
          }
        }
      }
      if (const auto* td = std::get_if<Disj>(&t.items()[0].node)) {
        if (has_rule(RuleId::I_OR)) {
          auto via = [&](const Graph& part,
                         const Graph& other) -> std::optional<std::vector<Step>> {
            if (auto sub = dfs(g, part, budget - 1)) {
              sub->push_back({FirstDegreeStep{RuleId::I_OR, other, t}});
              return sub;
            }
            return std::nullopt;
          };
          if (auto steps = via(td->left, td->right)) return steps;
          if (td->left != td->right)
            if (auto steps = via(td->right, td->left)) return steps;
        }
      }
    }

    // Case split on a disjunction-loop source.
    if (g.arity() == 1 && has_rule(RuleId::E_OR) && budget >= 3) {
      if (const auto* gd = std::get_if<Disj>(&g.items()[0].node)) {
        if (auto s1 = dfs(gd->left, t, budget - 3)) {
          if (auto s2 = dfs(gd->right, t, budget - 3)) {
            std::string h1 = fresh(), h2 = fresh();
            std::vector<Step> steps;
            steps.push_back({HaveStep{h1, {gd->left, t}, std::move(*s1)}});
            steps.push_back({HaveStep{h2, {gd->right, t}, std::move(*s2)}});
            steps.push_back({SecondDegreeStep{RuleId::E_OR, {h1, h2}, std::nullopt, t}});
            return steps;
          }
        }
      }
    }

    // Split a multi-item target through the joining combinator.
    if (t.arity() >= 2 && has_rule(RuleId::R0) && budget >= 3) {
      for (const auto& [t1, t2] : splits(t)) {
        if (t1.blank() || t2.blank() || cmp(t1, t2) > 0) continue;
        if (auto s1 = dfs(g, t1, budget - 3)) {
          if (auto s2 = dfs(g, t2, budget - 3)) {
            std::string h1 = fresh(), h2 = fresh();
            std::vector<Step> steps;
            steps.push_back({HaveStep{h1, {g, t1}, std::move(*s1)}});
            steps.push_back({HaveStep{h2, {g, t2}, std::move(*s2)}});
            steps.push_back({SecondDegreeStep{RuleId::R0, {h1, h2}, std::nullopt, t}});
            return steps;
          }
        }
      }
    }

    auto [it, inserted] = failed.emplace(key, budget);
    if (!inserted) it->second = std::max(it->second, budget);
    return std::nullopt;
  }
};

}  // namespace

std::vector<std::map<std::string, Graph>> match_graph(
    const Graph& pattern, const Graph& subject,
    const std::vector<std::string>& vars) {
  std::set<std::string> var_set(vars.begin(), vars.end());
  std::set<Subst> solutions;
  Matcher m{var_set};
  m.match_region(pattern, subject, {},
                 [&](const Subst& sigma) { solutions.insert(sigma); });
  return {solutions.begin(), solutions.end()};
}

std::optional<Derivation> prove(SystemId system, const Sequent& goal,
                                const LemmaDb& db, const SearchOptions& opts,
                                SearchStats* stats) {
  Searcher searcher{registry(system), db, opts};
  std::set<Graph> pool_set;
  for (const Graph& g : subgraph_pool(goal.source)) pool_set.insert(g);
  for (const Graph& g : subgraph_pool(goal.target)) pool_set.insert(g);
  for (const Graph& g : opts.witnesses) pool_set.insert(g);
  searcher.pool.assign(pool_set.begin(), pool_set.end());
  std::stable_sort(searcher.pool.begin(), searcher.pool.end(),
                   [](const Graph& a, const Graph& b) {
                     return measure(a).size < measure(b).size;
                   });
  if (searcher.pool.size() > 24) searcher.pool.resize(24);

  auto steps = searcher.dfs(goal.source, goal.target, opts.max_steps);
  if (stats) *stats = searcher.stats;
  if (!steps) return std::nullopt;
  Derivation d;
  d.system = system;
  d.name = "search_result";
  d.initial = goal.source;
  d.steps = std::move(*steps);
  if (!check(d, db).ok) return std::nullopt;
  return d;
}

}  // namespace alfa
