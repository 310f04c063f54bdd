// fuzz.cpp — property suite implementations.
#include "alfa/fuzz.hpp"

#include <algorithm>
#include <set>

#include "alfa/formula.hpp"

namespace alfa {

namespace {

void record_failure(FuzzReport& report, const std::string& sample) {
  ++report.failures;
  if (report.samples.size() < 5) report.samples.push_back(sample);
}

// Sheets shaped so the rule under test fires often instead of vacuously.
Graph shaped_graph(RuleId rule, Gen& gen) {
  const auto& atoms = default_atoms();
  switch (rule) {
    case RuleId::R3:
    case RuleId::R4:
    case RuleId::R7:
    case RuleId::I_P2:
    case RuleId::I_NEG:
      return sheet({cut(gen.graph(2, 3, atoms))});
    case RuleId::R5: {
      if (gen.chance(30)) return gen.graph(3, 4, atoms);
      Graph a = gen.graph(2, 2, atoms);
      Graph b = gen.graph(2, 2, atoms);
      return multiset_union(a, sheet({cut(multiset_union(a, b))}));
    }
    case RuleId::R6: {
      Graph ctx = gen.graph(2, 2, atoms);
      Graph b = gen.graph(2, 2, atoms);
      return multiset_union(ctx, sheet({cut(sheet({cut(b)}))}));
    }
    case RuleId::MPI: {
      if (gen.chance(30)) return gen.graph(3, 4, atoms);
      Graph a = gen.graph(2, 2, atoms);
      Graph b = gen.graph(2, 2, atoms);
      return multiset_union(a, sheet({scroll(a, b)}));
    }
    case RuleId::E_BOT:
      return gen.chance(20) ? gen.graph(2, 2, atoms) : falsum();
    case RuleId::E_NEG:
      return sheet({scroll(gen.graph(2, 3, atoms),
                           gen.chance(75) ? falsum() : gen.graph(1, 1, atoms))});
    case RuleId::E_P:
      return sheet({scroll(gen.graph(2, 2, atoms), gen.graph(2, 2, atoms))});
    case RuleId::I_P3:
      return sheet({disj(gen.graph(2, 2, atoms), gen.graph(2, 2, atoms))});
    case RuleId::I_ORP:
      return sheet({cut(sheet({cut(gen.graph(2, 2, atoms)),
                               cut(gen.graph(2, 2, atoms))}))});
    default:
      return gen.graph(3, 4, atoms);
  }
}

std::string logic_name(Logic logic) {
  return logic == Logic::Classical ? "classical" : "constructive";
}

// Premise sequents that are often (but not always) semantically sound, so the
// conditional second-degree property is exercised rather than vacuous.
Sequent biased_sequent(Gen& gen) {
  Graph source = gen.graph(2, 3, default_atoms());
  std::size_t roll = gen.pick(10);
  if (roll < 4) {
    auto all = splits(source);
    return {source, all[gen.pick(all.size())].first};  // an erasure image
  }
  if (roll < 6) return {source, source};
  return {source, gen.graph(2, 3, default_atoms())};
}

}  // namespace

FuzzReport fuzz_rule_soundness_logic(Logic logic, RuleId rule, std::size_t cases,
                                     std::uint64_t seed) {
  FuzzReport report;
  report.suite = "rule_soundness(" + rule_name(rule) + ", " + logic_name(logic) + ")";
  Gen gen(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    ++report.cases;
    Graph g = shaped_graph(rule, gen);
    std::optional<Graph> w;
    if (rule_needs_witness(rule)) w = gen.graph(2, 2, default_atoms());
    for (const Graph& u : apply_first_degree(rule, g, w)) {
      ++report.checks;
      if (!sequent_sound(logic, g, u))
        record_failure(report, rule_name(rule) + ": " + print_graph(g) + " |- " +
                                   print_graph(u));
    }
  }
  return report;
}

FuzzReport fuzz_rule_soundness(SystemId system, RuleId rule, std::size_t cases,
                               std::uint64_t seed) {
  FuzzReport report =
      fuzz_rule_soundness_logic(registry(system).logic, rule, cases, seed);
  report.suite = "rule_soundness(" + system_name(system) + "/" + rule_name(rule) + ")";
  return report;
}

FuzzReport fuzz_second_degree(RuleId rule, std::size_t cases, std::uint64_t seed) {
  FuzzReport report;
  report.suite = "second_degree(" + rule_name(rule) + ")";
  Gen gen(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    ++report.cases;
    std::vector<Sequent> premises;
    Graph context;
    switch (rule) {
      case RuleId::R0: {
        Sequent a = biased_sequent(gen);
        premises = {a, {a.source, biased_sequent(gen).target}};
        break;
      }
      case RuleId::E_OR: {
        Sequent a = biased_sequent(gen);
        premises = {a, {biased_sequent(gen).source, a.target}};
        break;
      }
      case RuleId::CTX:
        premises = {biased_sequent(gen)};
        context = gen.graph(2, 2, default_atoms());
        break;
      default:
        premises = {biased_sequent(gen)};
        break;
    }
    std::vector<Sequent> conclusions;
    if (rule == RuleId::CTX)
      conclusions = {ctx_lift(premises[0], context)};
    else
      conclusions = conclude_second_degree(rule, premises);
    for (Logic logic : {Logic::Intuitionistic, Logic::Classical}) {
      bool premises_sound = true;
      for (const Sequent& p : premises)
        premises_sound = premises_sound && sequent_sound(logic, p.source, p.target);
      if (!premises_sound) continue;
      for (const Sequent& c : conclusions) {
        ++report.checks;
        if (!sequent_sound(logic, c.source, c.target))
          record_failure(report, rule_name(rule) + " (" + logic_name(logic) +
                                     "): " + print_graph(c.source) + " |- " +
                                     print_graph(c.target));
      }
    }
  }
  return report;
}

FuzzReport fuzz_substitutivity(std::size_t cases, std::uint64_t seed) {
  FuzzReport report;
  report.suite = "substitutivity";
  Gen gen(seed);
  const std::vector<RuleId> first_degree = {
      RuleId::R2,    RuleId::R3,    RuleId::R4,  RuleId::R5,   RuleId::R6,
      RuleId::R7,    RuleId::I_OR,  RuleId::I_NEG, RuleId::E_NEG, RuleId::MPI,
      RuleId::E_BOT, RuleId::I_P2,  RuleId::I_P3,  RuleId::E_P, RuleId::I_ORP};
  for (std::size_t i = 0; i < cases; ++i) {
    ++report.cases;
    RuleId rule = first_degree[gen.pick(first_degree.size())];
    Graph g = shaped_graph(rule, gen);
    std::optional<Graph> w;
    if (rule_needs_witness(rule)) w = gen.graph(2, 2, default_atoms());
    std::vector<Graph> results = apply_first_degree(rule, g, w);
    if (results.empty()) continue;
    Graph u = results[gen.pick(results.size())];
    std::map<std::string, Graph> sigma = gen.graph_subst(default_atoms());
    Graph sg = substitute(g, sigma);
    Graph su = substitute(u, sigma);
    std::optional<Graph> sw;
    if (w) sw = substitute(*w, sigma);
    std::vector<Graph> mapped = apply_first_degree(rule, sg, sw);
    ++report.checks;
    if (std::find(mapped.begin(), mapped.end(), su) == mapped.end())
      record_failure(report, rule_name(rule) + ": image of " + print_graph(g) +
                                 " |- " + print_graph(u) + " not reachable from " +
                                 print_graph(sg));
  }
  return report;
}

FuzzReport fuzz_graph_round_trip(std::size_t cases, std::uint64_t seed) {
  FuzzReport report;
  report.suite = "graph_round_trip";
  Gen gen(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    ++report.cases;
    Graph g = gen.graph(4, 5, default_atoms());
    ++report.checks;
    try {
      if (parse_graph(print_graph(g)) != g)
        record_failure(report, print_graph(g));
    } catch (const ParseError& e) {
      record_failure(report, print_graph(g) + " (" + e.what() + ")");
    }
  }
  return report;
}

FuzzReport fuzz_formula_round_trip(std::size_t cases, std::uint64_t seed) {
  FuzzReport report;
  report.suite = "formula_round_trip";
  Gen gen(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    ++report.cases;
    Formula f = gen.formula(6, default_atoms());
    ++report.checks;
    try {
      if (parse_formula(print_formula(f)) != f)
        record_failure(report, print_formula(f));
    } catch (const ParseError& e) {
      record_failure(report, print_formula(f) + " (" + e.what() + ")");
    }
  }
  return report;
}

FuzzReport fuzz_translation_equivalence(std::size_t cases, std::uint64_t seed) {
  FuzzReport report;
  report.suite = "translation_equivalence";
  Gen gen(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    ++report.cases;
    Formula f = gen.formula(4, default_atoms());
    ++report.checks;
    if (!ipc_equivalent(translate(embed(f)), f))
      record_failure(report, print_formula(f));
    Graph g = gen.graph(3, 3, default_atoms());
    Formula tg = translate(g);
    ++report.checks;
    if (!ipc_equivalent(translate(embed(tg)), tg))
      record_failure(report, print_graph(g));
  }
  return report;
}

FuzzReport fuzz_glivenko(std::size_t cases, std::uint64_t seed) {
  FuzzReport report;
  report.suite = "glivenko";
  Gen gen(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    ++report.cases;
    Formula f = gen.formula(5, {"p", "q", "r"});
    ++report.checks;
    if (classical_valid(f) != ipc_valid(Formula::neg(Formula::neg(f))))
      record_failure(report, print_formula(f));
  }
  return report;
}

std::vector<Formula> small_formula_family(int max_connectives) {
  std::vector<std::vector<Formula>> by_size;
  by_size.push_back({Formula::atom("p"), Formula::atom("q"), Formula::top(),
                     Formula::bot()});
  for (int n = 1; n <= max_connectives; ++n) {
    std::vector<Formula> level;
    for (int l = 0; l < n; ++l) {
      int r = n - 1 - l;
      for (const Formula& a : by_size[static_cast<std::size_t>(l)])
        for (const Formula& b : by_size[static_cast<std::size_t>(r)]) {
          level.push_back(Formula::conj(a, b));
          level.push_back(Formula::disj(a, b));
          level.push_back(Formula::imp(a, b));
        }
    }
    by_size.push_back(std::move(level));
  }
  std::vector<Formula> family;
  std::set<std::string> seen;
  for (const auto& level : by_size)
    for (const Formula& f : level)
      if (seen.insert(print_formula(f)).second) family.push_back(f);
  return family;
}

bool rule_unsound_at(RuleId rule, Logic logic, const Graph& g) {
  if (rule_needs_witness(rule)) return false;
  for (const Graph& u : apply_first_degree(rule, g, std::nullopt))
    if (!sequent_sound(logic, g, u)) return true;
  return false;
}

namespace {

std::vector<Graph> region_candidates(const Graph& g);

std::vector<Item> item_candidates(const Item& it) {
  std::vector<Item> out;
  if (const auto* c = std::get_if<Cut>(&it.node)) {
    for (const Graph& b : region_candidates(c->body)) out.push_back(cut(b));
  } else if (const auto* s = std::get_if<Scroll>(&it.node)) {
    for (const Graph& a : region_candidates(s->antecedent))
      out.push_back(scroll(a, s->consequent));
    for (const Graph& c2 : region_candidates(s->consequent))
      out.push_back(scroll(s->antecedent, c2));
  } else if (const auto* d = std::get_if<Disj>(&it.node)) {
    for (const Graph& l : region_candidates(d->left)) out.push_back(disj(l, d->right));
    for (const Graph& r : region_candidates(d->right)) out.push_back(disj(d->left, r));
  }
  return out;
}

std::vector<Graph> region_candidates(const Graph& g) {
  std::vector<Graph> out;
  const auto& items = g.items();
  for (std::size_t i = 0; i < items.size(); ++i) {
    std::vector<Item> rest = items;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    out.push_back(Graph(rest));  // drop the item
    // unwrap the item into the surrounding region
    if (const auto* c = std::get_if<Cut>(&items[i].node)) {
      out.push_back(multiset_union(Graph(rest), c->body));
    } else if (const auto* s = std::get_if<Scroll>(&items[i].node)) {
      out.push_back(multiset_union(Graph(rest), s->antecedent));
      out.push_back(multiset_union(Graph(rest), s->consequent));
    } else if (const auto* d = std::get_if<Disj>(&items[i].node)) {
      out.push_back(multiset_union(Graph(rest), d->left));
      out.push_back(multiset_union(Graph(rest), d->right));
    }
    // shrink inside the item
    for (const Item& cand : item_candidates(items[i])) {
      std::vector<Item> replaced = rest;
      replaced.push_back(cand);
      out.push_back(Graph(replaced));
    }
  }
  return out;
}

Graph rename_all_atoms(const Graph& g) {
  std::map<std::string, Graph> sigma;
  for (const std::string& name : atom_names(g))
    sigma.emplace(name, sheet({atom("p")}));
  return substitute(g, sigma);
}

}  // namespace

Graph shrink_unsound(RuleId rule, Logic logic, Graph g) {
  if (!rule_unsound_at(rule, logic, g)) return g;
  for (;;) {
    bool improved = false;
    for (const Graph& cand : region_candidates(g)) {
      if (cand == g) continue;
      if (rule_unsound_at(rule, logic, cand)) {
        g = cand;
        improved = true;
        break;
      }
    }
    if (improved) continue;
    Graph renamed = rename_all_atoms(g);
    if (renamed != g && rule_unsound_at(rule, logic, renamed)) {
      g = renamed;
      continue;
    }
    return g;
  }
}

}  // namespace alfa
