// rules.cpp — rule catalog implementation: first-degree sheet rewrites,
// second-degree derivation combinators, system registries.
#include "alfa/rules.hpp"

#include <algorithm>
#include <stdexcept>

namespace alfa {

namespace {

struct RuleInfo {
  RuleId id;
  std::string name;
  int degree;
  bool needs_witness;
};

const std::vector<RuleInfo>& rule_table() {
  static const std::vector<RuleInfo> table = {
      {RuleId::R0, "R0", 2, false},     {RuleId::R2, "R2", 1, false},
      {RuleId::R3, "R3", 1, true},      {RuleId::R4, "R4", 1, false},
      {RuleId::R5, "R5", 1, false},     {RuleId::R6, "R6", 1, false},
      {RuleId::R7, "R7", 1, false},     {RuleId::R8, "R8", 2, false},
      {RuleId::I_OR, "I_OR", 1, true},  {RuleId::I_NEG, "I_NEG", 1, false},
      {RuleId::E_NEG, "E_NEG", 1, false}, {RuleId::MPI, "MPI", 1, false},
      {RuleId::E_BOT, "E_BOT", 1, true},  {RuleId::R8I, "R8I", 2, false},
      {RuleId::R8ID, "R8ID", 2, false},   {RuleId::E_OR, "E_OR", 2, false},
      {RuleId::I_P2, "I_P2", 1, false},   {RuleId::I_P3, "I_P3", 1, false},
      {RuleId::E_P, "E_P", 1, false},     {RuleId::I_ORP, "I_ORP", 1, false},
      {RuleId::CTX, "CTX", 2, false},
  };
  return table;
}

const RuleInfo& info(RuleId id) {
  for (const auto& r : rule_table())
    if (r.id == id) return r;
  throw std::logic_error("unknown rule id");
}

void sort_unique(std::vector<Graph>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void sort_unique(std::vector<Sequent>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end(),
                      [](const Sequent& a, const Sequent& b) { return a == b; }),
          v.end());
}

const Graph& require_witness(RuleId rule, const std::optional<Graph>& w) {
  if (!w)
    throw std::invalid_argument("rule " + rule_name(rule) + " needs a witness");
  return *w;
}

// --- first-degree rule bodies ------------------------------------------------

// A ⊎ B  ⊢  A   (erase any sub-multiset; B may be empty)
std::vector<Graph> apply_r2(const Graph& g) {
  std::vector<Graph> out;
  for (auto& [keep, drop] : splits(g)) out.push_back(keep);
  return out;
}

// {Cut(A)}  ⊢  {Cut(A ⊎ W)}   (insert the witness inside the sheet's one cut)
std::vector<Graph> apply_r3(const Graph& g, const Graph& w) {
  std::vector<Graph> out;
  if (g.arity() != 1) return out;
  if (const auto* c = std::get_if<Cut>(&g.items()[0].node))
    out.push_back(sheet({cut(multiset_union(c->body, w))}));
  return out;
}

// {Cut(B ⊎ C ⊎ {Cut(A)})}  ⊢  {Cut(B ⊎ C ⊎ {Cut(A ⊎ B)})}
// (iterate a sub-multiset of a cut's content into a cut nested inside it)
std::vector<Graph> apply_r4(const Graph& g) {
  std::vector<Graph> out;
  if (g.arity() != 1) return out;
  const auto* outer = std::get_if<Cut>(&g.items()[0].node);
  if (!outer) return out;
  const Graph& body = outer->body;
  for (std::size_t i = 0; i < body.items().size(); ++i) {
    const auto* inner = std::get_if<Cut>(&body.items()[i].node);
    if (!inner) continue;
    std::vector<Item> rest_items = body.items();
    rest_items.erase(rest_items.begin() + static_cast<std::ptrdiff_t>(i));
    Graph rest = sheet(rest_items);
    for (auto& [b, c] : splits(rest)) {
      Graph new_body = multiset_union(rest, sheet({cut(multiset_union(inner->body, b))}));
      out.push_back(sheet({cut(new_body)}));
    }
  }
  return out;
}

// A ⊎ {Cut(A ⊎ B)}  ⊢  A ⊎ {Cut(B)}
// (deiterate the whole surrounding context from inside a cut)
std::vector<Graph> apply_r5(const Graph& g) {
  std::vector<Graph> out;
  for (std::size_t i = 0; i < g.items().size(); ++i) {
    const auto* c = std::get_if<Cut>(&g.items()[i].node);
    if (!c) continue;
    std::vector<Item> ctx_items = g.items();
    ctx_items.erase(ctx_items.begin() + static_cast<std::ptrdiff_t>(i));
    Graph ctx = sheet(ctx_items);
    if (!submultiset(ctx, c->body)) continue;
    Graph new_cut_body = multiset_minus(c->body, ctx);
    out.push_back(multiset_union(ctx, sheet({cut(new_cut_body)})));
  }
  return out;
}

// A ⊎ {Cut({Cut(B)})}  ⊢  A ⊎ B   (delete a double cut)
std::vector<Graph> apply_r6(const Graph& g) {
  std::vector<Graph> out;
  for (std::size_t i = 0; i < g.items().size(); ++i) {
    const auto* outer = std::get_if<Cut>(&g.items()[i].node);
    if (!outer || outer->body.arity() != 1) continue;
    const auto* inner = std::get_if<Cut>(&outer->body.items()[0].node);
    if (!inner) continue;
    std::vector<Item> rest = g.items();
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    out.push_back(multiset_union(sheet(rest), inner->body));
  }
  return out;
}

// {Cut(A ⊎ B)}  ⊢  {Cut(A ⊎ {Cut({Cut(B)})})}
// (wrap part of a cut's content in a fresh double cut; B may be empty)
std::vector<Graph> apply_r7(const Graph& g) {
  std::vector<Graph> out;
  if (g.arity() != 1) return out;
  const auto* c = std::get_if<Cut>(&g.items()[0].node);
  if (!c) return out;
  for (auto& [a, b] : splits(c->body)) {
    Graph wrapped = sheet({cut(sheet({cut(b)}))});
    out.push_back(sheet({cut(multiset_union(a, wrapped))}));
  }
  return out;
}

// A  ⊢  {Disj{A, W}}   (fold the whole sheet into a disjunction loop)
std::vector<Graph> apply_i_or(const Graph& g, const Graph& w) {
  return {sheet({disj(g, w)})};
}

// {Cut(A)}  ⊢  {Scroll(A; falsum)}
std::vector<Graph> apply_i_neg(const Graph& g) {
  std::vector<Graph> out;
  if (g.arity() != 1) return out;
  if (const auto* c = std::get_if<Cut>(&g.items()[0].node))
    out.push_back(sheet({scroll(c->body, falsum())}));
  return out;
}

// {Scroll(A; falsum)}  ⊢  {Cut(A)}
std::vector<Graph> apply_e_neg(const Graph& g) {
  std::vector<Graph> out;
  if (g.arity() != 1) return out;
  const auto* s = std::get_if<Scroll>(&g.items()[0].node);
  if (s && is_falsum(s->consequent)) out.push_back(sheet({cut(s->antecedent)}));
  return out;
}

// A ⊎ {Scroll(A; B)}  ⊢  B   (the rest of the sheet must equal the antecedent)
std::vector<Graph> apply_mpi(const Graph& g) {
  std::vector<Graph> out;
  for (std::size_t i = 0; i < g.items().size(); ++i) {
    const auto* s = std::get_if<Scroll>(&g.items()[i].node);
    if (!s) continue;
    std::vector<Item> rest = g.items();
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (sheet(rest) == s->antecedent) out.push_back(s->consequent);
  }
  return out;
}

// {Cut(#)}  ⊢  W   (anything follows from the absurd sheet)
std::vector<Graph> apply_e_bot(const Graph& g, const Graph& w) {
  std::vector<Graph> out;
  if (is_falsum(g)) out.push_back(w);
  return out;
}

// {Cut(A ⊎ B)}  ⊢  {Scroll(A; {Cut(B)})}   (every split of the cut's content)
std::vector<Graph> apply_i_p2(const Graph& g) {
  std::vector<Graph> out;
  if (g.arity() != 1) return out;
  const auto* c = std::get_if<Cut>(&g.items()[0].node);
  if (!c) return out;
  for (auto& [a, b] : splits(c->body))
    out.push_back(sheet({scroll(a, sheet({cut(b)}))}));
  return out;
}

// {Disj{A, B}}  ⊢  {Scroll({Cut(A)}; B)}   (both orientations)
std::vector<Graph> apply_i_p3(const Graph& g) {
  std::vector<Graph> out;
  if (g.arity() != 1) return out;
  const auto* d = std::get_if<Disj>(&g.items()[0].node);
  if (!d) return out;
  out.push_back(sheet({scroll(sheet({cut(d->left)}), d->right)}));
  out.push_back(sheet({scroll(sheet({cut(d->right)}), d->left)}));
  return out;
}

// {Scroll(A; B)}  ⊢  {Cut(A ⊎ {Cut(B)})}
std::vector<Graph> apply_e_p(const Graph& g) {
  std::vector<Graph> out;
  if (g.arity() != 1) return out;
  const auto* s = std::get_if<Scroll>(&g.items()[0].node);
  if (!s) return out;
  out.push_back(sheet({cut(multiset_union(s->antecedent, sheet({cut(s->consequent)})))}));
  return out;
}

// {Cut({Cut(A)} ⊎ {Cut(B)})}  ⊢  {Disj{A, B}}   (body is exactly two cuts)
std::vector<Graph> apply_i_orp(const Graph& g) {
  std::vector<Graph> out;
  if (g.arity() != 1) return out;
  const auto* c = std::get_if<Cut>(&g.items()[0].node);
  if (!c || c->body.arity() != 2) return out;
  const auto* c1 = std::get_if<Cut>(&c->body.items()[0].node);
  const auto* c2 = std::get_if<Cut>(&c->body.items()[1].node);
  if (c1 && c2) out.push_back(sheet({disj(c1->body, c2->body)}));
  return out;
}

}  // namespace

const std::string& rule_name(RuleId id) { return info(id).name; }

std::optional<RuleId> parse_rule(const std::string& name) {
  for (const auto& r : rule_table())
    if (r.name == name) return r.id;
  return std::nullopt;
}

int rule_degree(RuleId id) { return info(id).degree; }
bool rule_needs_witness(RuleId id) { return info(id).needs_witness; }

const std::string& system_name(SystemId id) {
  static const std::string names[] = {"alfao", "alfa_i", "alfa_io", "alfa_io_classic"};
  return names[static_cast<int>(id)];
}

std::optional<SystemId> parse_system(const std::string& name) {
  for (SystemId id : {SystemId::ALFAO, SystemId::ALFA_I, SystemId::ALFA_IO,
                      SystemId::ALFA_IO_CLASSIC})
    if (system_name(id) == name) return id;
  return std::nullopt;
}

const SystemRegistry& registry(SystemId id) {
  static const SystemRegistry alfao = {
      SystemId::ALFAO,
      Logic::Classical,
      Graph(),
      {RuleId::R0, RuleId::R2, RuleId::R3, RuleId::R4, RuleId::R5, RuleId::R6,
       RuleId::R7, RuleId::R8}};
  static const SystemRegistry alfa_i = {
      SystemId::ALFA_I,
      Logic::Intuitionistic,
      Graph(),
      {RuleId::R0, RuleId::R2, RuleId::I_OR, RuleId::I_NEG, RuleId::E_NEG,
       RuleId::MPI, RuleId::E_BOT, RuleId::R8I, RuleId::E_OR, RuleId::R8ID}};
  static const SystemRegistry alfa_io = {
      SystemId::ALFA_IO,
      Logic::Intuitionistic,
      Graph(),
      {RuleId::R0, RuleId::R2, RuleId::MPI, RuleId::I_OR, RuleId::R8I,
       RuleId::E_OR, RuleId::I_P3, RuleId::I_P2, RuleId::E_P}};
  static const SystemRegistry alfa_io_classic = {
      SystemId::ALFA_IO_CLASSIC,
      Logic::Classical,
      Graph(),
      {RuleId::R0, RuleId::R2, RuleId::MPI, RuleId::I_OR, RuleId::R8I,
       RuleId::E_OR, RuleId::I_P3, RuleId::I_P2, RuleId::E_P, RuleId::I_ORP}};
  switch (id) {
    case SystemId::ALFAO: return alfao;
    case SystemId::ALFA_I: return alfa_i;
    case SystemId::ALFA_IO: return alfa_io;
    case SystemId::ALFA_IO_CLASSIC: return alfa_io_classic;
  }
  throw std::logic_error("unknown system id");
}

bool system_subsumes(SystemId outer, SystemId inner) {
  const auto& big = registry(outer).basic;
  for (RuleId r : registry(inner).basic)
    if (std::find(big.begin(), big.end(), r) == big.end()) return false;
  return true;
}

std::strong_ordering cmp(const Sequent& a, const Sequent& b) {
  if (auto c = cmp(a.source, b.source); c != 0) return c;
  return cmp(a.target, b.target);
}

std::vector<Graph> apply_first_degree(RuleId rule, const Graph& g,
                                      const std::optional<Graph>& witness) {
  std::vector<Graph> out;
  switch (rule) {
    case RuleId::R2: out = apply_r2(g); break;
    case RuleId::R3: out = apply_r3(g, require_witness(rule, witness)); break;
    case RuleId::R4: out = apply_r4(g); break;
    case RuleId::R5: out = apply_r5(g); break;
    case RuleId::R6: out = apply_r6(g); break;
    case RuleId::R7: out = apply_r7(g); break;
    case RuleId::I_OR: out = apply_i_or(g, require_witness(rule, witness)); break;
    case RuleId::I_NEG: out = apply_i_neg(g); break;
    case RuleId::E_NEG: out = apply_e_neg(g); break;
    case RuleId::MPI: out = apply_mpi(g); break;
    case RuleId::E_BOT: out = apply_e_bot(g, require_witness(rule, witness)); break;
    case RuleId::I_P2: out = apply_i_p2(g); break;
    case RuleId::I_P3: out = apply_i_p3(g); break;
    case RuleId::E_P: out = apply_e_p(g); break;
    case RuleId::I_ORP: out = apply_i_orp(g); break;
    default:
      throw std::invalid_argument("rule " + rule_name(rule) +
                                  " is not a first-degree rule");
  }
  sort_unique(out);
  return out;
}

std::vector<Sequent> conclude_second_degree(RuleId rule,
                                            const std::vector<Sequent>& premises) {
  std::vector<Sequent> out;
  switch (rule) {
    case RuleId::R0: {
      // A |- B  and  A |- C  give  A |- B ⊎ C.
      if (premises.size() != 2)
        throw std::invalid_argument("R0 takes exactly two premises");
      if (premises[0].source == premises[1].source)
        out.push_back({premises[0].source,
                       multiset_union(premises[0].target, premises[1].target)});
      break;
    }
    case RuleId::R8: {
      // A ⊎ B |- C  gives  A |- {Cut(B ⊎ {Cut(C)})}  for every split.
      if (premises.size() != 1)
        throw std::invalid_argument("R8 takes exactly one premise");
      for (auto& [a, b] : splits(premises[0].source)) {
        Graph target =
            sheet({cut(multiset_union(b, sheet({cut(premises[0].target)})))});
        out.push_back({a, target});
      }
      break;
    }
    case RuleId::R8I: {
      // A ⊎ B |- C  gives  A |- {Scroll(B; C)}  for every split.
      if (premises.size() != 1)
        throw std::invalid_argument("R8I takes exactly one premise");
      for (auto& [a, b] : splits(premises[0].source))
        out.push_back({a, sheet({scroll(b, premises[0].target)})});
      break;
    }
    case RuleId::R8ID: {
      // A |- B  gives  blank |- {Scroll(A; B)}.
      if (premises.size() != 1)
        throw std::invalid_argument("R8ID takes exactly one premise");
      out.push_back({Graph(), sheet({scroll(premises[0].source, premises[0].target)})});
      break;
    }
    case RuleId::E_OR: {
      // A |- C  and  B |- C  give  {Disj{A, B}} |- C.
      if (premises.size() != 2)
        throw std::invalid_argument("E_OR takes exactly two premises");
      if (premises[0].target == premises[1].target)
        out.push_back({sheet({disj(premises[0].source, premises[1].source)}),
                       premises[0].target});
      break;
    }
    default:
      throw std::invalid_argument("rule " + rule_name(rule) +
                                  " is not a second-degree combinator");
  }
  sort_unique(out);
  return out;
}

Sequent ctx_lift(const Sequent& s, const Graph& context) {
  return {multiset_union(context, s.source), multiset_union(context, s.target)};
}

}  // namespace alfa
