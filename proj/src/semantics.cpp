// semantics.cpp — truth tables, contraction-free intuitionistic sequent
// procedure, Kripke countermodel search.
#include "alfa/semantics.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace alfa {

namespace {

bool eval_classical(const Formula& f, const std::vector<std::string>& atoms,
                    std::uint32_t row) {
  switch (f.kind()) {
    case FKind::Atom: {
      auto it = std::lower_bound(atoms.begin(), atoms.end(), f.name());
      std::size_t idx = static_cast<std::size_t>(it - atoms.begin());
      return (row >> idx) & 1u;
    }
    case FKind::Top:
      return true;
    case FKind::Bot:
      return false;
    case FKind::And:
      return eval_classical(f.left(), atoms, row) && eval_classical(f.right(), atoms, row);
    case FKind::Or:
      return eval_classical(f.left(), atoms, row) || eval_classical(f.right(), atoms, row);
    default:
      return !eval_classical(f.left(), atoms, row) || eval_classical(f.right(), atoms, row);
  }
}

// Unit simplification with T/F. Every rewrite used here is an intuitionistic
// equivalence, so both oracles may apply it.
Formula simplify_units(const Formula& f) {
  switch (f.kind()) {
    case FKind::And: {
      Formula a = simplify_units(f.left());
      Formula b = simplify_units(f.right());
      if (a.kind() == FKind::Bot || b.kind() == FKind::Bot) return Formula::bot();
      if (a.kind() == FKind::Top) return b;
      if (b.kind() == FKind::Top) return a;
      return Formula::conj(a, b);
    }
    case FKind::Or: {
      Formula a = simplify_units(f.left());
      Formula b = simplify_units(f.right());
      if (a.kind() == FKind::Top || b.kind() == FKind::Top) return Formula::top();
      if (a.kind() == FKind::Bot) return b;
      if (b.kind() == FKind::Bot) return a;
      return Formula::disj(a, b);
    }
    case FKind::Imp: {
      Formula a = simplify_units(f.left());
      Formula b = simplify_units(f.right());
      if (a.kind() == FKind::Bot || b.kind() == FKind::Top) return Formula::top();
      if (a.kind() == FKind::Top) return b;
      return Formula::imp(a, b);
    }
    default:
      return f;
  }
}

// Multiset of hypotheses for the sequent procedure.
using Ctx = std::vector<Formula>;

void ctx_erase(Ctx& ctx, std::size_t i) {
  ctx.erase(ctx.begin() + static_cast<std::ptrdiff_t>(i));
}

bool prove(Ctx ctx, Formula goal);

// Saturates the invertible single-premise left rules in place. Returns true
// if the sequent was closed outright.
bool saturate(Ctx& ctx, const Formula& goal, bool& closed) {
  closed = false;
  bool changed = true;
  while (changed) {
    changed = false;
    if (goal.kind() == FKind::Top) {
      closed = true;
      return true;
    }
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      const Formula& h = ctx[i];
      if (h.kind() == FKind::Bot) {
        closed = true;
        return true;
      }
      if (h == goal) {
        closed = true;
        return true;
      }
      if (h.kind() == FKind::Top) {
        ctx_erase(ctx, i);
        changed = true;
        break;
      }
      if (h.kind() == FKind::And) {
        Formula a = h.left(), b = h.right();
        ctx_erase(ctx, i);
        ctx.push_back(a);
        ctx.push_back(b);
        changed = true;
        break;
      }
      if (h.kind() == FKind::Imp) {
        Formula ant = h.left(), csq = h.right();
        if (ant.kind() == FKind::Top) {
          ctx_erase(ctx, i);
          ctx.push_back(csq);
          changed = true;
          break;
        }
        if (ant.kind() == FKind::Bot) {
          ctx_erase(ctx, i);
          changed = true;
          break;
        }
        if (ant.kind() == FKind::And) {
          Formula curried = Formula::imp(ant.left(), Formula::imp(ant.right(), csq));
          ctx_erase(ctx, i);
          ctx.push_back(curried);
          changed = true;
          break;
        }
        if (ant.kind() == FKind::Or) {
          Formula f1 = Formula::imp(ant.left(), csq);
          Formula f2 = Formula::imp(ant.right(), csq);
          ctx_erase(ctx, i);
          ctx.push_back(f1);
          ctx.push_back(f2);
          changed = true;
          break;
        }
        if (ant.kind() == FKind::Atom) {
          bool atom_present = false;
          for (std::size_t j = 0; j < ctx.size(); ++j) {
            if (j != i && ctx[j].kind() == FKind::Atom && ctx[j].name() == ant.name()) {
              atom_present = true;
              break;
            }
          }
          if (atom_present) {
            ctx[i] = csq;
            changed = true;
            break;
          }
        }
      }
    }
  }
  return false;
}

bool prove(Ctx ctx, Formula goal) {
  bool closed = false;
  if (saturate(ctx, goal, closed)) return closed;

  // Invertible right rules.
  if (goal.kind() == FKind::And)
    return prove(ctx, goal.left()) && prove(ctx, goal.right());
  if (goal.kind() == FKind::Imp) {
    ctx.push_back(goal.left());
    return prove(std::move(ctx), goal.right());
  }

  // Invertible (branching) left disjunction.
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    if (ctx[i].kind() == FKind::Or) {
      Formula a = ctx[i].left(), b = ctx[i].right();
      Ctx left = ctx;
      left[i] = a;
      if (!prove(std::move(left), goal)) return false;
      ctx[i] = b;
      return prove(std::move(ctx), goal);
    }
  }

  // Choice points: right disjunction and nested implications on the left.
  if (goal.kind() == FKind::Or) {
    if (prove(ctx, goal.left())) return true;
    if (prove(ctx, goal.right())) return true;
  }
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    if (ctx[i].kind() == FKind::Imp && ctx[i].left().kind() == FKind::Imp) {
      Formula c = ctx[i].left().left();
      Formula d = ctx[i].left().right();
      Formula b = ctx[i].right();
      Ctx first = ctx;
      first[i] = Formula::imp(d, b);
      if (prove(std::move(first), Formula::imp(c, d))) {
        Ctx second = ctx;
        second[i] = b;
        if (prove(std::move(second), goal)) return true;
      }
    }
  }
  return false;
}

}  // namespace

bool classical_valid(const Formula& f) {
  Formula s = simplify_units(f);
  if (s.kind() == FKind::Top) return true;
  std::vector<std::string> atoms = formula_atoms(s);
  if (atoms.size() > 24)
    throw std::logic_error("classical_valid: too many atoms for a truth table");
  std::uint32_t rows = 1u << atoms.size();
  for (std::uint32_t row = 0; row < rows; ++row)
    if (!eval_classical(s, atoms, row)) return false;
  return true;
}

bool ipc_valid(const Formula& f) { return prove({}, simplify_units(f)); }

bool ipc_provable(const std::vector<Formula>& hypotheses, const Formula& goal) {
  Ctx ctx;
  ctx.reserve(hypotheses.size());
  for (const Formula& h : hypotheses) ctx.push_back(simplify_units(h));
  return prove(std::move(ctx), simplify_units(goal));
}

bool eval_kripke(const KripkeModel& m, int world, const Formula& f) {
  switch (f.kind()) {
    case FKind::Atom: {
      auto it = std::lower_bound(m.atoms.begin(), m.atoms.end(), f.name());
      if (it == m.atoms.end() || *it != f.name()) return false;
      std::size_t idx = static_cast<std::size_t>(it - m.atoms.begin());
      return m.val[idx][static_cast<std::size_t>(world)];
    }
    case FKind::Top:
      return true;
    case FKind::Bot:
      return false;
    case FKind::And:
      return eval_kripke(m, world, f.left()) && eval_kripke(m, world, f.right());
    case FKind::Or:
      return eval_kripke(m, world, f.left()) || eval_kripke(m, world, f.right());
    default: {
      for (int v = 0; v < m.worlds; ++v) {
        if (!m.leq[static_cast<std::size_t>(world)][static_cast<std::size_t>(v)]) continue;
        if (eval_kripke(m, v, f.left()) && !eval_kripke(m, v, f.right())) return false;
      }
      return true;
    }
  }
}

bool kripke_well_formed(const KripkeModel& m) {
  int n = m.worlds;
  if (n <= 0) return false;
  auto at = [&](int u, int v) { return m.leq[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]; };
  for (int u = 0; u < n; ++u) {
    if (!at(u, u)) return false;
    if (!at(m.root, u)) return false;  // least root
    for (int v = 0; v < n; ++v) {
      if (u != v && at(u, v) && at(v, u)) return false;  // antisymmetry
      for (int w = 0; w < n; ++w)
        if (at(u, v) && at(v, w) && !at(u, w)) return false;  // transitivity
    }
  }
  for (const auto& column : m.val) {
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (at(u, v) && column[static_cast<std::size_t>(u)] &&
            !column[static_cast<std::size_t>(v)])
          return false;  // persistence
  }
  return true;
}

namespace {

// All reflexive-transitive-antisymmetric orders on n labeled worlds in which
// world 0 is least. Encoded as leq matrices.
std::vector<std::vector<std::vector<bool>>> rooted_orders(int n) {
  std::vector<std::vector<std::vector<bool>>> out;
  std::vector<std::pair<int, int>> pairs;  // unordered pairs among worlds 1..n-1
  for (int u = 1; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::size_t combos = 1;
  for (std::size_t i = 0; i < pairs.size(); ++i) combos *= 3;  // <, >, incomparable
  for (std::size_t code = 0; code < combos; ++code) {
    std::vector<std::vector<bool>> leq(static_cast<std::size_t>(n),
                                       std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int u = 0; u < n; ++u) {
      leq[static_cast<std::size_t>(u)][static_cast<std::size_t>(u)] = true;
      leq[0][static_cast<std::size_t>(u)] = true;
    }
    std::size_t c = code;
    for (const auto& [u, v] : pairs) {
      switch (c % 3) {
        case 1:
          leq[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
          break;
        case 2:
          leq[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
          break;
        default:
          break;
      }
      c /= 3;
    }
    bool transitive = true;
    for (int u = 0; u < n && transitive; ++u)
      for (int v = 0; v < n && transitive; ++v)
        for (int w = 0; w < n; ++w)
          if (leq[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] &&
              leq[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] &&
              !leq[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)]) {
            transitive = false;
            break;
          }
    if (transitive) out.push_back(std::move(leq));
  }
  return out;
}

// All upward-closed subsets of the order, as bitmask list.
std::vector<std::uint32_t> upward_closed_sets(const std::vector<std::vector<bool>>& leq) {
  int n = static_cast<int>(leq.size());
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) {
      if (!((mask >> u) & 1u)) continue;
      for (int v = 0; v < n; ++v)
        if (leq[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] &&
            !((mask >> v) & 1u)) {
          ok = false;
          break;
        }
    }
    if (ok) out.push_back(mask);
  }
  return out;
}

KripkeModel assemble(int n, const std::vector<std::vector<bool>>& leq,
                     const std::vector<std::string>& atoms,
                     const std::vector<std::uint32_t>& masks) {
  KripkeModel m;
  m.worlds = n;
  m.leq = leq;
  m.atoms = atoms;
  m.root = 0;
  m.val.resize(atoms.size(), std::vector<bool>(static_cast<std::size_t>(n), false));
  for (std::size_t a = 0; a < atoms.size(); ++a)
    for (int w = 0; w < n; ++w)
      m.val[a][static_cast<std::size_t>(w)] = (masks[a] >> w) & 1u;
  return m;
}

std::optional<KripkeModel> exhaustive_search(const Formula& f,
                                             const std::vector<std::string>& atoms,
                                             int n) {
  for (auto& leq : rooted_orders(n)) {
    auto upsets = upward_closed_sets(leq);
    std::vector<std::size_t> pick(atoms.size(), 0);
    for (;;) {
      std::vector<std::uint32_t> masks(atoms.size());
      for (std::size_t a = 0; a < atoms.size(); ++a) masks[a] = upsets[pick[a]];
      KripkeModel m = assemble(n, leq, atoms, masks);
      if (!eval_kripke(m, m.root, f)) return m;
      std::size_t i = 0;
      while (i < pick.size() && pick[i] + 1 == upsets.size()) pick[i++] = 0;
      if (i == pick.size()) break;
      ++pick[i];
    }
  }
  return std::nullopt;
}

std::optional<KripkeModel> randomized_search(const Formula& f,
                                             const std::vector<std::string>& atoms,
                                             int n, std::uint64_t seed, int trials) {
  std::mt19937_64 rng(seed + static_cast<std::uint64_t>(n) * 977);
  for (int t = 0; t < trials; ++t) {
    // Random order: world 0 least; among 1..n-1 orient each pair by dice,
    // then close transitively and drop if antisymmetry breaks (it cannot,
    // since we orient only upward in index order).
    std::vector<std::vector<bool>> leq(static_cast<std::size_t>(n),
                                       std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int u = 0; u < n; ++u) {
      leq[static_cast<std::size_t>(u)][static_cast<std::size_t>(u)] = true;
      leq[0][static_cast<std::size_t>(u)] = true;
    }
    for (int u = 1; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2 == 0) leq[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
    for (int w = 0; w < n; ++w)
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          if (leq[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)] &&
              leq[static_cast<std::size_t>(w)][static_cast<std::size_t>(v)])
            leq[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
    std::vector<std::uint32_t> masks(atoms.size(), 0);
    for (std::size_t a = 0; a < atoms.size(); ++a) {
      std::uint32_t seed_mask = static_cast<std::uint32_t>(rng()) & ((1u << n) - 1u);
      // Upward closure of the random seed set keeps the valuation persistent.
      std::uint32_t closed = 0;
      for (int u = 0; u < n; ++u)
        if ((seed_mask >> u) & 1u)
          for (int v = 0; v < n; ++v)
            if (leq[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)])
              closed |= 1u << v;
      masks[a] = closed;
    }
    KripkeModel m = assemble(n, leq, atoms, masks);
    if (!eval_kripke(m, m.root, f)) return m;
  }
  return std::nullopt;
}

}  // namespace

std::optional<KripkeModel> kripke_countermodel(const Formula& f, int max_worlds,
                                               std::uint64_t seed) {
  std::vector<std::string> atoms = formula_atoms(f);
  for (int n = 1; n <= std::min(max_worlds, 4); ++n) {
    if (auto m = exhaustive_search(f, atoms, n)) return m;
  }
  for (int n = 5; n <= max_worlds; ++n) {
    if (auto m = randomized_search(f, atoms, n, seed, 4000)) return m;
  }
  return std::nullopt;
}

std::string print_kripke(const KripkeModel& m) {
  std::ostringstream out;
  out << m.worlds << " world(s), root w" << m.root << "\n";
  for (int u = 0; u < m.worlds; ++u) {
    out << "  w" << u << " <=";
    for (int v = 0; v < m.worlds; ++v)
      if (v != u && m.leq[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)])
        out << " w" << v;
    out << " |";
    for (std::size_t a = 0; a < m.atoms.size(); ++a)
      if (m.val[a][static_cast<std::size_t>(u)]) out << " " << m.atoms[a];
    out << "\n";
  }
  return out.str();
}

bool formula_valid(Logic logic, const Formula& f) {
  return logic == Logic::Classical ? classical_valid(f) : ipc_valid(f);
}

bool sequent_sound(Logic logic, const Graph& source, const Graph& target) {
  return formula_valid(logic, Formula::imp(translate(source), translate(target)));
}

bool ipc_equivalent(const Formula& a, const Formula& b) {
  return ipc_valid(Formula::imp(a, b)) && ipc_valid(Formula::imp(b, a));
}

}  // namespace alfa
