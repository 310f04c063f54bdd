// semantics.hpp — classical and intuitionistic validity oracles, Kripke
// models with monotone valuations, countermodel search, sequent soundness.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "alfa/formula.hpp"
#include "alfa/graph.hpp"

namespace alfa {

enum class Logic { Classical, Intuitionistic };

// Truth-table validity.
bool classical_valid(const Formula& f);

// Decision procedure for intuitionistic validity via a contraction-free
// sequent calculus (weight-decreasing left implication rules, so no loop
// checking is needed).
bool ipc_valid(const Formula& f);
// Provability of goal from a multiset of hypotheses.
bool ipc_provable(const std::vector<Formula>& hypotheses, const Formula& goal);

// Finite reflexive partial order with a least world 0 (the evaluation root)
// and a persistent (upward-closed) valuation per atom.
struct KripkeModel {
  int worlds = 1;
  std::vector<std::vector<bool>> leq;       // leq[u][v]: u <= v
  std::vector<std::string> atoms;           // atom names, sorted
  std::vector<std::vector<bool>> val;       // val[a][w]: atom a holds at w
  int root = 0;
};

// Forcing at a world.
bool eval_kripke(const KripkeModel& m, int world, const Formula& f);

// Model sanity: reflexive, transitive, antisymmetric order with least root,
// and upward-closed valuations.
bool kripke_well_formed(const KripkeModel& m);

// Searches for a model whose root does not force f. Exhaustive over rooted
// labeled orders for up to 4 worlds; seeded randomized search for 5-6.
std::optional<KripkeModel> kripke_countermodel(const Formula& f, int max_worlds,
                                               std::uint64_t seed = 2026);

std::string print_kripke(const KripkeModel& m);

// Validity of source-implies-target under the chosen logic.
bool sequent_sound(Logic logic, const Graph& source, const Graph& target);
bool formula_valid(Logic logic, const Formula& f);

// IPC equivalence of two formulas (validity of the biconditional).
bool ipc_equivalent(const Formula& a, const Formula& b);

}  // namespace alfa
