// fuzz.hpp — seeded property suites: rule soundness against the semantic
// oracles, conditional soundness of the second-degree combinators,
// substitutivity, text round trips, and oracle cross-checks.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "alfa/gen.hpp"
#include "alfa/rules.hpp"
#include "alfa/semantics.hpp"

namespace alfa {

struct FuzzReport {
  std::string suite;
  std::size_t cases = 0;     // generator iterations
  std::size_t checks = 0;    // individual verified assertions
  std::size_t failures = 0;
  std::vector<std::string> samples;  // first few failure descriptions
  bool ok() const { return failures == 0 && checks > 0; }
};

// Every one-step application of `rule` must be semantically sound under the
// given logic (or under the system's logic in the system-level form).
FuzzReport fuzz_rule_soundness_logic(Logic logic, RuleId rule, std::size_t cases,
                                     std::uint64_t seed);
FuzzReport fuzz_rule_soundness(SystemId system, RuleId rule, std::size_t cases,
                               std::uint64_t seed);

// If all premises of a second-degree combinator are sound, every conclusion
// must be sound; checked under both semantics.
FuzzReport fuzz_second_degree(RuleId rule, std::size_t cases, std::uint64_t seed);

// One-step rule applications are closed under substitution.
FuzzReport fuzz_substitutivity(std::size_t cases, std::uint64_t seed);

// print/parse round trips.
FuzzReport fuzz_graph_round_trip(std::size_t cases, std::uint64_t seed);
FuzzReport fuzz_formula_round_trip(std::size_t cases, std::uint64_t seed);

// translate(embed(f)) must be equivalent to f over the constructive oracle.
FuzzReport fuzz_translation_equivalence(std::size_t cases, std::uint64_t seed);

// classical validity of f coincides with constructive validity of ~~f.
FuzzReport fuzz_glivenko(std::size_t cases, std::uint64_t seed);

// All structurally distinct formulas with at most `max_connectives`
// connectives over atoms p, q and the two constants.
std::vector<Formula> small_formula_family(int max_connectives);

// Greedy minimization of a sheet for which `rule` has a one-step consequence
// unsound under `logic`. Deterministic; returns its argument when no smaller
// unsound sheet is reachable. Only for rules that take no witness.
Graph shrink_unsound(RuleId rule, Logic logic, Graph g);
bool rule_unsound_at(RuleId rule, Logic logic, const Graph& g);

}  // namespace alfa
