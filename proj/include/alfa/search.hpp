// search.hpp — bounded proof search over the rule systems, with lemma reuse.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "alfa/derivation.hpp"

namespace alfa {

struct SearchOptions {
  int max_steps = 6;          // total step budget (steps inside local facts count)
  std::size_t max_size = 48;  // prune intermediate sheets larger than this
  std::vector<Graph> witnesses;  // extra witness candidates for R3/I_OR/E_BOT
  bool use_lemmas = true;        // cite database theorems (up to substitution)
};

struct SearchStats {
  std::size_t visited = 0;   // sequent states expanded
  std::size_t pruned = 0;    // states cut off by the failure cache
};

// Searches for a derivation of `goal.target` from `goal.source` in `system`,
// citing `db` theorems when permitted. A returned derivation has been
// re-verified by the checker. Deterministic for fixed inputs; raising
// max_steps only grows the explored space.
std::optional<Derivation> prove(SystemId system, const Sequent& goal,
                                const LemmaDb& db, const SearchOptions& opts = {},
                                SearchStats* stats = nullptr);

// All substitutions sigma (over `vars`) with substitute(pattern, sigma) equal
// to subject. Exact multiset matching at every level; sorted, deduplicated.
std::vector<std::map<std::string, Graph>> match_graph(
    const Graph& pattern, const Graph& subject,
    const std::vector<std::string>& vars);

}  // namespace alfa
