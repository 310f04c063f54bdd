// gen.hpp — seeded random generation of sheets, formulas, and substitutions.
#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "alfa/formula.hpp"
#include "alfa/graph.hpp"

namespace alfa {

// Deterministic generator: same seed, same platform-independent sequence.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::size_t pick(std::size_t n);  // uniform in [0, n)
  bool chance(int percent);

  // Random sheet with at most `max_items` top items and nesting below
  // `max_depth`, over the given atom names.
  Graph graph(int max_depth, int max_items, const std::vector<std::string>& atoms);

  // Random formula with at most `max_connectives` connectives.
  Formula formula(int max_connectives, const std::vector<std::string>& atoms);

  // Random substitution on a subset of the given atom names, with small
  // sheet images (possibly blank).
  std::map<std::string, Graph> graph_subst(const std::vector<std::string>& atoms);

  std::mt19937_64& rng() { return rng_; }

 private:
  Item item(int depth, const std::vector<std::string>& atoms);
  std::mt19937_64 rng_;
};

// The default atom alphabet used by the property suites.
const std::vector<std::string>& default_atoms();

}  // namespace alfa
