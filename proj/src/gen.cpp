// gen.cpp — seeded random generation for the property suites.
#include "alfa/gen.hpp"

namespace alfa {

std::size_t Gen::pick(std::size_t n) {
  // rng_() % n keeps the sequence identical across standard libraries
  // (distribution classes are not portable); the modulo bias is irrelevant
  // for test-case generation.
  return n == 0 ? 0 : static_cast<std::size_t>(rng_() % n);
}

bool Gen::chance(int percent) {
  return pick(100) < static_cast<std::size_t>(percent);
}

Item Gen::item(int depth, const std::vector<std::string>& atoms) {
  std::size_t roll = pick(100);
  if (depth <= 0 || roll < 45) return atom(atoms[pick(atoms.size())]);
  if (roll < 75) return cut(graph(depth - 1, 3, atoms));
  if (roll < 90)
    return scroll(graph(depth - 1, 2, atoms), graph(depth - 1, 2, atoms));
  return disj(graph(depth - 1, 2, atoms), graph(depth - 1, 2, atoms));
}

Graph Gen::graph(int max_depth, int max_items, const std::vector<std::string>& atoms) {
  std::vector<Item> items;
  std::size_t count = pick(static_cast<std::size_t>(max_items) + 1);
  for (std::size_t i = 0; i < count; ++i)
    items.push_back(item(max_depth, atoms));
  return sheet(std::move(items));
}

Formula Gen::formula(int max_connectives, const std::vector<std::string>& atoms) {
  if (max_connectives <= 0 || chance(35)) {
    std::size_t roll = pick(10);
    if (roll < 7) return Formula::atom(atoms[pick(atoms.size())]);
    if (roll < 9) return Formula::top();
    return Formula::bot();
  }
  int left_budget = static_cast<int>(pick(static_cast<std::size_t>(max_connectives)));
  int right_budget = max_connectives - 1 - left_budget;
  switch (pick(4)) {
    case 0: return Formula::conj(formula(left_budget, atoms), formula(right_budget, atoms));
    case 1: return Formula::disj(formula(left_budget, atoms), formula(right_budget, atoms));
    case 2: return Formula::imp(formula(left_budget, atoms), formula(right_budget, atoms));
    default: return Formula::neg(formula(max_connectives - 1, atoms));
  }
}

std::map<std::string, Graph> Gen::graph_subst(const std::vector<std::string>& atoms) {
  std::map<std::string, Graph> sigma;
  for (const std::string& a : atoms)
    if (chance(60)) sigma.emplace(a, graph(2, 2, default_atoms()));
  return sigma;
}

const std::vector<std::string>& default_atoms() {
  static const std::vector<std::string> atoms = {"p", "q", "r", "s"};
  return atoms;
}

}  // namespace alfa
