// formula.hpp — propositional formulas, graph<->formula translation, text format.
#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "alfa/graph.hpp"

namespace alfa {

enum class FKind { Atom, Top, Bot, And, Or, Imp };

// Immutable formula tree with shared subterms.
class Formula {
 public:
  static Formula atom(std::string name);
  static Formula top();
  static Formula bot();
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula imp(Formula a, Formula b);
  static Formula neg(Formula a);  // sugar: a -> F

  FKind kind() const;
  const std::string& name() const;  // Atom only
  Formula left() const;             // And/Or/Imp
  Formula right() const;            // And/Or/Imp
  bool is_neg() const;              // Imp with Bot consequent

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Atom names occurring in f, sorted and deduplicated.
std::vector<std::string> formula_atoms(const Formula& f);

// Substitution of formulas for atoms.
Formula substitute(const Formula& f, const std::map<std::string, Formula>& sigma);

// Reading of a sheet as a formula: blank -> T; one item -> that item's
// reading; several items -> left-nested conjunction in canonical item order.
// Cut -> (body -> F), scroll -> implication, disjunction loop -> disjunction.
Formula translate(const Graph& g);

// Right inverse of translate: And flattens to juxtaposition, Or becomes a
// disjunction loop, Imp a scroll, Bot an empty cut, Top the blank sheet.
// translate(embed(f)) is IPC-equivalent to f (not syntactically identical).
Graph embed(const Formula& f);

// Text format: atoms [a-z][a-z0-9_]*, constants "T"/"F", "~" (tightest),
// "&", "v", "->" (loosest, right-associative), parentheses.
Formula parse_formula(const std::string& text);
std::string print_formula(const Formula& f);  // minimal parens, ~ re-sugared

}  // namespace alfa
