// graph.hpp — sheets of existential graphs: canonical multisets of items
// (atoms, cuts, scrolls, disjunction loops), multiset utilities, text format.
#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace alfa {

struct Item;

// A sheet region: a finite multiset of items. Items are kept sorted in a
// fixed structural order, so two regions are equal as multisets exactly when
// their item vectors are equal. The empty sheet is the unit of juxtaposition.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::vector<Item> items);  // sorts (deep canonical form)

  const std::vector<Item>& items() const { return items_; }
  bool blank() const { return items_.empty(); }
  std::size_t arity() const { return items_.size(); }

 private:
  std::vector<Item> items_;
};

struct Atom {
  std::string name;  // [a-z][a-z0-9_]*
};

struct Cut {
  Graph body;
};

// Implication curve: antecedent region with an inner consequent loop.
struct Scroll {
  Graph antecedent;
  Graph consequent;
};

// Disjunction loop: unordered pair of regions, stored with left <= right.
struct Disj {
  Graph left;
  Graph right;
};

struct Item {
  std::variant<Atom, Cut, Scroll, Disj> node;
};

std::strong_ordering cmp(const Graph& a, const Graph& b);
std::strong_ordering cmp(const Item& a, const Item& b);

inline bool operator==(const Graph& a, const Graph& b) { return cmp(a, b) == 0; }
inline bool operator!=(const Graph& a, const Graph& b) { return cmp(a, b) != 0; }
inline bool operator<(const Graph& a, const Graph& b) { return cmp(a, b) < 0; }
inline bool operator==(const Item& a, const Item& b) { return cmp(a, b) == 0; }
inline bool operator<(const Item& a, const Item& b) { return cmp(a, b) < 0; }

// Item and sheet builders.
Item atom(std::string name);
Item cut(Graph body);
Item scroll(Graph antecedent, Graph consequent);
Item disj(Graph a, Graph b);  // sorts the pair
Graph sheet(std::vector<Item> items);
Graph falsum();       // sheet holding exactly one empty cut
bool is_falsum(const Graph& g);

// Rebuilds the canonical form from scratch. Idempotent; Graph construction
// already canonicalizes, so this is exposed mainly for property tests.
Graph canonicalize(const Graph& g);

// Multiset operations on top-level items.
bool submultiset(const Graph& part, const Graph& whole);
Graph multiset_union(const Graph& a, const Graph& b);
// Requires part ⊆ whole; removes one copy of part from whole.
Graph multiset_minus(const Graph& whole, const Graph& part);

// All ordered pairs (sub, rest) with sub ⊎ rest = g, including the trivial
// ones. Multiplicity-aware: {p,p,q} has 6 splits.
std::vector<std::pair<Graph, Graph>> splits(const Graph& g);

// Capture-free substitution of sheets for atoms: each atom item whose name is
// bound gets replaced by the items of its image, at every depth.
Graph substitute(const Graph& g, const std::map<std::string, Graph>& sigma);

struct Measure {
  std::size_t size;   // total item count at all depths
  std::size_t depth;  // maximal curve nesting (blank sheet: 0)
  bool operator==(const Measure&) const = default;
};
Measure measure(const Graph& g);

// Distinct regions occurring in g (g itself, every curve body/part,
// recursively) plus the blank sheet and each item's singleton sheet.
// Sorted, deduplicated; useful as a witness pool.
std::vector<Graph> subgraph_pool(const Graph& g);

// Atom names occurring anywhere in g, sorted and deduplicated.
std::vector<std::string> atom_names(const Graph& g);

struct ParseError : std::runtime_error {
  ParseError(std::string msg, int line, int col);
  int line;
  int col;
};

// Text format:  graph := item*
//               item  := ATOM | "(" graph ")" | "{" graph "=>" graph "}"
//                             | "{" graph "|" graph "}" | "#"
// "#" abbreviates "()"; "%" starts a line comment.
Graph parse_graph(const std::string& text);
std::string print_graph(const Graph& g);  // canonical order; "#" for empty cut

// .geg payload: one graph per line, "%" comments, blank lines skipped.
std::vector<Graph> parse_geg(const std::string& text);
std::string print_geg(const std::vector<Graph>& graphs);

}  // namespace alfa
