// graph.cpp — canonical sheets, multiset utilities, graph text format.
#include "alfa/graph.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace alfa {

namespace {

Item canonical_item(Item it) {
  if (auto* c = std::get_if<Cut>(&it.node)) {
    return Item{Cut{Graph(c->body.items())}};
  }
  if (auto* s = std::get_if<Scroll>(&it.node)) {
    return Item{Scroll{Graph(s->antecedent.items()), Graph(s->consequent.items())}};
  }
  if (auto* d = std::get_if<Disj>(&it.node)) {
    Graph l = Graph(d->left.items());
    Graph r = Graph(d->right.items());
    if (cmp(r, l) < 0) std::swap(l, r);
    return Item{Disj{std::move(l), std::move(r)}};
  }
  return it;
}

}  // namespace

Graph::Graph(std::vector<Item> items) : items_(std::move(items)) {
  for (Item& it : items_) it = canonical_item(std::move(it));
  std::sort(items_.begin(), items_.end(),
            [](const Item& a, const Item& b) { return cmp(a, b) < 0; });
}

std::strong_ordering cmp(const Graph& a, const Graph& b) {
  const auto& xs = a.items();
  const auto& ys = b.items();
  std::size_t n = std::min(xs.size(), ys.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = cmp(xs[i], ys[i]);
    if (c != 0) return c;
  }
  return xs.size() <=> ys.size();
}

std::strong_ordering cmp(const Item& a, const Item& b) {
  if (a.node.index() != b.node.index()) return a.node.index() <=> b.node.index();
  switch (a.node.index()) {
    case 0:
      return std::get<Atom>(a.node).name <=> std::get<Atom>(b.node).name;
    case 1:
      return cmp(std::get<Cut>(a.node).body, std::get<Cut>(b.node).body);
    case 2: {
      const auto& x = std::get<Scroll>(a.node);
      const auto& y = std::get<Scroll>(b.node);
      auto c = cmp(x.antecedent, y.antecedent);
      if (c != 0) return c;
      return cmp(x.consequent, y.consequent);
    }
    default: {
      const auto& x = std::get<Disj>(a.node);
      const auto& y = std::get<Disj>(b.node);
      auto c = cmp(x.left, y.left);
      if (c != 0) return c;
      return cmp(x.right, y.right);
    }
  }
}

Item atom(std::string name) { return Item{Atom{std::move(name)}}; }
Item cut(Graph body) { return Item{Cut{std::move(body)}}; }
Item scroll(Graph antecedent, Graph consequent) {
  return Item{Scroll{std::move(antecedent), std::move(consequent)}};
}
Item disj(Graph a, Graph b) {
  if (cmp(b, a) < 0) std::swap(a, b);
  return Item{Disj{std::move(a), std::move(b)}};
}
Graph sheet(std::vector<Item> items) { return Graph(std::move(items)); }
Graph falsum() { return sheet({cut(Graph())}); }
bool is_falsum(const Graph& g) { return g == falsum(); }

Graph canonicalize(const Graph& g) { return Graph(g.items()); }

bool submultiset(const Graph& part, const Graph& whole) {
  const auto& ps = part.items();
  const auto& ws = whole.items();
  std::size_t j = 0;
  for (const Item& p : ps) {
    while (j < ws.size() && cmp(ws[j], p) < 0) ++j;
    if (j == ws.size() || cmp(ws[j], p) != 0) return false;
    ++j;
  }
  return true;
}

Graph multiset_union(const Graph& a, const Graph& b) {
  std::vector<Item> items = a.items();
  items.insert(items.end(), b.items().begin(), b.items().end());
  return Graph(std::move(items));
}

Graph multiset_minus(const Graph& whole, const Graph& part) {
  if (!submultiset(part, whole))
    throw std::logic_error("multiset_minus: part is not contained in whole");
  std::vector<Item> out;
  const auto& ps = part.items();
  std::size_t j = 0;
  for (const Item& w : whole.items()) {
    if (j < ps.size() && cmp(w, ps[j]) == 0) {
      ++j;
    } else {
      out.push_back(w);
    }
  }
  return Graph(std::move(out));
}

std::vector<std::pair<Graph, Graph>> splits(const Graph& g) {
  // Group equal items into runs; choose a count from each run for the sub part.
  struct Run {
    Item item;
    std::size_t count;
  };
  std::vector<Run> runs;
  for (const Item& it : g.items()) {
    if (!runs.empty() && cmp(runs.back().item, it) == 0) {
      ++runs.back().count;
    } else {
      runs.push_back({it, 1});
    }
  }
  std::vector<std::pair<Graph, Graph>> out;
  std::vector<std::size_t> take(runs.size(), 0);
  for (;;) {
    std::vector<Item> sub, rest;
    for (std::size_t i = 0; i < runs.size(); ++i) {
      for (std::size_t k = 0; k < take[i]; ++k) sub.push_back(runs[i].item);
      for (std::size_t k = take[i]; k < runs[i].count; ++k) rest.push_back(runs[i].item);
    }
    out.emplace_back(Graph(std::move(sub)), Graph(std::move(rest)));
    std::size_t i = 0;
    while (i < runs.size() && take[i] == runs[i].count) take[i++] = 0;
    if (i == runs.size()) break;
    ++take[i];
  }
  return out;
}

Graph substitute(const Graph& g, const std::map<std::string, Graph>& sigma) {
  std::vector<Item> out;
  for (const Item& it : g.items()) {
    if (const auto* a = std::get_if<Atom>(&it.node)) {
      auto hit = sigma.find(a->name);
      if (hit != sigma.end()) {
        const auto& repl = hit->second.items();
        out.insert(out.end(), repl.begin(), repl.end());
      } else {
        out.push_back(it);
      }
    } else if (const auto* c = std::get_if<Cut>(&it.node)) {
      out.push_back(cut(substitute(c->body, sigma)));
    } else if (const auto* s = std::get_if<Scroll>(&it.node)) {
      out.push_back(scroll(substitute(s->antecedent, sigma),
                           substitute(s->consequent, sigma)));
    } else {
      const auto& d = std::get<Disj>(it.node);
      out.push_back(disj(substitute(d.left, sigma), substitute(d.right, sigma)));
    }
  }
  return Graph(std::move(out));
}

Measure measure(const Graph& g) {
  Measure m{0, 0};
  for (const Item& it : g.items()) {
    const bool curve = !std::holds_alternative<Atom>(it.node);
    Measure inner{0, 0};
    if (const auto* c = std::get_if<Cut>(&it.node)) {
      inner = measure(c->body);
    } else if (const auto* s = std::get_if<Scroll>(&it.node)) {
      Measure a = measure(s->antecedent), b = measure(s->consequent);
      inner = {a.size + b.size, std::max(a.depth, b.depth)};
    } else if (const auto* d = std::get_if<Disj>(&it.node)) {
      Measure a = measure(d->left), b = measure(d->right);
      inner = {a.size + b.size, std::max(a.depth, b.depth)};
    }
    m.size += 1 + inner.size;
    if (curve) m.depth = std::max(m.depth, 1 + inner.depth);
  }
  return m;
}

namespace {
void collect_pool(const Graph& g, std::set<Graph>& pool) {
  pool.insert(g);
  pool.insert(Graph());
  for (const Item& it : g.items()) {
    pool.insert(sheet({it}));
    if (const auto* c = std::get_if<Cut>(&it.node)) {
      collect_pool(c->body, pool);
    } else if (const auto* s = std::get_if<Scroll>(&it.node)) {
      collect_pool(s->antecedent, pool);
      collect_pool(s->consequent, pool);
    } else if (const auto* d = std::get_if<Disj>(&it.node)) {
      collect_pool(d->left, pool);
      collect_pool(d->right, pool);
    }
  }
}
void collect_atoms(const Graph& g, std::set<std::string>& names) {
  for (const Item& it : g.items()) {
    if (const auto* a = std::get_if<Atom>(&it.node)) {
      names.insert(a->name);
    } else if (const auto* c = std::get_if<Cut>(&it.node)) {
      collect_atoms(c->body, names);
    } else if (const auto* s = std::get_if<Scroll>(&it.node)) {
      collect_atoms(s->antecedent, names);
      collect_atoms(s->consequent, names);
    } else {
      const auto& d = std::get<Disj>(it.node);
      collect_atoms(d.left, names);
      collect_atoms(d.right, names);
    }
  }
}
}  // namespace

std::vector<Graph> subgraph_pool(const Graph& g) {
  std::set<Graph> pool;
  collect_pool(g, pool);
  return {pool.begin(), pool.end()};
}

std::vector<std::string> atom_names(const Graph& g) {
  std::set<std::string> names;
  collect_atoms(g, names);
  return {names.begin(), names.end()};
}

ParseError::ParseError(std::string msg, int line, int col)
    : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " +
                         std::to_string(col) + ")"),
      line(line),
      col(col) {}

namespace {

// Character-level parser for the graph text format.
class GraphParser {
 public:
  explicit GraphParser(const std::string& text) : text_(text) {}

  Graph parse_all() {
    Graph g = parse_region();
    skip_ws();
    if (!eof()) fail("unexpected trailing input");
    return g;
  }

  // Parses items until a closer or end of input; used by region parsers.
  Graph parse_region() {
    std::vector<Item> items;
    for (;;) {
      skip_ws();
      if (eof()) break;
      char c = peek();
      if (c == ')' || c == '}' || c == '|' || c == '=') break;
      items.push_back(parse_item());
    }
    return Graph(std::move(items));
  }

 private:
  Item parse_item() {
    char c = peek();
    if (c == '#') {
      get();
      return cut(Graph());
    }
    if (c == '(') {
      get();
      Graph body = parse_region();
      expect(')');
      return cut(std::move(body));
    }
    if (c == '{') {
      get();
      Graph first = parse_region();
      skip_ws();
      if (peek() == '=') {
        expect('=');
        expect('>');
        Graph second = parse_region();
        expect('}');
        return scroll(std::move(first), std::move(second));
      }
      if (peek() == '|') {
        get();
        Graph second = parse_region();
        expect('}');
        return disj(std::move(first), std::move(second));
      }
      fail("expected '=>' or '|' inside braces");
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      std::string name;
      while (!eof()) {
        char d = peek();
        if (std::islower(static_cast<unsigned char>(d)) ||
            std::isdigit(static_cast<unsigned char>(d)) || d == '_') {
          name.push_back(get());
        } else {
          break;
        }
      }
      return atom(std::move(name));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  void skip_ws() {
    while (!eof()) {
      char c = text_[pos_];
      if (c == '%') {
        while (!eof() && text_[pos_] != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else {
        break;
      }
    }
  }

  bool eof() const { return pos_ >= text_.size(); }
  char peek() const {
    if (pos_ >= text_.size()) return '\0';
    return text_[pos_];
  }
  char get() {
    char c = peek();
    advance();
    return c;
  }
  void advance() {
    if (eof()) return;
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void expect(char c) {
    skip_ws();
    if (eof() || peek() != c)
      fail(std::string("expected '") + c + "'");
    get();
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, col_);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

void print_region(const Graph& g, std::string& out) {
  bool first = true;
  for (const Item& it : g.items()) {
    if (!first) out.push_back(' ');
    first = false;
    if (const auto* a = std::get_if<Atom>(&it.node)) {
      out += a->name;
    } else if (const auto* c = std::get_if<Cut>(&it.node)) {
      if (c->body.blank()) {
        out.push_back('#');
      } else {
        out.push_back('(');
        print_region(c->body, out);
        out.push_back(')');
      }
    } else if (const auto* s = std::get_if<Scroll>(&it.node)) {
      out.push_back('{');
      print_region(s->antecedent, out);
      out += s->antecedent.blank() ? "=> " : " => ";
      print_region(s->consequent, out);
      if (!s->consequent.blank()) out.push_back(' ');
      out.push_back('}');
    } else {
      const auto& d = std::get<Disj>(it.node);
      out.push_back('{');
      print_region(d.left, out);
      out += d.left.blank() ? "| " : " | ";
      print_region(d.right, out);
      if (!d.right.blank()) out.push_back(' ');
      out.push_back('}');
    }
  }
}

}  // namespace

Graph parse_graph(const std::string& text) {
  GraphParser p(text);
  return p.parse_all();
}

std::string print_graph(const Graph& g) {
  std::string out;
  print_region(g, out);
  return out;
}

std::vector<Graph> parse_geg(const std::string& text) {
  std::vector<Graph> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto cut_pos = line.find('%');
    if (cut_pos != std::string::npos) line.erase(cut_pos);
    bool blank_line = line.find_first_not_of(" \t\r") == std::string::npos;
    if (blank_line) continue;
    out.push_back(parse_graph(line));
  }
  return out;
}

std::string print_geg(const std::vector<Graph>& graphs) {
  std::string out;
  for (const Graph& g : graphs) {
    out += print_graph(g);
    out.push_back('\n');
  }
  return out;
}

}  // namespace alfa
