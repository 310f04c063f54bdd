// formula.cpp — formula trees, translation, embedding, formula text format.
#include "alfa/formula.hpp"

#include <cctype>
#include <set>
#include <stdexcept>

namespace alfa {

struct Formula::Node {
  FKind kind;
  std::string name;                    // Atom
  std::shared_ptr<const Node> left;    // And/Or/Imp
  std::shared_ptr<const Node> right;   // And/Or/Imp
};

namespace {
const Formula& require_binary(const Formula& f) {
  if (f.kind() != FKind::And && f.kind() != FKind::Or && f.kind() != FKind::Imp)
    throw std::logic_error("formula node has no operands");
  return f;
}
}  // namespace

Formula Formula::atom(std::string name) {
  return Formula(std::make_shared<Node>(Node{FKind::Atom, std::move(name), nullptr, nullptr}));
}
Formula Formula::top() {
  static const Formula t(std::make_shared<Node>(Node{FKind::Top, "", nullptr, nullptr}));
  return t;
}
Formula Formula::bot() {
  static const Formula f(std::make_shared<Node>(Node{FKind::Bot, "", nullptr, nullptr}));
  return f;
}
Formula Formula::conj(Formula a, Formula b) {
  return Formula(std::make_shared<Node>(Node{FKind::And, "", a.node_, b.node_}));
}
Formula Formula::disj(Formula a, Formula b) {
  return Formula(std::make_shared<Node>(Node{FKind::Or, "", a.node_, b.node_}));
}
Formula Formula::imp(Formula a, Formula b) {
  return Formula(std::make_shared<Node>(Node{FKind::Imp, "", a.node_, b.node_}));
}
Formula Formula::neg(Formula a) { return imp(std::move(a), bot()); }

FKind Formula::kind() const { return node_->kind; }
const std::string& Formula::name() const { return node_->name; }
Formula Formula::left() const {
  require_binary(*this);
  return Formula(node_->left);
}
Formula Formula::right() const {
  require_binary(*this);
  return Formula(node_->right);
}
bool Formula::is_neg() const {
  return kind() == FKind::Imp && node_->right->kind == FKind::Bot;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->kind != b.node_->kind) return false;
  switch (a.node_->kind) {
    case FKind::Atom:
      return a.node_->name == b.node_->name;
    case FKind::Top:
    case FKind::Bot:
      return true;
    default:
      return Formula(a.node_->left) == Formula(b.node_->left) &&
             Formula(a.node_->right) == Formula(b.node_->right);
  }
}

namespace {
void collect_formula_atoms(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case FKind::Atom:
      out.insert(f.name());
      break;
    case FKind::And:
    case FKind::Or:
    case FKind::Imp:
      collect_formula_atoms(f.left(), out);
      collect_formula_atoms(f.right(), out);
      break;
    default:
      break;
  }
}
}  // namespace

std::vector<std::string> formula_atoms(const Formula& f) {
  std::set<std::string> s;
  collect_formula_atoms(f, s);
  return {s.begin(), s.end()};
}

Formula substitute(const Formula& f, const std::map<std::string, Formula>& sigma) {
  switch (f.kind()) {
    case FKind::Atom: {
      auto hit = sigma.find(f.name());
      return hit == sigma.end() ? f : hit->second;
    }
    case FKind::And:
      return Formula::conj(substitute(f.left(), sigma), substitute(f.right(), sigma));
    case FKind::Or:
      return Formula::disj(substitute(f.left(), sigma), substitute(f.right(), sigma));
    case FKind::Imp:
      return Formula::imp(substitute(f.left(), sigma), substitute(f.right(), sigma));
    default:
      return f;
  }
}

namespace {
Formula translate_item(const Item& it) {
  if (const auto* a = std::get_if<Atom>(&it.node)) return Formula::atom(a->name);
  if (const auto* c = std::get_if<Cut>(&it.node))
    return Formula::imp(translate(c->body), Formula::bot());
  if (const auto* s = std::get_if<Scroll>(&it.node))
    return Formula::imp(translate(s->antecedent), translate(s->consequent));
  const auto& d = std::get<Disj>(it.node);
  return Formula::disj(translate(d.left), translate(d.right));
}
}  // namespace

Formula translate(const Graph& g) {
  if (g.blank()) return Formula::top();
  Formula acc = translate_item(g.items().front());
  for (std::size_t i = 1; i < g.items().size(); ++i)
    acc = Formula::conj(std::move(acc), translate_item(g.items()[i]));
  return acc;
}

Graph embed(const Formula& f) {
  switch (f.kind()) {
    case FKind::Atom:
      return sheet({atom(f.name())});
    case FKind::Top:
      return Graph();
    case FKind::Bot:
      return falsum();
    case FKind::And:
      return multiset_union(embed(f.left()), embed(f.right()));
    case FKind::Or:
      return sheet({disj(embed(f.left()), embed(f.right()))});
    default:
      return sheet({scroll(embed(f.left()), embed(f.right()))});
  }
}

namespace {

class FormulaParser {
 public:
  explicit FormulaParser(const std::string& text) : text_(text) {}

  Formula parse_all() {
    Formula f = parse_imp();
    skip_ws();
    if (!eof()) fail("unexpected trailing input");
    return f;
  }

 private:
  Formula parse_imp() {
    Formula lhs = parse_or();
    skip_ws();
    if (!eof() && peek() == '-') {
      get();
      if (eof() || peek() != '>') fail("expected '->'");
      get();
      return Formula::imp(std::move(lhs), parse_imp());
    }
    return lhs;
  }

  Formula parse_or() {
    Formula acc = parse_and();
    for (;;) {
      skip_ws();
      if (at_or_operator()) {
        consume_ident();
        acc = Formula::disj(std::move(acc), parse_and());
      } else {
        return acc;
      }
    }
  }

  Formula parse_and() {
    Formula acc = parse_unary();
    for (;;) {
      skip_ws();
      if (!eof() && peek() == '&') {
        get();
        acc = Formula::conj(std::move(acc), parse_unary());
      } else {
        return acc;
      }
    }
  }

  Formula parse_unary() {
    skip_ws();
    if (eof()) fail("unexpected end of input");
    char c = peek();
    if (c == '~') {
      get();
      return Formula::neg(parse_unary());
    }
    if (c == '(') {
      get();
      Formula f = parse_imp();
      skip_ws();
      if (eof() || peek() != ')') fail("expected ')'");
      get();
      return f;
    }
    if (c == 'T') {
      get();
      return Formula::top();
    }
    if (c == 'F') {
      get();
      return Formula::bot();
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      std::string name = consume_ident();
      if (name == "v") fail("'v' is the disjunction operator, not an atom");
      return Formula::atom(std::move(name));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  // True when the next token is the standalone identifier "v".
  bool at_or_operator() {
    if (eof() || peek() != 'v') return false;
    std::size_t j = pos_ + 1;
    if (j < text_.size()) {
      char d = text_[j];
      if (std::islower(static_cast<unsigned char>(d)) ||
          std::isdigit(static_cast<unsigned char>(d)) || d == '_')
        return false;
    }
    return true;
  }

  std::string consume_ident() {
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
    return name;
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
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
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
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, col_);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

// Precedence: -> 1 (right), v 2 (left), & 3 (left), ~ 4, atoms 5.
int precedence(const Formula& f) {
  if (f.is_neg()) return 4;
  switch (f.kind()) {
    case FKind::Imp:
      return 1;
    case FKind::Or:
      return 2;
    case FKind::And:
      return 3;
    default:
      return 5;
  }
}

void print_rec(const Formula& f, int ctx, std::string& out) {
  int prec = precedence(f);
  bool parens = prec < ctx;
  if (parens) out.push_back('(');
  if (f.is_neg()) {
    out.push_back('~');
    print_rec(f.left(), 4, out);  // a chain of signs needs no parentheses
  } else {
    switch (f.kind()) {
      case FKind::Atom:
        out += f.name();
        break;
      case FKind::Top:
        out.push_back('T');
        break;
      case FKind::Bot:
        out.push_back('F');
        break;
      case FKind::And:
        print_rec(f.left(), 3, out);
        out += " & ";
        print_rec(f.right(), 4, out);
        break;
      case FKind::Or:
        print_rec(f.left(), 2, out);
        out += " v ";
        print_rec(f.right(), 3, out);
        break;
      case FKind::Imp:
        print_rec(f.left(), 2, out);
        out += " -> ";
        print_rec(f.right(), 1, out);
        break;
    }
  }
  if (parens) out.push_back(')');
}

}  // namespace

Formula parse_formula(const std::string& text) {
  FormulaParser p(text);
  return p.parse_all();
}

std::string print_formula(const Formula& f) {
  std::string out;
  print_rec(f, 0, out);
  return out;
}

}  // namespace alfa
