#include <string>

#include "alfa/formula.hpp"
#include "alfa/graph.hpp"
#include "doctest.h"

using namespace alfa;

namespace {
Graph G(const std::string& s) { return parse_graph(s); }
Formula F(const std::string& s) { return parse_formula(s); }
}  // namespace

TEST_CASE("connective precedence and associativity") {
  CHECK(F("p & q -> r v s") ==
        Formula::imp(Formula::conj(Formula::atom("p"), Formula::atom("q")),
                     Formula::disj(Formula::atom("r"), Formula::atom("s"))));
  CHECK(F("p -> q -> r") ==
        Formula::imp(Formula::atom("p"),
                     Formula::imp(Formula::atom("q"), Formula::atom("r"))));
  CHECK(F("p & q & r") ==
        Formula::conj(Formula::conj(Formula::atom("p"), Formula::atom("q")),
                      Formula::atom("r")));
  CHECK(F("~p & q") == Formula::conj(Formula::neg(Formula::atom("p")),
                                     Formula::atom("q")));
  CHECK(F("(p -> q) & r") != F("p -> q & r"));
}

TEST_CASE("negation is implication into the false constant") {
  CHECK(F("~p") == Formula::imp(Formula::atom("p"), Formula::bot()));
  CHECK(F("~p").is_neg());
  CHECK(F("~~p") == Formula::neg(Formula::neg(Formula::atom("p"))));
  CHECK(print_formula(F("~~p -> p")) == "~~p -> p");
}

TEST_CASE("formula text round trips") {
  for (const std::string text :
       {"p", "T", "F", "~p", "p & q v r", "(p v q) & r", "p -> (q -> r) -> s",
        "~(p & ~q) -> (p -> q)", "~~(p v ~p)"}) {
    const Formula f = F(text);
    CHECK(parse_formula(print_formula(f)) == f);
  }
}

TEST_CASE("formula parse errors") {
  CHECK_THROWS_AS(F(""), ParseError);
  CHECK_THROWS_AS(F("p &"), ParseError);
  CHECK_THROWS_AS(F("(p"), ParseError);
  CHECK_THROWS_AS(F("v"), ParseError);  // bare disjunction sign
  CHECK_THROWS_AS(F("p q"), ParseError);
}

TEST_CASE("atoms and substitution") {
  CHECK(formula_atoms(F("q & (p -> r) & q")) ==
        std::vector<std::string>{"p", "q", "r"});
  const std::map<std::string, Formula> sigma = {{"p", F("q -> q")}};
  CHECK(substitute(F("p & ~p"), sigma) == F("(q -> q) & ~(q -> q)"));
}

TEST_CASE("sheets read as formulas") {
  CHECK(translate(G("")) == Formula::top());
  CHECK(translate(G("a")) == F("a"));
  CHECK(translate(G("a b")) == F("a & b"));
  CHECK(translate(G("(a)")) == F("a -> F"));
  CHECK(translate(G("{a => b}")) == F("a -> b"));
  CHECK(translate(G("{a | b}")) == F("a v b"));
  CHECK(translate(G("(a b)")) == F("a & b -> F"));
  // juxtaposition reads as a left-nested conjunction in canonical order
  CHECK(translate(G("c a b")) == F("a & b & c"));
}

TEST_CASE("formulas draw as sheets") {
  CHECK(embed(F("T")) == G(""));
  CHECK(embed(F("F")) == falsum());
  CHECK(embed(F("p & q")) == G("p q"));
  CHECK(embed(F("p & (q & r)")) == G("p q r"));  // conjunction flattens
  CHECK(embed(F("p v q")) == G("{p | q}"));
  CHECK(embed(F("p -> q")) == G("{p => q}"));
  CHECK(embed(F("~p")) == G("{p => #}"));
  CHECK(embed(F("p & p")) == G("p p"));  // multiplicity is kept
}
