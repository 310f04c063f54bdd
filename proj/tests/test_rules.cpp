#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "alfa/graph.hpp"
#include "alfa/rules.hpp"
#include "doctest.h"

using namespace alfa;

namespace {
Graph G(const std::string& s) { return parse_graph(s); }

bool has(const std::vector<Graph>& results, const std::string& g) {
  return std::find(results.begin(), results.end(), G(g)) != results.end();
}

bool has(const std::vector<Sequent>& results, const std::string& src,
         const std::string& tgt) {
  return std::find(results.begin(), results.end(),
                   Sequent{G(src), G(tgt)}) != results.end();
}
}  // namespace

TEST_CASE("names, degrees, witnesses") {
  for (RuleId id : {RuleId::R0, RuleId::R2, RuleId::R3, RuleId::R4, RuleId::R5,
                    RuleId::R6, RuleId::R7, RuleId::R8, RuleId::I_OR,
                    RuleId::I_NEG, RuleId::E_NEG, RuleId::MPI, RuleId::E_BOT,
                    RuleId::R8I, RuleId::R8ID, RuleId::E_OR, RuleId::I_P2,
                    RuleId::I_P3, RuleId::E_P, RuleId::I_ORP, RuleId::CTX}) {
    const auto back = parse_rule(rule_name(id));
    REQUIRE(back.has_value());
    CHECK(*back == id);
  }
  CHECK_FALSE(parse_rule("R99").has_value());
  CHECK(rule_degree(RuleId::R2) == 1);
  CHECK(rule_degree(RuleId::R0) == 2);
  CHECK(rule_degree(RuleId::CTX) == 2);
  CHECK(rule_needs_witness(RuleId::R3));
  CHECK(rule_needs_witness(RuleId::I_OR));
  CHECK(rule_needs_witness(RuleId::E_BOT));
  CHECK_FALSE(rule_needs_witness(RuleId::R2));
}

TEST_CASE("system registries") {
  CHECK(registry(SystemId::ALFAO).logic == Logic::Classical);
  CHECK(registry(SystemId::ALFA_I).logic == Logic::Intuitionistic);
  CHECK(registry(SystemId::ALFA_IO).logic == Logic::Intuitionistic);
  CHECK(registry(SystemId::ALFA_IO_CLASSIC).logic == Logic::Classical);
  CHECK(registry(SystemId::ALFAO).axiom.blank());
  for (SystemId sys : {SystemId::ALFAO, SystemId::ALFA_I, SystemId::ALFA_IO,
                       SystemId::ALFA_IO_CLASSIC}) {
    CHECK(parse_system(system_name(sys)) == sys);
    CHECK(system_subsumes(sys, sys));
  }
  CHECK(system_subsumes(SystemId::ALFA_IO_CLASSIC, SystemId::ALFA_IO));
  CHECK_FALSE(system_subsumes(SystemId::ALFA_IO, SystemId::ALFA_IO_CLASSIC));
  CHECK_FALSE(system_subsumes(SystemId::ALFAO, SystemId::ALFA_I));
  CHECK_FALSE(system_subsumes(SystemId::ALFA_I, SystemId::ALFAO));
}

TEST_CASE("erasure keeps any sub-multiset") {
  const auto results = apply_first_degree(RuleId::R2, G("a b"));
  CHECK(results.size() == 4);
  CHECK(has(results, ""));
  CHECK(has(results, "a"));
  CHECK(has(results, "b"));
  CHECK(has(results, "a b"));
  CHECK(apply_first_degree(RuleId::R2, G("p p")).size() == 3);
}

TEST_CASE("insertion needs a single cut and a witness") {
  CHECK(apply_first_degree(RuleId::R3, G("(a)"), G("w w")) ==
        std::vector<Graph>{G("(a w w)")});
  CHECK(apply_first_degree(RuleId::R3, G("a"), G("w")).empty());
  CHECK(apply_first_degree(RuleId::R3, G("(a) (b)"), G("w")).empty());
  CHECK_THROWS_AS(apply_first_degree(RuleId::R3, G("(a)")),
                  std::invalid_argument);
}

TEST_CASE("iteration copies context into a nested cut") {
  const auto results = apply_first_degree(RuleId::R4, G("(b c (a))"));
  CHECK(results.size() == 4);
  CHECK(has(results, "(b c (a))"));
  CHECK(has(results, "(b c (a b))"));
  CHECK(has(results, "(b c (a c))"));
  CHECK(has(results, "(b c (a b c))"));
  CHECK(apply_first_degree(RuleId::R4, G("(a b)")).empty());  // no nested cut
  CHECK(apply_first_degree(RuleId::R4, G("a (b)")).empty());  // not a single cut
}

TEST_CASE("deiteration cancels the context inside a cut") {
  CHECK(apply_first_degree(RuleId::R5, G("a (a b)")) ==
        std::vector<Graph>{G("a (b)")});
  CHECK(apply_first_degree(RuleId::R5, G("c (a b)")).empty());
  CHECK(apply_first_degree(RuleId::R5, G("a b (a b)")) ==
        std::vector<Graph>{G("a b #")});
}

TEST_CASE("double-cut deletion") {
  CHECK(apply_first_degree(RuleId::R6, G("a ((b))")) ==
        std::vector<Graph>{G("a b")});
  CHECK(apply_first_degree(RuleId::R6, G("((z) q) ((r))")) ==
        std::vector<Graph>{G("((z) q) r")});
  CHECK(apply_first_degree(RuleId::R6, G("(a)")).empty());
  CHECK(apply_first_degree(RuleId::R6, G("(#)")) ==
        std::vector<Graph>{G("")});
}

TEST_CASE("double-cut wrapping inside a cut") {
  const auto results = apply_first_degree(RuleId::R7, G("(a b)"));
  CHECK(results.size() == 4);
  CHECK(has(results, "(a ((b)))"));
  CHECK(has(results, "(b ((a)))"));
  CHECK(has(results, "(((a b)))"));
  CHECK(has(results, "(a b (#))"));
}

TEST_CASE("disjunction introduction wraps the sheet") {
  CHECK(apply_first_degree(RuleId::I_OR, G("a (b)"), G("c")) ==
        std::vector<Graph>{G("{a (b) | c}")});
  CHECK(apply_first_degree(RuleId::I_OR, G(""), G("")) ==
        std::vector<Graph>{G("{ | }")});
}

TEST_CASE("negation introduction and elimination") {
  CHECK(apply_first_degree(RuleId::I_NEG, G("(a b)")) ==
        std::vector<Graph>{G("{a b => #}")});
  CHECK(apply_first_degree(RuleId::I_NEG, G("a")).empty());
  CHECK(apply_first_degree(RuleId::I_NEG, G("(a) (b)")).empty());
  CHECK(apply_first_degree(RuleId::E_NEG, G("{a b => #}")) ==
        std::vector<Graph>{G("(a b)")});
  CHECK(apply_first_degree(RuleId::E_NEG, G("{a => b}")).empty());
  CHECK(apply_first_degree(RuleId::E_NEG, G("{a => # #}")).empty());
}

TEST_CASE("scroll detachment needs the exact antecedent") {
  CHECK(apply_first_degree(RuleId::MPI, G("b {b => c}")) ==
        std::vector<Graph>{G("c")});
  CHECK(apply_first_degree(RuleId::MPI, G("b c {b => c}")).empty());
  CHECK(apply_first_degree(RuleId::MPI, G("{=> a}")) ==
        std::vector<Graph>{G("a")});
  // two scroll items: each can fire against the rest
  const auto results =
      apply_first_degree(RuleId::MPI, G("{{a => #} => c} {a => #}"));
  CHECK(has(results, "c"));
}

TEST_CASE("explosion from the false sheet") {
  CHECK(apply_first_degree(RuleId::E_BOT, G("#"), G("x y")) ==
        std::vector<Graph>{G("x y")});
  CHECK(apply_first_degree(RuleId::E_BOT, G("# a"), G("x")).empty());
  CHECK_THROWS_AS(apply_first_degree(RuleId::E_BOT, G("#")),
                  std::invalid_argument);
}

TEST_CASE("cut-to-scroll splitting") {
  const auto results = apply_first_degree(RuleId::I_P2, G("(a b)"));
  CHECK(results.size() == 4);
  CHECK(has(results, "{=> (a b)}"));
  CHECK(has(results, "{a => (b)}"));
  CHECK(has(results, "{b => (a)}"));
  CHECK(has(results, "{a b => #}"));
}

TEST_CASE("disjunction-to-scroll and scroll unfolding") {
  const auto p3 = apply_first_degree(RuleId::I_P3, G("{a | b}"));
  CHECK(p3.size() == 2);
  CHECK(has(p3, "{(a) => b}"));
  CHECK(has(p3, "{(b) => a}"));
  CHECK(apply_first_degree(RuleId::I_P3, G("{a | a}")).size() == 1);
  CHECK(apply_first_degree(RuleId::E_P, G("{a => b}")) ==
        std::vector<Graph>{G("(a (b))")});
  CHECK(apply_first_degree(RuleId::E_P, G("{a => #}")) ==
        std::vector<Graph>{G("(a (#))")});
  CHECK(apply_first_degree(RuleId::E_P, G("{=> a}")) ==
        std::vector<Graph>{G("((a))")});
}

TEST_CASE("cut pair collapses to a disjunction") {
  CHECK(apply_first_degree(RuleId::I_ORP, G("((a) (b))")) ==
        std::vector<Graph>{G("{a | b}")});
  CHECK(apply_first_degree(RuleId::I_ORP, G("((a) b)")).empty());
  CHECK(apply_first_degree(RuleId::I_ORP, G("((a) (b) (c))")).empty());
  CHECK(apply_first_degree(RuleId::I_ORP, G("((a))")).empty());
}

TEST_CASE("wrong degree throws") {
  CHECK_THROWS_AS(apply_first_degree(RuleId::R0, G("a")),
                  std::invalid_argument);
  CHECK_THROWS_AS(conclude_second_degree(RuleId::R2, {}),
                  std::invalid_argument);
}

TEST_CASE("joining two derivations over a common source") {
  const auto results = conclude_second_degree(
      RuleId::R0, {Sequent{G("a"), G("b")}, Sequent{G("a"), G("c")}});
  CHECK(results == std::vector<Sequent>{Sequent{G("a"), G("b c")}});
  CHECK(conclude_second_degree(
            RuleId::R0, {Sequent{G("a"), G("b")}, Sequent{G("x"), G("c")}})
            .empty());
  CHECK_THROWS_AS(conclude_second_degree(RuleId::R0, {Sequent{G("a"), G("b")}}),
                  std::invalid_argument);
}

TEST_CASE("discharge into a cut or a scroll") {
  const auto r8 = conclude_second_degree(RuleId::R8, {Sequent{G("a b"), G("c")}});
  CHECK(r8.size() == 4);
  CHECK(has(r8, "a b", "((c))"));
  CHECK(has(r8, "a", "(b (c))"));
  CHECK(has(r8, "b", "(a (c))"));
  CHECK(has(r8, "", "(a b (c))"));

  const auto r8i =
      conclude_second_degree(RuleId::R8I, {Sequent{G("a b"), G("c")}});
  CHECK(r8i.size() == 4);
  CHECK(has(r8i, "a b", "{=> c}"));
  CHECK(has(r8i, "a", "{b => c}"));
  CHECK(has(r8i, "b", "{a => c}"));
  CHECK(has(r8i, "", "{a b => c}"));

  CHECK(conclude_second_degree(RuleId::R8ID, {Sequent{G("a"), G("b")}}) ==
        std::vector<Sequent>{Sequent{G(""), G("{a => b}")}});
}

TEST_CASE("joining two derivations over a disjunction") {
  const auto results = conclude_second_degree(
      RuleId::E_OR, {Sequent{G("a"), G("c")}, Sequent{G("b"), G("c")}});
  CHECK(results == std::vector<Sequent>{Sequent{G("{a | b}"), G("c")}});
  CHECK(conclude_second_degree(
            RuleId::E_OR, {Sequent{G("a"), G("c")}, Sequent{G("b"), G("d")}})
            .empty());
}

TEST_CASE("context lifting juxtaposes both sides") {
  const Sequent lifted = ctx_lift(Sequent{G("b"), G("c")}, G("a"));
  CHECK(lifted == Sequent{G("a b"), G("a c")});
  CHECK(ctx_lift(Sequent{G(""), G("x")}, G("")) == Sequent{G(""), G("x")});
}
