#include <string>
#include <vector>

#include "alfa/derivation.hpp"
#include "alfa/graph.hpp"
#include "alfa/script.hpp"
#include "doctest.h"

using namespace alfa;

namespace {
Graph G(const std::string& s) { return parse_graph(s); }
}  // namespace

TEST_CASE("scripts parse into derivations") {
  const auto ds = parse_proofs(R"(
% two systems in one file
system alfao

theorem one
vars a
from: a (a (b))
  step R5 => a ((b))
qed

system alfa_i

theorem two
from: b {b => c}
  step MPI => c
qed
)");
  REQUIRE(ds.size() == 2);
  CHECK(ds[0].system == SystemId::ALFAO);
  CHECK(ds[0].name == "one");
  CHECK(ds[0].vars == std::vector<std::string>{"a"});
  CHECK(ds[0].initial == G("a (a (b))"));
  CHECK(ds[0].steps.size() == 1);
  CHECK(ds[1].system == SystemId::ALFA_I);
  CHECK(ds[1].name == "two");
  CHECK(ds[1].vars.empty());
}

TEST_CASE("step options parse in either position") {
  const Derivation d = parse_proof(R"(
system alfa_i
theorem w
from: #
  step E_BOT witness x y => x y
qed
)");
  const auto* fd = std::get_if<FirstDegreeStep>(&d.steps.at(0).node);
  REQUIRE(fd != nullptr);
  REQUIRE(fd->witness.has_value());
  CHECK(*fd->witness == G("x y"));

  const Derivation s = parse_proof(R"(
system alfao
theorem sp
from: (a b)
  have h : a (a b) |- (b) {
    step R5 => a (b)
    step R2 => (b)
  }
  step R8 [h] split (a b) => (a ((b)))
qed
)");
  const auto* sd = std::get_if<SecondDegreeStep>(&s.steps.at(1).node);
  REQUIRE(sd != nullptr);
  CHECK(sd->refs == std::vector<std::string>{"h"});
  REQUIRE(sd->split.has_value());
  CHECK(*sd->split == G("(a b)"));
}

TEST_CASE("lemma citations parse substitutions") {
  const Derivation d = parse_proof(R"(
system alfao
theorem use
from: ((b))
  lemma mp [b := b; a := ] => b
qed
)");
  const auto* ls = std::get_if<LemmaStep>(&d.steps.at(0).node);
  REQUIRE(ls != nullptr);
  CHECK(ls->name == "mp");
  REQUIRE(ls->subst.size() == 2);
  CHECK(ls->subst.at("a") == G(""));
  CHECK(ls->subst.at("b") == G("b"));
}

TEST_CASE("scripts round trip through the printer") {
  const std::vector<std::string> sources = {
      R"(
system alfao
theorem t1
vars a b
from: a (a (b))
  step R5 => a ((b))
  step R2 => ((b))
  step R6 => b
qed
)",
      R"(
system alfa_i
theorem t2
from: {a | b}
  have h1 : a |- {(a) => b} {
    have h2 : a (a) |- b {
      have h3 : (a) |- {a => #} {
        step I_NEG => {a => #}
      }
      step CTX [h3] => a {a => #}
      step MPI => #
      step E_BOT witness b => b
    }
    step R8I [h2] split a => {(a) => b}
  }
  have h4 : b |- {(a) => b} {
    have h5 : b (a) |- b {
      step R2 => b
    }
    step R8I [h5] split b => {(a) => b}
  }
  step E_OR [h1, h4] => {(a) => b}
qed
)",
      R"(
system alfa_io
theorem t3
vars a
from: #
  step I_OR witness a => {a | #}
  lemma helper [a := (x); b := ] => q
qed
)"};
  for (const auto& text : sources) {
    const auto parsed = parse_proofs(text);
    const std::string printed = print_proofs(parsed);
    const auto again = parse_proofs(printed);
    REQUIRE(again.size() == parsed.size());
    for (std::size_t i = 0; i < parsed.size(); ++i) CHECK(again[i] == parsed[i]);
    // printing is a fixed point after one round
    CHECK(print_proofs(again) == printed);
  }
}

TEST_CASE("reserved words cannot be used as atoms or names") {
  CHECK_THROWS_AS(parse_proof(R"(
system alfao
theorem bad
from: step
  step R2 => step
qed
)"),
                  ParseError);
  CHECK_THROWS_AS(parse_proof(R"(
system alfao
theorem lemma
from: a
  step R2 => a
qed
)"),
                  ParseError);
}

TEST_CASE("malformed scripts report positions") {
  try {
    parse_proof("system alfao\ntheorem t\nfrom a\nqed\n");  // missing ':'
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }
  CHECK_THROWS_AS(parse_proof("theorem t\nfrom: a\nqed\n"), ParseError);
  CHECK_THROWS_AS(parse_proof("system nosuch\ntheorem t\nfrom: a\nqed\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_proof(R"(
system alfao
theorem t
from: a
  step R2 witness b [h] => a
qed
)"),
                  ParseError);  // refs on a first-degree step
  CHECK_THROWS_AS(parse_proof(R"(
system alfao
theorem t
from: a
  have h : a |- a {
    step R2 => a
  }
  step R0 [h, h] witness b => a a
qed
)"),
                  ParseError);  // witness on a second-degree step
}

TEST_CASE("unknown rules are parse errors") {
  CHECK_THROWS_AS(parse_proof(R"(
system alfao
theorem t
from: a
  step R99 => a
qed
)"),
                  ParseError);
}
