#include <set>
#include <string>
#include <vector>

#include "alfa/corpus.hpp"
#include "alfa/derivation.hpp"
#include "alfa/formula.hpp"
#include "alfa/graph.hpp"
#include "alfa/nd.hpp"
#include "alfa/semantics.hpp"
#include "doctest.h"

using namespace alfa;

namespace {
Graph G(const std::string& s) { return parse_graph(s); }
Formula F(const std::string& s) { return parse_formula(s); }

const std::vector<std::string>& data_files() {
  static const std::vector<std::string> files = {
      "imp_refl.ndp", "modus.ndp",   "bot_elim.ndp",
      "and_swap.ndp", "or_swap.ndp", "imp_k.ndp",
      "and_mp.ndp",   "imp_trans.ndp", "double_neg_intro.ndp",
      "or_unit.ndp",  "or_impl.ndp", "weaken.ndp"};
  return files;
}

void collect_tags(const NdNode& node, std::set<NdTag>& tags) {
  tags.insert(node.tag);
  for (const auto& c : node.children) collect_tags(c, tags);
}
}  // namespace

TEST_CASE("proof trees parse and reprint") {
  const std::string text = R"(
proof modus
hyp (p)
hyp (p -> q)
IMP_E (q) {
  HYP (p -> q)
  HYP (p)
}
end
)";
  const auto proofs = parse_nd(text);
  REQUIRE(proofs.size() == 1);
  const NdProof& p = proofs[0];
  CHECK(p.name == "modus");
  REQUIRE(p.hyps.size() == 2);
  CHECK(p.hyps[0] == F("p"));
  CHECK(p.hyps[1] == F("p -> q"));
  CHECK(p.root.tag == NdTag::ImpE);
  REQUIRE(p.root.children.size() == 2);
  CHECK(p.root.children[0].formula == F("p -> q"));
  // printing round trips through the parser
  const std::string printed = print_nd(proofs);
  CHECK(print_nd(parse_nd(printed)) == printed);
}

TEST_CASE("labels are optional annotations") {
  const auto proofs = parse_nd(R"(
proof t
hyp (p v q)
OR_E (p v q) {
  HYP (p v q)
  OR_I_L (p v q) [p] {
    HYP (p)
  }
  OR_I_R (p v q) [q] {
    HYP (q)
  }
}
end
)");
  REQUIRE(proofs.size() == 1);
  CHECK(proofs[0].root.children[1].label == "p");
  CHECK(proofs[0].root.children[2].label == "q");
}

TEST_CASE("nd parse errors") {
  CHECK_THROWS_AS(parse_nd("proof t\nNOT_A_TAG (p)\nend\n"), ParseError);
  CHECK_THROWS_AS(parse_nd("proof t\nHYP (p\nend\n"), ParseError);
  CHECK_THROWS_AS(parse_nd("proof t\nHYP (p)\n"), ParseError);  // missing end
}

TEST_CASE("detachment compiles to a checking derivation") {
  const auto proofs = parse_nd(R"(
proof modus
hyp (p)
hyp (p -> q)
IMP_E (q) {
  HYP (p -> q)
  HYP (p)
}
end
)");
  const Derivation d = compile_nd(proofs[0]);
  CHECK(d.system == SystemId::ALFA_I);
  CHECK(check(d, LemmaDb{}).ok);
  CHECK(claim_of(d) == Sequent{G("p {p => q}"), G("q")});
}

TEST_CASE("discharge compiles via the splitting combinator") {
  const auto proofs = parse_nd(R"(
proof imp_refl
IMP_I (p -> p) {
  HYP (p)
}
end
)");
  const Derivation d = compile_nd(proofs[0]);
  CHECK(check(d, LemmaDb{}).ok);
  CHECK(claim_of(d) == Sequent{G(""), G("{p => p}")});

  CompileOptions blank;
  blank.use_blank_discharge = true;
  const Derivation d2 = compile_nd(proofs[0], blank);
  CHECK(check(d2, LemmaDb{}).ok);
  CHECK(claim_of(d2) == claim_of(d));
}

TEST_CASE("the blank-source combinator cannot discharge under hypotheses") {
  const auto proofs = parse_nd(R"(
proof weaken
hyp (q)
IMP_I (p -> q) {
  HYP (q)
}
end
)");
  CompileOptions blank;
  blank.use_blank_discharge = true;
  CHECK_THROWS_AS(compile_nd(proofs[0], blank), CompileError);
  CHECK(check(compile_nd(proofs[0]), LemmaDb{}).ok);  // default mode is fine
}

TEST_CASE("ill-typed trees fail with a node path") {
  // the cited hypothesis was never declared
  const auto proofs = parse_nd(R"(
proof bad
IMP_E (q) {
  HYP (p -> q)
  HYP (p)
}
end
)");
  try {
    compile_nd(proofs[0]);
    CHECK(false);
  } catch (const CompileError& e) {
    CHECK_FALSE(e.path.empty());
    CHECK(std::string(e.what()).find(e.path) != std::string::npos);
  }
}

TEST_CASE("mismatched connectives fail to compile") {
  const auto proofs = parse_nd(R"(
proof bad
hyp (p & q)
OR_E (p) {
  HYP (p & q)
  HYP (p)
  HYP (p)
}
end
)");
  CHECK_THROWS_AS(compile_nd(proofs[0]), CompileError);
}

TEST_CASE("every bundled proof tree compiles, checks, and is faithful") {
  std::set<NdTag> tags;
  for (const auto& file : data_files()) {
    const std::string path =
        std::string(ALFA_SOURCE_DIR) + "/tests/data/nd/" + file;
    const auto proofs = parse_nd(read_text_file(path));
    REQUIRE_MESSAGE(!proofs.empty(), file);
    for (const auto& p : proofs) {
      collect_tags(p.root, tags);
      const Derivation d = compile_nd(p);
      const Verdict v = check(d, LemmaDb{});
      CHECK_MESSAGE(v.ok, (file + ": " + v.message));
      // the derivation's claim is exactly the embedded statement
      Graph hyp_sheet;
      for (const auto& h : p.hyps)
        hyp_sheet = multiset_union(hyp_sheet, embed(h));
      CHECK(claim_of(d) == Sequent{hyp_sheet, embed(p.root.formula)});
      // and the statement itself is constructively derivable
      CHECK(ipc_provable(p.hyps, p.root.formula));
      CHECK(sequent_sound(Logic::Intuitionistic, claim_of(d).source,
                          claim_of(d).target));
    }
  }
  CHECK(tags.size() == 10);  // every inference form appears in the data set
}
