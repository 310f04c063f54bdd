// nd.hpp — natural-deduction proof trees and their compilation into
// scroll-calculus derivations.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "alfa/derivation.hpp"
#include "alfa/formula.hpp"

namespace alfa {

enum class NdTag {
  Hyp,    // leaf; formula must be among the declared hypotheses
  AndI,   // children: proof of A, proof of B; concludes A & B
  AndEL,  // child: proof of A & B; concludes A
  AndER,  // child: proof of A & B; concludes B
  OrIL,   // child: proof of A; concludes A v B
  OrIR,   // child: proof of B; concludes A v B
  BotE,   // child: proof of F; concludes anything
  ImpE,   // children: proof of A -> B, proof of A; concludes B
  ImpI,   // child: proof of B under an extra hypothesis A; concludes A -> B
  OrE,    // children: proof of A v B, proof of C under A, proof of C under B
};

const std::string& nd_tag_name(NdTag tag);

struct NdNode {
  NdTag tag = NdTag::Hyp;
  Formula formula = Formula::top();
  std::string label;  // optional annotation; discharge is by formula
  std::vector<NdNode> children;
};

struct NdProof {
  std::string name;
  std::vector<Formula> hyps;  // undischarged hypotheses, as a multiset
  NdNode root;
};

// Text format ("%" starts a line comment):
//   file  := proof*
//   proof := "proof" NAME ("hyp" "(" formula ")")* node "end"
//   node  := TAG "(" formula ")" ("[" LABEL "]")? ("{" node* "}")?
std::vector<NdProof> parse_nd(const std::string& text);  // throws ParseError
std::string print_nd(const std::vector<NdProof>& proofs);

struct CompileError : std::runtime_error {
  CompileError(std::string node_path, const std::string& msg);
  std::string path;  // e.g. "root/2/0": child indices from the root
};

struct CompileOptions {
  // Discharge implications with the blank-source combinator instead of the
  // splitting one. That combinator needs an empty residual context, so
  // compilation fails (with a CompileError) on nested discharges.
  bool use_blank_discharge = false;
};

// Builds a derivation of embed(root.formula) from the juxtaposition of the
// embedded hypotheses, using only rules available in system alfa_i. The
// result checks against an empty lemma database. Throws CompileError on
// ill-formed trees.
Derivation compile_nd(const NdProof& proof, const CompileOptions& opts = {});

}  // namespace alfa
