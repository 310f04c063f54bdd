// script.hpp — text format for derivation scripts (.gpf files).
#pragma once

#include <string>
#include <vector>

#include "alfa/derivation.hpp"

namespace alfa {

// Script format ("%" starts a line comment anywhere):
//
//   file    := ("system" SYSID theorem*)+
//   theorem := "theorem" NAME ("vars" ATOM+)? "from" ":" graph step* "qed"
//   step    := "step" RULE refs? opts "=>" graph
//            | "have" ID ":" graph "|-" graph "{" step* "}"
//            | "lemma" NAME ("[" (ID ":=" graph) (";" ID ":=" graph)* "]")?
//              "=>" graph
//   refs    := "[" ID ("," ID)* "]"
//   opts    := ("witness" graph | "split" graph)*     (each at most once)
//
// Graphs use the sheet syntax from graph.hpp. The words system, theorem,
// vars, from, qed, step, have, lemma, witness, split are reserved and may not
// be used as atoms or names inside scripts.
std::vector<Derivation> parse_proofs(const std::string& text);  // throws ParseError
std::string print_proofs(const std::vector<Derivation>& ds);

// Convenience forms for a script holding exactly one theorem.
Derivation parse_proof(const std::string& text);  // throws ParseError
std::string print_proof(const Derivation& d);

}  // namespace alfa
