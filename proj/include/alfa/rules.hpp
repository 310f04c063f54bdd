// rules.hpp — rewriting rule catalog, per-system registries, whole-sheet rule
// application, second-degree rule conclusions, context lifting.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "alfa/graph.hpp"
#include "alfa/semantics.hpp"

namespace alfa {

// Rule identifiers usable in proof scripts and on the command line.
enum class RuleId {
  R0,    // join two derivations with a common source (second degree)
  R2,    // erase any sub-multiset of the sheet
  R3,    // insert a witness into the sheet's single cut
  R4,    // iterate part of a cut's content into a nested cut
  R5,    // deiterate the sheet's context from inside a cut
  R6,    // delete a double cut, keeping the surrounding context
  R7,    // wrap part of a cut's content in a double cut
  R8,    // discharge part of the source into a cut-shaped implication (2nd degree)
  I_OR,  // wrap the sheet into a disjunction loop with a witness
  I_NEG, // turn the sheet's single cut into a scroll with empty consequent
  E_NEG, // turn a scroll with empty consequent back into a cut
  MPI,   // detach a scroll whose antecedent equals the rest of the sheet
  E_BOT, // from the falsum sheet, produce any witness
  R8I,   // discharge part of the source into a scroll (second degree)
  R8ID,  // blank-source variant of R8I (second degree)
  E_OR,  // join two derivations with a common target over a disjunction loop
  I_P2,  // split a cut into a scroll with a cut consequent
  I_P3,  // turn a disjunction loop into a scroll with a cut antecedent
  E_P,   // unfold a scroll into nested cuts
  I_ORP, // collapse a cut of two cuts into a disjunction loop
  CTX,   // lift a derivation under juxtaposed context (admissible, built-in)
};

enum class SystemId { ALFAO, ALFA_I, ALFA_IO, ALFA_IO_CLASSIC };

const std::string& rule_name(RuleId id);
std::optional<RuleId> parse_rule(const std::string& name);
int rule_degree(RuleId id);        // 1 or 2
bool rule_needs_witness(RuleId id);

const std::string& system_name(SystemId id);
std::optional<SystemId> parse_system(const std::string& name);

struct SystemRegistry {
  SystemId id;
  Logic logic;                  // semantics the system is sound for
  Graph axiom;                  // the blank sheet
  std::vector<RuleId> basic;    // basic rules (CTX is built-in, not listed)
};

const SystemRegistry& registry(SystemId id);
// True when every basic rule of `inner` is basic in `outer` (lemma reuse).
bool system_subsumes(SystemId outer, SystemId inner);

struct Sequent {
  Graph source;
  Graph target;
  bool operator==(const Sequent&) const = default;
};
std::strong_ordering cmp(const Sequent& a, const Sequent& b);
inline bool operator<(const Sequent& a, const Sequent& b) { return cmp(a, b) < 0; }

// All results of applying a first-degree rule to the whole sheet. Existential
// rules (R3, I_OR, E_BOT) require the witness and throw std::invalid_argument
// without one; other rules ignore it. Results are sorted and deduplicated.
std::vector<Graph> apply_first_degree(RuleId rule, const Graph& g,
                                      const std::optional<Graph>& witness = std::nullopt);

// All conclusions of a second-degree rule from premise sequents (R0, R8, R8I,
// R8ID, E_OR). CTX is handled by ctx_lift. Throws std::invalid_argument on a
// wrong premise count or non-matching premise shapes being irrelevant (an
// empty result is returned when premises simply do not fit).
std::vector<Sequent> conclude_second_degree(RuleId rule,
                                            const std::vector<Sequent>& premises);

// Juxtaposes a context onto both sides: from B |- C derive A B |- A C.
Sequent ctx_lift(const Sequent& s, const Graph& context);

}  // namespace alfa
