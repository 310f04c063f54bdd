// derivation.hpp — linear derivations with local facts and lemma citations,
// the kernel checker, the theorem database, and lemma inlining.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "alfa/graph.hpp"
#include "alfa/rules.hpp"

namespace alfa {

struct Step;

// One first-degree rewrite of the current sheet.
struct FirstDegreeStep {
  RuleId rule;
  std::optional<Graph> witness;  // required by R3, I_OR, E_BOT
  Graph result;
};

// One second-degree inference from previously established local facts.
struct SecondDegreeStep {
  RuleId rule;                  // R0, R8, R8I, R8ID, E_OR, or CTX
  std::vector<std::string> refs;
  std::optional<Graph> split;   // R8/R8I only: the retained part of the source
  Graph result;
};

// Citation of a registered theorem, instantiated by substitution.
struct LemmaStep {
  std::string name;
  std::map<std::string, Graph> subst;
  Graph result;
};

// A locally proved sequent: its block derives claim.target from claim.source
// and does not advance the enclosing derivation's current sheet.
struct HaveStep {
  std::string name;
  Sequent claim;
  std::vector<Step> steps;
};

struct Step {
  std::variant<FirstDegreeStep, SecondDegreeStep, LemmaStep, HaveStep> node;
};

struct Derivation {
  SystemId system = SystemId::ALFAO;
  std::string name;
  std::vector<std::string> vars;  // atoms that lemma citations may instantiate
  Graph initial;
  std::vector<Step> steps;
};

bool operator==(const FirstDegreeStep& a, const FirstDegreeStep& b);
bool operator==(const SecondDegreeStep& a, const SecondDegreeStep& b);
bool operator==(const LemmaStep& a, const LemmaStep& b);
bool operator==(const HaveStep& a, const HaveStep& b);
bool operator==(const Step& a, const Step& b);
bool operator==(const Derivation& a, const Derivation& b);

// Sheet reached after the last sheet-advancing step (local facts don't count).
Graph final_graph(const Derivation& d);
Sequent claim_of(const Derivation& d);  // initial |- final_graph

struct Verdict {
  bool ok = false;
  std::size_t step_index = 0;  // 1-based index of the offending top-level step
  std::string message;
};

struct LemmaInfo {
  Derivation derivation;
  Sequent claim;
};

// Ordered collection of checked theorems; earlier entries are citable by
// later ones, across systems when the citing system has every basic rule of
// the cited one.
class LemmaDb {
 public:
  const LemmaInfo* find(const std::string& name) const;
  const std::vector<LemmaInfo>& entries() const { return entries_; }
  // Checks `d` against this database and registers it if it passes.
  Verdict add(const Derivation& d);

 private:
  std::vector<LemmaInfo> entries_;
};

// Verifies every step of `d`, threading the current sheet from `d.initial`.
Verdict check(const Derivation& d, const LemmaDb& db);

// Replaces every lemma citation by the cited derivation's steps (with the
// substitution applied and local fact names freshened). The result proves the
// same sequent and checks against an empty database. Throws on unknown names.
Derivation expand(const Derivation& d, const LemmaDb& db);

}  // namespace alfa
