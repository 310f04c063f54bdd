// Acceptance gate: one pass/fail line per criterion, exit 0 only when all
// criteria hold. Expected values come from the independent semantic oracles
// (truth tables, the sequent-calculus decision procedure, Kripke models) or
// are enforced as universally quantified properties.
#include <chrono>
#include <cstdint>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "alfa/corpus.hpp"
#include "alfa/derivation.hpp"
#include "alfa/formula.hpp"
#include "alfa/fuzz.hpp"
#include "alfa/gen.hpp"
#include "alfa/graph.hpp"
#include "alfa/nd.hpp"
#include "alfa/rules.hpp"
#include "alfa/script.hpp"
#include "alfa/search.hpp"
#include "alfa/semantics.hpp"

using namespace alfa;

namespace {

int g_failures = 0;

class Criterion {
 public:
  explicit Criterion(int number, std::string title)
      : number_(number), title_(std::move(title)),
        start_(std::chrono::steady_clock::now()) {}

  void require(bool ok, const std::string& what) {
    if (!ok && problem_.empty()) problem_ = what;
  }

  void finish(double budget_seconds = 0.0) {
    const auto elapsed = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start_)
                             .count();
    if (budget_seconds > 0.0 && elapsed > budget_seconds && problem_.empty()) {
      std::ostringstream over;
      over << "took " << elapsed << "s, budget " << budget_seconds << "s";
      problem_ = over.str();
    }
    const bool ok = problem_.empty();
    if (!ok) ++g_failures;
    std::cout << (ok ? "PASS" : "FAIL") << " " << number_ << ": " << title_;
    std::cout << " [" << static_cast<int>(elapsed * 1000) << " ms]";
    if (!ok) std::cout << " -- " << problem_;
    std::cout << "\n" << std::flush;
  }

 private:
  int number_;
  std::string title_;
  std::string problem_;
  std::chrono::steady_clock::time_point start_;
};

Graph G(const std::string& s) { return parse_graph(s); }
Formula F(const std::string& s) { return parse_formula(s); }

const std::string kRoot = ALFA_SOURCE_DIR;

void criterion_1_rule_soundness() {
  Criterion c(1, "every basic rewrite rule is sound for its system's "
                 "semantics (1000 seeded cases per rule and system)");
  for (SystemId sys : {SystemId::ALFAO, SystemId::ALFA_I, SystemId::ALFA_IO,
                       SystemId::ALFA_IO_CLASSIC}) {
    for (RuleId rule : registry(sys).basic) {
      if (rule_degree(rule) != 1) continue;
      const FuzzReport r = fuzz_rule_soundness(sys, rule, 1000, 2026);
      std::string what = system_name(sys) + "/" + rule_name(rule) + ": " +
                         std::to_string(r.failures) + " failure(s)";
      if (!r.samples.empty()) what += " e.g. " + r.samples.front();
      c.require(r.ok(), what);
    }
  }
  c.finish(60.0);
}

void criterion_2_second_degree() {
  Criterion c(2, "second-degree combinators preserve soundness "
                 "(500 seeded cases per combinator, both semantics)");
  for (RuleId rule : {RuleId::R0, RuleId::R8, RuleId::R8I, RuleId::R8ID,
                      RuleId::E_OR, RuleId::CTX}) {
    const FuzzReport r = fuzz_second_degree(rule, 500, 2026);
    std::string what = std::string(rule_name(rule)) + ": " +
                       std::to_string(r.failures) + " failure(s)";
    if (!r.samples.empty()) what += " e.g. " + r.samples.front();
    c.require(r.ok(), what);
  }
  c.finish(60.0);
}

void criterion_3_separation() {
  Criterion c(3, "the classical/constructive separation suite: classically "
                 "valid, constructively refuted by small Kripke models");
  const std::vector<std::string> suite = {
      "~~p -> p",
      "p & ~(p & ~q) -> q",
      "~(~p & ~q) -> p v q",
      "~(p & ~q) -> (p -> q)",
  };
  for (const auto& text : suite) {
    const Formula f = F(text);
    c.require(classical_valid(f), text + " should be classically valid");
    c.require(!ipc_valid(f), text + " should be constructively invalid");
    const auto model = kripke_countermodel(f, 3);
    c.require(model.has_value(), text + ": no countermodel with <= 3 worlds");
    if (model) {
      c.require(kripke_well_formed(*model), text + ": malformed model");
      c.require(!eval_kripke(*model, model->root, f),
                text + ": root still forces the formula");
    }
  }
  c.finish(60.0);
}

void criterion_4_corpus() {
  Criterion c(4, "the bundled theorem library checks, matches its expected "
                 "claims, inlines to database-free derivations, and every "
                 "claim is semantically sound");
  const CorpusLoad load = load_corpus(kRoot + "/corpus");
  c.require(load.ok, load.error);
  if (load.ok) {
    const auto& expected = corpus_expected();
    c.require(load.theorems.size() == expected.size(),
              "theorem count " + std::to_string(load.theorems.size()) +
                  " != " + std::to_string(expected.size()));
    for (std::size_t i = 0; i < load.theorems.size() && i < expected.size();
         ++i) {
      const Derivation& d = load.theorems[i];
      const CorpusExpectation& e = expected[i];
      const Sequent claim = claim_of(d);
      c.require(d.name == e.name && d.system == e.system,
                "entry " + std::to_string(i) + " is " + d.name + ", expected " +
                    e.name);
      c.require(claim == Sequent{G(e.source), G(e.target)},
                e.name + ": claim mismatch");
      c.require(sequent_sound(registry(d.system).logic, claim.source,
                              claim.target),
                e.name + ": claim unsound for the system's semantics");
      const Derivation flat = expand(d, load.db);
      const Verdict v = check(flat, LemmaDb{});
      c.require(v.ok, e.name + ": inlined form fails: " + v.message);
      c.require(claim_of(flat) == claim, e.name + ": inlined claim drifted");
    }
  }
  c.finish(10.0);
}

void criterion_5_search() {
  Criterion c(5, "bounded search: finds detachment and double-cut planting; "
                 "refuses the double-negation law constructively (with a "
                 "semantic certificate) yet finds it classically");
  const CorpusLoad load = load_corpus(kRoot + "/corpus");
  c.require(load.ok, load.error);

  SearchOptions four;
  four.max_steps = 4;
  const auto mp = prove(SystemId::ALFAO, {G("a (a (b))"), G("b")}, LemmaDb{},
                        four);
  c.require(mp.has_value(), "detachment not found in the classical system");
  if (mp) c.require(check(*mp, LemmaDb{}).ok, "detachment proof fails");

  SearchOptions three;
  three.max_steps = 3;
  three.use_lemmas = false;
  const auto dc =
      prove(SystemId::ALFA_IO, {G("a"), G("((a))")}, LemmaDb{}, three);
  c.require(dc.has_value(), "double-cut planting not found without library");

  SearchOptions one;
  one.max_steps = 1;
  const auto dc_lib =
      prove(SystemId::ALFA_IO, {G("a"), G("((a))")}, load.db, one);
  c.require(dc_lib.has_value(), "library citation not used for planting");

  SearchOptions six;
  six.max_steps = 6;
  SearchStats stats;
  const auto dn = prove(SystemId::ALFA_IO, {G("((p))"), G("p")}, load.db, six,
                        &stats);
  c.require(!dn.has_value(),
            "double-negation law was derived constructively");
  const auto certificate = kripke_countermodel(F("~~p -> p"), 3);
  c.require(certificate.has_value() &&
                !eval_kripke(*certificate, certificate->root, F("~~p -> p")),
            "no semantic certificate for the refusal");

  const auto dn_classical = prove(SystemId::ALFA_IO_CLASSIC,
                                  {G("((p))"), G("p")}, load.db, six);
  c.require(dn_classical.has_value(),
            "double-negation law not found classically");
  if (dn_classical) {
    c.require(check(*dn_classical, load.db).ok,
              "classical double-negation proof fails");
    c.require(claim_of(*dn_classical) == Sequent{G("((p))"), G("p")},
              "classical double-negation proof proves something else");
  }
  c.finish(120.0);
}

void criterion_6_substitutivity() {
  Criterion c(6, "rule application commutes with substitution "
                 "(1000 seeded sheet/rule/substitution triples)");
  const FuzzReport r = fuzz_substitutivity(1000, 2026);
  std::string what = std::to_string(r.failures) + " failure(s)";
  if (!r.samples.empty()) what += " e.g. " + r.samples.front();
  c.require(r.ok(), what);
  c.finish(60.0);
}

void criterion_7_oracle_agreement() {
  Criterion c(7, "oracle agreement: constructive validity implies classical "
                 "over the full small-formula family; double negation "
                 "bridges the oracles on 200 random formulas");
  const auto family = small_formula_family(3);
  c.require(family.size() > 1000, "family unexpectedly small");
  std::size_t ipc_count = 0;
  for (const Formula& f : family) {
    if (ipc_valid(f)) {
      ++ipc_count;
      if (!classical_valid(f)) {
        c.require(false, "constructively valid but classically refuted: " +
                             print_formula(f));
        break;
      }
    }
  }
  c.require(ipc_count > 0, "no constructively valid formulas in the family");
  const FuzzReport r = fuzz_glivenko(200, 2026);
  std::string what = std::to_string(r.failures) + " failure(s)";
  if (!r.samples.empty()) what += " e.g. " + r.samples.front();
  c.require(r.ok(), what);
  c.finish(60.0);
}

void criterion_8_nd_compilation() {
  Criterion c(8, "natural-deduction proofs covering all ten inference forms "
                 "compile to checking derivations with faithful endpoints");
  const std::vector<std::string> files = {
      "imp_refl.ndp", "modus.ndp",     "bot_elim.ndp",
      "and_swap.ndp", "or_swap.ndp",   "imp_k.ndp",
      "and_mp.ndp",   "imp_trans.ndp", "double_neg_intro.ndp",
      "or_unit.ndp",  "or_impl.ndp",   "weaken.ndp"};
  std::set<NdTag> tags;
  std::size_t proofs_seen = 0;
  for (const auto& file : files) {
    std::vector<NdProof> proofs;
    try {
      proofs = parse_nd(read_text_file(kRoot + "/tests/data/nd/" + file));
    } catch (const std::exception& e) {
      c.require(false, file + ": " + e.what());
      continue;
    }
    for (const auto& p : proofs) {
      ++proofs_seen;
      std::vector<const NdNode*> queue = {&p.root};
      while (!queue.empty()) {
        const NdNode* n = queue.back();
        queue.pop_back();
        tags.insert(n->tag);
        for (const auto& ch : n->children) queue.push_back(&ch);
      }
      try {
        const Derivation d = compile_nd(p);
        const Verdict v = check(d, LemmaDb{});
        c.require(v.ok, file + "/" + p.name + ": " + v.message);
        Graph hyp_sheet;
        for (const auto& h : p.hyps)
          hyp_sheet = multiset_union(hyp_sheet, embed(h));
        c.require(claim_of(d) == Sequent{hyp_sheet, embed(p.root.formula)},
                  file + "/" + p.name + ": claim is not the embedded statement");
        c.require(sequent_sound(Logic::Intuitionistic, claim_of(d).source,
                                claim_of(d).target),
                  file + "/" + p.name + ": endpoints not constructively sound");
        c.require(ipc_equivalent(translate(claim_of(d).target), p.root.formula),
                  file + "/" + p.name + ": conclusion reading drifted");
      } catch (const CompileError& e) {
        c.require(false, file + "/" + p.name + ": " + e.what());
      }
    }
  }
  c.require(proofs_seen >= 10, "fewer than ten proofs in the data set");
  c.require(tags.size() == 10, "only " + std::to_string(tags.size()) +
                                   " of 10 inference forms were exercised");
  c.finish(60.0);
}

void criterion_9_round_trips() {
  Criterion c(9, "text round trips: 1000 random sheets, 1000 random "
                 "formulas, and every bundled script");
  const FuzzReport gr = fuzz_graph_round_trip(1000, 2026);
  c.require(gr.ok(), "sheet round trip: " +
                         (gr.samples.empty() ? std::to_string(gr.failures)
                                             : gr.samples.front()));
  const FuzzReport fr = fuzz_formula_round_trip(1000, 2026);
  c.require(fr.ok(), "formula round trip: " +
                         (fr.samples.empty() ? std::to_string(fr.failures)
                                             : fr.samples.front()));
  for (const auto& file : corpus_files()) {
    try {
      const std::string text = read_text_file(kRoot + "/corpus/" + file);
      const auto parsed = parse_proofs(text);
      const auto again = parse_proofs(print_proofs(parsed));
      c.require(again.size() == parsed.size(), file + ": theorem count drifted");
      for (std::size_t i = 0; i < parsed.size() && i < again.size(); ++i)
        c.require(again[i] == parsed[i],
                  file + ": " + parsed[i].name + " drifted through reprinting");
    } catch (const std::exception& e) {
      c.require(false, file + ": " + e.what());
    }
  }
  c.finish(60.0);
}

}  // namespace

int main() {
  criterion_1_rule_soundness();
  criterion_2_second_degree();
  criterion_3_separation();
  criterion_4_corpus();
  criterion_5_search();
  criterion_6_substitutivity();
  criterion_7_oracle_agreement();
  criterion_8_nd_compilation();
  criterion_9_round_trips();
  if (g_failures == 0) {
    std::cout << "ALL CRITERIA PASS\n";
    return 0;
  }
  std::cout << g_failures << " CRITERIA FAILED\n";
  return 1;
}
