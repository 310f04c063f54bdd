// alfa — command-line front end: script checking, sheet/formula translation,
// validity oracles, property fuzzing, bounded proof search, library
// verification, and natural-deduction compilation.
#include <cstdint>
#include <exception>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "alfa/corpus.hpp"
#include "alfa/derivation.hpp"
#include "alfa/formula.hpp"
#include "alfa/fuzz.hpp"
#include "alfa/graph.hpp"
#include "alfa/nd.hpp"
#include "alfa/rules.hpp"
#include "alfa/script.hpp"
#include "alfa/search.hpp"
#include "alfa/semantics.hpp"

using json = nlohmann::json;
using namespace alfa;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;   // a semantic check failed
constexpr int kExitUsage = 2;  // bad arguments or unparsable input

struct CheckCmd {
  std::vector<std::string> files;
  bool as_json = false;
};

struct TranslateCmd {
  std::vector<std::string> graphs;
  std::string file;
  bool as_json = false;
};

struct EmbedCmd {
  std::vector<std::string> formulas;
  bool as_json = false;
};

struct OracleCmd {
  std::vector<std::string> formulas;
  std::string logic = "both";  // classical | ipc | both
  bool countermodel = false;
  int max_worlds = 4;
  std::uint64_t seed = 2026;
  bool as_json = false;
};

struct FuzzCmd {
  std::string suite = "all";
  std::size_t cases = 200;
  std::uint64_t seed = 2026;
  bool as_json = false;
};

struct SearchCmd {
  std::string system;
  std::string from;
  std::string to;
  int steps = 6;
  std::size_t size = 48;
  std::vector<std::string> witnesses;
  std::string db_dir;
  bool no_lemmas = false;
  bool as_json = false;
};

struct CorpusCmd {
  std::string dir = "corpus";
  bool expand_all = false;
  bool as_json = false;
};

struct CompileCmd {
  std::vector<std::string> files;
  bool blank_discharge = false;
  bool check_result = true;
  bool as_json = false;
};

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int run_check(const CheckCmd& cmd) {
  LemmaDb db;
  json out = json::array();
  bool any_fail = false;
  for (const auto& file : cmd.files) {
    std::string text;
    std::vector<Derivation> proofs;
    try {
      text = read_text_file(file);
      proofs = parse_proofs(text);
    } catch (const ParseError& e) {
      std::cerr << file << ":" << e.line << ":" << e.col << ": " << e.what()
                << "\n";
      return kExitUsage;
    } catch (const std::exception& e) {
      std::cerr << e.what() << "\n";
      return kExitUsage;
    }
    for (const auto& d : proofs) {
      Verdict v = db.add(d);
      const Sequent claim = claim_of(d);
      if (cmd.as_json) {
        out.push_back({{"file", file},
                       {"system", system_name(d.system)},
                       {"name", d.name},
                       {"ok", v.ok},
                       {"source", print_graph(claim.source)},
                       {"target", print_graph(claim.target)},
                       {"step", v.step_index},
                       {"message", v.message}});
      } else if (v.ok) {
        std::cout << "ok   " << system_name(d.system) << " " << d.name << " : "
                  << print_graph(claim.source) << " |- "
                  << print_graph(claim.target) << "\n";
      } else {
        std::cout << "FAIL " << system_name(d.system) << " " << d.name
                  << " : step " << v.step_index << ": " << v.message << "\n";
      }
      any_fail = any_fail || !v.ok;
    }
  }
  if (cmd.as_json) emit(out);
  return any_fail ? kExitFail : kExitOk;
}

int run_translate(const TranslateCmd& cmd) {
  std::vector<Graph> inputs;
  try {
    for (const auto& text : cmd.graphs) inputs.push_back(parse_graph(text));
    if (!cmd.file.empty()) {
      for (auto& g : parse_geg(read_text_file(cmd.file)))
        inputs.push_back(std::move(g));
    }
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  json out = json::array();
  for (const auto& g : inputs) {
    const Formula f = translate(g);
    if (cmd.as_json) {
      out.push_back({{"graph", print_graph(g)}, {"formula", print_formula(f)}});
    } else {
      std::cout << print_formula(f) << "\n";
    }
  }
  if (cmd.as_json) emit(out);
  return kExitOk;
}

int run_embed(const EmbedCmd& cmd) {
  json out = json::array();
  for (const auto& text : cmd.formulas) {
    Formula f = Formula::top();
    try {
      f = parse_formula(text);
    } catch (const std::exception& e) {
      std::cerr << e.what() << "\n";
      return kExitUsage;
    }
    const Graph g = embed(f);
    if (cmd.as_json) {
      out.push_back({{"formula", print_formula(f)}, {"graph", print_graph(g)}});
    } else {
      std::cout << print_graph(g) << "\n";
    }
  }
  if (cmd.as_json) emit(out);
  return kExitOk;
}

int run_oracle(const OracleCmd& cmd) {
  const bool want_classical = cmd.logic != "ipc";
  const bool want_ipc = cmd.logic != "classical";
  json out = json::array();
  bool any_invalid = false;
  for (const auto& text : cmd.formulas) {
    Formula f = Formula::top();
    try {
      f = parse_formula(text);
    } catch (const std::exception& e) {
      std::cerr << e.what() << "\n";
      return kExitUsage;
    }
    json row = {{"formula", print_formula(f)}};
    std::string line = print_formula(f) + " :";
    if (want_classical) {
      const bool cv = classical_valid(f);
      any_invalid = any_invalid || !cv;
      row["classical"] = cv;
      line += std::string(" classical=") + (cv ? "valid" : "invalid");
    }
    std::optional<KripkeModel> model;
    if (want_ipc) {
      const bool iv = ipc_valid(f);
      any_invalid = any_invalid || !iv;
      row["ipc"] = iv;
      line += std::string(" ipc=") + (iv ? "valid" : "invalid");
      if (!iv && cmd.countermodel) {
        model = kripke_countermodel(f, cmd.max_worlds, cmd.seed);
        row["countermodel"] =
            model ? json(print_kripke(*model)) : json(nullptr);
      }
    }
    if (cmd.as_json) {
      out.push_back(row);
    } else {
      std::cout << line << "\n";
      if (model) std::cout << print_kripke(*model);
    }
  }
  if (cmd.as_json) emit(out);
  return any_invalid ? kExitFail : kExitOk;
}

void report_line(const FuzzReport& r, json& rows, bool as_json) {
  if (as_json) {
    rows.push_back({{"suite", r.suite},
                    {"cases", r.cases},
                    {"checks", r.checks},
                    {"failures", r.failures},
                    {"samples", r.samples}});
    return;
  }
  std::cout << (r.ok() ? "ok   " : "FAIL ") << r.suite << ": cases=" << r.cases
            << " checks=" << r.checks << " failures=" << r.failures << "\n";
  for (const auto& s : r.samples) std::cout << "       " << s << "\n";
}

int run_fuzz(const FuzzCmd& cmd) {
  std::vector<FuzzReport> reports;
  const bool all = cmd.suite == "all";
  if (all || cmd.suite == "rules") {
    for (SystemId sys : {SystemId::ALFAO, SystemId::ALFA_I, SystemId::ALFA_IO,
                         SystemId::ALFA_IO_CLASSIC}) {
      for (RuleId rule : registry(sys).basic) {
        if (rule_degree(rule) != 1) continue;
        reports.push_back(fuzz_rule_soundness(sys, rule, cmd.cases, cmd.seed));
      }
    }
  }
  if (all || cmd.suite == "second") {
    for (RuleId rule :
         {RuleId::R0, RuleId::R8, RuleId::R8I, RuleId::R8ID, RuleId::E_OR,
          RuleId::CTX}) {
      reports.push_back(fuzz_second_degree(rule, cmd.cases, cmd.seed));
    }
  }
  if (all || cmd.suite == "subst") {
    reports.push_back(fuzz_substitutivity(cmd.cases, cmd.seed));
  }
  if (all || cmd.suite == "roundtrip") {
    reports.push_back(fuzz_graph_round_trip(cmd.cases, cmd.seed));
    reports.push_back(fuzz_formula_round_trip(cmd.cases, cmd.seed));
  }
  if (all || cmd.suite == "oracles") {
    reports.push_back(fuzz_translation_equivalence(cmd.cases, cmd.seed));
    reports.push_back(fuzz_glivenko(cmd.cases, cmd.seed));
  }
  if (reports.empty()) {
    std::cerr << "unknown suite: " << cmd.suite << "\n";
    return kExitUsage;
  }
  json rows = json::array();
  bool any_fail = false;
  for (const auto& r : reports) {
    report_line(r, rows, cmd.as_json);
    any_fail = any_fail || !r.ok();
  }
  if (cmd.as_json) emit(rows);
  return any_fail ? kExitFail : kExitOk;
}

int run_search(const SearchCmd& cmd) {
  const auto sys = parse_system(cmd.system);
  if (!sys) {
    std::cerr << "unknown system: " << cmd.system << "\n";
    return kExitUsage;
  }
  Sequent goal;
  SearchOptions opts;
  opts.max_steps = cmd.steps;
  opts.max_size = cmd.size;
  opts.use_lemmas = !cmd.no_lemmas;
  LemmaDb db;
  try {
    goal.source = parse_graph(cmd.from);
    goal.target = parse_graph(cmd.to);
    for (const auto& w : cmd.witnesses) opts.witnesses.push_back(parse_graph(w));
    if (!cmd.db_dir.empty()) {
      CorpusLoad load = load_corpus(cmd.db_dir);
      if (!load.ok) {
        std::cerr << "library failed to load: " << load.error << "\n";
        return kExitUsage;
      }
      db = std::move(load.db);
    }
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  SearchStats stats;
  const auto found = prove(*sys, goal, db, opts, &stats);
  if (cmd.as_json) {
    json row = {{"system", system_name(*sys)},
                {"source", print_graph(goal.source)},
                {"target", print_graph(goal.target)},
                {"found", found.has_value()},
                {"visited", stats.visited}};
    if (found) row["derivation"] = print_proof(*found);
    emit(row);
  } else if (found) {
    std::cout << print_proof(*found);
  } else {
    std::cout << "no derivation found (budget " << cmd.steps << " steps, "
              << stats.visited << " states visited)\n";
  }
  return found ? kExitOk : kExitFail;
}

int run_corpus(const CorpusCmd& cmd) {
  CorpusLoad load = load_corpus(cmd.dir);
  if (!load.ok) {
    std::cerr << load.error << "\n";
    return kExitFail;
  }
  const auto& expected = corpus_expected();
  json rows = json::array();
  bool any_fail = false;
  if (load.theorems.size() != expected.size()) {
    std::cerr << "expected " << expected.size() << " theorems, loaded "
              << load.theorems.size() << "\n";
    any_fail = true;
  }
  const std::size_t n = std::min(load.theorems.size(), expected.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Derivation& d = load.theorems[i];
    const CorpusExpectation& e = expected[i];
    const Sequent claim = claim_of(d);
    std::string problem;
    if (d.name != e.name || d.system != e.system) {
      problem = "registration order mismatch (expected " + e.name + ")";
    } else if (claim.source != parse_graph(e.source) ||
               claim.target != parse_graph(e.target)) {
      problem = "claim differs from the expected sequent";
    } else if (!sequent_sound(registry(d.system).logic, claim.source,
                              claim.target)) {
      problem = "claim is not semantically sound";
    } else if (cmd.expand_all) {
      const Derivation flat = expand(d, load.db);
      const Verdict v = check(flat, LemmaDb{});
      if (!v.ok) {
        problem = "expansion fails to check: " + v.message;
      } else if (claim_of(flat) != claim) {
        problem = "expansion proves a different claim";
      }
    }
    any_fail = any_fail || !problem.empty();
    if (cmd.as_json) {
      rows.push_back({{"system", system_name(d.system)},
                      {"name", d.name},
                      {"source", print_graph(claim.source)},
                      {"target", print_graph(claim.target)},
                      {"ok", problem.empty()},
                      {"message", problem}});
    } else if (problem.empty()) {
      std::cout << "ok   " << system_name(d.system) << " " << d.name << " : "
                << print_graph(claim.source) << " |- "
                << print_graph(claim.target) << "\n";
    } else {
      std::cout << "FAIL " << system_name(d.system) << " " << d.name << " : "
                << problem << "\n";
    }
  }
  if (cmd.as_json) {
    emit(rows);
  } else {
    std::cout << (any_fail ? "FAIL" : "ok") << " " << n << " theorems\n";
  }
  return any_fail ? kExitFail : kExitOk;
}

int run_compile(const CompileCmd& cmd) {
  CompileOptions opts;
  opts.use_blank_discharge = cmd.blank_discharge;
  std::vector<Derivation> compiled;
  json rows = json::array();
  bool any_fail = false;
  for (const auto& file : cmd.files) {
    std::vector<NdProof> proofs;
    try {
      proofs = parse_nd(read_text_file(file));
    } catch (const std::exception& e) {
      std::cerr << file << ": " << e.what() << "\n";
      return kExitUsage;
    }
    for (const auto& p : proofs) {
      try {
        Derivation d = compile_nd(p, opts);
        Verdict v{true, 0, ""};
        if (cmd.check_result) v = check(d, LemmaDb{});
        any_fail = any_fail || !v.ok;
        if (cmd.as_json) {
          rows.push_back({{"file", file},
                          {"name", p.name},
                          {"ok", v.ok},
                          {"message", v.message},
                          {"derivation", print_proof(d)}});
        } else if (!v.ok) {
          std::cout << "FAIL " << p.name << " : " << v.message << "\n";
        } else {
          compiled.push_back(std::move(d));
        }
      } catch (const CompileError& e) {
        any_fail = true;
        if (cmd.as_json) {
          rows.push_back(
              {{"file", file}, {"name", p.name}, {"ok", false},
               {"message", e.what()}});
        } else {
          std::cout << "FAIL " << p.name << " : " << e.what() << "\n";
        }
      }
    }
  }
  if (cmd.as_json) {
    emit(rows);
  } else if (!compiled.empty()) {
    std::cout << print_proofs(compiled);
  }
  return any_fail ? kExitFail : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"existential-graph proof toolkit"};
  app.require_subcommand(1);

  CheckCmd check_cmd;
  auto* check_app = app.add_subcommand("check", "verify derivation scripts");
  check_app->add_option("files", check_cmd.files, "script files (.gpf)")
      ->required()
      ->expected(-1);
  check_app->add_flag("--json", check_cmd.as_json, "machine-readable output");

  TranslateCmd translate_cmd;
  auto* translate_app =
      app.add_subcommand("translate", "read sheets as formulas");
  translate_app->add_option("graphs", translate_cmd.graphs, "sheet texts");
  translate_app->add_option("--file", translate_cmd.file,
                            "sheet collection file (.geg)");
  translate_app->add_flag("--json", translate_cmd.as_json,
                          "machine-readable output");

  EmbedCmd embed_cmd;
  auto* embed_app = app.add_subcommand("embed", "draw formulas as sheets");
  embed_app->add_option("formulas", embed_cmd.formulas, "formula texts")
      ->required()
      ->expected(-1);
  embed_app->add_flag("--json", embed_cmd.as_json, "machine-readable output");

  OracleCmd oracle_cmd;
  auto* oracle_app =
      app.add_subcommand("oracle", "decide classical/constructive validity");
  oracle_app->add_option("formulas", oracle_cmd.formulas, "formula texts")
      ->required()
      ->expected(-1);
  oracle_app
      ->add_option("--logic", oracle_cmd.logic, "classical, ipc, or both")
      ->check(CLI::IsMember({"classical", "ipc", "both"}));
  oracle_app->add_flag("--countermodel", oracle_cmd.countermodel,
                       "print a Kripke countermodel for ipc-invalid formulas");
  oracle_app->add_option("--max-worlds", oracle_cmd.max_worlds,
                         "countermodel size bound");
  oracle_app->add_option("--seed", oracle_cmd.seed, "search seed");
  oracle_app->add_flag("--json", oracle_cmd.as_json, "machine-readable output");

  FuzzCmd fuzz_cmd;
  auto* fuzz_app = app.add_subcommand("fuzz", "run seeded property suites");
  fuzz_app
      ->add_option("--suite", fuzz_cmd.suite,
                   "rules, second, subst, roundtrip, oracles, or all")
      ->check(CLI::IsMember(
          {"rules", "second", "subst", "roundtrip", "oracles", "all"}));
  fuzz_app->add_option("--cases", fuzz_cmd.cases, "cases per suite");
  fuzz_app->add_option("--seed", fuzz_cmd.seed, "generator seed");
  fuzz_app->add_flag("--json", fuzz_cmd.as_json, "machine-readable output");

  SearchCmd search_cmd;
  auto* search_app =
      app.add_subcommand("search", "bounded proof search for a sequent");
  search_app->add_option("--system", search_cmd.system, "deductive system")
      ->required();
  search_app->add_option("--from", search_cmd.from, "source sheet")->required();
  search_app->add_option("--to", search_cmd.to, "target sheet")->required();
  search_app->add_option("--steps", search_cmd.steps, "step budget");
  search_app->add_option("--size", search_cmd.size, "sheet size bound");
  search_app->add_option("--witness", search_cmd.witnesses,
                         "extra witness sheet (repeatable)");
  search_app->add_option("--db", search_cmd.db_dir,
                         "theorem library directory to cite");
  search_app->add_flag("--no-lemmas", search_cmd.no_lemmas,
                       "do not cite library theorems");
  search_app->add_flag("--json", search_cmd.as_json, "machine-readable output");

  CorpusCmd corpus_cmd;
  auto* corpus_app =
      app.add_subcommand("corpus", "verify the bundled theorem library");
  corpus_app->add_option("--dir", corpus_cmd.dir, "library directory");
  corpus_app->add_flag("--expand", corpus_cmd.expand_all,
                       "also re-check every theorem with citations inlined");
  corpus_app->add_flag("--json", corpus_cmd.as_json, "machine-readable output");

  CompileCmd compile_cmd;
  auto* compile_app = app.add_subcommand(
      "compile", "compile natural-deduction proofs into derivations");
  compile_app->add_option("files", compile_cmd.files, "proof files (.ndp)")
      ->required()
      ->expected(-1);
  compile_app->add_flag("--blank-discharge", compile_cmd.blank_discharge,
                        "use the blank-source discharge combinator");
  compile_app->add_flag("--json", compile_cmd.as_json,
                        "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (check_app->parsed()) return run_check(check_cmd);
    if (translate_app->parsed()) return run_translate(translate_cmd);
    if (embed_app->parsed()) return run_embed(embed_cmd);
    if (oracle_app->parsed()) return run_oracle(oracle_cmd);
    if (fuzz_app->parsed()) return run_fuzz(fuzz_cmd);
    if (search_app->parsed()) return run_search(search_cmd);
    if (corpus_app->parsed()) return run_corpus(corpus_cmd);
    if (compile_app->parsed()) return run_compile(compile_cmd);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
