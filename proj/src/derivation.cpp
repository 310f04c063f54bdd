// derivation.cpp — kernel checker for derivations, theorem database, lemma
// inlining with fresh local names.
#include "alfa/derivation.hpp"

#include <algorithm>
#include <stdexcept>

namespace alfa {

namespace {

struct Failure {
  std::size_t index;  // 1-based at the level where the failure happened
  std::string message;
};

using Locals = std::map<std::string, Sequent>;

bool in_basic(const SystemRegistry& reg, RuleId r) {
  return std::find(reg.basic.begin(), reg.basic.end(), r) != reg.basic.end();
}

std::optional<Failure> run_steps(const SystemRegistry& reg, const LemmaDb& db,
                                 Graph& current, const std::vector<Step>& steps,
                                 Locals locals);

std::optional<Failure> run_first_degree(const SystemRegistry& reg,
                                        Graph& current, const FirstDegreeStep& s,
                                        std::size_t idx) {
  auto fail = [&](std::string m) { return Failure{idx, std::move(m)}; };
  if (rule_degree(s.rule) != 1)
    return fail("rule " + rule_name(s.rule) + " needs premise references");
  if (!in_basic(reg, s.rule))
    return fail("rule " + rule_name(s.rule) + " is not available in system " +
                system_name(reg.id));
  if (rule_needs_witness(s.rule) && !s.witness)
    return fail("rule " + rule_name(s.rule) + " needs a witness");
  if (!rule_needs_witness(s.rule) && s.witness)
    return fail("rule " + rule_name(s.rule) + " takes no witness");
  std::vector<Graph> results = apply_first_degree(s.rule, current, s.witness);
  if (std::find(results.begin(), results.end(), s.result) == results.end())
    return fail("'" + print_graph(s.result) + "' is not a one-step " +
                rule_name(s.rule) + " rewrite of '" + print_graph(current) + "'");
  current = s.result;
  return std::nullopt;
}

std::optional<Failure> run_second_degree(const SystemRegistry& reg,
                                         Graph& current,
                                         const SecondDegreeStep& s,
                                         const Locals& locals, std::size_t idx) {
  auto fail = [&](std::string m) { return Failure{idx, std::move(m)}; };
  if (rule_degree(s.rule) != 2)
    return fail("rule " + rule_name(s.rule) + " takes no premise references");
  if (s.rule != RuleId::CTX && !in_basic(reg, s.rule))
    return fail("rule " + rule_name(s.rule) + " is not available in system " +
                system_name(reg.id));
  if (s.split && s.rule != RuleId::R8 && s.rule != RuleId::R8I)
    return fail("only R8 and R8I take a split");
  std::vector<Sequent> premises;
  for (const std::string& r : s.refs) {
    auto it = locals.find(r);
    if (it == locals.end()) return fail("unknown local fact '" + r + "'");
    premises.push_back(it->second);
  }
  if (s.rule == RuleId::CTX) {
    if (premises.size() != 1) return fail("CTX takes exactly one reference");
    if (!submultiset(premises[0].source, current))
      return fail("CTX premise source '" + print_graph(premises[0].source) +
                  "' is not part of the current sheet '" + print_graph(current) +
                  "'");
    Sequent c = ctx_lift(premises[0], multiset_minus(current, premises[0].source));
    if (c.target != s.result)
      return fail("CTX concludes '" + print_graph(c.target) + "', not '" +
                  print_graph(s.result) + "'");
    current = s.result;
    return std::nullopt;
  }
  if (s.split && *s.split != current)
    return fail("split '" + print_graph(*s.split) +
                "' does not match the current sheet '" + print_graph(current) +
                "'");
  std::vector<Sequent> conclusions;
  try {
    conclusions = conclude_second_degree(s.rule, premises);
  } catch (const std::invalid_argument& e) {
    return fail(e.what());
  }
  for (const Sequent& c : conclusions)
    if (c.source == current && c.target == s.result) {
      current = s.result;
      return std::nullopt;
    }
  return fail("rule " + rule_name(s.rule) +
              " does not conclude '" + print_graph(s.result) +
              "' from the given premises at '" + print_graph(current) + "'");
}

std::optional<Failure> run_lemma(const SystemRegistry& reg, const LemmaDb& db,
                                 Graph& current, const LemmaStep& s,
                                 std::size_t idx) {
  auto fail = [&](std::string m) { return Failure{idx, std::move(m)}; };
  const LemmaInfo* li = db.find(s.name);
  if (!li) return fail("unknown lemma '" + s.name + "'");
  if (!system_subsumes(reg.id, li->derivation.system))
    return fail("lemma '" + s.name + "' uses rules of system " +
                system_name(li->derivation.system) +
                " that are not all available in " + system_name(reg.id));
  for (const auto& [var, img] : s.subst) {
    (void)img;
    const auto& vars = li->derivation.vars;
    if (std::find(vars.begin(), vars.end(), var) == vars.end())
      return fail("lemma '" + s.name + "' does not declare variable '" + var + "'");
  }
  Graph src = substitute(li->claim.source, s.subst);
  Graph tgt = substitute(li->claim.target, s.subst);
  if (src != current)
    return fail("lemma '" + s.name + "' instance starts at '" + print_graph(src) +
                "' but the current sheet is '" + print_graph(current) + "'");
  if (tgt != s.result)
    return fail("lemma '" + s.name + "' instance concludes '" + print_graph(tgt) +
                "', not '" + print_graph(s.result) + "'");
  current = s.result;
  return std::nullopt;
}

std::optional<Failure> run_have(const SystemRegistry& reg, const LemmaDb& db,
                                Locals& locals, const HaveStep& s,
                                std::size_t idx) {
  auto fail = [&](std::string m) { return Failure{idx, std::move(m)}; };
  if (locals.count(s.name))
    return fail("duplicate local fact name '" + s.name + "'");
  Graph sub = s.claim.source;
  if (auto inner = run_steps(reg, db, sub, s.steps, locals))
    return fail("in '" + s.name + "' step " + std::to_string(inner->index) +
                ": " + inner->message);
  if (sub != s.claim.target)
    return fail("local fact '" + s.name + "' ends at '" + print_graph(sub) +
                "', not its stated target '" + print_graph(s.claim.target) + "'");
  locals.emplace(s.name, s.claim);
  return std::nullopt;
}

std::optional<Failure> run_steps(const SystemRegistry& reg, const LemmaDb& db,
                                 Graph& current, const std::vector<Step>& steps,
                                 Locals locals) {
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const std::size_t idx = i + 1;
    std::optional<Failure> f;
    if (const auto* fd = std::get_if<FirstDegreeStep>(&steps[i].node))
      f = run_first_degree(reg, current, *fd, idx);
    else if (const auto* sd = std::get_if<SecondDegreeStep>(&steps[i].node))
      f = run_second_degree(reg, current, *sd, locals, idx);
    else if (const auto* lm = std::get_if<LemmaStep>(&steps[i].node))
      f = run_lemma(reg, db, current, *lm, idx);
    else
      f = run_have(reg, db, locals, std::get<HaveStep>(steps[i].node), idx);
    if (f) return f;
  }
  return std::nullopt;
}

}  // namespace

bool operator==(const FirstDegreeStep& a, const FirstDegreeStep& b) {
  return a.rule == b.rule && a.witness == b.witness && a.result == b.result;
}
bool operator==(const SecondDegreeStep& a, const SecondDegreeStep& b) {
  return a.rule == b.rule && a.refs == b.refs && a.split == b.split &&
         a.result == b.result;
}
bool operator==(const LemmaStep& a, const LemmaStep& b) {
  return a.name == b.name && a.subst == b.subst && a.result == b.result;
}
bool operator==(const HaveStep& a, const HaveStep& b) {
  return a.name == b.name && a.claim == b.claim && a.steps == b.steps;
}
bool operator==(const Step& a, const Step& b) { return a.node == b.node; }
bool operator==(const Derivation& a, const Derivation& b) {
  return a.system == b.system && a.name == b.name && a.vars == b.vars &&
         a.initial == b.initial && a.steps == b.steps;
}

Graph final_graph(const Derivation& d) {
  Graph current = d.initial;
  for (const Step& st : d.steps) {
    if (const auto* fd = std::get_if<FirstDegreeStep>(&st.node))
      current = fd->result;
    else if (const auto* sd = std::get_if<SecondDegreeStep>(&st.node))
      current = sd->result;
    else if (const auto* lm = std::get_if<LemmaStep>(&st.node))
      current = lm->result;
  }
  return current;
}

Sequent claim_of(const Derivation& d) { return {d.initial, final_graph(d)}; }

const LemmaInfo* LemmaDb::find(const std::string& name) const {
  for (const auto& e : entries_)
    if (e.derivation.name == name) return &e;
  return nullptr;
}

Verdict LemmaDb::add(const Derivation& d) {
  if (find(d.name))
    return {false, 0, "duplicate theorem name '" + d.name + "'"};
  Verdict v = check(d, *this);
  if (v.ok) entries_.push_back({d, claim_of(d)});
  return v;
}

Verdict check(const Derivation& d, const LemmaDb& db) {
  const SystemRegistry& reg = registry(d.system);
  Graph current = d.initial;
  if (auto f = run_steps(reg, db, current, d.steps, {}))
    return {false, f->index, f->message};
  return {true, 0, ""};
}

namespace {

// Applies a substitution to every graph embedded in a list of steps.
void substitute_steps(std::vector<Step>& steps,
                      const std::map<std::string, Graph>& sigma) {
  for (Step& st : steps) {
    if (auto* fd = std::get_if<FirstDegreeStep>(&st.node)) {
      if (fd->witness) fd->witness = substitute(*fd->witness, sigma);
      fd->result = substitute(fd->result, sigma);
    } else if (auto* sd = std::get_if<SecondDegreeStep>(&st.node)) {
      if (sd->split) sd->split = substitute(*sd->split, sigma);
      sd->result = substitute(sd->result, sigma);
    } else if (auto* lm = std::get_if<LemmaStep>(&st.node)) {
      for (auto& [k, img] : lm->subst) img = substitute(img, sigma);
      lm->result = substitute(lm->result, sigma);
    } else {
      auto& hv = std::get<HaveStep>(st.node);
      hv.claim.source = substitute(hv.claim.source, sigma);
      hv.claim.target = substitute(hv.claim.target, sigma);
      substitute_steps(hv.steps, sigma);
    }
  }
}

// Prefixes every local fact name (and reference to one) so spliced steps
// cannot collide with names in the enclosing derivation. "$" never appears in
// parsed identifiers, so the prefixed names are fresh by construction.
void rename_locals(std::vector<Step>& steps, const std::string& prefix) {
  for (Step& st : steps) {
    if (auto* sd = std::get_if<SecondDegreeStep>(&st.node)) {
      for (std::string& r : sd->refs) r = prefix + r;
    } else if (auto* hv = std::get_if<HaveStep>(&st.node)) {
      hv->name = prefix + hv->name;
      rename_locals(hv->steps, prefix);
    }
  }
}

struct Expander {
  const LemmaDb& db;
  int counter = 0;

  std::vector<Step> expand_steps(const std::vector<Step>& steps) {
    std::vector<Step> out;
    for (const Step& st : steps) {
      if (const auto* lm = std::get_if<LemmaStep>(&st.node)) {
        const LemmaInfo* li = db.find(lm->name);
        if (!li)
          throw std::runtime_error("cannot inline unknown lemma '" + lm->name + "'");
        std::vector<Step> spliced = expand_steps(li->derivation.steps);
        rename_locals(spliced, "$" + std::to_string(++counter) + "_");
        substitute_steps(spliced, lm->subst);
        for (Step& sp : spliced) out.push_back(std::move(sp));
      } else if (const auto* hv = std::get_if<HaveStep>(&st.node)) {
        HaveStep copy = *hv;
        copy.steps = expand_steps(hv->steps);
        out.push_back({std::move(copy)});
      } else {
        out.push_back(st);
      }
    }
    return out;
  }
};

}  // namespace

Derivation expand(const Derivation& d, const LemmaDb& db) {
  Expander ex{db};
  Derivation out = d;
  out.steps = ex.expand_steps(d.steps);
  return out;
}

}  // namespace alfa
