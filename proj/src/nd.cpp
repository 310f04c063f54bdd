// nd.cpp — parser/printer for natural-deduction trees and the compiler that
// turns them into checkable scroll-calculus derivations.
#include "alfa/nd.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace alfa {

namespace {

const std::vector<std::pair<NdTag, std::string>>& tag_table() {
  static const std::vector<std::pair<NdTag, std::string>> table = {
      {NdTag::Hyp, "HYP"},     {NdTag::AndI, "AND_I"},  {NdTag::AndEL, "AND_E_L"},
      {NdTag::AndER, "AND_E_R"}, {NdTag::OrIL, "OR_I_L"}, {NdTag::OrIR, "OR_I_R"},
      {NdTag::BotE, "BOT_E"},  {NdTag::ImpE, "IMP_E"},  {NdTag::ImpI, "IMP_I"},
      {NdTag::OrE, "OR_E"},
  };
  return table;
}

class NdParser {
 public:
  explicit NdParser(const std::string& text) : text_(text) {}

  std::vector<NdProof> parse_file() {
    std::vector<NdProof> out;
    skip_ws();
    while (!at_end()) {
      out.push_back(parse_proof());
      skip_ws();
    }
    return out;
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void advance() {
    if (at_end()) return;
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  [[noreturn]] void err(const std::string& msg) const {
    throw ParseError(msg, line_, col_);
  }
  void skip_ws() {
    for (;;) {
      while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
      if (peek() == '%') {
        while (!at_end() && peek() != '\n') advance();
        continue;
      }
      return;
    }
  }
  std::string word() {
    skip_ws();
    std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                         peek() == '_'))
      advance();
    if (pos_ == start) err("expected a word");
    return text_.substr(start, pos_ - start);
  }
  void expect(char c) {
    skip_ws();
    if (peek() != c) err(std::string("expected '") + c + "'");
    advance();
  }
  bool at(char c) {
    skip_ws();
    return peek() == c;
  }

  Formula parse_paren_formula() {
    expect('(');
    int open_line = line_, open_col = col_;
    std::size_t start = pos_;
    int depth = 1;
    while (depth > 0) {
      if (at_end()) throw ParseError("unclosed formula", open_line, open_col);
      if (peek() == '(') ++depth;
      if (peek() == ')') --depth;
      if (depth > 0) advance();
    }
    std::string inner = text_.substr(start, pos_ - start);
    advance();  // closing ')'
    try {
      return parse_formula(inner);
    } catch (const ParseError& e) {
      throw ParseError(std::string("in formula: ") + e.what(), open_line, open_col);
    }
  }

  NdProof parse_proof() {
    if (word() != "proof") err("expected 'proof'");
    NdProof p;
    p.name = word();
    skip_ws();
    while (!at_end()) {
      std::size_t save = pos_;
      int sl = line_, sc = col_;
      std::string w = word();
      if (w == "hyp") {
        p.hyps.push_back(parse_paren_formula());
        skip_ws();
      } else {
        pos_ = save;
        line_ = sl;
        col_ = sc;
        break;
      }
    }
    p.root = parse_node();
    if (word() != "end") err("expected 'end'");
    return p;
  }

  NdNode parse_node() {
    skip_ws();
    int tl = line_, tc = col_;
    std::string tag_word = word();
    NdNode n;
    bool found = false;
    for (const auto& [tag, name] : tag_table())
      if (name == tag_word) {
        n.tag = tag;
        found = true;
        break;
      }
    if (!found) throw ParseError("unknown proof-tree tag '" + tag_word + "'", tl, tc);
    n.formula = parse_paren_formula();
    if (at('[')) {
      advance();
      n.label = word();
      expect(']');
    }
    if (at('{')) {
      advance();
      while (!at('}')) n.children.push_back(parse_node());
      advance();
    }
    return n;
  }
};

void print_node(std::ostringstream& out, const NdNode& n, int indent) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  out << pad << nd_tag_name(n.tag) << " (" << print_formula(n.formula) << ")";
  if (!n.label.empty()) out << " [" << n.label << "]";
  if (!n.children.empty()) {
    out << " {\n";
    for (const NdNode& c : n.children) print_node(out, c, indent + 2);
    out << pad << "}\n";
  } else {
    out << "\n";
  }
}

// --- compilation ---------------------------------------------------------

Graph hyp_sheet(const std::vector<Formula>& hyps) {
  Graph g;
  for (const Formula& h : hyps) g = multiset_union(g, embed(h));
  return g;
}

struct NdCompiler {
  CompileOptions opts;
  int counter = 0;

  std::string fresh() { return "h" + std::to_string(++counter); }

  [[noreturn]] static void bad(const std::string& path, const std::string& msg) {
    throw CompileError(path, msg);
  }

  static void need_children(const NdNode& n, std::size_t k, const std::string& path) {
    if (n.children.size() != k)
      bad(path, nd_tag_name(n.tag) + " takes " + std::to_string(k) +
                    " subproof(s), found " + std::to_string(n.children.size()));
  }

  // Appends steps deriving embed(n.formula) from hyp_sheet(hyps); the
  // enclosing derivation's current sheet must equal hyp_sheet(hyps) when the
  // appended steps begin.
  void compile(const NdNode& n, const std::vector<Formula>& hyps,
               const std::string& path, std::vector<Step>& out) {
    const Graph ctx = hyp_sheet(hyps);
    const Graph goal = embed(n.formula);
    switch (n.tag) {
      case NdTag::Hyp: {
        need_children(n, 0, path);
        if (std::find(hyps.begin(), hyps.end(), n.formula) == hyps.end())
          bad(path, "hypothesis '" + print_formula(n.formula) +
                        "' is not available here");
        if (goal != ctx)
          out.push_back({FirstDegreeStep{RuleId::R2, std::nullopt, goal}});
        break;
      }
      case NdTag::AndI: {
        need_children(n, 2, path);
        if (n.formula.kind() != FKind::And ||
            n.formula.left() != n.children[0].formula ||
            n.formula.right() != n.children[1].formula)
          bad(path, "AND_I conclusion must be the conjunction of its subproofs");
        Step h1 = subproof(n.children[0], hyps, path + "/0");
        Step h2 = subproof(n.children[1], hyps, path + "/1");
        std::vector<std::string> refs = {std::get<HaveStep>(h1.node).name,
                                         std::get<HaveStep>(h2.node).name};
        out.push_back(std::move(h1));
        out.push_back(std::move(h2));
        out.push_back({SecondDegreeStep{RuleId::R0, std::move(refs), std::nullopt, goal}});
        break;
      }
      case NdTag::AndEL:
      case NdTag::AndER: {
        need_children(n, 1, path);
        const Formula& cf = n.children[0].formula;
        bool left = n.tag == NdTag::AndEL;
        if (cf.kind() != FKind::And ||
            (left ? cf.left() : cf.right()) != n.formula)
          bad(path, std::string(left ? "AND_E_L" : "AND_E_R") +
                        " needs a conjunction with the conclusion on the " +
                        (left ? "left" : "right"));
        compile(n.children[0], hyps, path + "/0", out);
        out.push_back({FirstDegreeStep{RuleId::R2, std::nullopt, goal}});
        break;
      }
      case NdTag::OrIL:
      case NdTag::OrIR: {
        need_children(n, 1, path);
        bool left = n.tag == NdTag::OrIL;
        if (n.formula.kind() != FKind::Or ||
            (left ? n.formula.left() : n.formula.right()) != n.children[0].formula)
          bad(path, std::string(left ? "OR_I_L" : "OR_I_R") +
                        " concludes a disjunction of its subproof on the " +
                        (left ? "left" : "right"));
        compile(n.children[0], hyps, path + "/0", out);
        Graph witness = embed(left ? n.formula.right() : n.formula.left());
        out.push_back({FirstDegreeStep{RuleId::I_OR, std::move(witness), goal}});
        break;
      }
      case NdTag::BotE: {
        need_children(n, 1, path);
        if (n.children[0].formula.kind() != FKind::Bot)
          bad(path, "BOT_E needs a subproof of F");
        compile(n.children[0], hyps, path + "/0", out);
        out.push_back({FirstDegreeStep{RuleId::E_BOT, goal, goal}});
        break;
      }
      case NdTag::ImpE: {
        need_children(n, 2, path);
        const Formula& imp = n.children[0].formula;
        if (imp.kind() != FKind::Imp || imp.right() != n.formula ||
            imp.left() != n.children[1].formula)
          bad(path, "IMP_E needs an implication and a proof of its antecedent");
        Step hi = subproof(n.children[0], hyps, path + "/0");
        Step ha = subproof(n.children[1], hyps, path + "/1");
        std::vector<std::string> refs = {std::get<HaveStep>(ha.node).name,
                                         std::get<HaveStep>(hi.node).name};
        Graph joined = multiset_union(embed(n.children[1].formula), embed(imp));
        out.push_back(std::move(hi));
        out.push_back(std::move(ha));
        out.push_back({SecondDegreeStep{RuleId::R0, std::move(refs), std::nullopt,
                                        joined}});
        out.push_back({FirstDegreeStep{RuleId::MPI, std::nullopt, goal}});
        break;
      }
      case NdTag::ImpI: {
        need_children(n, 1, path);
        if (n.formula.kind() != FKind::Imp ||
            n.formula.right() != n.children[0].formula)
          bad(path, "IMP_I concludes an implication of its subproof");
        std::vector<Formula> extended = hyps;
        extended.push_back(n.formula.left());
        Step h = subproof(n.children[0], extended, path + "/0");
        std::string ref = std::get<HaveStep>(h.node).name;
        out.push_back(std::move(h));
        if (opts.use_blank_discharge) {
          if (!ctx.blank())
            bad(path,
                "blank discharge needs an empty hypothesis context; " +
                    std::to_string(hyps.size()) + " hypothesis(es) remain");
          out.push_back({SecondDegreeStep{RuleId::R8ID, {std::move(ref)},
                                          std::nullopt, goal}});
        } else {
          out.push_back({SecondDegreeStep{RuleId::R8I, {std::move(ref)}, ctx, goal}});
        }
        break;
      }
      case NdTag::OrE: {
        need_children(n, 3, path);
        const Formula& df = n.children[0].formula;
        if (df.kind() != FKind::Or)
          bad(path, "OR_E needs a disjunction as its first subproof");
        if (n.children[1].formula != n.formula || n.children[2].formula != n.formula)
          bad(path, "OR_E branches must conclude the OR_E formula");
        const Graph d = embed(df);
        const Graph sc = sheet({scroll(ctx, goal)});

        Step hid{HaveStep{fresh(), {ctx, ctx}, {}}};
        Step hd = subproof(n.children[0], hyps, path + "/0");
        std::vector<std::string> r0_refs = {std::get<HaveStep>(hid.node).name,
                                            std::get<HaveStep>(hd.node).name};

        auto branch = [&](const NdNode& child, const Formula& extra_hyp,
                          const std::string& sub_path) {
          std::vector<Formula> extended = hyps;
          extended.push_back(extra_hyp);
          Step inner = subproof(child, extended, sub_path);
          std::string inner_ref = std::get<HaveStep>(inner.node).name;
          HaveStep outer;
          outer.name = fresh();
          outer.claim = {embed(extra_hyp), sc};
          outer.steps.push_back(std::move(inner));
          outer.steps.push_back({SecondDegreeStep{
              RuleId::R8I, {std::move(inner_ref)}, embed(extra_hyp), sc}});
          return Step{std::move(outer)};
        };
        Step hlc = branch(n.children[1], df.left(), path + "/1");
        Step hrc = branch(n.children[2], df.right(), path + "/2");

        HaveStep hor;
        hor.name = fresh();
        hor.claim = {d, sc};
        hor.steps.push_back({SecondDegreeStep{
            RuleId::E_OR,
            {std::get<HaveStep>(hlc.node).name, std::get<HaveStep>(hrc.node).name},
            std::nullopt,
            sc}});

        out.push_back(std::move(hid));
        out.push_back(std::move(hd));
        out.push_back({SecondDegreeStep{RuleId::R0, std::move(r0_refs), std::nullopt,
                                        multiset_union(ctx, d)}});
        out.push_back(std::move(hlc));
        out.push_back(std::move(hrc));
        std::string hor_ref = hor.name;
        out.push_back({std::move(hor)});
        out.push_back({SecondDegreeStep{RuleId::CTX, {std::move(hor_ref)},
                                        std::nullopt, multiset_union(ctx, sc)}});
        out.push_back({FirstDegreeStep{RuleId::MPI, std::nullopt, goal}});
        break;
      }
    }
  }

  // Wraps the compilation of `n` under `hyps` into a named local fact.
  Step subproof(const NdNode& n, const std::vector<Formula>& hyps,
                const std::string& path) {
    HaveStep h;
    h.name = fresh();
    h.claim = {hyp_sheet(hyps), embed(n.formula)};
    compile(n, hyps, path, h.steps);
    return {std::move(h)};
  }
};

}  // namespace

const std::string& nd_tag_name(NdTag tag) {
  for (const auto& [t, name] : tag_table())
    if (t == tag) return name;
  throw std::logic_error("unknown proof-tree tag");
}

std::vector<NdProof> parse_nd(const std::string& text) {
  return NdParser(text).parse_file();
}

std::string print_nd(const std::vector<NdProof>& proofs) {
  std::ostringstream out;
  bool first = true;
  for (const NdProof& p : proofs) {
    if (!first) out << "\n";
    first = false;
    out << "proof " << p.name << "\n";
    for (const Formula& h : p.hyps)
      out << "hyp (" << print_formula(h) << ")\n";
    print_node(out, p.root, 0);
    out << "end\n";
  }
  return out.str();
}

CompileError::CompileError(std::string node_path, const std::string& msg)
    : std::runtime_error("at " + node_path + ": " + msg), path(std::move(node_path)) {}

Derivation compile_nd(const NdProof& proof, const CompileOptions& opts) {
  NdCompiler compiler{opts};
  Derivation d;
  d.system = SystemId::ALFA_I;
  d.name = proof.name;
  d.initial = hyp_sheet(proof.hyps);
  compiler.compile(proof.root, proof.hyps, "root", d.steps);
  return d;
}

}  // namespace alfa
