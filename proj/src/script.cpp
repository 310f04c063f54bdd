// script.cpp — tokenizer, parser, and printer for derivation scripts.
#include "alfa/script.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace alfa {

namespace {

const std::set<std::string>& reserved_words() {
  static const std::set<std::string> words = {"system", "theorem", "vars",
                                              "from",   "qed",     "step",
                                              "have",   "lemma",   "witness",
                                              "split"};
  return words;
}

enum class TokKind { Word, Punct, End };

struct Token {
  TokKind kind;
  std::string text;  // word text, or one of ( ) { } [ ] # , ; : := => |- |
  int line;
  int col;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i + k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    i += n;
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '%') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    int tl = line, tc = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      out.push_back({TokKind::Word, text.substr(i, j - i), tl, tc});
      advance(j - i);
      continue;
    }
    auto two = [&](const char* p) {
      return i + 1 < text.size() && text[i] == p[0] && text[i + 1] == p[1];
    };
    if (two(":=") || two("=>") || two("|-")) {
      out.push_back({TokKind::Punct, text.substr(i, 2), tl, tc});
      advance(2);
      continue;
    }
    if (std::string("(){}[]#,;:|").find(c) != std::string::npos) {
      out.push_back({TokKind::Punct, std::string(1, c), tl, tc});
      advance(1);
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", tl, tc);
  }
  out.push_back({TokKind::End, "", line, col});
  return out;
}

bool valid_name(const std::string& s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::islower(static_cast<unsigned char>(c)) &&
        !std::isdigit(static_cast<unsigned char>(c)) && c != '_')
      return false;
  return true;
}

class ScriptParser {
 public:
  explicit ScriptParser(const std::string& text) : toks_(tokenize(text)) {}

  std::vector<Derivation> parse_file() {
    std::vector<Derivation> out;
    bool have_system = false;
    SystemId current = SystemId::ALFAO;
    while (peek().kind != TokKind::End) {
      if (at_word("system")) {
        next();
        const Token& t = expect_word("system identifier");
        auto sys = parse_system(t.text);
        if (!sys) err("unknown system '" + t.text + "'", t);
        current = *sys;
        have_system = true;
      } else if (at_word("theorem")) {
        if (!have_system) err("theorem before any system header", peek());
        out.push_back(parse_theorem(current));
      } else {
        err("expected 'system' or 'theorem'", peek());
      }
    }
    return out;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;

  const Token& peek(std::size_t k = 0) const {
    return toks_[std::min(pos_ + k, toks_.size() - 1)];
  }
  const Token& next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
  [[noreturn]] void err(const std::string& msg, const Token& t) const {
    throw ParseError(msg, t.line, t.col);
  }
  bool at_word(const std::string& w) const {
    return peek().kind == TokKind::Word && peek().text == w;
  }
  bool at_punct(const std::string& p) const {
    return peek().kind == TokKind::Punct && peek().text == p;
  }
  void expect_punct(const std::string& p) {
    if (!at_punct(p)) err("expected '" + p + "'", peek());
    next();
  }
  const Token& expect_word(const std::string& what) {
    if (peek().kind != TokKind::Word) err("expected " + what, peek());
    return next();
  }
  std::string expect_name(const std::string& what) {
    const Token& t = expect_word(what);
    if (!valid_name(t.text)) err("invalid " + what + " '" + t.text + "'", t);
    if (reserved_words().count(t.text))
      err("reserved word '" + t.text + "' cannot be a " + what, t);
    return t.text;
  }

  // --- embedded graphs -----------------------------------------------------

  // Parses items while the next token can start one; "{" is tried as a
  // scroll/disjunction item with backtracking so a following block brace ends
  // the region instead of failing it.
  Graph parse_region() {
    std::vector<Item> items;
    for (;;) {
      if (peek().kind == TokKind::Word) {
        const Token& t = peek();
        if (reserved_words().count(t.text)) break;
        if (!valid_name(t.text)) err("invalid atom '" + t.text + "'", t);
        items.push_back(atom(t.text));
        next();
      } else if (at_punct("#")) {
        next();
        items.push_back(cut(Graph()));
      } else if (at_punct("(")) {
        next();
        Graph body = parse_region();
        expect_punct(")");
        items.push_back(cut(std::move(body)));
      } else if (at_punct("{")) {
        std::size_t save = pos_;
        try {
          items.push_back(parse_brace_item());
        } catch (const ParseError&) {
          pos_ = save;  // not a scroll/disjunction: the brace ends the region
          break;
        }
      } else {
        break;
      }
    }
    return sheet(std::move(items));
  }

  Item parse_brace_item() {
    expect_punct("{");
    Graph first = parse_region();
    if (at_punct("=>")) {
      next();
      Graph second = parse_region();
      expect_punct("}");
      return scroll(std::move(first), std::move(second));
    }
    if (at_punct("|")) {
      next();
      Graph second = parse_region();
      expect_punct("}");
      return disj(std::move(first), std::move(second));
    }
    err("expected '=>' or '|' inside braces", peek());
  }

  // --- declarations ----------------------------------------------------------

  Derivation parse_theorem(SystemId system) {
    next();  // "theorem"
    Derivation d;
    d.system = system;
    d.name = expect_name("theorem name");
    if (at_word("vars")) {
      next();
      while (peek().kind == TokKind::Word && !reserved_words().count(peek().text)) {
        const Token& t = peek();
        std::string v = expect_name("variable");
        if (std::find(d.vars.begin(), d.vars.end(), v) != d.vars.end())
          err("duplicate variable '" + v + "'", t);
        d.vars.push_back(v);
      }
      if (d.vars.empty()) err("'vars' lists at least one atom", peek());
    }
    if (!at_word("from")) err("expected 'from'", peek());
    next();
    expect_punct(":");
    d.initial = parse_region();
    d.steps = parse_steps();
    if (!at_word("qed")) err("expected 'qed'", peek());
    next();
    return d;
  }

  std::vector<Step> parse_steps() {
    std::vector<Step> out;
    for (;;) {
      if (at_word("step"))
        out.push_back(parse_step());
      else if (at_word("have"))
        out.push_back(parse_have());
      else if (at_word("lemma"))
        out.push_back(parse_lemma());
      else
        return out;
    }
  }

  Step parse_step() {
    next();  // "step"
    const Token& rt = expect_word("rule name");
    auto rule = parse_rule(rt.text);
    if (!rule) err("unknown rule '" + rt.text + "'", rt);
    std::vector<std::string> refs;
    std::optional<Graph> witness, split;
    if (at_punct("[")) {
      next();
      refs.push_back(expect_name("reference"));
      while (at_punct(",")) {
        next();
        refs.push_back(expect_name("reference"));
      }
      expect_punct("]");
    }
    for (;;) {
      if (at_word("witness")) {
        const Token& t = next();
        if (witness) err("duplicate 'witness'", t);
        witness = parse_region();
      } else if (at_word("split")) {
        const Token& t = next();
        if (split) err("duplicate 'split'", t);
        split = parse_region();
      } else {
        break;
      }
    }
    expect_punct("=>");
    Graph result = parse_region();
    if (rule_degree(*rule) == 1) {
      if (!refs.empty())
        err("rule " + rule_name(*rule) + " takes no references", rt);
      if (split) err("rule " + rule_name(*rule) + " takes no split", rt);
      return {FirstDegreeStep{*rule, std::move(witness), std::move(result)}};
    }
    if (witness) err("rule " + rule_name(*rule) + " takes no witness", rt);
    return {SecondDegreeStep{*rule, std::move(refs), std::move(split),
                             std::move(result)}};
  }

  Step parse_have() {
    next();  // "have"
    HaveStep h;
    h.name = expect_name("local fact name");
    expect_punct(":");
    h.claim.source = parse_region();
    expect_punct("|-");
    h.claim.target = parse_region();
    expect_punct("{");
    h.steps = parse_steps();
    expect_punct("}");
    return {std::move(h)};
  }

  Step parse_lemma() {
    next();  // "lemma"
    LemmaStep l;
    l.name = expect_name("lemma name");
    if (at_punct("[")) {
      next();
      for (;;) {
        const Token& vt = peek();
        std::string var = expect_name("variable");
        if (l.subst.count(var)) err("duplicate variable '" + var + "'", vt);
        expect_punct(":=");
        l.subst.emplace(std::move(var), parse_region());
        if (at_punct(";")) {
          next();
          continue;
        }
        break;
      }
      expect_punct("]");
    }
    expect_punct("=>");
    l.result = parse_region();
    return {std::move(l)};
  }
};

// --- printing ----------------------------------------------------------------

void print_steps(std::ostringstream& out, const std::vector<Step>& steps,
                 int indent);

void print_one_step(std::ostringstream& out, const Step& st, int indent) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  if (const auto* fd = std::get_if<FirstDegreeStep>(&st.node)) {
    out << pad << "step " << rule_name(fd->rule);
    if (fd->witness) out << " witness " << print_graph(*fd->witness);
    out << " => " << print_graph(fd->result) << "\n";
  } else if (const auto* sd = std::get_if<SecondDegreeStep>(&st.node)) {
    out << pad << "step " << rule_name(sd->rule);
    if (!sd->refs.empty()) {
      out << " [";
      for (std::size_t i = 0; i < sd->refs.size(); ++i)
        out << (i ? ", " : "") << sd->refs[i];
      out << "]";
    }
    if (sd->split) out << " split " << print_graph(*sd->split);
    out << " => " << print_graph(sd->result) << "\n";
  } else if (const auto* lm = std::get_if<LemmaStep>(&st.node)) {
    out << pad << "lemma " << lm->name;
    if (!lm->subst.empty()) {
      out << " [";
      bool first = true;
      for (const auto& [var, img] : lm->subst) {
        if (!first) out << "; ";
        first = false;
        out << var << " := " << print_graph(img);
      }
      out << "]";
    }
    out << " => " << print_graph(lm->result) << "\n";
  } else {
    const auto& hv = std::get<HaveStep>(st.node);
    out << pad << "have " << hv.name << " : " << print_graph(hv.claim.source)
        << " |- " << print_graph(hv.claim.target) << " {\n";
    print_steps(out, hv.steps, indent + 2);
    out << pad << "}\n";
  }
}

void print_steps(std::ostringstream& out, const std::vector<Step>& steps,
                 int indent) {
  for (const Step& st : steps) print_one_step(out, st, indent);
}

void print_theorem(std::ostringstream& out, const Derivation& d) {
  out << "theorem " << d.name << "\n";
  if (!d.vars.empty()) {
    out << "vars";
    for (const std::string& v : d.vars) out << " " << v;
    out << "\n";
  }
  out << "from: " << print_graph(d.initial) << "\n";
  print_steps(out, d.steps, 2);
  out << "qed\n";
}

}  // namespace

std::vector<Derivation> parse_proofs(const std::string& text) {
  return ScriptParser(text).parse_file();
}

std::string print_proofs(const std::vector<Derivation>& ds) {
  std::ostringstream out;
  bool first = true;
  std::optional<SystemId> current;
  for (const Derivation& d : ds) {
    if (!current || *current != d.system) {
      if (!first) out << "\n";
      out << "system " << system_name(d.system) << "\n";
      current = d.system;
    }
    out << "\n";
    print_theorem(out, d);
    first = false;
  }
  return out.str();
}

Derivation parse_proof(const std::string& text) {
  std::vector<Derivation> ds = parse_proofs(text);
  if (ds.size() != 1)
    throw ParseError("expected exactly one theorem, found " +
                         std::to_string(ds.size()),
                     1, 1);
  return ds[0];
}

std::string print_proof(const Derivation& d) { return print_proofs({d}); }

}  // namespace alfa
