#include "alfa/corpus.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "alfa/script.hpp"

namespace alfa {

const std::vector<std::string>& corpus_files() {
  static const std::vector<std::string> files = {
      "alfao.gpf",
      "alfa_i.gpf",
      "alfa_io.gpf",
      "alfa_io_classic.gpf",
  };
  return files;
}

const std::vector<CorpusExpectation>& corpus_expected() {
  static const std::vector<CorpusExpectation> table = {
      {SystemId::ALFAO, "conj_insert", "a b", "a b"},
      {SystemId::ALFAO, "r1", "a", "a a"},
      {SystemId::ALFAO, "r7_derived", "(a b)", "(a ((b)))"},
      {SystemId::ALFAO, "r4_derived", "(b c (a))", "(b c (a b))"},
      {SystemId::ALFAO, "r8_inv", "b (b (c))", "c"},
      {SystemId::ALFAO, "mp", "a (a (b))", "b"},
      {SystemId::ALFAO, "mp_deduces_r6", "a ((b))", "a b"},

      {SystemId::ALFA_I, "r8i_inv", "b {b => c}", "c"},
      {SystemId::ALFA_I, "ctx_via_r0", "a b c", "a b"},
      {SystemId::ALFA_I, "i_p2", "(a b)", "{b => (a)}"},
      {SystemId::ALFA_I, "e_p", "{a => b}", "(a (b))"},
      {SystemId::ALFA_I, "i_p3", "{a | b}", "{(a) => b}"},
      {SystemId::ALFA_I, "disj_double_cut", "{a | b}", "((a) (b))"},

      {SystemId::ALFA_IO, "i_c", "a", "((a))"},
      {SystemId::ALFA_IO, "e_bot", "#", "a"},
      {SystemId::ALFA_IO, "r5p", "a (a b)", "(b)"},
      {SystemId::ALFA_IO, "i_neg", "(a)", "{a => #}"},
      {SystemId::ALFA_IO, "e_neg", "{a => #}", "(a)"},
      {SystemId::ALFA_IO, "r5", "a (a b)", "a (b)"},
      {SystemId::ALFA_IO, "r7", "(a b)", "(a ((b)))"},
      {SystemId::ALFA_IO, "r7_inv", "(a ((b)))", "(a b)"},
      {SystemId::ALFA_IO, "r3", "(a)", "(a b)"},

      {SystemId::ALFA_IO_CLASSIC, "e_p_inv", "(a (b))", "{a => b}"},
      {SystemId::ALFA_IO_CLASSIC, "r6", "a ((b))", "a b"},
      {SystemId::ALFA_IO_CLASSIC, "r4", "(a c (b))", "(a c (b c))"},
      {SystemId::ALFA_IO_CLASSIC, "r8", "a", "(b (b))"},
  };
  return table;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

CorpusLoad load_corpus(const std::string& dir) {
  CorpusLoad load;
  for (const auto& file : corpus_files()) {
    const std::string path = dir + "/" + file;
    std::string text;
    try {
      text = read_text_file(path);
    } catch (const std::exception& e) {
      load.error = e.what();
      return load;
    }
    std::vector<Derivation> proofs;
    try {
      proofs = parse_proofs(text);
    } catch (const ParseError& e) {
      load.error = path + ":" + std::to_string(e.line) + ":" +
                   std::to_string(e.col) + ": " + e.what();
      return load;
    }
    for (auto& d : proofs) {
      Verdict v = load.db.add(d);
      if (!v.ok) {
        load.error = path + ": theorem '" + d.name + "': " + v.message;
        return load;
      }
      load.theorems.push_back(std::move(d));
    }
  }
  load.ok = true;
  return load;
}

}  // namespace alfa
