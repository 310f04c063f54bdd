// corpus.hpp — the bundled theorem library: file list, loader, and the
// expected claim of every bundled theorem for cross-checking.
#pragma once

#include <string>
#include <vector>

#include "alfa/derivation.hpp"

namespace alfa {

struct CorpusExpectation {
  SystemId system;
  std::string name;
  std::string source;  // sheet text
  std::string target;
};

// Script file names in registration order (earlier files feed later ones).
const std::vector<std::string>& corpus_files();

// One entry per bundled theorem, in registration order.
const std::vector<CorpusExpectation>& corpus_expected();

struct CorpusLoad {
  LemmaDb db;
  std::vector<Derivation> theorems;
  bool ok = false;
  std::string error;  // first failure, empty when ok
};

// Reads and checks every bundled script under `dir`, registering theorems in
// order. Stops at the first failure.
CorpusLoad load_corpus(const std::string& dir);

std::string read_text_file(const std::string& path);  // throws on I/O error

}  // namespace alfa
