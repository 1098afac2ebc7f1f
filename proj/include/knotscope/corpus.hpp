#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "knotscope/bigint.hpp"
#include "knotscope/pd_code.hpp"

namespace knotscope {

struct KnotRecord {
  std::string name;
  std::string pd_text;
  PDCode pd;
  int line = 0;
  // Reference values, used for cross-validation only.
  std::optional<std::vector<BigInt>> alexander;  // a_{-g} .. a_g
  std::optional<int> signature;
  std::optional<int> genus;
  std::optional<bool> fibered;
};

struct RowError {
  int line = 0;
  std::string message;
};

struct Corpus {
  std::vector<KnotRecord> records;
  std::vector<RowError> skipped;
};

inline constexpr const char* kCorpusFile = "alternating-knots-to-9-crossings.csv";

// Throws FileMissing or HeaderMismatch. Bad rows throw RowParseError listing
// every offending line unless `lenient`, in which case they are skipped.
Corpus load_corpus(const std::filesystem::path& path, bool lenient = false);
Corpus parse_corpus(const std::string& text, bool lenient = false);

// KNOTSCOPE_CORPUS_DIR if set, else the bundled data directory.
std::filesystem::path default_corpus_path();

// Throws InvalidArgument for unknown names.
const KnotRecord& find_record(const Corpus& c, const std::string& name);

}  // namespace knotscope
