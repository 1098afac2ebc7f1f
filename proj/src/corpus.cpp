#include "knotscope/corpus.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "knotscope/error.hpp"

namespace knotscope {

namespace {

const std::vector<std::string> kShortHeader{"name", "pd"};
const std::vector<std::string> kFullHeader{"name", "pd", "alexander", "signature", "genus", "fibered"};

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        out.back() += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      out.emplace_back();
    } else {
      out.back() += ch;
    }
  }
  if (quoted) throw Error(ErrorCode::RowParseError, "unterminated quote");
  return out;
}

int parse_int(const std::string& s, const char* field) {
  int v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size())
    throw Error(ErrorCode::RowParseError, std::string("bad ") + field + " '" + s + "'");
  return v;
}

std::vector<BigInt> parse_coeffs(const std::string& s) {
  std::istringstream in(s);
  std::vector<BigInt> out;
  std::string tok;
  while (in >> tok) out.emplace_back(parse_int(tok, "alexander coefficient"));
  if (out.empty() || out.size() % 2 == 0)
    throw Error(ErrorCode::RowParseError, "alexander needs an odd number of coefficients");
  return out;
}

KnotRecord parse_row(const std::vector<std::string>& fields, std::size_t width, int line) {
  if (fields.size() != width)
    throw Error(ErrorCode::RowParseError,
                "expected " + std::to_string(width) + " fields, got " + std::to_string(fields.size()));
  KnotRecord r;
  r.line = line;
  r.name = fields[0];
  if (r.name.empty()) throw Error(ErrorCode::RowParseError, "empty name");
  r.pd_text = fields[1];
  try {
    r.pd = parse_pd(r.pd_text);
  } catch (const Error& e) {
    throw Error(ErrorCode::RowParseError, std::string(to_string(e.code())) + ": " + e.message());
  }
  if (width == kFullHeader.size()) {
    if (!fields[2].empty()) r.alexander = parse_coeffs(fields[2]);
    if (!fields[3].empty()) r.signature = parse_int(fields[3], "signature");
    if (!fields[4].empty()) r.genus = parse_int(fields[4], "genus");
    if (fields[5] == "Y")
      r.fibered = true;
    else if (fields[5] == "N")
      r.fibered = false;
    else if (!fields[5].empty())
      throw Error(ErrorCode::RowParseError, "fibered must be Y or N");
  }
  return r;
}

}  // namespace

Corpus parse_corpus(const std::string& text, bool lenient) {
  std::istringstream in(text);
  std::string line;
  int number = 0;
  std::vector<std::string> header;
  while (header.empty() && std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) header = split_csv(line);
  }
  if (header != kShortHeader && header != kFullHeader)
    throw Error(ErrorCode::HeaderMismatch, header.empty() ? "no header" : "unexpected header on line " + std::to_string(number));

  Corpus c;
  std::set<std::string> names;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      auto r = parse_row(split_csv(line), header.size(), number);
      if (!names.insert(r.name).second) throw Error(ErrorCode::RowParseError, "duplicate name " + r.name);
      c.records.push_back(std::move(r));
    } catch (const Error& e) {
      c.skipped.push_back(RowError{number, e.message()});
    }
  }
  if (!lenient && !c.skipped.empty()) {
    std::string msg;
    for (const auto& e : c.skipped) msg += (msg.empty() ? "" : "; ") + ("line " + std::to_string(e.line) + ": " + e.message);
    throw Error(ErrorCode::RowParseError, msg);
  }
  return c;
}

Corpus load_corpus(const std::filesystem::path& path, bool lenient) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::FileMissing, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_corpus(buf.str(), lenient);
}

std::filesystem::path default_corpus_path() {
  if (const char* dir = std::getenv("KNOTSCOPE_CORPUS_DIR"); dir && *dir) return std::filesystem::path(dir) / kCorpusFile;
  return std::filesystem::path(KNOTSCOPE_DATA_DIR) / kCorpusFile;
}

const KnotRecord& find_record(const Corpus& c, const std::string& name) {
  for (const auto& r : c.records)
    if (r.name == name) return r;
  throw Error(ErrorCode::InvalidArgument, "no knot named " + name);
}

}  // namespace knotscope
