#include "knotscope/pd_code.hpp"

#include <cctype>
#include <charconv>
#include <map>

#include "knotscope/error.hpp"

namespace knotscope {

namespace {

class PdScanner {
 public:
  explicit PdScanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  int integer() {
    skip_space();
    int value = 0;
    auto* first = text_.data() + pos_;
    auto* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr == first) fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::MalformedSyntax, what + " at offset " + std::to_string(pos_));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::array<int, 4> read_tuple(PdScanner& in) {
  in.expect('[');
  std::array<int, 4> tuple{};
  for (int i = 0; i < 4; ++i) {
    if (i > 0 && !in.accept(',')) in.fail("crossing tuple must have exactly 4 entries");
    tuple[i] = in.integer();
    if (tuple[i] <= 0) in.fail("arc labels must be positive");
  }
  if (in.peek(',')) in.fail("crossing tuple must have exactly 4 entries");
  in.expect(']');
  return tuple;
}

}  // namespace

std::size_t PDCode::label_count() const {
  std::map<int, int> seen;
  for (const auto& x : crossings)
    for (int label : x) ++seen[label];
  return seen.size();
}

PDCode parse_pd(std::string_view text) {
  PdScanner in(text);
  PDCode code;
  if (in.at_end()) throw Error(ErrorCode::EmptyCode, "no crossings");

  // Either "[[...],[...]]" or a bare "[...],[...]" list.
  bool outer = false;
  {
    PdScanner probe(text);
    probe.expect('[');
    outer = probe.peek('[') || probe.peek(']');
  }
  if (outer) {
    in.expect('[');
    if (in.accept(']')) {
      if (!in.at_end()) in.fail("trailing characters");
      throw Error(ErrorCode::EmptyCode, "no crossings");
    }
  }
  do {
    code.crossings.push_back(read_tuple(in));
  } while (in.accept(','));
  if (outer) in.expect(']');
  if (!in.at_end()) in.fail("trailing characters");

  validate_pd(code);
  return code;
}

void validate_pd(const PDCode& code) {
  if (code.crossings.empty()) throw Error(ErrorCode::EmptyCode, "no crossings");
  std::map<int, int> uses;
  for (const auto& x : code.crossings)
    for (int label : x) {
      if (label <= 0) throw Error(ErrorCode::MalformedSyntax, "arc labels must be positive");
      ++uses[label];
    }
  for (const auto& [label, n] : uses)
    if (n != 2)
      throw Error(ErrorCode::ArcLabelNotTwice,
                  "label " + std::to_string(label) + " used " + std::to_string(n) + " times");
}

std::string to_string(const PDCode& code) {
  std::string out = "[";
  for (std::size_t i = 0; i < code.crossings.size(); ++i) {
    if (i) out += ',';
    out += '[';
    for (int j = 0; j < 4; ++j) {
      if (j) out += ',';
      out += std::to_string(code.crossings[i][j]);
    }
    out += ']';
  }
  out += ']';
  return out;
}

}  // namespace knotscope
