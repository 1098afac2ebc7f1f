#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace knotscope {

// Planar diagram code. Each tuple lists the four arc labels around a
// crossing, starting at the incoming under-strand and going counterclockwise.
struct PDCode {
  std::vector<std::array<int, 4>> crossings;

  std::size_t crossing_count() const noexcept { return crossings.size(); }
  std::size_t label_count() const;

  friend bool operator==(const PDCode&, const PDCode&) = default;
};

// Accepts "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]"; the outer brackets and
// whitespace are optional. Throws MalformedSyntax, ArcLabelNotTwice or
// EmptyCode.
PDCode parse_pd(std::string_view text);

// Checks the label multiplicity invariants of an already-assembled code.
void validate_pd(const PDCode& code);

std::string to_string(const PDCode& code);

}  // namespace knotscope
