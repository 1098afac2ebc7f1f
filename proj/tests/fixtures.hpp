#pragma once

#include <string>
#include <vector>

#include "knotscope/diagram.hpp"
#include "knotscope/pd_code.hpp"

namespace fixtures {

// Left-handed trefoil in the common table encoding.
inline constexpr const char* kTrefoilLeft = "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]";
// Right-handed (positive) trefoil.
inline constexpr const char* kTrefoil = "[[1,5,2,4],[3,1,4,6],[5,3,6,2]]";
inline constexpr const char* kFigureEight = "[[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]";
inline constexpr const char* kCinquefoil = "[[2,8,3,7],[4,10,5,9],[6,2,7,1],[8,4,9,3],[10,6,1,5]]";
inline constexpr const char* kFiveTwo = "[[1,5,2,4],[3,9,4,8],[5,1,6,10],[7,3,8,2],[9,7,10,6]]";
inline constexpr const char* kGranny =
    "[[1,5,2,4],[3,1,4,12],[5,3,6,2],[7,11,8,10],[9,7,10,6],[11,9,12,8]]";
inline constexpr const char* kOneCrossingUnknot = "[[1,1,2,2]]";
inline constexpr const char* kPositiveHopf = "[[1,3,2,4],[3,1,4,2]]";

inline knotscope::Diagram diagram(const std::string& pd) {
  return knotscope::build_diagram(knotscope::parse_pd(pd));
}

// Closure of a braid word; generator +i is sigma_i (positive crossing between
// strands i and i+1, 1-based), -i its inverse.
knotscope::PDCode braid_closure(int strands, const std::vector<int>& word);

inline knotscope::Diagram braid_diagram(int strands, const std::vector<int>& word) {
  return knotscope::build_diagram(braid_closure(strands, word));
}

// T(k,2) as the closure of sigma_1^k (sign < 0 for the mirror).
inline knotscope::Diagram torus2(int k, int sign = +1) {
  return braid_diagram(2, std::vector<int>(static_cast<std::size_t>(k), sign));
}

}  // namespace fixtures
