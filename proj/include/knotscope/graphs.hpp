#pragma once

#include <array>
#include <vector>

#include "knotscope/diagram.hpp"

namespace knotscope {

struct GraphEdge {
  int crossing = 0;
  std::array<int, 2> ends{};  // vertex indices, ascending
  int sign = 0;
};

struct ReducedEdge {
  std::array<int, 2> ends{};
  int multiplicity = 0;
  std::vector<int> crossings;  // ascending
};

struct ReducedGraph {
  int vertex_count = 0;
  std::vector<ReducedEdge> edges;
};

// Checkerboard data of a special alternating diagram. Black faces are the
// Seifert disks; vertex i of a color is the i-th face of that color.
struct CheckerboardGraphs {
  std::vector<int> black_faces;
  std::vector<int> white_faces;
  std::vector<GraphEdge> black_edges;  // one per crossing, indexed by crossing
  std::vector<GraphEdge> white_edges;
  std::vector<int> white_valences;
  std::vector<int> black_valences;
  ReducedGraph reduced_black;
};

struct TorusSummand {
  int k = 0;
  int sign = 0;
  int edge = 0;  // index into reduced_black.edges
};

struct TorusSumDecomposition {
  std::vector<TorusSummand> summands;
};

// Throws NotSpecial or ImproperColoring.
CheckerboardGraphs checkerboard(const Diagram& d);

ReducedGraph reduced_black_graph(const CheckerboardGraphs& g);

// At most one white vertex of valence other than 2. Throws NotSpecial.
bool is_fibered_special(const Diagram& d);

bool check_tree(const ReducedGraph& g);
bool check_multiplicity_lemma(const CheckerboardGraphs& g);

// Throws PreconditionFailed or MixedSignGroup.
TorusSumDecomposition torus_sum_decomposition(const Diagram& d);

}  // namespace knotscope
