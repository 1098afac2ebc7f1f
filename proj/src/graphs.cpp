#include "knotscope/graphs.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "knotscope/error.hpp"
#include "knotscope/seifert.hpp"
#include "union_find.hpp"

namespace knotscope {

namespace {

bool all_corners_hugged(const Diagram& d, const Face& f) {
  return std::none_of(f.corners.begin(), f.corners.end(), [&](const Corner& c) {
    return d.crossing(c.crossing).corner_is_merged(c.index);
  });
}

GraphEdge make_edge(int crossing, int a, int b, int sign) {
  return GraphEdge{crossing, {std::min(a, b), std::max(a, b)}, sign};
}

}  // namespace

CheckerboardGraphs checkerboard(const Diagram& d) {
  if (!is_special(d)) throw Error(ErrorCode::NotSpecial, "diagram has a nested Seifert circle");
  const auto s = seifert_circles(d);

  CheckerboardGraphs g;
  const auto face_count = d.faces().size();
  std::vector<int> vertex(face_count, -1);
  std::vector<bool> black(face_count, false);
  for (const auto& f : d.faces()) {
    // The 0-crossing unknot: one disk, one outer face.
    const bool is_black = d.crossing_count() == 0 ? f.id == 0 : all_corners_hugged(d, f);
    black[static_cast<std::size_t>(f.id)] = is_black;
    auto& list = is_black ? g.black_faces : g.white_faces;
    vertex[static_cast<std::size_t>(f.id)] = static_cast<int>(list.size());
    list.push_back(f.id);
  }
  if (g.black_faces.size() != s.circle_count())
    throw Error(ErrorCode::NotSpecial, "Seifert disks are not faces of the diagram");
  for (const auto& arc : d.arcs())
    if (black[static_cast<std::size_t>(d.left_face(arc.id))] == black[static_cast<std::size_t>(d.right_face(arc.id))])
      throw Error(ErrorCode::ImproperColoring, "arc " + std::to_string(arc.label) + " has one color on both sides");

  for (const auto& x : d.crossings()) {
    std::array<int, 2> b{};
    std::array<int, 2> w{};
    int nb = 0;
    int nw = 0;
    for (int k = 0; k < 4; ++k) {
      const int f = d.corner_face(x.id, k);
      if (black[static_cast<std::size_t>(f)])
        b[static_cast<std::size_t>(nb++)] = vertex[static_cast<std::size_t>(f)];
      else
        w[static_cast<std::size_t>(nw++)] = vertex[static_cast<std::size_t>(f)];
    }
    if (nb != 2 || nw != 2) throw Error(ErrorCode::ImproperColoring, "crossing corners are not alternately colored");
    g.black_edges.push_back(make_edge(x.id, b[0], b[1], x.sign));
    g.white_edges.push_back(make_edge(x.id, w[0], w[1], x.sign));
  }
  for (int f : g.white_faces) g.white_valences.push_back(static_cast<int>(d.faces()[static_cast<std::size_t>(f)].valence()));
  for (int f : g.black_faces) g.black_valences.push_back(static_cast<int>(d.faces()[static_cast<std::size_t>(f)].valence()));
  g.reduced_black = reduced_black_graph(g);
  return g;
}

ReducedGraph reduced_black_graph(const CheckerboardGraphs& g) {
  ReducedGraph r;
  r.vertex_count = static_cast<int>(g.black_faces.size());
  std::map<std::array<int, 2>, std::size_t> index;
  for (const auto& e : g.black_edges) {
    auto [it, fresh] = index.emplace(e.ends, r.edges.size());
    if (fresh) r.edges.push_back(ReducedEdge{e.ends, 0, {}});
    auto& re = r.edges[it->second];
    ++re.multiplicity;
    re.crossings.push_back(e.crossing);
  }
  for (auto& e : r.edges) std::sort(e.crossings.begin(), e.crossings.end());
  return r;
}

bool is_fibered_special(const Diagram& d) {
  const auto g = checkerboard(d);
  return std::count_if(g.white_valences.begin(), g.white_valences.end(), [](int v) { return v != 2; }) <= 1;
}

bool check_tree(const ReducedGraph& g) {
  if (g.vertex_count == 0) return false;
  if (static_cast<int>(g.edges.size()) != g.vertex_count - 1) return false;
  detail::UnionFind uf(static_cast<std::size_t>(g.vertex_count));
  for (const auto& e : g.edges) {
    if (e.ends[0] < 0 || e.ends[1] >= g.vertex_count) return false;
    if (uf.find(e.ends[0]) == uf.find(e.ends[1])) return false;
    uf.unite(e.ends[0], e.ends[1]);
  }
  return true;
}

bool check_multiplicity_lemma(const CheckerboardGraphs& g) {
  return std::all_of(g.reduced_black.edges.begin(), g.reduced_black.edges.end(),
                     [](const ReducedEdge& e) { return e.multiplicity >= 2; });
}

TorusSumDecomposition torus_sum_decomposition(const Diagram& d) {
  const auto g = checkerboard(d);
  if (std::count_if(g.white_valences.begin(), g.white_valences.end(), [](int v) { return v != 2; }) > 1)
    throw Error(ErrorCode::PreconditionFailed, "special diagram is not fibered");
  if (!check_tree(g.reduced_black)) throw Error(ErrorCode::PreconditionFailed, "reduced black graph is not a tree");
  if (!check_multiplicity_lemma(g)) throw Error(ErrorCode::PreconditionFailed, "reduced black graph has a simple edge");

  TorusSumDecomposition out;
  for (std::size_t i = 0; i < g.reduced_black.edges.size(); ++i) {
    const auto& e = g.reduced_black.edges[i];
    const int sign = d.crossing(e.crossings.front()).sign;
    for (int x : e.crossings)
      if (d.crossing(x).sign != sign)
        throw Error(ErrorCode::MixedSignGroup, "crossings " + std::to_string(e.crossings.front()) + " and " +
                                                   std::to_string(x) + " differ in sign");
    out.summands.push_back(TorusSummand{e.multiplicity, sign, static_cast<int>(i)});
  }
  return out;
}

}  // namespace knotscope
