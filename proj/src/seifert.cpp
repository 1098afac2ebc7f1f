#include "knotscope/seifert.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "knotscope/error.hpp"
#include "union_find.hpp"

namespace knotscope {

const char* to_string(Side side) noexcept { return side == Side::Left ? "left" : "right"; }

SeifertStructure seifert_circles(const Diagram& d) {
  SeifertStructure s;
  if (d.crossing_count() == 0) {
    s.circles_.push_back(SeifertCircle{0, {}, 0, 1});
    s.on_left_.assign(1, std::vector<bool>(1, false));
    s.region_count_ = 2;
    return s;
  }
  if (!is_connected(d)) throw Error(ErrorCode::PreconditionFailed, "Seifert analysis needs a connected diagram");

  const auto arc_count = d.arcs().size();
  auto next_on_circle = [&](int a) {
    const ArcEnd head = d.arc(a).head;
    const auto& x = d.crossing(head.crossing);
    return x.arcs[static_cast<std::size_t>(x.smoothed_out(head.slot))];
  };

  s.arc_circle_.assign(arc_count, -1);
  for (int a = 0; a < static_cast<int>(arc_count); ++a) {
    if (s.arc_circle_[static_cast<std::size_t>(a)] >= 0) continue;
    SeifertCircle circle;
    circle.id = static_cast<int>(s.circles_.size());
    for (int cur = a; s.arc_circle_[static_cast<std::size_t>(cur)] < 0; cur = next_on_circle(cur)) {
      s.arc_circle_[static_cast<std::size_t>(cur)] = circle.id;
      circle.arcs.push_back(cur);
    }
    s.circles_.push_back(std::move(circle));
  }

  // Complementary regions of the circle system: faces glued through the
  // channels the smoothing opens at each crossing.
  detail::UnionFind glue(d.faces().size());
  for (const auto& x : d.crossings()) {
    const int m = x.corner_is_merged(0) ? 0 : 1;
    glue.unite(d.corner_face(x.id, m), d.corner_face(x.id, m + 2));
  }
  std::map<std::size_t, int> region_id;
  for (std::size_t f = 0; f < d.faces().size(); ++f) region_id.emplace(glue.find(f), 0);
  {
    int next = 0;
    for (auto& [root, id] : region_id) id = next++;
  }
  auto region_of_face = [&](int f) { return region_id.at(glue.find(f)); };
  s.region_count_ = region_id.size();

  for (auto& circle : s.circles_) {
    circle.left_region = region_of_face(d.left_face(circle.arcs.front()));
    circle.right_region = region_of_face(d.right_face(circle.arcs.front()));
    for (int a : circle.arcs)
      if (region_of_face(d.left_face(a)) != circle.left_region || region_of_face(d.right_face(a)) != circle.right_region)
        throw Error(ErrorCode::NonPlanar, "Seifert circle " + std::to_string(circle.id) + " is not a simple curve");
  }
  if (s.region_count_ != s.circles_.size() + 1)
    throw Error(ErrorCode::NonPlanar, "circle system does not cut S^2 into #circles + 1 regions");

  for (const auto& x : d.crossings()) {
    SeifertBand band;
    band.crossing = x.id;
    band.sign = x.sign;
    band.circles = {s.arc_circle_[static_cast<std::size_t>(x.arcs[kUnderIn])],
                    s.arc_circle_[static_cast<std::size_t>(x.arcs[static_cast<std::size_t>(x.over_in())])]};
    if (band.circles[0] == band.circles[1])
      throw Error(ErrorCode::BandSelfLoop, "band at crossing " + std::to_string(x.id) + " joins a circle to itself");
    band.region = region_of_face(d.corner_face(x.id, x.corner_is_merged(0) ? 0 : 1));
    s.bands_.push_back(band);
  }

  // Region tree: regions are nodes, circles are edges. Cutting edge c splits
  // the remaining circles into its two sides.
  const auto k = s.circles_.size();
  std::vector<std::vector<int>> incident(s.region_count_);
  for (const auto& c : s.circles_) {
    incident[static_cast<std::size_t>(c.left_region)].push_back(c.id);
    incident[static_cast<std::size_t>(c.right_region)].push_back(c.id);
  }
  s.on_left_.assign(k, std::vector<bool>(k, false));
  for (const auto& c : s.circles_) {
    std::vector<bool> seen_region(s.region_count_, false);
    std::vector<int> stack{c.left_region};
    seen_region[static_cast<std::size_t>(c.left_region)] = true;
    while (!stack.empty()) {
      const int r = stack.back();
      stack.pop_back();
      for (int o : incident[static_cast<std::size_t>(r)]) {
        if (o == c.id || s.on_left_[static_cast<std::size_t>(c.id)][static_cast<std::size_t>(o)]) continue;
        s.on_left_[static_cast<std::size_t>(c.id)][static_cast<std::size_t>(o)] = true;
        const auto& oc = s.circles_[static_cast<std::size_t>(o)];
        for (int nr : {oc.left_region, oc.right_region})
          if (!seen_region[static_cast<std::size_t>(nr)]) {
            seen_region[static_cast<std::size_t>(nr)] = true;
            stack.push_back(nr);
          }
      }
    }
    if (seen_region[static_cast<std::size_t>(c.right_region)])
      throw Error(ErrorCode::NonPlanar, "region graph is not a tree");
  }

  // Parallel groups: a face whose boundary passes exactly two channels, at
  // two different crossings, is a rectangle between those two bands.
  detail::UnionFind chain(d.crossing_count());
  for (const auto& f : d.faces()) {
    std::vector<int> channel_crossings;
    for (const auto& corner : f.corners)
      if (d.crossing(corner.crossing).corner_is_merged(corner.index)) channel_crossings.push_back(corner.crossing);
    if (channel_crossings.size() != 2 || channel_crossings[0] == channel_crossings[1]) continue;
    auto pair_of = [&](int x) {
      auto c = s.bands_[static_cast<std::size_t>(x)].circles;
      if (c[0] > c[1]) std::swap(c[0], c[1]);
      return c;
    };
    if (pair_of(channel_crossings[0]) == pair_of(channel_crossings[1]))
      chain.unite(channel_crossings[0], channel_crossings[1]);
  }
  std::map<std::size_t, BandGroup> groups;
  for (const auto& band : s.bands_) {
    auto& g = groups[chain.find(band.crossing)];
    g.circles = band.circles;
    if (g.circles[0] > g.circles[1]) std::swap(g.circles[0], g.circles[1]);
    g.region = band.region;
    g.crossings.push_back(band.crossing);
  }
  for (auto& [root, g] : groups) s.groups_.push_back(std::move(g));
  return s;
}

Side SeifertStructure::side_of(int circle, int other) const {
  if (circle == other) throw Error(ErrorCode::InvalidArgument, "a circle has no side relative to itself");
  return on_left_.at(static_cast<std::size_t>(circle)).at(static_cast<std::size_t>(other)) ? Side::Left : Side::Right;
}

std::vector<int> SeifertStructure::circles_on(int circle, Side side) const {
  std::vector<int> out;
  for (const auto& o : circles_)
    if (o.id != circle && side_of(circle, o.id) == side) out.push_back(o.id);
  return out;
}

Side SeifertStructure::band_side(int circle, int crossing) const {
  const auto& band = band_at(crossing);
  const auto& c = circles_.at(static_cast<std::size_t>(circle));
  if (band.circles[0] != circle && band.circles[1] != circle)
    throw Error(ErrorCode::InvalidArgument, "band is not attached to circle " + std::to_string(circle));
  return band.region == c.left_region ? Side::Left : Side::Right;
}

std::vector<int> SeifertStructure::bands_of(int circle) const {
  std::vector<int> out;
  for (const auto& b : bands_)
    if (b.circles[0] == circle || b.circles[1] == circle) out.push_back(b.crossing);
  return out;
}

int surface_genus(const SeifertStructure& s, int components) {
  const int twice = 2 - components - s.surface_euler();
  if (twice % 2 != 0 || twice < 0)
    throw Error(ErrorCode::NonIntegerGenus, "2 - mu - chi = " + std::to_string(twice));
  return twice / 2;
}

NestingReport nesting_report(const SeifertStructure& s) {
  NestingReport report;
  const auto k = static_cast<int>(s.circle_count());
  std::vector<bool> nested(static_cast<std::size_t>(k), false);
  for (int c = 0; c < k; ++c) {
    const int left = static_cast<int>(s.circles_on(c, Side::Left).size());
    const int right = k - 1 - left;
    report.side_counts.push_back({left, right});
    if (left >= 1 && right >= 1) {
      nested[static_cast<std::size_t>(c)] = true;
      report.nested.push_back(c);
    }
  }
  for (int c : report.nested) {
    for (Side side : {Side::Left, Side::Right}) {
      const auto others = s.circles_on(c, side);
      if (std::none_of(others.begin(), others.end(), [&](int o) { return nested[static_cast<std::size_t>(o)]; })) {
        report.extremal.push_back(c);
        break;
      }
    }
  }
  return report;
}

bool is_special(const Diagram& d) { return nesting_report(seifert_circles(d)).nested.empty(); }

std::vector<BandGroup> parallel_band_groups(const SeifertStructure& s) { return s.band_groups(); }

namespace {

bool is_nested(const SeifertStructure& s, int circle) {
  if (circle < 0 || circle >= static_cast<int>(s.circle_count()))
    throw Error(ErrorCode::InvalidArgument, "no circle " + std::to_string(circle));
  const auto left = s.circles_on(circle, Side::Left).size();
  return left >= 1 && left + 1 < s.circle_count();
}

}  // namespace

std::vector<Side> parallel_sides(const SeifertStructure& s, int circle) {
  if (!is_nested(s, circle)) throw Error(ErrorCode::NotNested, "circle " + std::to_string(circle) + " is not nested");
  std::set<Side> sides;
  for (const auto& g : s.band_groups())
    if (g.parallel() && (g.circles[0] == circle || g.circles[1] == circle))
      sides.insert(s.band_side(circle, g.crossings.front()));
  return {sides.begin(), sides.end()};
}

std::pair<Diagram, Diagram> murasugi_desum(const Diagram& d, int circle) {
  const auto s = seifert_circles(d);
  if (!is_nested(s, circle)) throw Error(ErrorCode::NotNested, "circle " + std::to_string(circle) + " is not nested");
  std::vector<int> left;
  std::vector<int> right;
  for (int x : s.bands_of(circle)) (s.band_side(circle, x) == Side::Left ? left : right).push_back(x);
  // A nested circle of a connected diagram has bands on both sides.
  if (left.empty() || right.empty())
    throw Error(ErrorCode::PreconditionFailed, "nested circle without bands on both sides");
  return {smooth_crossings(d, right, left.front()), smooth_crossings(d, left, right.front())};
}

namespace {

std::vector<int> band_tags(const Diagram& d, const SeifertStructure& s, int circle) {
  std::vector<int> tags;
  for (int x : s.bands_of(circle)) tags.push_back(d.crossing(x).tag);
  std::sort(tags.begin(), tags.end());
  return tags;
}

int find_circle_by_tags(const Diagram& d, const SeifertStructure& s, const std::vector<int>& tags) {
  for (const auto& c : s.circles())
    if (band_tags(d, s, c.id) == tags) return c.id;
  throw Error(ErrorCode::PreconditionFailed, "circle lost during desumming");
}

// The side of an extremal circle that holds no nested circle; ties go to the
// side with fewer circles, then to the left.
Side empty_side(const SeifertStructure& s, const NestingReport& nr, int circle) {
  std::vector<bool> nested(s.circle_count(), false);
  for (int c : nr.nested) nested[static_cast<std::size_t>(c)] = true;
  auto clean = [&](Side side) {
    const auto others = s.circles_on(circle, side);
    return std::none_of(others.begin(), others.end(), [&](int o) { return nested[static_cast<std::size_t>(o)]; });
  };
  const bool left_clean = clean(Side::Left);
  const bool right_clean = clean(Side::Right);
  if (left_clean && right_clean) {
    const auto& counts = nr.side_counts[static_cast<std::size_t>(circle)];
    return counts[1] < counts[0] ? Side::Right : Side::Left;
  }
  return left_clean ? Side::Left : Side::Right;
}

DecompositionNode decompose_node(const Diagram& d) {
  const auto s = seifert_circles(d);
  const auto nr = nesting_report(s);
  if (nr.nested.empty()) return DecompositionNode{d, {}, {}};

  // Every extremal circle's clean side is free of nested circles, so these
  // regions are pairwise disjoint and the greedy collection takes them all.
  std::vector<std::pair<std::vector<int>, Side>> collection;
  for (int c : nr.extremal) collection.emplace_back(band_tags(d, s, c), empty_side(s, nr, c));

  DecompositionNode root;
  DecompositionNode* cursor = &root;
  Diagram rest = d;
  for (const auto& [tags, side] : collection) {
    const auto rs = seifert_circles(rest);
    const int c = find_circle_by_tags(rest, rs, tags);
    auto [left, right] = murasugi_desum(rest, c);
    cursor->diagram = rest;
    cursor->circle_band_tags = tags;
    Diagram clean = side == Side::Left ? std::move(left) : std::move(right);
    rest = side == Side::Left ? std::move(right) : std::move(left);
    cursor->children.push_back(DecompositionNode{std::move(clean), {}, {}});
    cursor->children.push_back(DecompositionNode{});
    cursor = &cursor->children.back();
  }
  *cursor = decompose_node(rest);
  return root;
}

void collect_leaves(const DecompositionNode& node, std::vector<Diagram>& out) {
  if (node.children.empty()) {
    out.push_back(node.diagram);
    return;
  }
  for (const auto& child : node.children) collect_leaves(child, out);
}

}  // namespace

DecompositionNode murasugi_decompose_tree(const Diagram& d) { return decompose_node(d); }

std::vector<Diagram> murasugi_decompose(const Diagram& d) {
  std::vector<Diagram> out;
  collect_leaves(decompose_node(d), out);
  return out;
}

DeplumbResult deplumb_band(const Diagram& d, int crossing) {
  const auto s = seifert_circles(d);
  if (crossing < 0 || crossing >= static_cast<int>(d.crossing_count()))
    throw Error(ErrorCode::InvalidArgument, "no crossing " + std::to_string(crossing));
  for (const auto& g : s.band_groups())
    if (g.parallel() && std::find(g.crossings.begin(), g.crossings.end(), crossing) != g.crossings.end()) {
      const int x[] = {crossing};
      const int keep = crossing == g.crossings.front() ? g.crossings.back() : g.crossings.front();
      return DeplumbResult{smooth_crossings(d, x, keep), d.crossing(crossing).sign};
    }
  throw Error(ErrorCode::NotParallel, "crossing " + std::to_string(crossing) + " is not in a parallel group");
}

}  // namespace knotscope
