#include "knotscope/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>

#include "knotscope/error.hpp"
#include "union_find.hpp"

namespace knotscope {

int Crossing::smoothed_out(int in_slot) const noexcept {
  if (over_forward) return in_slot == 0 ? 3 : 2;
  return in_slot == 0 ? 1 : 2;
}

Diagram::Diagram() {
  components_.emplace_back();
  faces_.push_back(Face{0, {}, {}});
  faces_.push_back(Face{1, {}, {}});
}

namespace {

int other_end_index(const std::array<ArcEnd, 2>& ends, ArcEnd e) { return ends[0] == e ? 1 : 0; }

}  // namespace

Diagram build_diagram(const PDCode& code) {
  validate_pd(code);
  const int n = static_cast<int>(code.crossings.size());

  std::map<int, int> label_to_arc;
  for (const auto& x : code.crossings)
    for (int label : x) label_to_arc.emplace(label, 0);
  int next_id = 0;
  for (auto& [label, id] : label_to_arc) id = next_id++;
  const int arc_count = next_id;

  Diagram d;
  d.components_.clear();
  d.faces_.clear();
  d.crossings_.resize(static_cast<std::size_t>(n));
  d.arcs_.resize(static_cast<std::size_t>(arc_count));

  std::vector<std::array<ArcEnd, 2>> ends(static_cast<std::size_t>(arc_count));
  std::vector<int> fill(static_cast<std::size_t>(arc_count), 0);
  for (int c = 0; c < n; ++c) {
    auto& x = d.crossings_[static_cast<std::size_t>(c)];
    x.id = c;
    x.tag = c;
    for (int s = 0; s < 4; ++s) {
      int a = label_to_arc.at(code.crossings[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)]);
      x.arcs[static_cast<std::size_t>(s)] = a;
      ends[static_cast<std::size_t>(a)][static_cast<std::size_t>(fill[static_cast<std::size_t>(a)]++)] = ArcEnd{c, s};
    }
  }
  for (auto& [label, id] : label_to_arc) {
    d.arcs_[static_cast<std::size_t>(id)].id = id;
    d.arcs_[static_cast<std::size_t>(id)].label = label;
  }

  // Undirected strands: arcs chained through opposite slots.
  detail::UnionFind strands(static_cast<std::size_t>(arc_count));
  for (const auto& x : d.crossings_) {
    strands.unite(x.arcs[0], x.arcs[2]);
    strands.unite(x.arcs[1], x.arcs[3]);
  }

  std::vector<bool> oriented(static_cast<std::size_t>(arc_count), false);
  std::vector<bool> over_seen(static_cast<std::size_t>(n), false);
  std::vector<int> arc_component(static_cast<std::size_t>(arc_count), -1);

  for (int start_arc = 0; start_arc < arc_count; ++start_arc) {
    if (oriented[static_cast<std::size_t>(start_arc)]) continue;
    const std::size_t root = strands.find(start_arc);

    std::vector<int> members;
    for (int a = 0; a < arc_count; ++a)
      if (strands.find(a) == root) members.push_back(a);

    // Starting tail: the outgoing under-slot of some crossing on this strand.
    std::optional<ArcEnd> first_tail;
    for (int c = 0; c < n && !first_tail; ++c) {
      const auto& x = d.crossings_[static_cast<std::size_t>(c)];
      if (strands.find(x.arcs[kUnderOut]) == root) first_tail = ArcEnd{c, kUnderOut};
    }
    bool by_succession = false;
    std::vector<int> sorted_labels;
    if (!first_tail) {
      // Over-only component: fall back on label succession.
      by_succession = true;
      for (int a : members) sorted_labels.push_back(d.arcs_[static_cast<std::size_t>(a)].label);
      std::sort(sorted_labels.begin(), sorted_labels.end());
      auto succ = [&](int label) {
        auto it = std::upper_bound(sorted_labels.begin(), sorted_labels.end(), label);
        return it == sorted_labels.end() ? sorted_labels.front() : *it;
      };
      const int a0 = members.front();
      const auto& e = ends[static_cast<std::size_t>(a0)];
      int matches = 0;
      for (int k = 0; k < 2; ++k) {
        ArcEnd head = e[static_cast<std::size_t>(1 - k)];
        const auto& hx = d.crossings_[static_cast<std::size_t>(head.crossing)];
        int next_arc = hx.arcs[static_cast<std::size_t>((head.slot + 2) % 4)];
        if (d.arcs_[static_cast<std::size_t>(next_arc)].label == succ(d.arcs_[static_cast<std::size_t>(a0)].label)) {
          first_tail = e[static_cast<std::size_t>(k)];
          ++matches;
        }
      }
      if (matches != 1)
        throw Error(ErrorCode::InconsistentOrientation,
                    "cannot orient over-only component containing label " +
                        std::to_string(d.arcs_[static_cast<std::size_t>(a0)].label));
    }

    const int comp_id = static_cast<int>(d.components_.size());
    std::vector<int> order;
    ArcEnd tail = *first_tail;
    for (;;) {
      const auto& tx = d.crossings_[static_cast<std::size_t>(tail.crossing)];
      const int a = tx.arcs[static_cast<std::size_t>(tail.slot)];
      if (oriented[static_cast<std::size_t>(a)]) break;
      oriented[static_cast<std::size_t>(a)] = true;
      arc_component[static_cast<std::size_t>(a)] = comp_id;
      order.push_back(a);

      const auto& e = ends[static_cast<std::size_t>(a)];
      const ArcEnd head = e[static_cast<std::size_t>(other_end_index(e, tail))];
      auto& arc = d.arcs_[static_cast<std::size_t>(a)];
      arc.tail = tail;
      arc.head = head;

      auto& hx = d.crossings_[static_cast<std::size_t>(head.crossing)];
      if (is_under_slot(head.slot)) {
        if (head.slot != kUnderIn)
          throw Error(ErrorCode::InconsistentOrientation,
                      "strand enters crossing " + std::to_string(head.crossing) + " at its outgoing under-slot");
      } else {
        if (over_seen[static_cast<std::size_t>(head.crossing)])
          throw Error(ErrorCode::InconsistentOrientation, "over-strand traversed twice");
        over_seen[static_cast<std::size_t>(head.crossing)] = true;
        hx.over_forward = head.slot == 1;
      }
      const ArcEnd next_tail{head.crossing, (head.slot + 2) % 4};
      if (by_succession) {
        const int next_arc = hx.arcs[static_cast<std::size_t>(next_tail.slot)];
        auto it = std::upper_bound(sorted_labels.begin(), sorted_labels.end(), arc.label);
        const int want = it == sorted_labels.end() ? sorted_labels.front() : *it;
        if (d.arcs_[static_cast<std::size_t>(next_arc)].label != want)
          throw Error(ErrorCode::InconsistentOrientation, "labels do not increase along an over-only component");
      }
      tail = next_tail;
    }
    if (order.size() != members.size())
      throw Error(ErrorCode::InconsistentOrientation, "strand does not close up");
    std::rotate(order.begin(), std::min_element(order.begin(), order.end()), order.end());
    d.components_.push_back(std::move(order));
  }
  for (int a = 0; a < arc_count; ++a) d.arcs_[static_cast<std::size_t>(a)].component = arc_component[static_cast<std::size_t>(a)];

  // Components are numbered by discovery, which follows the smallest arc id.
  for (auto& x : d.crossings_) {
    if (!over_seen[static_cast<std::size_t>(x.id)])
      throw Error(ErrorCode::InconsistentOrientation, "over-strand never traversed");
    x.sign = x.over_forward ? -1 : +1;
  }

  // Faces: arrive at slot p, leave through slot p+1; the face stays on the right.
  const int dart_count = 2 * arc_count;
  std::vector<int> dart_face(static_cast<std::size_t>(dart_count), -1);
  d.left_face_.assign(static_cast<std::size_t>(arc_count), -1);
  d.right_face_.assign(static_cast<std::size_t>(arc_count), -1);
  d.corner_face_.assign(static_cast<std::size_t>(4 * n), -1);
  auto dart_index = [](Dart t) { return 2 * t.arc + (t.forward ? 0 : 1); };
  for (int start = 0; start < dart_count; ++start) {
    if (dart_face[static_cast<std::size_t>(start)] >= 0) continue;
    Face face;
    face.id = static_cast<int>(d.faces_.size());
    Dart t{start / 2, start % 2 == 0};
    while (dart_face[static_cast<std::size_t>(dart_index(t))] < 0) {
      dart_face[static_cast<std::size_t>(dart_index(t))] = face.id;
      const auto& arc = d.arcs_[static_cast<std::size_t>(t.arc)];
      (t.forward ? d.right_face_ : d.left_face_)[static_cast<std::size_t>(t.arc)] = face.id;
      const ArcEnd at = t.forward ? arc.head : arc.tail;
      face.boundary.push_back(t);
      face.corners.push_back(Corner{at.crossing, at.slot});
      d.corner_face_[static_cast<std::size_t>(at.crossing * 4 + at.slot)] = face.id;
      const int out_slot = (at.slot + 1) % 4;
      const auto& x = d.crossings_[static_cast<std::size_t>(at.crossing)];
      const int next_arc = x.arcs[static_cast<std::size_t>(out_slot)];
      const auto& na = d.arcs_[static_cast<std::size_t>(next_arc)];
      t = Dart{next_arc, na.tail == ArcEnd{at.crossing, out_slot}};
    }
    if (dart_index(t) != start)
      throw Error(ErrorCode::NonPlanar, "face walk did not close");
    d.faces_.push_back(std::move(face));
  }

  // Euler characteristic per connected piece of the 4-valent graph.
  detail::UnionFind pieces(static_cast<std::size_t>(n));
  for (const auto& arc : d.arcs_) pieces.unite(arc.tail.crossing, arc.head.crossing);
  std::map<std::size_t, std::array<int, 3>> census;  // V, E, F
  for (int c = 0; c < n; ++c) census[pieces.find(c)][0] += 1;
  for (const auto& arc : d.arcs_) census[pieces.find(arc.tail.crossing)][1] += 1;
  for (const auto& f : d.faces_) census[pieces.find(f.corners.front().crossing)][2] += 1;
  for (const auto& [root, vef] : census)
    if (vef[0] - vef[1] + vef[2] != 2)
      throw Error(ErrorCode::NonPlanar, "V - E + F = " + std::to_string(vef[0] - vef[1] + vef[2]) +
                                            " on a connected piece (expected 2)");
  return d;
}

Diagram with_tags(Diagram d, std::span<const int> tags) {
  for (std::size_t i = 0; i < d.crossings_.size() && i < tags.size(); ++i) d.crossings_[i].tag = tags[i];
  return d;
}

PDCode Diagram::to_pd() const {
  PDCode code;
  for (const auto& x : crossings_) {
    std::array<int, 4> t{};
    for (int s = 0; s < 4; ++s) t[static_cast<std::size_t>(s)] = arcs_[static_cast<std::size_t>(x.arcs[static_cast<std::size_t>(s)])].label;
    code.crossings.push_back(t);
  }
  return code;
}

bool operator==(const Diagram& a, const Diagram& b) {
  if (a.crossing_count() != b.crossing_count() || a.component_count() != b.component_count()) return false;
  if (a.to_pd() != b.to_pd()) return false;
  for (std::size_t i = 0; i < a.crossings_.size(); ++i)
    if (a.crossings_[i].sign != b.crossings_[i].sign) return false;
  return true;
}

bool is_alternating(const Diagram& d) {
  for (const auto& arc : d.arcs())
    if (is_under_slot(arc.tail.slot) == is_under_slot(arc.head.slot)) return false;
  return true;
}

bool is_reduced(const Diagram& d) {
  for (const auto& x : d.crossings()) {
    if (d.corner_face(x.id, 0) == d.corner_face(x.id, 2)) return false;
    if (d.corner_face(x.id, 1) == d.corner_face(x.id, 3)) return false;
  }
  return true;
}

bool is_connected(const Diagram& d) {
  const auto n = d.crossing_count();
  if (n == 0) return true;
  detail::UnionFind uf(n);
  for (const auto& arc : d.arcs()) uf.unite(arc.tail.crossing, arc.head.crossing);
  for (std::size_t c = 1; c < n; ++c)
    if (uf.find(c) != uf.find(0)) return false;
  return true;
}

Diagram mirror(const Diagram& d) {
  if (d.crossing_count() == 0) return d;
  PDCode code = d.to_pd();
  for (std::size_t i = 0; i < code.crossings.size(); ++i) {
    const auto [a, b, c, e] = code.crossings[i];
    // The old over-strand becomes the under-strand; start at its incoming end.
    if (d.crossing(static_cast<int>(i)).over_forward)
      code.crossings[i] = {b, c, e, a};
    else
      code.crossings[i] = {e, a, b, c};
  }
  std::vector<int> tags;
  for (const auto& x : d.crossings()) tags.push_back(x.tag);
  return with_tags(build_diagram(code), tags);
}

namespace {

// Walks strands through surviving crossings, where each "arc" is a class of
// original arcs merged by smoothing. Produces consecutive labels.
PDCode relabel_classes(const Diagram& d, const std::vector<int>& kept, const std::vector<int>& arc_class,
                       const std::map<int, ArcEnd>& class_head, const std::map<int, ArcEnd>& class_tail) {
  std::map<int, int> label;
  int next_label = 1;
  std::map<int, int> kept_index;
  for (std::size_t i = 0; i < kept.size(); ++i) kept_index[kept[i]] = static_cast<int>(i);
  for (int c : kept) {
    const auto& x = d.crossing(c);
    for (int s = 0; s < 4; ++s) {
      int cls = arc_class[static_cast<std::size_t>(x.arcs[static_cast<std::size_t>(s)])];
      if (label.count(cls)) continue;
      // Rewind is unnecessary: a component is a cycle, start anywhere.
      int cur = cls;
      while (!label.count(cur)) {
        label[cur] = next_label++;
        const ArcEnd head = class_head.at(cur);
        const ArcEnd out{head.crossing, (head.slot + 2) % 4};
        cur = arc_class[static_cast<std::size_t>(d.crossing(out.crossing).arcs[static_cast<std::size_t>(out.slot)])];
        if (!(class_tail.at(cur) == out)) throw Error(ErrorCode::InconsistentOrientation, "smoothing broke a strand");
      }
    }
  }
  PDCode code;
  for (int c : kept) {
    const auto& x = d.crossing(c);
    std::array<int, 4> t{};
    for (int s = 0; s < 4; ++s)
      t[static_cast<std::size_t>(s)] = label.at(arc_class[static_cast<std::size_t>(x.arcs[static_cast<std::size_t>(s)])]);
    code.crossings.push_back(t);
  }
  return code;
}

}  // namespace

PDCode canonical_pd(const Diagram& d) {
  if (d.crossing_count() == 0) return {};
  std::vector<int> kept(d.crossing_count());
  std::iota(kept.begin(), kept.end(), 0);
  std::vector<int> arc_class(d.arcs().size());
  std::iota(arc_class.begin(), arc_class.end(), 0);
  std::map<int, ArcEnd> head;
  std::map<int, ArcEnd> tail;
  for (const auto& arc : d.arcs()) {
    head[arc.id] = arc.head;
    tail[arc.id] = arc.tail;
  }
  return relabel_classes(d, kept, arc_class, head, tail);
}

Diagram smooth_crossings(const Diagram& d, std::span<const int> crossings, int keep_crossing) {
  const auto n = d.crossing_count();
  std::vector<bool> removed(n, false);
  for (int c : crossings) removed.at(static_cast<std::size_t>(c)) = true;

  detail::UnionFind uf(d.arcs().size());
  for (std::size_t c = 0; c < n; ++c) {
    if (!removed[c]) continue;
    const auto& x = d.crossing(static_cast<int>(c));
    for (int in : {kUnderIn, x.over_in()}) uf.unite(x.arcs[static_cast<std::size_t>(in)], x.arcs[static_cast<std::size_t>(x.smoothed_out(in))]);
  }
  std::vector<int> arc_class(d.arcs().size());
  for (std::size_t a = 0; a < arc_class.size(); ++a) arc_class[a] = static_cast<int>(uf.find(a));

  std::vector<int> kept;
  for (std::size_t c = 0; c < n; ++c)
    if (!removed[c]) kept.push_back(static_cast<int>(c));

  if (keep_crossing >= 0) {
    if (removed.at(static_cast<std::size_t>(keep_crossing)))
      throw Error(ErrorCode::InvalidArgument, "kept crossing is being smoothed");
    detail::UnionFind conn(n);
    std::map<int, int> first_at;
    for (int c : kept)
      for (int a : d.crossing(c).arcs) {
        auto [it, fresh] = first_at.emplace(arc_class[static_cast<std::size_t>(a)], c);
        if (!fresh) conn.unite(it->second, c);
      }
    std::vector<int> piece;
    for (int c : kept)
      if (conn.find(c) == conn.find(keep_crossing)) piece.push_back(c);
    kept = std::move(piece);
  }
  if (kept.empty()) return Diagram{};

  std::vector<bool> is_kept(n, false);
  for (int c : kept) is_kept[static_cast<std::size_t>(c)] = true;
  std::map<int, ArcEnd> class_head;
  std::map<int, ArcEnd> class_tail;
  for (const auto& arc : d.arcs()) {
    const int cls = arc_class[static_cast<std::size_t>(arc.id)];
    if (is_kept[static_cast<std::size_t>(arc.head.crossing)]) class_head[cls] = arc.head;
    if (is_kept[static_cast<std::size_t>(arc.tail.crossing)]) class_tail[cls] = arc.tail;
  }
  PDCode code = relabel_classes(d, kept, arc_class, class_head, class_tail);
  std::vector<int> tags;
  for (int c : kept) tags.push_back(d.crossing(c).tag);
  return with_tags(build_diagram(code), tags);
}

}  // namespace knotscope
