#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "knotscope/pd_code.hpp"

namespace knotscope {

// Positions around a crossing, counterclockwise. Slot 0 is the incoming
// under-strand, slot 2 the outgoing under-strand; 1 and 3 carry the over-strand.
inline constexpr int kUnderIn = 0;
inline constexpr int kUnderOut = 2;

inline constexpr bool is_under_slot(int slot) noexcept { return slot % 2 == 0; }

struct ArcEnd {
  int crossing = -1;
  int slot = -1;

  friend bool operator==(const ArcEnd&, const ArcEnd&) = default;
};

struct Crossing {
  int id = 0;
  // Provenance: id of the crossing in the diagram this one was derived from
  // (equal to id for diagrams built straight from a PD code).
  int tag = 0;
  int sign = 0;
  // True when the over-strand runs from slot 1 to slot 3.
  bool over_forward = false;
  std::array<int, 4> arcs{};

  int over_in() const noexcept { return over_forward ? 1 : 3; }
  int over_out() const noexcept { return over_forward ? 3 : 1; }

  // Oriented (Seifert) smoothing: outgoing slot joined to an incoming slot.
  int smoothed_out(int in_slot) const noexcept;

  // Corner k sits between slot k and slot k+1. The oriented smoothing hugs
  // two opposite corners and opens a channel through the other two.
  bool corner_is_merged(int corner) const noexcept {
    return over_forward ? corner % 2 == 0 : corner % 2 == 1;
  }
};

struct Arc {
  int id = 0;
  int label = 0;
  ArcEnd tail;
  ArcEnd head;
  int component = 0;
};

// An arc traversed in one direction; the face it bounds lies on its right.
struct Dart {
  int arc = 0;
  bool forward = true;

  friend bool operator==(const Dart&, const Dart&) = default;
};

struct Corner {
  int crossing = 0;
  int index = 0;
};

struct Face {
  int id = 0;
  std::vector<Dart> boundary;
  // corners[i] is the corner turned after traversing boundary[i].
  std::vector<Corner> corners;

  std::size_t valence() const noexcept { return corners.size(); }
};

// Oriented link diagram on S^2. Immutable once built; the default-constructed
// value is the 0-crossing unknot (one component, two faces, no arcs).
class Diagram {
 public:
  Diagram();

  std::span<const Crossing> crossings() const noexcept { return crossings_; }
  std::span<const Arc> arcs() const noexcept { return arcs_; }
  std::span<const Face> faces() const noexcept { return faces_; }
  // Arc ids of each link component in orientation order.
  const std::vector<std::vector<int>>& components() const noexcept { return components_; }

  std::size_t crossing_count() const noexcept { return crossings_.size(); }
  std::size_t component_count() const noexcept { return components_.size(); }

  const Crossing& crossing(int id) const { return crossings_.at(static_cast<std::size_t>(id)); }
  const Arc& arc(int id) const { return arcs_.at(static_cast<std::size_t>(id)); }

  int left_face(int arc) const { return left_face_.at(static_cast<std::size_t>(arc)); }
  int right_face(int arc) const { return right_face_.at(static_cast<std::size_t>(arc)); }
  int corner_face(int crossing, int corner) const {
    return corner_face_.at(static_cast<std::size_t>(crossing * 4 + corner));
  }

  PDCode to_pd() const;

  friend bool operator==(const Diagram& a, const Diagram& b);

 private:
  friend Diagram build_diagram(const PDCode& code);
  friend Diagram with_tags(Diagram d, std::span<const int> tags);

  std::vector<Crossing> crossings_;
  std::vector<Arc> arcs_;
  std::vector<Face> faces_;
  std::vector<std::vector<int>> components_;
  std::vector<int> left_face_;
  std::vector<int> right_face_;
  std::vector<int> corner_face_;
};

// Orientation is read off the under-strands (slot 0 -> slot 2). A component
// that never passes under is oriented by label succession; if that is
// ambiguous the code is rejected. Throws NonPlanar or InconsistentOrientation.
Diagram build_diagram(const PDCode& code);

// Copy of d with crossing tags replaced (tags[i] for crossing i).
Diagram with_tags(Diagram d, std::span<const int> tags);

bool is_alternating(const Diagram& d);
bool is_reduced(const Diagram& d);
// The empty diagram counts as connected.
bool is_connected(const Diagram& d);
Diagram mirror(const Diagram& d);

// Relabels so that labels run 1..2n consecutively along each component,
// components visited in order of their first appearance by crossing id.
PDCode canonical_pd(const Diagram& d);

// Smooths the listed crossings with the oriented smoothing and rebuilds the
// diagram. When keep_crossing >= 0 only the connected piece containing that
// crossing survives; crossingless loops left behind are dropped. Tags of
// surviving crossings are carried over.
Diagram smooth_crossings(const Diagram& d, std::span<const int> crossings, int keep_crossing = -1);

}  // namespace knotscope
