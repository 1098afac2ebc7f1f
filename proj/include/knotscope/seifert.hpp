#pragma once

#include <array>
#include <utility>
#include <vector>

#include "knotscope/diagram.hpp"

namespace knotscope {

// The two complementary regions of an oriented Seifert circle.
enum class Side { Left, Right };

const char* to_string(Side side) noexcept;

struct SeifertCircle {
  int id = 0;
  std::vector<int> arcs;  // in orientation order
  int left_region = 0;
  int right_region = 0;
};

struct SeifertBand {
  int crossing = 0;
  std::array<int, 2> circles{};  // circles[0] carries the under-strand
  int sign = 0;
  int region = 0;  // complementary region of the circle system holding the band
};

// Bands between one circle pair that are chained by band-free rectangles.
struct BandGroup {
  std::array<int, 2> circles{};  // ascending
  std::vector<int> crossings;    // ascending
  int region = 0;

  bool parallel() const noexcept { return crossings.size() >= 2; }
};

class SeifertStructure {
 public:
  std::span<const SeifertCircle> circles() const noexcept { return circles_; }
  std::span<const SeifertBand> bands() const noexcept { return bands_; }
  std::size_t circle_count() const noexcept { return circles_.size(); }
  std::size_t region_count() const noexcept { return region_count_; }

  // chi = #circles - #bands
  int surface_euler() const noexcept {
    return static_cast<int>(circles_.size()) - static_cast<int>(bands_.size());
  }

  int circle_of_arc(int arc) const { return arc_circle_.at(static_cast<std::size_t>(arc)); }
  const SeifertBand& band_at(int crossing) const { return bands_.at(static_cast<std::size_t>(crossing)); }

  // Which complementary region of `circle` contains `other`.
  Side side_of(int circle, int other) const;
  std::vector<int> circles_on(int circle, Side side) const;

  // Side of `circle` on which the band at `crossing` lies; the band must be
  // attached to `circle`.
  Side band_side(int circle, int crossing) const;
  std::vector<int> bands_of(int circle) const;

  const std::vector<BandGroup>& band_groups() const noexcept { return groups_; }

 private:
  friend SeifertStructure seifert_circles(const Diagram& d);

  std::vector<SeifertCircle> circles_;
  std::vector<SeifertBand> bands_;
  std::vector<int> arc_circle_;
  std::vector<std::vector<bool>> on_left_;  // on_left_[c][o]: o lies left of c
  std::vector<BandGroup> groups_;
  std::size_t region_count_ = 0;
};

struct NestingReport {
  std::vector<int> nested;
  std::vector<int> extremal;
  // side_counts[c] = {circles left of c, circles right of c}
  std::vector<std::array<int, 2>> side_counts;
};

// Throws BandSelfLoop, or PreconditionFailed for split diagrams (the circle
// system of a split diagram does not determine nesting).
SeifertStructure seifert_circles(const Diagram& d);

// (2 - mu - chi) / 2; throws NonIntegerGenus on a parity violation.
int surface_genus(const SeifertStructure& s, int components);

NestingReport nesting_report(const SeifertStructure& s);
bool is_special(const Diagram& d);

std::vector<BandGroup> parallel_band_groups(const SeifertStructure& s);

// Sides of a nested circle that carry a parallel group attached to it.
// Throws NotNested.
std::vector<Side> parallel_sides(const SeifertStructure& s, int circle);

// Murasugi desum along a nested circle: first = piece on the circle's left,
// second = piece on its right. Throws NotNested.
std::pair<Diagram, Diagram> murasugi_desum(const Diagram& d, int circle);

struct DecompositionNode {
  Diagram diagram;
  // Crossing tags of the circle desummed at this node; empty at leaves.
  std::vector<int> circle_band_tags;
  std::vector<DecompositionNode> children;
};

// Desums along maximal collections of extremal nested circles until every
// piece is special.
DecompositionNode murasugi_decompose_tree(const Diagram& d);
std::vector<Diagram> murasugi_decompose(const Diagram& d);

struct DeplumbResult {
  Diagram diagram;
  int hopf_sign = 0;  // sign of the removed crossing
};

// Removes one band of a parallel group. Throws NotParallel.
DeplumbResult deplumb_band(const Diagram& d, int crossing);

}  // namespace knotscope
