#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "knotscope/error.hpp"
#include "knotscope/graphs.hpp"
#include "knotscope/seifert.hpp"

using namespace knotscope;

namespace {

ErrorCode error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a knotscope::Error");
  return ErrorCode::InvalidArgument;
}

void check_census(const Diagram& d, const CheckerboardGraphs& g) {
  const int c = static_cast<int>(d.crossing_count());
  CHECK(static_cast<int>(g.black_faces.size() + g.white_faces.size()) == c + 2);
  CHECK(static_cast<int>(g.black_edges.size()) == c);
  CHECK(static_cast<int>(g.white_edges.size()) == c);
  CHECK(std::accumulate(g.white_valences.begin(), g.white_valences.end(), 0) == 2 * c);
  CHECK(std::accumulate(g.black_valences.begin(), g.black_valences.end(), 0) == 2 * c);
  int total = 0;
  for (const auto& e : g.reduced_black.edges) total += e.multiplicity;
  CHECK(total == c);
}

std::vector<Diagram> special_pieces(int seed, int count) {
  std::mt19937 rng(static_cast<unsigned>(seed));
  std::vector<Diagram> out;
  for (int t = 0; t < count; ++t) {
    const int strands = 3 + t % 3;
    std::vector<int> word;
    for (int i = 1; i < strands; ++i) word.insert(word.end(), {i, i});
    std::uniform_int_distribution<int> gen(1, strands - 1);
    while (static_cast<int>(word.size()) < 10) word.push_back(gen(rng));
    std::shuffle(word.begin(), word.end(), rng);
    for (int& w : word) w = w % 2 ? w : -w;
    for (auto& p : murasugi_decompose(fixtures::braid_diagram(strands, word))) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

TEST_CASE("checkerboard of standard special diagrams") {
  auto trefoil = fixtures::diagram(fixtures::kTrefoil);
  auto g = checkerboard(trefoil);
  CHECK(g.black_faces.size() == 2);
  CHECK(g.white_faces.size() == 3);
  CHECK(g.white_valences == std::vector<int>{2, 2, 2});
  check_census(trefoil, g);
  REQUIRE(g.reduced_black.edges.size() == 1);
  CHECK(g.reduced_black.vertex_count == 2);
  CHECK(g.reduced_black.edges[0].multiplicity == 3);

  auto t52 = fixtures::diagram(fixtures::kCinquefoil);
  auto g5 = checkerboard(t52);
  CHECK(g5.black_faces.size() == 2);
  CHECK(g5.white_faces.size() == 5);
  check_census(t52, g5);

  auto granny = fixtures::diagram(fixtures::kGranny);
  auto gg = checkerboard(granny);
  CHECK(gg.black_faces.size() == 3);
  CHECK(gg.white_faces.size() == 5);
  check_census(granny, gg);
  auto valences = gg.white_valences;
  std::sort(valences.begin(), valences.end());
  CHECK(valences == std::vector<int>{2, 2, 2, 2, 4});
  REQUIRE(gg.reduced_black.edges.size() == 2);
  CHECK(gg.reduced_black.edges[0].multiplicity == 3);
  CHECK(gg.reduced_black.edges[1].multiplicity == 3);
  CHECK(check_tree(gg.reduced_black));

  auto empty = checkerboard(Diagram{});
  CHECK(empty.black_faces.size() == 1);
  CHECK(empty.reduced_black.vertex_count == 1);
  CHECK(empty.reduced_black.edges.empty());
  CHECK(check_tree(empty.reduced_black));

  CHECK(error_of([] { checkerboard(fixtures::diagram(fixtures::kFigureEight)); }) == ErrorCode::NotSpecial);
}

TEST_CASE("census holds on special pieces of random alternating diagrams") {
  for (const auto& p : special_pieces(5, 30)) {
    auto g = checkerboard(p);
    check_census(p, g);
    CHECK(g.black_faces.size() == seifert_circles(p).circle_count());
    // Each black face is bounded by a single Seifert circle.
    auto s = seifert_circles(p);
    for (int f : g.black_faces) {
      const auto& face = p.faces()[static_cast<std::size_t>(f)];
      const int circle = s.circle_of_arc(face.boundary.front().arc);
      for (const auto& dart : face.boundary) CHECK(s.circle_of_arc(dart.arc) == circle);
    }
  }
}

TEST_CASE("fibered valence criterion") {
  CHECK(is_fibered_special(fixtures::diagram(fixtures::kTrefoil)));
  CHECK(is_fibered_special(fixtures::diagram(fixtures::kGranny)));
  CHECK(is_fibered_special(fixtures::torus2(7)));
  CHECK(is_fibered_special(Diagram{}));
  auto five_two = fixtures::diagram(fixtures::kFiveTwo);
  REQUIRE(is_special(five_two));
  CHECK_FALSE(is_fibered_special(five_two));
  CHECK(error_of([] { is_fibered_special(fixtures::diagram(fixtures::kFigureEight)); }) == ErrorCode::NotSpecial);
}

TEST_CASE("tree and multiplicity checks") {
  ReducedGraph cycle{3, {{{0, 1}, 2, {0, 1}}, {{1, 2}, 2, {2, 3}}, {{0, 2}, 2, {4, 5}}}};
  CHECK_FALSE(check_tree(cycle));
  ReducedGraph forest{4, {{{0, 1}, 2, {0, 1}}, {{2, 3}, 2, {2, 3}}}};
  CHECK_FALSE(check_tree(forest));
  ReducedGraph path{3, {{{0, 1}, 2, {0, 1}}, {{1, 2}, 1, {2}}}};
  CHECK(check_tree(path));

  CheckerboardGraphs synthetic;
  synthetic.reduced_black = path;
  CHECK_FALSE(check_multiplicity_lemma(synthetic));
  synthetic.reduced_black.edges[1].multiplicity = 2;
  CHECK(check_multiplicity_lemma(synthetic));

  CHECK(check_multiplicity_lemma(checkerboard(fixtures::diagram(fixtures::kTrefoil))));
  CHECK(check_multiplicity_lemma(checkerboard(fixtures::diagram(fixtures::kGranny))));

  for (const auto& p : special_pieces(9, 30)) {
    auto g = checkerboard(p);
    if (!is_fibered_special(p)) continue;
    CHECK(check_tree(g.reduced_black));
    CHECK(check_multiplicity_lemma(g));
  }
}

TEST_CASE("torus sum decomposition") {
  auto summands = [](const Diagram& d) {
    std::vector<std::pair<int, int>> out;
    for (const auto& s : torus_sum_decomposition(d).summands) out.emplace_back(s.k, s.sign);
    std::sort(out.begin(), out.end());
    return out;
  };
  using V = std::vector<std::pair<int, int>>;
  CHECK(summands(fixtures::diagram(fixtures::kTrefoil)) == V{{3, +1}});
  CHECK(summands(fixtures::diagram(fixtures::kTrefoilLeft)) == V{{3, -1}});
  CHECK(summands(fixtures::diagram(fixtures::kCinquefoil)) == V{{5, +1}});
  CHECK(summands(mirror(fixtures::diagram(fixtures::kCinquefoil))) == V{{5, -1}});
  CHECK(summands(fixtures::diagram(fixtures::kGranny)) == V{{3, +1}, {3, +1}});
  CHECK(summands(fixtures::torus2(4, -1)) == V{{4, -1}});
  CHECK(summands(Diagram{}).empty());

  CHECK(error_of([] { torus_sum_decomposition(fixtures::diagram(fixtures::kFiveTwo)); }) ==
        ErrorCode::PreconditionFailed);
  // A non-alternating 2-braid has a sign change inside its only group.
  CHECK(error_of([] { torus_sum_decomposition(fixtures::braid_diagram(2, {1, 1, -1, 1, 1})); }) ==
        ErrorCode::MixedSignGroup);
}
