#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "knotscope/error.hpp"
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

// Seifert circle count straight from a single-component PD code whose labels
// run 1..2n along the orientation: join each incoming label to the outgoing
// label of the other strand and count cycles.
int smoothing_oracle_circles(const PDCode& code) {
  const int n = static_cast<int>(code.label_count());
  std::vector<int> parent(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) parent[static_cast<std::size_t>(i)] = i;
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };
  for (const auto& t : code.crossings) {
    const bool forward = t[3] == t[1] % n + 1;
    const int over_in = forward ? t[1] : t[3];
    const int over_out = forward ? t[3] : t[1];
    unite(t[0], over_out);
    unite(over_in, t[2]);
  }
  std::set<int> roots;
  for (int l = 1; l <= n; ++l) roots.insert(find(l));
  return static_cast<int>(roots.size());
}

// Faces of S^2 \ C reachable from `root`, found by walking faces across arcs
// off C and through crossing corners that C does not cut off.
std::vector<bool> reachable_faces(const Diagram& d, const SeifertStructure& s, int circle, int root) {
  std::vector<std::set<int>> adj(d.faces().size());
  auto link = [&](int f, int g) {
    adj[static_cast<std::size_t>(f)].insert(g);
    adj[static_cast<std::size_t>(g)].insert(f);
  };
  for (const auto& arc : d.arcs())
    if (s.circle_of_arc(arc.id) != circle) link(d.left_face(arc.id), d.right_face(arc.id));
  for (const auto& x : d.crossings()) {
    std::vector<int> open;
    for (int k = 0; k < 4; ++k) {
      const bool hugged = !x.corner_is_merged(k);
      const int a = x.arcs[static_cast<std::size_t>(k)];
      if (hugged && s.circle_of_arc(a) == circle) continue;
      open.push_back(d.corner_face(x.id, k));
    }
    for (std::size_t i = 1; i < open.size(); ++i) link(open[0], open[i]);
  }
  std::vector<bool> seen(d.faces().size(), false);
  std::vector<int> stack{root};
  seen[static_cast<std::size_t>(root)] = true;
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    for (int g : adj[static_cast<std::size_t>(f)])
      if (!seen[static_cast<std::size_t>(g)]) {
        seen[static_cast<std::size_t>(g)] = true;
        stack.push_back(g);
      }
  }
  return seen;
}

std::set<int> nested_by_oracle(const Diagram& d, const SeifertStructure& s, int root) {
  std::set<int> nested;
  for (const auto& c : s.circles()) {
    auto seen = reachable_faces(d, s, c.id, root);
    int near = 0;
    int far = 0;
    for (const auto& o : s.circles()) {
      if (o.id == c.id) continue;
      (seen[static_cast<std::size_t>(d.left_face(o.arcs.front()))] ? near : far) += 1;
    }
    if (near > 0 && far > 0) nested.insert(c.id);
  }
  return nested;
}

std::vector<int> random_alternating_braid(std::mt19937& rng, int strands, int length) {
  std::vector<int> word;
  std::uniform_int_distribution<int> gen(1, strands - 1);
  // Every generator at least twice so the closure is reduced and connected.
  for (int i = 1; i < strands; ++i) word.insert(word.end(), {i, i});
  while (static_cast<int>(word.size()) < length) word.push_back(gen(rng));
  std::shuffle(word.begin(), word.end(), rng);
  for (int& g : word) g = (g % 2 == 1) ? g : -g;
  return word;
}

std::multiset<int> tags_of(const Diagram& d) {
  std::multiset<int> out;
  for (const auto& x : d.crossings()) out.insert(x.tag);
  return out;
}

}  // namespace

TEST_CASE("seifert_circles on standard diagrams") {
  auto trefoil = seifert_circles(fixtures::diagram(fixtures::kTrefoilLeft));
  CHECK(trefoil.circle_count() == 2);
  CHECK(trefoil.bands().size() == 3);
  CHECK(trefoil.surface_euler() == -1);
  CHECK(surface_genus(trefoil, 1) == 1);

  auto fig8 = seifert_circles(fixtures::diagram(fixtures::kFigureEight));
  CHECK(fig8.circle_count() == 3);
  CHECK(fig8.bands().size() == 4);
  CHECK(fig8.surface_euler() == -1);
  CHECK(surface_genus(fig8, 1) == 1);

  auto unknot = seifert_circles(Diagram{});
  CHECK(unknot.circle_count() == 1);
  CHECK(unknot.bands().empty());
  CHECK(unknot.surface_euler() == 1);
  CHECK(surface_genus(unknot, 1) == 0);

  auto t52 = seifert_circles(fixtures::diagram(fixtures::kCinquefoil));
  CHECK(t52.circle_count() == 2);
  CHECK(t52.surface_euler() == -3);
  CHECK(surface_genus(t52, 1) == 2);

  CHECK(error_of([&] { surface_genus(trefoil, 2); }) == ErrorCode::NonIntegerGenus);
}

TEST_CASE("circle counts match the tuple smoothing oracle") {
  for (const char* pd : {fixtures::kTrefoil, fixtures::kTrefoilLeft, fixtures::kFigureEight, fixtures::kCinquefoil,
                         fixtures::kFiveTwo, fixtures::kGranny}) {
    auto code = parse_pd(pd);
    auto s = seifert_circles(build_diagram(code));
    CHECK(static_cast<int>(s.circle_count()) == smoothing_oracle_circles(code));
    CHECK(s.region_count() == s.circle_count() + 1);
    for (const auto& c : s.circles())
      for (int a : c.arcs) CHECK(s.circle_of_arc(a) == c.id);
  }
}

TEST_CASE("nesting analysis") {
  auto trefoil = seifert_circles(fixtures::diagram(fixtures::kTrefoil));
  CHECK(nesting_report(trefoil).nested.empty());
  CHECK(is_special(fixtures::diagram(fixtures::kTrefoil)));
  CHECK(is_special(Diagram{}));

  auto fig8d = fixtures::diagram(fixtures::kFigureEight);
  auto fig8 = seifert_circles(fig8d);
  auto nr = nesting_report(fig8);
  REQUIRE(nr.nested.size() == 1);
  CHECK(nr.extremal == nr.nested);
  const int middle = nr.nested.front();
  CHECK(nr.side_counts[static_cast<std::size_t>(middle)] == std::array<int, 2>{1, 1});
  CHECK_FALSE(is_special(fig8d));

  // Any 2-circle structure has nothing nested.
  CHECK(nesting_report(seifert_circles(fixtures::torus2(4))).nested.empty());
  CHECK(nesting_report(seifert_circles(fixtures::diagram(fixtures::kPositiveHopf))).nested.empty());
}

TEST_CASE("nestedness does not depend on the face chosen as root") {
  std::mt19937 rng(7);
  std::vector<Diagram> diagrams;
  for (const char* pd : {fixtures::kTrefoil, fixtures::kFigureEight, fixtures::kFiveTwo, fixtures::kGranny})
    diagrams.push_back(fixtures::diagram(pd));
  for (int i = 0; i < 12; ++i) diagrams.push_back(fixtures::braid_diagram(3 + i % 3, random_alternating_braid(rng, 3 + i % 3, 8)));
  for (const auto& d : diagrams) {
    auto s = seifert_circles(d);
    auto nr = nesting_report(s);
    std::set<int> expected(nr.nested.begin(), nr.nested.end());
    for (std::size_t root = 0; root < d.faces().size(); ++root)
      CHECK(nested_by_oracle(d, s, static_cast<int>(root)) == expected);
    for (const auto& c : s.circles()) {
      const auto counts = nr.side_counts[static_cast<std::size_t>(c.id)];
      CHECK(counts[0] + counts[1] + 1 == static_cast<int>(s.circle_count()));
    }
  }
}

TEST_CASE("parallel band groups") {
  auto trefoil = seifert_circles(fixtures::diagram(fixtures::kTrefoil));
  auto groups = parallel_band_groups(trefoil);
  REQUIRE(groups.size() == 1);
  CHECK(groups[0].crossings.size() == 3);

  auto fig8 = parallel_band_groups(seifert_circles(fixtures::diagram(fixtures::kFigureEight)));
  REQUIRE(fig8.size() == 2);
  CHECK(fig8[0].crossings.size() == 2);
  CHECK(fig8[1].crossings.size() == 2);

  auto granny = parallel_band_groups(seifert_circles(fixtures::diagram(fixtures::kGranny)));
  REQUIRE(granny.size() == 2);
  CHECK(granny[0].crossings.size() == 3);
  CHECK(granny[1].crossings.size() == 3);
}

TEST_CASE("parallel_sides") {
  auto fig8 = seifert_circles(fixtures::diagram(fixtures::kFigureEight));
  const int middle = nesting_report(fig8).nested.front();
  CHECK(parallel_sides(fig8, middle) == std::vector<Side>{Side::Left, Side::Right});

  auto t52 = seifert_circles(fixtures::diagram(fixtures::kCinquefoil));
  CHECK(error_of([&] { parallel_sides(t52, 0); }) == ErrorCode::NotNested);
  CHECK(error_of([&] { parallel_sides(t52, 1); }) == ErrorCode::NotNested);

  // Three concentric circles of the sigma_1^3 sigma_2^3 closure: whatever the
  // census says about the middle circle, parallel_sides must agree with it.
  auto chain = fixtures::braid_diagram(3, {1, 1, 1, 2, 2, 2});
  auto s = seifert_circles(chain);
  auto nr = nesting_report(s);
  for (const auto& c : s.circles()) {
    const bool nested = std::find(nr.nested.begin(), nr.nested.end(), c.id) != nr.nested.end();
    if (!nested) {
      CHECK(error_of([&] { parallel_sides(s, c.id); }) == ErrorCode::NotNested);
      continue;
    }
    std::set<Side> census;
    for (const auto& g : parallel_band_groups(s))
      if (g.parallel() && (g.circles[0] == c.id || g.circles[1] == c.id))
        census.insert(s.side_of(c.id, g.circles[0] == c.id ? g.circles[1] : g.circles[0]));
    auto sides = parallel_sides(s, c.id);
    CHECK(std::set<Side>(sides.begin(), sides.end()) == census);
  }
}

TEST_CASE("Murasugi desum of the figure-eight") {
  auto d = fixtures::diagram(fixtures::kFigureEight);
  auto s = seifert_circles(d);
  const int middle = nesting_report(s).nested.front();
  auto [left, right] = murasugi_desum(d, middle);
  CHECK(left.crossing_count() == 2);
  CHECK(right.crossing_count() == 2);
  CHECK(left.component_count() == 2);
  CHECK(right.component_count() == 2);
  CHECK(left.crossing(0).sign == left.crossing(1).sign);
  CHECK(right.crossing(0).sign == right.crossing(1).sign);
  CHECK(left.crossing(0).sign == -right.crossing(0).sign);
  CHECK(seifert_circles(left).circle_count() + seifert_circles(right).circle_count() == s.circle_count() + 1);

  std::multiset<int> tags = tags_of(left);
  tags.merge(tags_of(right));
  CHECK(tags == tags_of(d));

  CHECK(error_of([&] { murasugi_desum(fixtures::diagram(fixtures::kTrefoil), 0); }) == ErrorCode::NotNested);
}

TEST_CASE("desum conservation on random alternating braid closures") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int strands = 3 + trial % 3;
    auto d = fixtures::braid_diagram(strands, random_alternating_braid(rng, strands, 6 + trial % 7));
    auto s = seifert_circles(d);
    for (int c : nesting_report(s).nested) {
      auto [a, b] = murasugi_desum(d, c);
      CHECK(a.crossing_count() + b.crossing_count() == d.crossing_count());
      CHECK(seifert_circles(a).circle_count() + seifert_circles(b).circle_count() == s.circle_count() + 1);
      auto tags = tags_of(a);
      tags.merge(tags_of(b));
      CHECK(tags == tags_of(d));
      for (const auto* piece : {&a, &b}) {
        CHECK(is_alternating(*piece));
        for (const auto& x : piece->crossings()) CHECK(x.sign == d.crossing(x.tag).sign);
      }
    }
  }
}

TEST_CASE("murasugi_decompose") {
  auto trefoil = fixtures::diagram(fixtures::kTrefoil);
  auto pieces = murasugi_decompose(trefoil);
  REQUIRE(pieces.size() == 1);
  CHECK(pieces[0] == trefoil);

  auto fig8 = murasugi_decompose(fixtures::diagram(fixtures::kFigureEight));
  REQUIRE(fig8.size() == 2);
  for (const auto& p : fig8) {
    CHECK(p.crossing_count() == 2);
    CHECK(p.component_count() == 2);
    CHECK(is_special(p));
  }

  // Two nesting levels: four concentric circles.
  auto deep = fixtures::braid_diagram(4, {1, -2, 3, 1, -2, 3, -2});
  CHECK(nesting_report(seifert_circles(deep)).nested.size() == 2);
  auto deep_pieces = murasugi_decompose(deep);
  CHECK(deep_pieces.size() == 3);

  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int strands = 3 + trial % 4;
    auto d = fixtures::braid_diagram(strands, random_alternating_braid(rng, strands, 8 + trial % 5));
    auto out = murasugi_decompose(d);
    std::size_t crossings = 0;
    std::multiset<int> tags;
    for (const auto& p : out) {
      CHECK(is_special(p));
      CHECK(is_alternating(p));
      CHECK(p.crossing_count() > 0);
      crossings += p.crossing_count();
      tags.merge(tags_of(p));
    }
    CHECK(crossings == d.crossing_count());
    CHECK(tags == tags_of(d));
  }
}

TEST_CASE("deplumb_band") {
  auto trefoil = fixtures::diagram(fixtures::kTrefoil);
  for (int x = 0; x < 3; ++x) {
    auto r = deplumb_band(trefoil, x);
    CHECK(r.diagram.crossing_count() == 2);
    CHECK(r.diagram.component_count() == 2);
    CHECK(r.hopf_sign == +1);
    CHECK(seifert_circles(r.diagram).surface_euler() == seifert_circles(trefoil).surface_euler() + 1);
  }

  auto t52 = fixtures::diagram(fixtures::kCinquefoil);
  auto r = deplumb_band(t52, 2);
  CHECK(r.diagram.crossing_count() == 4);
  CHECK(seifert_circles(r.diagram).surface_euler() == -2);

  auto fig8 = fixtures::diagram(fixtures::kFigureEight);
  auto groups = parallel_band_groups(seifert_circles(fig8));
  auto once = deplumb_band(fig8, groups[0].crossings.front());
  // Find the crossing of the other group in the new diagram by tag.
  const int tag = groups[1].crossings.front();
  int target = -1;
  for (const auto& x : once.diagram.crossings())
    if (x.tag == tag) target = x.id;
  REQUIRE(target >= 0);
  auto twice = deplumb_band(once.diagram, target);
  auto s = seifert_circles(twice.diagram);
  CHECK(s.bands().size() == 2);
  CHECK(s.surface_euler() == 1);
  CHECK(once.hopf_sign == -twice.hopf_sign);

  auto single = fixtures::braid_diagram(3, {1, 1, -2});
  CHECK(error_of([&] { deplumb_band(single, 2); }) == ErrorCode::NotParallel);
}
