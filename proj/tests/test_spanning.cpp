#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "chardom/error.hpp"
#include "chardom/scenario.hpp"
#include "chardom/spanning.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace chardom;

namespace {

const Tolerance tol{};

CharArea polygon_area(std::vector<Point> walk) {
  CharArea area;
  area.walk = std::move(walk);
  area.walk_terminals.resize(area.walk.size());
  std::iota(area.walk_terminals.begin(), area.walk_terminals.end(), 0);
  area.triangles = ear_clip(area.walk, tol);
  area.embedded = true;
  return area;
}

// Inner test for simple polygons that avoids the triangulation entirely.
bool dense_inner(Point a, Point b, const std::vector<Point>& polygon) {
  for (int k = 0; k <= 400; ++k) {
    const Point p = lerp(a, b, k / 400.0);
    if (on_boundary(polygon, p, tol)) continue;
    if (winding_number(polygon, p, tol) == 0) return false;
  }
  return true;
}

// Minimum over every labeled tree whose edges all pass `inner`.
double pruefer_minimum(const std::vector<Point>& pts, const std::function<bool(std::size_t, std::size_t)>& inner) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& edges : oracle::all_labeled_trees(pts.size())) {
    double length = 0.0;
    bool ok = true;
    for (const auto& [i, j] : edges) {
      if (!inner(i, j)) {
        ok = false;
        break;
      }
      length += distance(pts[i], pts[j]);
    }
    if (ok) best = std::min(best, length);
  }
  return best;
}

}  // namespace

TEST_CASE("edge_is_inner") {
  const std::vector<Point> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  const Region region(polygon_area(square));
  CHECK(edge_is_inner({0, 0}, {1, 1}, region, tol));
  CHECK(edge_is_inner({0, 0}, {1, 0}, region, tol));
  CHECK_FALSE(edge_is_inner({0, 0}, {2, 0}, region, tol));

  SUBCASE("chord leaving a non-convex polygon between samples") {
    // notch of width 0.002 cut into the top edge, between two chord samples
    const std::vector<Point> notched{{0, 0}, {1, 0}, {1, 1}, {0.523, 1}, {0.523, 0.2}, {0.521, 0.2}, {0.521, 1}, {0, 1}};
    const Region r(polygon_area(notched));
    CHECK_FALSE(edge_is_inner({0.1, 0.5}, {0.9, 0.5}, r, tol));
    CHECK(dense_inner({0.1, 0.1}, {0.9, 0.1}, notched));
    CHECK(edge_is_inner({0.1, 0.1}, {0.9, 0.1}, r, tol));
  }
}

TEST_CASE("mist examples") {
  SUBCASE("square full tree: three sides") {
    const SteinerTree tree = build_full_tree({4, 2, {{0, 4}, {1, 4}, {2, 5}, {3, 5}, {4, 5}}},
                                             {{0, 0}, {0, 1}, {1, 0}, {1, 1}}, tol);
    const CharArea area = char_area_full(tree, tol);
    const MistResult m = mist(tree.terminals, area, tol);
    CHECK(m.feasible);
    CHECK(m.length == doctest::Approx(3.0));
    CHECK(m.inner_edge_count == 6);
    CHECK(m.edges == std::vector<TerminalPair>{{0, 1}, {0, 2}, {1, 3}});
    const double oracle_len = pruefer_minimum(tree.terminals, [&](std::size_t i, std::size_t j) {
      return dense_inner(tree.terminals[i], tree.terminals[j], area.walk);
    });
    CHECK(m.length == doctest::Approx(oracle_len).epsilon(1e-12));
  }
  SUBCASE("collinear chain") {
    const SteinerTree abc{{{0, 0}, {1, 0}, {2, 0}}, {}, {{0, 1}, {1, 2}}};
    const Region u(char_area_union(abc, tol));
    const MistResult m = mist(abc.terminals, u, tol);
    CHECK(m.feasible);
    CHECK(m.length == doctest::Approx(2.0));
    CHECK(m.edges == std::vector<TerminalPair>{{0, 1}, {1, 2}});
  }
  SUBCASE("two separated triangles cannot be spanned") {
    const Region r(std::vector<CharArea>{polygon_area({{0, 0}, {1, 0}, {0, 1}}), polygon_area({{5, 0}, {6, 0}, {5, 1}})});
    const std::vector<Point> pts{{0, 0}, {1, 0}, {0, 1}, {5, 0}, {6, 0}, {5, 1}};
    const MistResult m = mist(pts, r, tol);
    CHECK_FALSE(m.feasible);
    CHECK(m.edges.size() == 4);
    CHECK_FALSE(brute_force_mist(pts, r, tol).feasible);
  }
  SUBCASE("single terminal") {
    const MistResult m = mist({{3, 4}}, Region{}, tol);
    CHECK(m.feasible);
    CHECK(m.edges.empty());
    CHECK(m.length == 0.0);
  }
}

TEST_CASE("mst_unrestricted") {
  CHECK(mst_unrestricted({{0, 0}, {0, 1}, {1, 0}, {1, 1}}).length == doctest::Approx(3.0));
  CHECK(mst_unrestricted({{0, 0}, {2, 0}, {1, 0}}).length == doctest::Approx(2.0));
  const MistResult m = mst_unrestricted({{0, 0}, {3, 0}, {0, 4}});
  CHECK(m.length == doctest::Approx(7.0));
  CHECK(m.edges == std::vector<TerminalPair>{{0, 1}, {0, 2}});
  CHECK(m.feasible);
}

TEST_CASE("brute force refuses large inputs") {
  const std::vector<Point> pts(9, Point{0, 0});
  try {
    brute_force_mist(pts, Region{}, tol);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooLarge);
  }
}

TEST_CASE("Kruskal agrees with exhaustive search") {
  std::mt19937_64 rng(31337);
  int feasible = 0;
  for (int trial = 0; trial < 240; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 6);
    const SteinerTree tree = gen::random_full_tree(n, rng, tol);
    const Region region(char_area_full(tree, tol));
    const MistResult fast = mist(tree.terminals, region, tol);
    const MistResult slow = brute_force_mist(tree.terminals, region, tol);
    REQUIRE(fast.feasible == slow.feasible);
    feasible += fast.feasible;
    if (!fast.feasible) continue;
    CHECK(fast.length == doctest::Approx(slow.length).epsilon(1e-12));
    CHECK(fast.edges == slow.edges);
    if (n <= 5) {
      const double oracle_len = pruefer_minimum(tree.terminals, [&](std::size_t i, std::size_t j) {
        return edge_is_inner(tree.terminals[i], tree.terminals[j], region, tol);
      });
      CHECK(fast.length == doctest::Approx(oracle_len).epsilon(1e-12));
    }
  }
  CHECK(feasible == 240);  // the tree's own area always spans its terminals
}

TEST_CASE("mist properties on random full trees") {
  std::mt19937_64 rng(99);
  const double steiner_ratio = std::sqrt(3.0) / 2.0;
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 3 + static_cast<std::size_t>(trial % 6);
    const SteinerTree tree = gen::random_full_tree(n, rng, tol);
    const CharArea area = char_area_full(tree, tol);
    const MistResult restricted = mist(tree.terminals, area, tol);
    const MistResult free = mst_unrestricted(tree.terminals);
    REQUIRE(restricted.feasible);
    CHECK(restricted.length >= free.length - 1e-12);
    CHECK(total_length(tree) >= steiner_ratio * free.length - 1e-9);

    // growing the region can only shorten the tree
    const Point far_lo{-10, -10}, far_hi{10, 10};
    Region bigger(std::vector<CharArea>{area, polygon_area({far_lo, {far_hi.x, far_lo.y}, far_hi, {far_lo.x, far_hi.y}})});
    const MistResult relaxed = mist(tree.terminals, bigger, tol);
    CHECK(relaxed.length <= restricted.length + 1e-12);
    CHECK(relaxed.length == doctest::Approx(free.length).epsilon(1e-12));

    // relabeling terminals leaves the length alone
    std::vector<Point> shuffled = tree.terminals;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(mist(shuffled, area, tol).length == doctest::Approx(restricted.length).epsilon(1e-12));
  }
}

TEST_CASE("fig1 end tree loses the lowest spanning edge") {
  const ScenarioCase fig1 = scenario_fig1(tol);
  const SteinerTree end = fig1.path.tree_at(1.0, tol);
  const Region u(char_area_union(end, tol));
  const TerminalPair e = *fig1.excluded_edge;
  CHECK_FALSE(edge_is_inner(end.terminals[e.i], end.terminals[e.j], u, tol));
  const SteinerTree before = fig1.path.tree_at(1.0 - 1e-3, tol);
  const CharArea near = char_area_full(before, tol);
  CHECK(edge_is_inner(before.terminals[e.i], before.terminals[e.j], near, tol));
  const MistResult m = mist(before.terminals, near, tol);
  CHECK(std::find(m.edges.begin(), m.edges.end(), e) != m.edges.end());
}
