#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "chardom/area.hpp"
#include "chardom/error.hpp"
#include "chardom/scenario.hpp"
#include "chardom/spanning.hpp"
#include "generators.hpp"

using namespace chardom;

namespace {

const Tolerance tol{};
const double sqrt3 = std::sqrt(3.0);
const std::vector<Point> equilateral{{0, 0}, {1, 0}, {0.5, sqrt3 / 2}};
const Topology star3{3, 1, {{0, 3}, {1, 3}, {2, 3}}};

SteinerTree fermat_tree() { return build_full_tree(star3, equilateral, tol); }

SteinerTree square_tree() {
  return build_full_tree({4, 2, {{0, 4}, {1, 4}, {2, 5}, {3, 5}, {4, 5}}}, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}, tol);
}

CharArea triangle_area(Point a, Point b, Point c) {
  CharArea area;
  area.walk = {a, b, c};
  area.walk_terminals = {0, 1, 2};
  area.triangles = ear_clip(area.walk, tol);
  area.embedded = true;
  return area;
}

bool is_rotation(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t shift = 0; shift < a.size(); ++shift) {
    bool same = true;
    for (std::size_t i = 0; i < a.size() && same; ++i) same = a[i] == b[(i + shift) % b.size()];
    if (same) return true;
  }
  return false;
}

std::vector<Point> bbox_probes(const std::vector<Point>& walk, std::size_t count, std::mt19937_64& rng) {
  double lo_x = walk[0].x, hi_x = lo_x, lo_y = walk[0].y, hi_y = lo_y;
  for (const Point& p : walk) {
    lo_x = std::min(lo_x, p.x), hi_x = std::max(hi_x, p.x), lo_y = std::min(lo_y, p.y), hi_y = std::max(hi_y, p.y);
  }
  std::uniform_real_distribution<double> ux(lo_x - 0.1, hi_x + 0.1), uy(lo_y - 0.1, hi_y + 0.1);
  std::vector<Point> out(count);
  for (Point& p : out) p = {ux(rng), uy(rng)};
  return out;
}

}  // namespace

TEST_CASE("terminal_walk") {
  SUBCASE("Fermat tree visits the terminals counterclockwise") {
    const auto walk = terminal_walk(fermat_tree());
    CHECK(walk == std::vector<std::size_t>{0, 1, 2});
    CHECK(signed_area(equilateral) > 0);
  }
  SUBCASE("clockwise labels come back in counterclockwise order") {
    const SteinerTree cw = build_full_tree(star3, {{0, 0}, {0.5, sqrt3 / 2}, {1, 0}}, tol);
    CHECK(terminal_walk(cw) == std::vector<std::size_t>{0, 2, 1});
  }
  SUBCASE("segment") {
    CHECK(terminal_walk({{{0, 0}, {1, 0}}, {}, {{0, 1}}}) == std::vector<std::size_t>{0, 1});
  }
  SUBCASE("square tree walks the square boundary") {
    const SteinerTree tree = square_tree();
    const auto ids = terminal_walk(tree);
    REQUIRE(ids.size() == 4);
    std::vector<Point> poly;
    for (std::size_t i : ids) poly.push_back(tree.terminals[i]);
    CHECK(is_simple_walk(poly, tol));
    CHECK(std::abs(signed_area(poly)) == doctest::Approx(1.0));
  }
  SUBCASE("degree-2 terminal appears at every visit") {
    const SteinerTree abc{{{0, 0}, {1, 0}, {2, 0}}, {}, {{0, 1}, {1, 2}}};
    CHECK(terminal_walk(abc) == std::vector<std::size_t>{0, 1, 2, 1});
  }
}

TEST_CASE("char_area_full") {
  SUBCASE("Fermat tree: the terminal triangle") {
    const SteinerTree tree = fermat_tree();
    const CharArea area = char_area_full(tree, tol);
    CHECK(area.source == AreaSource::FULL);
    CHECK(area.embedded);
    REQUIRE(area.triangles.size() == 1);
    CHECK(region_contains_point(area, tree.steiner_points[0], tol));
  }
  SUBCASE("square tree: Steiner points have winding number 1") {
    const SteinerTree tree = square_tree();
    const CharArea area = char_area_full(tree, tol);
    CHECK(area.triangles.size() == 2);
    for (const Point& s : tree.steiner_points) {
      CHECK(std::abs(winding_number(area.walk, s, tol)) == 1);
      CHECK(region_contains_point(area, s, tol));
    }
  }
  SUBCASE("fig1 at t=0: embedded pentagon containing the tree") {
    const ScenarioCase fig1 = scenario_fig1(tol);
    const CharArea area = char_area_full(fig1.tree, tol);
    CHECK(area.walk.size() == 5);
    CHECK(area.embedded);
    for (VertexId v = 0; v < fig1.tree.vertex_count(); ++v) {
      CHECK(region_contains_point(area, fig1.tree.position(v), tol));
    }
    for (const Edge& e : fig1.tree.edges) {
      CHECK(region_contains_point(area, midpoint(fig1.tree.position(e.u), fig1.tree.position(e.v)), tol));
    }
  }
  SUBCASE("non-full input is rejected") {
    const SteinerTree abc{{{0, 0}, {1, 0}, {2, 0}}, {}, {{0, 1}, {1, 2}}};
    CHECK_THROWS_AS(char_area_full(abc, tol), Error);
  }
}

TEST_CASE("char_area_union") {
  SUBCASE("full tree gives a single area") {
    const SteinerTree tree = fermat_tree();
    const auto areas = char_area_union(tree, tol);
    REQUIRE(areas.size() == 1);
    CHECK(areas[0].source == AreaSource::UNION);
    CHECK(areas[0].walk == char_area_full(tree, tol).walk);
  }
  SUBCASE("path of terminals gives two segment areas") {
    const SteinerTree abc{{{0, 0}, {1, 0}, {2, 0}}, {}, {{0, 1}, {1, 2}}};
    const auto areas = char_area_union(abc, tol);
    REQUIRE(areas.size() == 2);
    for (const CharArea& a : areas) {
      CHECK(a.walk.size() == 2);
      CHECK(a.triangles.empty());
    }
    CHECK(areas[1].walk_terminals == std::vector<std::size_t>{1, 2});
    const Region u(areas);
    CHECK(region_contains_point(u, {1.5, 0}, tol));
    CHECK_FALSE(region_contains_point(u, {1.5, 1e-6}, tol));
  }
  SUBCASE("fig1 at t=1 loses the lowest spanning edge") {
    const ScenarioCase fig1 = scenario_fig1(tol);
    const SteinerTree end = fig1.path.tree_at(1.0, tol);
    const Region u(char_area_union(end, tol));
    REQUIRE(u.parts.size() == 2);
    const TerminalPair e = *fig1.excluded_edge;
    CHECK_FALSE(edge_is_inner(end.terminals[e.i], end.terminals[e.j], u, tol));
  }
}

TEST_CASE("char_area_limit") {
  SUBCASE("two-terminal shrink collapses to a point") {
    const DeformationPath path = slide_terminal_path({{{0, 0}, {1, 0}}, {}, {{0, 1}}}, 1);
    const CharArea area = char_area_limit(path, tol);
    CHECK(area.source == AreaSource::LIMIT);
    CHECK(area.triangles.empty());
    REQUIRE(area.walk.size() == 2);
    CHECK(area.walk[0] == area.walk[1]);
    CHECK(region_contains_point(area, {0, 0}, tol));
    CHECK_FALSE(region_contains_point(area, {0.5, 0}, tol));
  }
  SUBCASE("equilateral collapse matches the nearby full area") {
    const DeformationPath path = slide_terminal_path(fermat_tree(), 2);
    const CharArea limit = char_area_limit(path, tol);
    CHECK(limit.walk_terminals == std::vector<std::size_t>{0, 1, 2});
    CHECK(limit.walk[2] == path.target);
    const CharArea near = char_area_full(path.tree_at(1.0 - 1e-6, tol), tol);
    std::mt19937_64 rng(1);
    int disagreements = 0;
    for (const Point& p : bbox_probes(near.walk, 1000, rng)) {
      // skip probes within the 1e-6 sliver the two areas may differ on
      if (on_boundary(near.walk, p, {1e-5, 1e-6})) continue;
      disagreements += region_contains_point(limit, p, tol) != region_contains_point(near, p, tol);
    }
    CHECK(disagreements == 0);
  }
  SUBCASE("fig2: limit area is strictly inside the larger component's area") {
    const ScenarioCase fig2 = scenario_fig2(tol);
    const CharArea limit = char_area_limit(fig2.path, tol);
    const auto comps = char_area_union(fig2.path.tree_at(1.0, tol), tol);
    REQUIRE(comps.size() == 2);
    const CharArea& larger = comps[0].walk.size() > comps[1].walk.size() ? comps[0] : comps[1];
    CHECK(region_contains_region(Region(larger), limit, tol).contained);
    CHECK_FALSE(region_contains_region(Region(limit), larger, tol).contained);
  }
  SUBCASE("path that does not degenerate") {
    DeformationPath path = slide_terminal_path(fermat_tree(), 2);
    path.target = midpoint(path.start, path.target);
    try {
      char_area_limit(path, tol);
      FAIL("expected NotDegenerate");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotDegenerate);
    }
  }
}

TEST_CASE("region_contains_point") {
  const CharArea tri = triangle_area({0, 0}, {1, 0}, {0, 1});
  CHECK(region_contains_point(tri, {1.0 / 3, 1.0 / 3}, tol));
  CHECK_FALSE(region_contains_point(tri, {1.5, 1.5}, tol));  // distance ~1.4 beyond the hypotenuse
  CHECK_FALSE(region_contains_point(tri, {0.5, -1.0}, tol));
  CHECK(region_contains_point(tri, {1, 0}, tol));
  CHECK(region_contains_point(tri, {0.5, 0.5}, tol));
}

TEST_CASE("region_contains_region") {
  const CharArea tri = triangle_area({0, 0}, {1, 0}, {0, 1});
  const CharArea medial = triangle_area({0.5, 0}, {0.5, 0.5}, {0, 0.5});
  CHECK(region_contains_region(Region(tri), tri, tol).contained);
  CHECK(region_contains_region(Region(tri), medial, tol).contained);
  const ContainmentReport r = region_contains_region(Region(medial), tri, tol);
  CHECK_FALSE(r.contained);
  REQUIRE(r.witness.has_value());
  CHECK(region_contains_point(tri, *r.witness, tol));
  CHECK_FALSE(region_contains_point(medial, *r.witness, tol));

  SUBCASE("transitive on nested triangles") {
    const CharArea inner = triangle_area({0.3, 0.3}, {0.4, 0.3}, {0.3, 0.4});
    CHECK(region_contains_region(Region(medial), inner, tol).contained);
    CHECK(region_contains_region(Region(tri), inner, tol).contained);
  }
  SUBCASE("fig2: the larger component escapes the limit area") {
    const ScenarioCase fig2 = scenario_fig2(tol);
    const CharArea limit = char_area_limit(fig2.path, tol);
    const auto comps = char_area_union(fig2.path.tree_at(1.0, tol), tol);
    const std::size_t larger = comps[0].walk.size() > comps[1].walk.size() ? 0 : 1;
    const ContainmentReport c = region_contains_region(Region(limit), comps[larger], tol);
    CHECK_FALSE(c.contained);
    REQUIRE(c.witness);
    CHECK(region_contains_point(comps[larger], *c.witness, tol));
    CHECK_FALSE(region_contains_point(limit, *c.witness, tol));
  }
}

TEST_CASE("triangle membership agrees with the winding number on embedded areas") {
  std::mt19937_64 rng(2024);
  int embedded = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const SteinerTree tree = gen::random_full_tree(3 + static_cast<std::size_t>(trial % 6), rng, tol);
    const CharArea area = char_area_full(tree, tol);
    if (!area.embedded) continue;
    ++embedded;
    for (const Point& p : bbox_probes(area.walk, 1000, rng)) {
      if (on_boundary(area.walk, p, {1e-7, 1e-6})) continue;
      CHECK(region_contains_point(area, p, tol) == (winding_number(area.walk, p, tol) != 0));
    }
  }
  CHECK(embedded > 20);
}

TEST_CASE("full-tree walks visit every terminal once") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 7);
    const SteinerTree tree = gen::random_full_tree(n, rng, tol);
    auto walk = terminal_walk(tree);
    CHECK(walk.size() == n);
    std::sort(walk.begin(), walk.end());
    CHECK(std::adjacent_find(walk.begin(), walk.end()) == walk.end());
  }
}

TEST_CASE("small full trees lie inside their area") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const SteinerTree tree = gen::random_full_tree(3 + static_cast<std::size_t>(trial % 3), rng, tol);
    const CharArea area = char_area_full(tree, tol);  // throws PostconditionFailed otherwise
    for (VertexId v = 0; v < tree.vertex_count(); ++v) CHECK(region_contains_point(area, tree.position(v), tol));
  }
}

TEST_CASE("relabeling terminals rotates the walk") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 3 + static_cast<std::size_t>(trial % 5);
    const SteinerTree tree = gen::random_full_tree(n, rng, tol);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);  // old label i -> new label perm[i]
    SteinerTree relabeled = tree;
    for (std::size_t i = 0; i < n; ++i) relabeled.terminals[perm[i]] = tree.terminals[i];
    for (Edge& e : relabeled.edges) {
      if (e.u < n) e.u = perm[e.u];
      if (e.v < n) e.v = perm[e.v];
    }
    std::vector<std::size_t> inverse(n);
    for (std::size_t i = 0; i < n; ++i) inverse[perm[i]] = i;
    auto walk = terminal_walk(relabeled);
    for (std::size_t& id : walk) id = inverse[id];
    CHECK(is_rotation(walk, terminal_walk(tree)));

    const CharArea a = char_area_full(tree, tol);
    const CharArea b = char_area_full(relabeled, tol);
    for (const Point& p : bbox_probes(a.walk, 200, rng)) {
      if (on_boundary(a.walk, p, {1e-7, 1e-6})) continue;
      CHECK(region_contains_point(a, p, tol) == region_contains_point(b, p, tol));
    }
  }
}

TEST_CASE("walks converge to the limit walk as t approaches 1") {
  for (const ScenarioCase& sc : {scenario_fig1(tol), scenario_fig2(tol)}) {
    const CharArea limit = char_area_limit(sc.path, tol);
    double previous = 1.0;
    for (double gap : {1e-3, 1e-4, 1e-5}) {
      const CharArea near = char_area_full(sc.path.tree_at(1.0 - gap, tol), tol);
      REQUIRE(near.walk_terminals == limit.walk_terminals);
      double worst = 0.0;
      for (std::size_t i = 0; i < near.walk.size(); ++i) worst = std::max(worst, distance(near.walk[i], limit.walk[i]));
      CHECK(worst < previous);
      CHECK(worst <= gap * distance(sc.path.start, sc.path.target) + 1e-12);
      previous = worst;
    }
  }
}
