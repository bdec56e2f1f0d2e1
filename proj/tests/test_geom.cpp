#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "chardom/error.hpp"
#include "chardom/geom.hpp"

using namespace chardom;

namespace {

const Tolerance tol{};
const std::vector<Point> unit_square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};

}  // namespace

TEST_CASE("orientation of right-handed, collinear and mirrored triples") {
  CHECK(orientation({0, 0}, {1, 0}, {0, 1}, tol) == Orientation::CCW);
  CHECK(orientation({0, 0}, {1, 0}, {2, 0}, tol) == Orientation::COLLINEAR);
  CHECK(orientation({0, 0}, {0, 1}, {1, 0}, tol) == Orientation::CW);
  // within eps of the line
  CHECK(orientation({0, 0}, {1, 0}, {2, 1e-12}, tol) == Orientation::COLLINEAR);
}

TEST_CASE("orientation is antisymmetric in q and r") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> c(-10, 10);
  for (int i = 0; i < 500; ++i) {
    const Point p{c(rng), c(rng)}, q{c(rng), c(rng)}, r{c(rng), c(rng)};
    const Orientation a = orientation(p, q, r, tol);
    const Orientation b = orientation(p, r, q, tol);
    if (a == Orientation::COLLINEAR) {
      CHECK(b == Orientation::COLLINEAR);
    } else {
      CHECK(a != b);
      CHECK(b != Orientation::COLLINEAR);
    }
  }
}

TEST_CASE("proper crossings") {
  CHECK(segments_properly_cross({{0, 0}, {1, 1}}, {{0, 1}, {1, 0}}, tol));
  CHECK_FALSE(segments_properly_cross({{0, 0}, {1, 0}}, {{1, 0}, {2, 0}}, tol));
  CHECK_FALSE(segments_properly_cross({{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}, tol));
  // T-junction is not a proper crossing but does intersect
  CHECK_FALSE(segments_properly_cross({{0, 0}, {2, 0}}, {{1, 0}, {1, 1}}, tol));
  CHECK(segments_intersect({{0, 0}, {2, 0}}, {{1, 0}, {1, 1}}, tol));
  CHECK_FALSE(segments_intersect({{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}, tol));
}

TEST_CASE("proper crossing is symmetric") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> c(-1, 1);
  for (int i = 0; i < 500; ++i) {
    const Segment s1{{c(rng), c(rng)}, {c(rng), c(rng)}};
    const Segment s2{{c(rng), c(rng)}, {c(rng), c(rng)}};
    CHECK(segments_properly_cross(s1, s2, tol) == segments_properly_cross(s2, s1, tol));
  }
}

TEST_CASE("winding number") {
  CHECK(winding_number(unit_square, {0.5, 0.5}, tol) == 1);
  CHECK(winding_number(unit_square, {2, 2}, tol) == 0);
  std::vector<Point> twice = unit_square;
  twice.insert(twice.end(), unit_square.begin(), unit_square.end());
  CHECK(winding_number(twice, {0.5, 0.5}, tol) == 2);
  std::vector<Point> cw(unit_square.rbegin(), unit_square.rend());
  CHECK(winding_number(cw, {0.5, 0.5}, tol) == -1);

  SUBCASE("boundary points are rejected") {
    CHECK(on_boundary(unit_square, {0.5, 0.0}, tol));
    CHECK_THROWS_AS(winding_number(unit_square, {0.5, 0.0}, tol), Error);
    try {
      winding_number(unit_square, {1.0, 1.0}, tol);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::BoundaryPoint);
    }
  }
}

TEST_CASE("winding number vanishes far from the walk") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> c(-1, 1);
  std::uniform_real_distribution<double> ang(0, 2 * std::numbers::pi);
  for (int i = 0; i < 200; ++i) {
    std::vector<Point> walk;
    for (int k = 0; k < 6; ++k) walk.push_back({c(rng), c(rng)});
    const double diam = bbox_diagonal(walk);
    const double a = ang(rng);
    const Point far = walk[0] + Point{(diam + 1.0) * std::cos(a), (diam + 1.0) * std::sin(a)};
    CHECK(winding_number(walk, far, tol) == 0);
  }
}

TEST_CASE("angle_at") {
  const double pi = std::numbers::pi;
  CHECK(angle_at({0, 0}, {1, 0}, {0, 1}) == doctest::Approx(pi / 2).epsilon(1e-15));
  CHECK(angle_at({0, 0}, {1, 0}, {-1, 0}) == doctest::Approx(pi).epsilon(1e-15));
  const Point r120{std::cos(2 * pi / 3), std::sin(2 * pi / 3)};
  CHECK(angle_at({0, 0}, {1, 0}, r120) == doctest::Approx(2 * pi / 3).epsilon(1e-15));
  CHECK_THROWS_AS(angle_at({0, 0}, {0, 0}, {1, 0}), Error);
}

TEST_CASE("angle_at is symmetric and three rays around a point sum to a full turn") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ang(0, 2 * std::numbers::pi);
  std::uniform_real_distribution<double> len(0.1, 3);
  for (int i = 0; i < 300; ++i) {
    std::vector<double> a{ang(rng), ang(rng), ang(rng)};
    std::sort(a.begin(), a.end());
    // keep every gap below pi so each unsigned angle is the gap itself
    if (a[1] - a[0] >= std::numbers::pi || a[2] - a[1] >= std::numbers::pi ||
        a[0] + 2 * std::numbers::pi - a[2] >= std::numbers::pi) {
      continue;
    }
    const Point v{0.3, -0.2};
    std::vector<Point> ray;
    for (double t : a) {
      const double r = len(rng);
      ray.push_back(v + Point{r * std::cos(t), r * std::sin(t)});
    }
    CHECK(angle_at(v, ray[0], ray[1]) == angle_at(v, ray[1], ray[0]));
    const double sum = angle_at(v, ray[0], ray[1]) + angle_at(v, ray[1], ray[2]) + angle_at(v, ray[2], ray[0]);
    CHECK(std::abs(sum - 2 * std::numbers::pi) <= tol.eps_ang);
  }
}

TEST_CASE("degenerate segments are rejected at construction") {
  CHECK_THROWS_AS(make_segment({1, 1}, {1, 1 + 1e-12}, tol), Error);
  CHECK_NOTHROW(make_segment({1, 1}, {1, 2}, tol));
}
