#pragma once

// Planar primitives and tolerance-aware predicates shared by every module.

#include <cmath>
#include <span>
#include <vector>

namespace chardom {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
  friend Point operator*(Point p, double s) { return {s * p.x, s * p.y}; }
  friend bool operator==(const Point&, const Point&) = default;
};

struct Segment {
  Point a;
  Point b;
};

struct Tolerance {
  double eps_len = 1e-9;
  double eps_ang = 1e-6;
};

/// Default tolerance, honoring the CHARDOM_EPS environment override for eps_len.
Tolerance default_tolerance();

enum class Orientation { CCW, CW, COLLINEAR };

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(b - a); }
inline Point lerp(Point a, Point b, double t) { return (1.0 - t) * a + t * b; }
inline Point midpoint(Point a, Point b) { return lerp(a, b, 0.5); }

bool is_finite(Point p);

/// Checked construction: rejects a == b under eps_len (MalformedInput).
Segment make_segment(Point a, Point b, const Tolerance& tol);

/// Diagonal of the axis-aligned bounding box of the points.
double bbox_diagonal(std::span<const Point> pts);

/// Sign of (q-p) x (r-p). COLLINEAR when |cross| <= eps_len times the
/// bounding-box diagonal of the three points, i.e. r lies within roughly
/// eps_len of the line through p and q.
Orientation orientation(Point p, Point q, Point r, const Tolerance& tol);

/// Transversal crossing of the open interiors. Shared endpoints, T-junctions
/// and collinear overlap all return false.
bool segments_properly_cross(const Segment& s1, const Segment& s2, const Tolerance& tol);

/// Closed-segment intersection test (touching and overlap count).
bool segments_intersect(const Segment& s1, const Segment& s2, const Tolerance& tol);

double distance_to_segment(Point p, Point a, Point b);

/// True when p is within eps_len of some edge of the closed walk.
bool on_boundary(std::span<const Point> walk, Point p, const Tolerance& tol);

/// Winding number of the closed polyline around p. Throws BoundaryPoint when
/// p is within eps_len of the walk.
int winding_number(std::span<const Point> walk, Point p, const Tolerance& tol);

/// Unsigned angle a-v-b in [0, pi]. Throws DegenerateRay when a or b
/// coincides with v.
double angle_at(Point v, Point a, Point b, const Tolerance& tol = {});

/// Signed area (positive for counterclockwise) of a closed walk.
double signed_area(std::span<const Point> walk);

/// Direction angle of v in [0, 2pi).
double polar_angle(Point v);

}  // namespace chardom
