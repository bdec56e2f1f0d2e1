#include "chardom/geom.hpp"

#include <algorithm>
#include <cstdlib>
#include <numbers>
#include <string>

#include "chardom/error.hpp"

namespace chardom {

Tolerance default_tolerance() {
  Tolerance tol;
  if (const char* env = std::getenv("CHARDOM_EPS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0) || !std::isfinite(v)) {
      throw Error(ErrorKind::MalformedInput, std::string("CHARDOM_EPS is not a positive number: ") + env);
    }
    tol.eps_len = v;
  }
  return tol;
}

bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

Segment make_segment(Point a, Point b, const Tolerance& tol) {
  if (distance(a, b) <= tol.eps_len) {
    throw Error(ErrorKind::MalformedInput, "degenerate segment");
  }
  return {a, b};
}

double bbox_diagonal(std::span<const Point> pts) {
  if (pts.empty()) return 0.0;
  double lo_x = pts[0].x, hi_x = pts[0].x, lo_y = pts[0].y, hi_y = pts[0].y;
  for (const Point& p : pts) {
    lo_x = std::min(lo_x, p.x);
    hi_x = std::max(hi_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_y = std::max(hi_y, p.y);
  }
  return std::hypot(hi_x - lo_x, hi_y - lo_y);
}

Orientation orientation(Point p, Point q, Point r, const Tolerance& tol) {
  const double c = cross(q - p, r - p);
  const Point pts[] = {p, q, r};
  const double scale = bbox_diagonal(pts);
  if (std::abs(c) <= tol.eps_len * scale) return Orientation::COLLINEAR;
  return c > 0.0 ? Orientation::CCW : Orientation::CW;
}

bool segments_properly_cross(const Segment& s1, const Segment& s2, const Tolerance& tol) {
  const Orientation o1 = orientation(s1.a, s1.b, s2.a, tol);
  const Orientation o2 = orientation(s1.a, s1.b, s2.b, tol);
  const Orientation o3 = orientation(s2.a, s2.b, s1.a, tol);
  const Orientation o4 = orientation(s2.a, s2.b, s1.b, tol);
  if (o1 == Orientation::COLLINEAR || o2 == Orientation::COLLINEAR ||
      o3 == Orientation::COLLINEAR || o4 == Orientation::COLLINEAR) {
    return false;
  }
  return o1 != o2 && o3 != o4;
}

bool segments_intersect(const Segment& s1, const Segment& s2, const Tolerance& tol) {
  if (segments_properly_cross(s1, s2, tol)) return true;
  return distance_to_segment(s1.a, s2.a, s2.b) <= tol.eps_len ||
         distance_to_segment(s1.b, s2.a, s2.b) <= tol.eps_len ||
         distance_to_segment(s2.a, s1.a, s1.b) <= tol.eps_len ||
         distance_to_segment(s2.b, s1.a, s1.b) <= tol.eps_len;
}

double distance_to_segment(Point p, Point a, Point b) {
  const Point ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return distance(p, a);
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return distance(p, a + t * ab);
}

bool on_boundary(std::span<const Point> walk, Point p, const Tolerance& tol) {
  const std::size_t n = walk.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (distance_to_segment(p, walk[i], walk[(i + 1) % n]) <= tol.eps_len) return true;
  }
  return false;
}

int winding_number(std::span<const Point> walk, Point p, const Tolerance& tol) {
  if (on_boundary(walk, p, tol)) {
    throw Error(ErrorKind::BoundaryPoint, "point lies on the walk");
  }
  int wn = 0;
  const std::size_t n = walk.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = walk[i];
    const Point b = walk[(i + 1) % n];
    const double side = cross(b - a, p - a);
    if (a.y <= p.y) {
      if (b.y > p.y && side > 0.0) ++wn;
    } else if (b.y <= p.y && side < 0.0) {
      --wn;
    }
  }
  return wn;
}

double angle_at(Point v, Point a, Point b, const Tolerance& tol) {
  const Point da = a - v;
  const Point db = b - v;
  if (norm(da) <= tol.eps_len || norm(db) <= tol.eps_len) {
    throw Error(ErrorKind::DegenerateRay, "ray endpoint coincides with the apex");
  }
  return std::atan2(std::abs(cross(da, db)), dot(da, db));
}

double signed_area(std::span<const Point> walk) {
  double twice = 0.0;
  const std::size_t n = walk.size();
  for (std::size_t i = 0; i < n; ++i) twice += cross(walk[i], walk[(i + 1) % n]);
  return 0.5 * twice;
}

double polar_angle(Point v) {
  double a = std::atan2(v.y, v.x);
  if (a < 0.0) a += 2.0 * std::numbers::pi;
  return a;
}

}  // namespace chardom
