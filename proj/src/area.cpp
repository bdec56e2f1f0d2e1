#include "chardom/area.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "chardom/error.hpp"

namespace chardom {

namespace {

double triangle_area(Point a, Point b, Point c) { return 0.5 * std::abs(cross(b - a, c - a)); }

Triangle ccw(Point a, Point b, Point c) {
  if (cross(b - a, c - a) < 0.0) return {a, c, b};
  return {a, b, c};
}

std::vector<Point> walk_positions(const SteinerTree& tree, std::span<const std::size_t> ids) {
  std::vector<Point> out;
  out.reserve(ids.size());
  for (std::size_t id : ids) out.push_back(tree.terminals[id]);
  return out;
}

/// Ear clipping when the walk is simple, tree gluing otherwise.
void decompose(CharArea& area, const SteinerTree& tree, const Tolerance& tol) {
  if (area.walk.size() < 3) return;
  if (is_simple_walk(area.walk, tol)) {
    area.triangles = ear_clip(area.walk, tol);
    area.embedded = true;
    return;
  }
  area.triangles = tree_glued_triangles(tree, area.walk_terminals, tol);
  area.embedded = false;
}

}  // namespace

std::string_view to_string(AreaSource source) {
  switch (source) {
    case AreaSource::FULL: return "FULL";
    case AreaSource::UNION: return "UNION";
    case AreaSource::LIMIT: return "LIMIT";
  }
  return "UNKNOWN";
}

std::vector<std::size_t> terminal_walk(const SteinerTree& tree) {
  const std::size_t n = tree.vertex_count();
  if (n == 0) return {};
  auto rotation = tree.adjacency();
  for (VertexId v = 0; v < n; ++v) {
    const Point pv = tree.position(v);
    std::stable_sort(rotation[v].begin(), rotation[v].end(), [&](VertexId a, VertexId b) {
      return polar_angle(tree.position(a) - pv) < polar_angle(tree.position(b) - pv);
    });
  }
  std::vector<std::size_t> walk{0};
  if (rotation[0].empty()) return walk;

  const std::size_t darts = 2 * tree.edges.size();
  VertexId from = 0;
  VertexId at = rotation[0].front();
  for (std::size_t step = 1; step <= darts; ++step) {
    if (step == darts) break;  // final arrival closes the tour at terminal 0
    if (tree.is_terminal(at)) walk.push_back(at);
    const auto& rot = rotation[at];
    const auto it = std::find(rot.begin(), rot.end(), from);
    const std::size_t idx = static_cast<std::size_t>(it - rot.begin());
    const VertexId next = rot[(idx + 1) % rot.size()];
    from = at;
    at = next;
  }
  return walk;
}

bool is_simple_walk(std::span<const Point> walk, const Tolerance& tol) {
  const std::size_t n = walk.size();
  if (n < 3) return false;
  if (std::abs(signed_area(walk)) <= tol.eps_len * bbox_diagonal(walk)) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (distance(walk[i], walk[j]) <= tol.eps_len) return false;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Segment si{walk[i], walk[(i + 1) % n]};
    // backtracking at the shared vertex
    const Point after = walk[(i + 2) % n];
    if (distance_to_segment(after, si.a, si.b) <= tol.eps_len ||
        distance_to_segment(si.a, si.b, after) <= tol.eps_len) {
      return false;
    }
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      const Segment sj{walk[j], walk[(j + 1) % n]};
      if (segments_intersect(si, sj, tol)) return false;
    }
  }
  return true;
}

std::vector<Triangle> ear_clip(std::span<const Point> walk, const Tolerance& tol) {
  std::vector<Point> poly(walk.begin(), walk.end());
  if (signed_area(poly) < 0.0) std::reverse(poly.begin(), poly.end());

  std::vector<std::size_t> idx(poly.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<Triangle> out;

  while (idx.size() > 3) {
    const std::size_t m = idx.size();
    bool clipped = false;
    for (std::size_t k = 0; k < m && !clipped; ++k) {
      const Point prev = poly[idx[(k + m - 1) % m]];
      const Point cur = poly[idx[k]];
      const Point next = poly[idx[(k + 1) % m]];
      const Orientation o = orientation(prev, cur, next, tol);
      if (o == Orientation::COLLINEAR) {
        // straight vertex of a simple polygon: drop it, no triangle
        idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(k));
        clipped = true;
        break;
      }
      if (o != Orientation::CCW) continue;
      const Triangle tri{prev, cur, next};
      bool blocked = false;
      for (std::size_t r = 0; r < m && !blocked; ++r) {
        if (r == k || r == (k + 1) % m || r == (k + m - 1) % m) continue;
        const Point q = poly[idx[r]];
        if (q == prev || q == cur || q == next) continue;
        blocked = triangle_contains(tri, q, tol);
      }
      if (blocked) continue;
      out.push_back(tri);
      idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(k));
      clipped = true;
    }
    if (!clipped) throw Error(ErrorKind::ImmersedUnresolved, "no ear found while clipping the walk");
  }
  if (idx.size() == 3) {
    const Point a = poly[idx[0]], b = poly[idx[1]], c = poly[idx[2]];
    if (triangle_area(a, b, c) > tol.eps_len * tol.eps_len) out.push_back(ccw(a, b, c));
  }
  return out;
}

std::vector<Triangle> tree_glued_triangles(const SteinerTree& tree, std::span<const std::size_t> walk_terminals,
                                           const Tolerance& tol) {
  std::vector<Triangle> out;
  const std::size_t n = walk_terminals.size();
  if (n < 2) return out;
  for (std::size_t i = 0; i < n; ++i) {
    const auto path = tree_path(tree, walk_terminals[i], walk_terminals[(i + 1) % n]);
    const Point apex = tree.position(path.front());
    for (std::size_t j = 1; j + 1 < path.size(); ++j) {
      const Point b = tree.position(path[j]);
      const Point c = tree.position(path[j + 1]);
      if (triangle_area(apex, b, c) > tol.eps_len * tol.eps_len) out.push_back(ccw(apex, b, c));
    }
  }
  return out;
}

CharArea char_area_full(const SteinerTree& tree, const Tolerance& tol) {
  if (!is_full(tree)) throw Error(ErrorKind::MalformedInput, "char_area_full needs a full tree");
  CharArea area;
  area.source = AreaSource::FULL;
  area.walk_terminals = terminal_walk(tree);
  area.walk = walk_positions(tree, area.walk_terminals);
  decompose(area, tree, tol);
  if (area.walk.size() >= 3 && area.triangles.empty()) {
    throw Error(ErrorKind::ImmersedUnresolved, "walk has no non-degenerate triangle decomposition");
  }

  if (tree.terminal_count() <= 5) {
    for (VertexId v = 0; v < tree.vertex_count(); ++v) {
      if (!region_contains_point(area, tree.position(v), tol)) {
        throw Error(ErrorKind::PostconditionFailed, "characteristic area misses tree vertex " + std::to_string(v));
      }
    }
    for (const Edge& e : tree.edges) {
      if (!region_contains_point(area, midpoint(tree.position(e.u), tree.position(e.v)), tol)) {
        throw Error(ErrorKind::PostconditionFailed, "characteristic area misses the midpoint of edge (" +
                                                        std::to_string(e.u) + ", " + std::to_string(e.v) + ")");
      }
    }
  }
  return area;
}

std::vector<CharArea> char_area_union(const SteinerTree& tree, const Tolerance& tol) {
  std::vector<CharArea> out;
  for (const FullComponent& comp : full_components(tree)) {
    CharArea area = char_area_full(comp.subtree, tol);
    area.source = AreaSource::UNION;
    for (std::size_t& id : area.walk_terminals) id = comp.parent_terminal_indices[id];
    out.push_back(std::move(area));
  }
  return out;
}

CharArea char_area_limit(const DeformationPath& path, const Tolerance& tol) {
  const SteinerTree raw = path.build_at(1.0, tol);
  const bool collapsed = std::any_of(raw.edges.begin(), raw.edges.end(), [&](const Edge& e) {
    return distance(raw.position(e.u), raw.position(e.v)) < tol.eps_len;
  });
  if (!collapsed) {
    throw Error(ErrorKind::NotDegenerate, "no edge of the t=1 tree has collapsed");
  }
  CharArea area;
  area.source = AreaSource::LIMIT;
  // the rotation system of the t=1 tree is undefined along the collapsed edge,
  // so the walk order comes from the undeformed tree
  area.walk_terminals = terminal_walk(path.base);
  area.walk = walk_positions(raw, area.walk_terminals);
  decompose(area, raw, tol);
  return area;
}

bool triangle_contains(const Triangle& tri, Point p, const Tolerance& tol) {
  const double d1 = cross(tri.b - tri.a, p - tri.a);
  const double d2 = cross(tri.c - tri.b, p - tri.b);
  const double d3 = cross(tri.a - tri.c, p - tri.c);
  const bool has_neg = d1 < 0.0 || d2 < 0.0 || d3 < 0.0;
  const bool has_pos = d1 > 0.0 || d2 > 0.0 || d3 > 0.0;
  if (!(has_neg && has_pos)) return true;
  return distance_to_segment(p, tri.a, tri.b) <= tol.eps_len || distance_to_segment(p, tri.b, tri.c) <= tol.eps_len ||
         distance_to_segment(p, tri.c, tri.a) <= tol.eps_len;
}

bool region_contains_point(const CharArea& area, Point p, const Tolerance& tol) {
  for (const Triangle& tri : area.triangles) {
    if (triangle_contains(tri, p, tol)) return true;
  }
  if (area.walk.size() == 1) return distance(area.walk.front(), p) <= tol.eps_len;
  return !area.walk.empty() && on_boundary(area.walk, p, tol);
}

bool region_contains_point(const Region& region, Point p, const Tolerance& tol) {
  return std::any_of(region.parts.begin(), region.parts.end(),
                     [&](const CharArea& area) { return region_contains_point(area, p, tol); });
}

ContainmentReport region_contains_region(const Region& outer, const CharArea& inner, const Tolerance& tol,
                                         std::size_t grid) {
  ContainmentReport report;
  auto probe = [&](Point p) {
    if (!report.contained) return;
    if (!region_contains_point(outer, p, tol)) {
      report.contained = false;
      report.witness = p;
    }
  };

  for (const Triangle& tri : inner.triangles) {
    probe(tri.a);
    probe(tri.b);
    probe(tri.c);
  }
  for (const Triangle& tri : inner.triangles) probe((1.0 / 3.0) * (tri.a + tri.b + tri.c));
  const std::size_t n = inner.walk.size();
  for (std::size_t i = 0; i < n; ++i) probe(inner.walk[i]);
  for (std::size_t i = 0; i < n; ++i) probe(midpoint(inner.walk[i], inner.walk[(i + 1) % n]));

  if (n == 0 || grid == 0) return report;
  double lo_x = inner.walk[0].x, hi_x = lo_x, lo_y = inner.walk[0].y, hi_y = lo_y;
  for (const Point& p : inner.walk) {
    lo_x = std::min(lo_x, p.x);
    hi_x = std::max(hi_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_y = std::max(hi_y, p.y);
  }
  const double g = static_cast<double>(grid);
  for (std::size_t i = 0; i < grid && report.contained; ++i) {
    for (std::size_t j = 0; j < grid && report.contained; ++j) {
      const Point p{lo_x + (static_cast<double>(i) + 0.5) / g * (hi_x - lo_x),
                    lo_y + (static_cast<double>(j) + 0.5) / g * (hi_y - lo_y)};
      if (region_contains_point(inner, p, tol)) probe(p);
    }
  }
  return report;
}

}  // namespace chardom
