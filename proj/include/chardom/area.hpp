#pragma once

// Characteristic areas: the closed terminal walk around a Steiner tree plus a
// triangle decomposition of the region it bounds. Regions are closed; walks
// may be immersed (self-overlapping), in which case membership is defined by
// the triangles alone.

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "chardom/construct.hpp"
#include "chardom/geom.hpp"
#include "chardom/tree.hpp"

namespace chardom {

struct Triangle {
  Point a;
  Point b;
  Point c;
};

enum class AreaSource { FULL, UNION, LIMIT };

std::string_view to_string(AreaSource source);

struct CharArea {
  std::vector<Point> walk;
  /// Terminal index (in the generating tree) of each walk vertex.
  std::vector<std::size_t> walk_terminals;
  std::vector<Triangle> triangles;
  AreaSource source = AreaSource::FULL;
  /// True when the walk is a simple polygon and triangles come from ear clipping.
  bool embedded = false;
};

/// Union of characteristic areas; a point is inside when any part contains it.
struct Region {
  Region() = default;
  Region(CharArea area) { parts.push_back(std::move(area)); }  // NOLINT: implicit by intent
  explicit Region(std::vector<CharArea> areas) : parts(std::move(areas)) {}

  std::vector<CharArea> parts;
};

struct ContainmentReport {
  bool contained = true;
  std::optional<Point> witness;
};

/// Terminals met by an Euler tour of the doubled tree. At each vertex the tour
/// leaves by the edge following the arrival edge counterclockwise; it starts at
/// terminal 0. Leaves appear once, a terminal of degree d appears d times.
std::vector<std::size_t> terminal_walk(const SteinerTree& tree);

/// Simple closed polygon test under tolerance (distinct vertices, no touching
/// non-adjacent edges, no backtracking, non-zero area).
bool is_simple_walk(std::span<const Point> walk, const Tolerance& tol);

/// Ear-clipping triangulation of a simple polygon; triangles are CCW.
/// Throws ImmersedUnresolved when no ear can be found.
std::vector<Triangle> ear_clip(std::span<const Point> walk, const Tolerance& tol);

/// For each consecutive walk pair, fans the pocket between the chord and the
/// tree path joining the two terminals. Degenerate triangles are dropped.
std::vector<Triangle> tree_glued_triangles(const SteinerTree& tree, std::span<const std::size_t> walk_terminals,
                                           const Tolerance& tol);

CharArea char_area_full(const SteinerTree& tree, const Tolerance& tol);

/// One FULL area per full component, relabeled to parent terminal indices.
std::vector<CharArea> char_area_union(const SteinerTree& tree, const Tolerance& tol);

/// Area of the path's t = 1 configuration taken with the base topology.
/// Throws NotDegenerate when the t = 1 tree is still full.
CharArea char_area_limit(const DeformationPath& path, const Tolerance& tol);

bool triangle_contains(const Triangle& tri, Point p, const Tolerance& tol);

bool region_contains_point(const CharArea& area, Point p, const Tolerance& tol);
bool region_contains_point(const Region& region, Point p, const Tolerance& tol);

/// Probe-based containment of `inner` in `outer`. Probes: triangle vertices
/// and centroids, walk vertices and edge midpoints, and the cell centers of a
/// grid x grid lattice over inner's bounding box that fall inside inner.
ContainmentReport region_contains_region(const Region& outer, const CharArea& inner, const Tolerance& tol,
                                         std::size_t grid = 32);

}  // namespace chardom
