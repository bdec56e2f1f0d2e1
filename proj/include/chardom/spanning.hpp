#pragma once

#include <cstddef>
#include <vector>

#include "chardom/area.hpp"
#include "chardom/geom.hpp"

namespace chardom {

/// Spanning-tree edge between terminal indices, always stored with i < j.
struct TerminalPair {
  std::size_t i = 0;
  std::size_t j = 0;
  friend bool operator==(const TerminalPair&, const TerminalPair&) = default;
};

struct MistResult {
  bool feasible = false;
  /// Spanning tree edges, or the spanning forest when infeasible.
  std::vector<TerminalPair> edges;
  double length = 0.0;
  std::size_t inner_edge_count = 0;
};

struct InnerEdgeOptions {
  std::size_t samples = 17;
};

/// Segment [a, b] lies in the closed region: every sample point is a member,
/// and wherever the segment properly crosses a walk edge the points just
/// beyond the crossing on either side are members too.
bool edge_is_inner(Point a, Point b, const Region& region, const Tolerance& tol, const InnerEdgeOptions& options = {});

/// Kruskal over inner edges ordered by (length, i, j).
MistResult mist(const std::vector<Point>& terminals, const Region& region, const Tolerance& tol);

MistResult mst_unrestricted(const std::vector<Point>& terminals);

/// Exhaustive oracle for mist; at most 8 terminals (TooLarge otherwise).
/// Ties within 1e-12 relative length go to the edge list that is
/// lexicographically smallest under the (length, i, j) order.
MistResult brute_force_mist(const std::vector<Point>& terminals, const Region& region, const Tolerance& tol);

}  // namespace chardom
