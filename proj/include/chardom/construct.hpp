#pragma once

#include <cstddef>
#include <vector>

#include "chardom/geom.hpp"
#include "chardom/tree.hpp"

namespace chardom {

/// Combinatorial type of a full Steiner tree: terminals 0..n_terminals-1 are
/// leaves, the following n_steiner vertices have degree 3.
struct Topology {
  std::size_t n_terminals = 0;
  std::size_t n_steiner = 0;
  std::vector<Edge> edges;
};

/// Throws MalformedInput unless the topology is a tree with leaf terminals
/// and degree-3 Steiner vertices.
void check_topology(const Topology& topology);

Topology topology_of(const SteinerTree& tree);

struct BuildOptions {
  /// Return trees with collapsed edges instead of throwing DegenerateTopology.
  bool allow_degenerate = false;
  std::size_t max_sweeps = 100000;
};

/// Fermat (first isogonic) point of a triangle. When some angle is at least
/// 120 degrees minus `snap_angle`, or two points coincide, the answer is that
/// vertex.
Point fermat_point(Point a, Point b, Point c, double snap_angle = 0.0);

/// Places the Steiner points of a fixed topology by repeatedly moving each
/// one to the Fermat point of its three neighbors until no point moves more
/// than eps_len in a sweep. Angles within eps_ang of 120 degrees snap the
/// Steiner point onto the neighbor.
SteinerTree build_full_tree(const Topology& topology, const std::vector<Point>& terminal_positions,
                            const Tolerance& tol, const BuildOptions& options = {});

/// Merges every Steiner point that sits on an adjacent terminal into that
/// terminal. Other collapsed edges are left in place.
SteinerTree contract_collapsed_edges(const SteinerTree& tree, const Tolerance& tol);

struct DeformationPath {
  SteinerTree base;
  Topology topology;
  std::size_t moving_terminal = 0;
  Point start;
  Point target;

  Point position(double t) const { return lerp(start, target, t); }

  /// Rebuild on the base topology at parameter t; collapsed edges are kept
  /// (allowed only at t == 1).
  SteinerTree build_at(double t, const Tolerance& tol) const;

  /// build_at followed by contraction of collapsed terminal edges.
  SteinerTree tree_at(double t, const Tolerance& tol) const;
};

/// Path sliding a leaf terminal along its edge onto its neighbor.
/// Throws BadDegree unless the terminal is a leaf.
DeformationPath slide_terminal_path(const SteinerTree& tree, std::size_t terminal);

struct PathSample {
  double t = 0.0;
  SteinerTree tree;
};

/// Trees at t = k/(steps-1); each is validated. Errors carry the offending t.
std::vector<PathSample> sample_path(const DeformationPath& path, std::size_t steps, const Tolerance& tol);

}  // namespace chardom
