#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "chardom/geom.hpp"

namespace chardom {

using VertexId = std::size_t;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Planar tree on terminals followed by Steiner points. Vertex ids
/// [0, terminals.size()) are terminals, the rest index steiner_points.
struct SteinerTree {
  std::vector<Point> terminals;
  std::vector<Point> steiner_points;
  std::vector<Edge> edges;

  std::size_t terminal_count() const { return terminals.size(); }
  std::size_t vertex_count() const { return terminals.size() + steiner_points.size(); }
  bool is_terminal(VertexId v) const { return v < terminals.size(); }
  Point position(VertexId v) const;

  std::vector<std::size_t> degrees() const;
  /// Neighbor lists in edge order.
  std::vector<std::vector<VertexId>> adjacency() const;
};

enum class ViolationKind { ANGLE_BELOW_120, BAD_DEGREE, NOT_TREE, CROSSING_EDGES };

std::string_view to_string(ViolationKind kind);

struct Violation {
  VertexId vertex = 0;
  ViolationKind kind = ViolationKind::NOT_TREE;
  double measured = 0.0;
};

struct ValidationReport {
  bool valid = true;
  std::vector<Violation> violations;
};

struct FullComponent {
  SteinerTree subtree;
  /// subtree terminal index -> parent terminal index
  std::vector<std::size_t> parent_terminal_indices;
  /// subtree Steiner index -> parent Steiner index
  std::vector<std::size_t> parent_steiner_indices;
};

/// Checks tree-ness, degree rules, the 120 degree angle condition at every
/// vertex and planarity of the embedding. Throws MalformedInput for edge
/// endpoints out of range.
ValidationReport validate(const SteinerTree& tree, const Tolerance& tol);

/// No degree-2 vertices and every terminal is a leaf.
bool is_full(const SteinerTree& tree);

/// Splits at every terminal of degree >= 2. Components are ordered by their
/// lowest parent edge index; the edge sets partition the parent's edges.
std::vector<FullComponent> full_components(const SteinerTree& tree);

double total_length(const SteinerTree& tree);

/// Vertex sequence of the unique tree path from `from` to `to`.
std::vector<VertexId> tree_path(const SteinerTree& tree, VertexId from, VertexId to);

}  // namespace chardom
