#include "chardom/construct.hpp"

#include <algorithm>
#include <numbers>
#include <sstream>
#include <string>

#include "chardom/error.hpp"

namespace chardom {

namespace {

std::string describe_t(double t) {
  std::ostringstream os;
  os.precision(17);
  os << "t=" << t << ": ";
  return os.str();
}

}  // namespace

void check_topology(const Topology& topology) {
  SteinerTree shape;
  shape.terminals.resize(topology.n_terminals);
  shape.steiner_points.resize(topology.n_steiner);
  shape.edges = topology.edges;
  const std::size_t n = shape.vertex_count();
  if (n < 2) throw Error(ErrorKind::MalformedInput, "topology needs at least two terminals");
  if (topology.edges.size() != n - 1) throw Error(ErrorKind::MalformedInput, "topology edge count is not |V|-1");
  for (const Edge& e : topology.edges) {
    if (e.u >= n || e.v >= n || e.u == e.v) throw Error(ErrorKind::MalformedInput, "topology edge out of range");
  }
  const auto deg = shape.degrees();
  for (VertexId v = 0; v < n; ++v) {
    if (shape.is_terminal(v) && deg[v] != 1) {
      throw Error(ErrorKind::MalformedInput, "topology terminal " + std::to_string(v) + " is not a leaf");
    }
    if (!shape.is_terminal(v) && deg[v] != 3) {
      throw Error(ErrorKind::MalformedInput, "topology Steiner vertex " + std::to_string(v) + " does not have degree 3");
    }
  }
  // n-1 edges and connected => tree
  std::vector<bool> seen(n, false);
  std::vector<VertexId> stack{0};
  const auto adj = shape.adjacency();
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n) throw Error(ErrorKind::MalformedInput, "topology is not connected");
}

Topology topology_of(const SteinerTree& tree) {
  return {tree.terminal_count(), tree.steiner_points.size(), tree.edges};
}

Point fermat_point(Point a, Point b, Point c, double snap_angle) {
  const Point p[3] = {a, b, c};
  double side[3];
  for (int i = 0; i < 3; ++i) {
    side[i] = distance(p[(i + 1) % 3], p[(i + 2) % 3]);
  }
  for (int i = 0; i < 3; ++i) {
    if (side[(i + 1) % 3] == 0.0 || side[(i + 2) % 3] == 0.0) return p[i];
  }
  double angle[3];
  for (int i = 0; i < 3; ++i) {
    const Point u = p[(i + 1) % 3] - p[i];
    const Point v = p[(i + 2) % 3] - p[i];
    angle[i] = std::atan2(std::abs(cross(u, v)), dot(u, v));
    if (angle[i] >= 2.0 * std::numbers::pi / 3.0 - snap_angle) return p[i];
  }
  // barycentric a*csc(A+60deg) : b*csc(B+60deg) : c*csc(C+60deg)
  double w[3];
  double total = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double s = std::sin(angle[i] + std::numbers::pi / 3.0);
    if (s <= 1e-15) return p[i];
    w[i] = side[i] / s;
    total += w[i];
  }
  return {(w[0] * a.x + w[1] * b.x + w[2] * c.x) / total, (w[0] * a.y + w[1] * b.y + w[2] * c.y) / total};
}

SteinerTree build_full_tree(const Topology& topology, const std::vector<Point>& terminal_positions,
                            const Tolerance& tol, const BuildOptions& options) {
  check_topology(topology);
  if (terminal_positions.size() != topology.n_terminals) {
    throw Error(ErrorKind::MalformedInput, "terminal count does not match the topology");
  }
  for (const Point& p : terminal_positions) {
    if (!is_finite(p)) throw Error(ErrorKind::MalformedInput, "non-finite terminal coordinate");
  }

  SteinerTree tree;
  tree.terminals = terminal_positions;
  tree.edges = topology.edges;

  Point centroid{0.0, 0.0};
  for (const Point& p : terminal_positions) centroid = centroid + p;
  centroid = (1.0 / static_cast<double>(terminal_positions.size())) * centroid;
  double scale = bbox_diagonal(terminal_positions);
  if (scale == 0.0) scale = 1.0;
  constexpr double kGoldenAngle = 2.399963229728653;
  for (std::size_t k = 0; k < topology.n_steiner; ++k) {
    const double r = 1e-3 * scale * static_cast<double>(k + 1);
    const double phi = kGoldenAngle * static_cast<double>(k);
    tree.steiner_points.push_back(centroid + Point{r * std::cos(phi), r * std::sin(phi)});
  }

  const auto adj = tree.adjacency();
  const std::size_t nt = tree.terminal_count();
  bool converged = topology.n_steiner == 0;
  for (std::size_t sweep = 0; sweep < options.max_sweeps && !converged; ++sweep) {
    double max_move = 0.0;
    for (std::size_t k = 0; k < topology.n_steiner; ++k) {
      const auto& nb = adj[nt + k];
      const Point next =
          fermat_point(tree.position(nb[0]), tree.position(nb[1]), tree.position(nb[2]), tol.eps_ang);
      max_move = std::max(max_move, distance(next, tree.steiner_points[k]));
      tree.steiner_points[k] = next;
    }
    converged = max_move < tol.eps_len;
  }
  if (!converged) {
    throw Error(ErrorKind::NoConvergence,
                "Steiner points still moving after " + std::to_string(options.max_sweeps) + " sweeps");
  }

  if (!options.allow_degenerate) {
    for (const Edge& e : tree.edges) {
      if (distance(tree.position(e.u), tree.position(e.v)) < tol.eps_len) {
        throw Error(ErrorKind::DegenerateTopology,
                    "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ") collapsed");
      }
    }
  }
  return tree;
}

SteinerTree contract_collapsed_edges(const SteinerTree& tree, const Tolerance& tol) {
  const std::size_t nt = tree.terminal_count();
  const std::size_t n = tree.vertex_count();
  // representative[v]: vertex v is merged into
  std::vector<VertexId> representative(n);
  for (VertexId v = 0; v < n; ++v) representative[v] = v;
  for (const Edge& e : tree.edges) {
    if (distance(tree.position(e.u), tree.position(e.v)) >= tol.eps_len) continue;
    const bool tu = tree.is_terminal(e.u);
    const bool tv = tree.is_terminal(e.v);
    if (tu == tv) continue;
    const VertexId steiner = tu ? e.v : e.u;
    const VertexId terminal = tu ? e.u : e.v;
    if (representative[steiner] == steiner) representative[steiner] = terminal;
  }

  SteinerTree out;
  out.terminals = tree.terminals;
  std::vector<VertexId> remap(n);
  for (VertexId v = 0; v < nt; ++v) remap[v] = v;
  for (VertexId v = nt; v < n; ++v) {
    if (representative[v] != v) continue;
    remap[v] = nt + out.steiner_points.size();
    out.steiner_points.push_back(tree.position(v));
  }
  for (VertexId v = nt; v < n; ++v) {
    if (representative[v] != v) remap[v] = remap[representative[v]];
  }
  for (const Edge& e : tree.edges) {
    const VertexId u = remap[e.u];
    const VertexId v = remap[e.v];
    if (u != v) out.edges.push_back({u, v});
  }
  return out;
}

SteinerTree DeformationPath::build_at(double t, const Tolerance& tol) const {
  std::vector<Point> terminals = base.terminals;
  terminals[moving_terminal] = position(t);
  BuildOptions options;
  options.allow_degenerate = t >= 1.0;
  return build_full_tree(topology, terminals, tol, options);
}

SteinerTree DeformationPath::tree_at(double t, const Tolerance& tol) const {
  SteinerTree tree = build_at(t, tol);
  if (t >= 1.0) tree = contract_collapsed_edges(tree, tol);
  return tree;
}

DeformationPath slide_terminal_path(const SteinerTree& tree, std::size_t terminal) {
  if (terminal >= tree.terminal_count()) throw Error(ErrorKind::MalformedInput, "terminal index out of range");
  const auto adj = tree.adjacency();
  if (adj[terminal].size() != 1) {
    throw Error(ErrorKind::BadDegree, "terminal " + std::to_string(terminal) + " has degree " +
                                          std::to_string(adj[terminal].size()) + ", expected 1");
  }
  DeformationPath path;
  path.base = tree;
  path.topology = topology_of(tree);
  check_topology(path.topology);
  path.moving_terminal = terminal;
  path.start = tree.terminals[terminal];
  path.target = tree.position(adj[terminal][0]);
  return path;
}

std::vector<PathSample> sample_path(const DeformationPath& path, std::size_t steps, const Tolerance& tol) {
  if (steps < 2) throw Error(ErrorKind::MalformedInput, "sample_path needs at least two steps");
  std::vector<PathSample> out;
  out.reserve(steps);
  for (std::size_t k = 0; k < steps; ++k) {
    const double t = k + 1 == steps ? 1.0 : static_cast<double>(k) / static_cast<double>(steps - 1);
    try {
      SteinerTree tree = path.tree_at(t, tol);
      const ValidationReport report = validate(tree, tol);
      if (!report.valid) {
        throw Error(ErrorKind::PostconditionFailed,
                    "rebuilt tree violates " + std::string(to_string(report.violations.front().kind)) +
                        " at vertex " + std::to_string(report.violations.front().vertex));
      }
      out.push_back({t, std::move(tree)});
    } catch (const Error& e) {
      throw Error(e.kind(), describe_t(t) + e.what());
    }
  }
  return out;
}

}  // namespace chardom
