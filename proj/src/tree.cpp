#include "chardom/tree.hpp"

#include <algorithm>
#include <numbers>
#include <numeric>
#include <string>

#include "chardom/error.hpp"

namespace chardom {

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }

  std::vector<std::size_t> parent;
};

void check_indices(const SteinerTree& tree) {
  const std::size_t n = tree.vertex_count();
  for (const Edge& e : tree.edges) {
    if (e.u >= n || e.v >= n) {
      throw Error(ErrorKind::MalformedInput,
                  "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ") references a vertex out of range");
    }
  }
}

}  // namespace

Point SteinerTree::position(VertexId v) const {
  return is_terminal(v) ? terminals[v] : steiner_points[v - terminals.size()];
}

std::vector<std::size_t> SteinerTree::degrees() const {
  std::vector<std::size_t> deg(vertex_count(), 0);
  for (const Edge& e : edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

std::vector<std::vector<VertexId>> SteinerTree::adjacency() const {
  std::vector<std::vector<VertexId>> adj(vertex_count());
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::ANGLE_BELOW_120: return "ANGLE_BELOW_120";
    case ViolationKind::BAD_DEGREE: return "BAD_DEGREE";
    case ViolationKind::NOT_TREE: return "NOT_TREE";
    case ViolationKind::CROSSING_EDGES: return "CROSSING_EDGES";
  }
  return "UNKNOWN";
}

ValidationReport validate(const SteinerTree& tree, const Tolerance& tol) {
  check_indices(tree);
  ValidationReport report;
  auto flag = [&](VertexId v, ViolationKind kind, double measured) {
    report.violations.push_back({v, kind, measured});
  };

  const std::size_t n = tree.vertex_count();

  // (a) tree-ness
  DisjointSets sets(n);
  for (const Edge& e : tree.edges) {
    if (e.u == e.v || !sets.unite(e.u, e.v)) {
      flag(e.u, ViolationKind::NOT_TREE, static_cast<double>(tree.edges.size()));
    }
  }
  for (VertexId v = 1; v < n; ++v) {
    if (sets.find(v) != sets.find(0)) {
      flag(v, ViolationKind::NOT_TREE, static_cast<double>(tree.edges.size()));
      break;
    }
  }

  // (b) degrees
  const auto deg = tree.degrees();
  for (VertexId v = 0; v < n; ++v) {
    const bool ok = tree.is_terminal(v) ? (deg[v] >= 1 && deg[v] <= 3) || n == 1 : deg[v] == 3;
    if (!ok) flag(v, ViolationKind::BAD_DEGREE, static_cast<double>(deg[v]));
  }

  // (c) angles; pairs involving a collapsed edge carry no direction and are skipped
  const double min_angle = 2.0 * std::numbers::pi / 3.0 - tol.eps_ang;
  const auto adj = tree.adjacency();
  for (VertexId v = 0; v < n; ++v) {
    const Point pv = tree.position(v);
    for (std::size_t i = 0; i < adj[v].size(); ++i) {
      for (std::size_t j = i + 1; j < adj[v].size(); ++j) {
        const Point a = tree.position(adj[v][i]);
        const Point b = tree.position(adj[v][j]);
        if (distance(pv, a) <= tol.eps_len || distance(pv, b) <= tol.eps_len) continue;
        const double angle = angle_at(pv, a, b, tol);
        if (angle < min_angle) flag(v, ViolationKind::ANGLE_BELOW_120, angle);
      }
    }
  }

  // (d) planarity: non-adjacent edges must not meet at all
  for (std::size_t i = 0; i < tree.edges.size(); ++i) {
    const Edge& e = tree.edges[i];
    for (std::size_t j = i + 1; j < tree.edges.size(); ++j) {
      const Edge& f = tree.edges[j];
      if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) continue;
      const Segment s1{tree.position(e.u), tree.position(e.v)};
      const Segment s2{tree.position(f.u), tree.position(f.v)};
      if (segments_intersect(s1, s2, tol)) flag(e.u, ViolationKind::CROSSING_EDGES, static_cast<double>(j));
    }
  }

  report.valid = report.violations.empty();
  return report;
}

bool is_full(const SteinerTree& tree) {
  if (tree.terminal_count() < 2) return false;
  const auto deg = tree.degrees();
  for (VertexId v = 0; v < tree.vertex_count(); ++v) {
    if (deg[v] == 2) return false;
    if (tree.is_terminal(v) && deg[v] != 1) return false;
  }
  return true;
}

std::vector<FullComponent> full_components(const SteinerTree& tree) {
  check_indices(tree);
  const std::size_t m = tree.edges.size();

  // Edges sharing a Steiner vertex belong to the same component.
  DisjointSets sets(m);
  std::vector<std::size_t> first_edge_at(tree.vertex_count(), m);
  for (std::size_t i = 0; i < m; ++i) {
    for (VertexId v : {tree.edges[i].u, tree.edges[i].v}) {
      if (tree.is_terminal(v)) continue;
      if (first_edge_at[v] == m) {
        first_edge_at[v] = i;
      } else {
        sets.unite(first_edge_at[v], i);
      }
    }
  }

  std::vector<FullComponent> out;
  std::vector<std::size_t> slot(m, m);
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t root = sets.find(i);
    if (slot[root] == m) {
      slot[root] = members.size();
      members.emplace_back();
    }
    members[slot[root]].push_back(i);
  }

  for (const auto& edge_ids : members) {
    std::vector<VertexId> verts;
    for (std::size_t i : edge_ids) {
      verts.push_back(tree.edges[i].u);
      verts.push_back(tree.edges[i].v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

    FullComponent comp;
    std::vector<VertexId> local(tree.vertex_count(), 0);
    for (VertexId v : verts) {
      if (!tree.is_terminal(v)) continue;
      local[v] = comp.subtree.terminals.size();
      comp.subtree.terminals.push_back(tree.terminals[v]);
      comp.parent_terminal_indices.push_back(v);
    }
    const std::size_t nt = comp.subtree.terminals.size();
    for (VertexId v : verts) {
      if (tree.is_terminal(v)) continue;
      local[v] = nt + comp.subtree.steiner_points.size();
      comp.subtree.steiner_points.push_back(tree.position(v));
      comp.parent_steiner_indices.push_back(v - tree.terminal_count());
    }
    for (std::size_t i : edge_ids) {
      comp.subtree.edges.push_back({local[tree.edges[i].u], local[tree.edges[i].v]});
    }
    out.push_back(std::move(comp));
  }
  return out;
}

double total_length(const SteinerTree& tree) {
  double sum = 0.0;
  for (const Edge& e : tree.edges) sum += distance(tree.position(e.u), tree.position(e.v));
  return sum;
}

std::vector<VertexId> tree_path(const SteinerTree& tree, VertexId from, VertexId to) {
  const auto adj = tree.adjacency();
  const std::size_t n = tree.vertex_count();
  if (from >= n || to >= n) throw Error(ErrorKind::MalformedInput, "path endpoint out of range");
  std::vector<VertexId> parent(n, n);
  std::vector<VertexId> stack{from};
  parent[from] = from;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    if (v == to) break;
    for (VertexId w : adj[v]) {
      if (parent[w] == n) {
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  if (parent[to] == n) throw Error(ErrorKind::MalformedInput, "vertices are not connected");
  std::vector<VertexId> path{to};
  while (path.back() != from) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace chardom
