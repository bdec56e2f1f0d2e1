#include "chardom/spanning.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "chardom/error.hpp"

namespace chardom {

namespace {

struct Candidate {
  double length;
  TerminalPair pair;
};

bool key_less(const Candidate& a, const Candidate& b) {
  return std::tie(a.length, a.pair.i, a.pair.j) < std::tie(b.length, b.pair.i, b.pair.j);
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::vector<Candidate> sorted_candidates(const std::vector<Point>& terminals, const Region* region,
                                         const Tolerance& tol) {
  std::vector<Candidate> out;
  for (std::size_t i = 0; i < terminals.size(); ++i) {
    for (std::size_t j = i + 1; j < terminals.size(); ++j) {
      if (region != nullptr && !edge_is_inner(terminals[i], terminals[j], *region, tol)) continue;
      out.push_back({distance(terminals[i], terminals[j]), {i, j}});
    }
  }
  std::sort(out.begin(), out.end(), key_less);
  return out;
}

MistResult kruskal(std::size_t n, const std::vector<Candidate>& candidates) {
  MistResult result;
  result.inner_edge_count = candidates.size();
  UnionFind sets(n);
  for (const Candidate& c : candidates) {
    if (!sets.unite(c.pair.i, c.pair.j)) continue;
    result.edges.push_back(c.pair);
    result.length += c.length;
  }
  result.feasible = result.edges.size() + 1 == n;
  return result;
}

}  // namespace

bool edge_is_inner(Point a, Point b, const Region& region, const Tolerance& tol, const InnerEdgeOptions& options) {
  const std::size_t samples = std::max<std::size_t>(options.samples, 2);
  for (std::size_t k = 0; k < samples; ++k) {
    const double s = static_cast<double>(k) / static_cast<double>(samples - 1);
    if (!region_contains_point(region, lerp(a, b, s), tol)) return false;
  }

  const double len = distance(a, b);
  if (len <= tol.eps_len) return true;
  const Segment ab{a, b};
  const double step = std::max(1e-7 * len, 100.0 * tol.eps_len) / len;
  for (const CharArea& part : region.parts) {
    const std::size_t n = part.walk.size();
    if (n < 2) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const Segment edge{part.walk[i], part.walk[(i + 1) % n]};
      if (distance(edge.a, edge.b) <= tol.eps_len) continue;
      if (!segments_properly_cross(ab, edge, tol)) continue;
      const Point d = b - a;
      const Point e = edge.b - edge.a;
      const double s = cross(edge.a - a, e) / cross(d, e);
      for (double probe : {s - step, s + step}) {
        if (!region_contains_point(region, lerp(a, b, std::clamp(probe, 0.0, 1.0)), tol)) return false;
      }
    }
  }
  return true;
}

MistResult mist(const std::vector<Point>& terminals, const Region& region, const Tolerance& tol) {
  return kruskal(terminals.size(), sorted_candidates(terminals, &region, tol));
}

MistResult mst_unrestricted(const std::vector<Point>& terminals) {
  return kruskal(terminals.size(), sorted_candidates(terminals, nullptr, Tolerance{}));
}

MistResult brute_force_mist(const std::vector<Point>& terminals, const Region& region, const Tolerance& tol) {
  const std::size_t n = terminals.size();
  if (n > 8) throw Error(ErrorKind::TooLarge, "brute force is limited to 8 terminals");
  const std::vector<Candidate> candidates = sorted_candidates(terminals, &region, tol);

  MistResult best;
  best.inner_edge_count = candidates.size();
  if (n <= 1) {
    best.feasible = true;
    return best;
  }

  double scale = 0.0;
  for (const Candidate& c : candidates) scale += c.length;
  const double tie = 1e-12 * std::max(scale, 1.0);

  std::vector<std::size_t> chosen;
  std::vector<std::size_t> best_chosen;
  double best_length = 0.0;
  bool found = false;

  // Edges are visited in key order, so `chosen` is always sorted by key and
  // lexicographic comparison of index lists is comparison under the key.
  auto recurse = [&](auto&& self, std::size_t next, std::vector<std::size_t>& comp, double length) -> void {
    if (chosen.size() + 1 == n) {
      const bool better = !found || length < best_length - tie ||
                          (length <= best_length + tie &&
                           std::lexicographical_compare(chosen.begin(), chosen.end(), best_chosen.begin(),
                                                        best_chosen.end()));
      if (better) {
        found = true;
        best_length = length;
        best_chosen = chosen;
      }
      return;
    }
    if (candidates.size() - next < n - 1 - chosen.size()) return;
    for (std::size_t k = next; k < candidates.size(); ++k) {
      if (candidates.size() - k < n - 1 - chosen.size()) break;
      const TerminalPair p = candidates[k].pair;
      if (comp[p.i] == comp[p.j]) continue;
      const std::vector<std::size_t> saved = comp;
      const std::size_t from = comp[p.j];
      for (std::size_t& c : comp) {
        if (c == from) c = comp[p.i];
      }
      chosen.push_back(k);
      self(self, k + 1, comp, length + candidates[k].length);
      chosen.pop_back();
      comp = saved;
    }
  };
  std::vector<std::size_t> comp(n);
  std::iota(comp.begin(), comp.end(), 0);
  recurse(recurse, 0, comp, 0.0);

  if (!found) {
    best.feasible = false;
    return best;
  }
  best.feasible = true;
  for (std::size_t k : best_chosen) {
    best.edges.push_back(candidates[k].pair);
    best.length += candidates[k].length;
  }
  return best;
}

}  // namespace chardom
