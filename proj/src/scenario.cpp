#include "chardom/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "chardom/error.hpp"

namespace chardom {

namespace {

// Frozen scene data, found with tools/scene_search.cpp (default seed). Steiner points are
// rebuilt from these terminals with build_full_tree.

// Pentagon: upper terminal 0 over a Steiner point whose two other branches
// each end in a Steiner point with two leaves.
constexpr std::array<Point, 5> kFig1Terminals{{
    {0.0, 1.026},
    {-2.647, 0.722},
    {-0.698, -2.701},
    {0.751, -2.51},
    {2.163, 0.381},
}};
constexpr std::array<Edge, 7> kFig1Edges{{{0, 5}, {5, 6}, {5, 7}, {6, 1}, {6, 2}, {7, 3}, {7, 4}}};
constexpr std::size_t kFig1Moving = 0;
constexpr TerminalPair kFig1Excluded{2, 3};

// Terminal 0 sits on a short edge; one branch at its Steiner point spirals
// around the other, which is a single Steiner point with two leaves.
constexpr std::array<Point, 7> kFig2Terminals{{
    {0.0, 0.318},
    {-1.71, 0.093},
    {-1.536, -2.622},
    {0.744, -3.876},
    {9.298, 1.881},
    {0.786, -1.618},
    {1.602, 0.017},
}};
constexpr std::array<Edge, 11> kFig2Edges{
    {{0, 7}, {7, 8}, {7, 11}, {8, 1}, {8, 9}, {9, 2}, {9, 10}, {10, 3}, {10, 4}, {11, 5}, {11, 6}}};
constexpr std::size_t kFig2Moving = 0;

template <std::size_t NT, std::size_t NE>
ScenarioCase make_case(const std::array<Point, NT>& terminals, const std::array<Edge, NE>& edges, std::size_t moving,
                       const char* name, const char* description, const Tolerance& tol) {
  Topology topology{NT, NE + 1 - NT, std::vector<Edge>(edges.begin(), edges.end())};
  ScenarioCase out;
  out.tree = build_full_tree(topology, std::vector<Point>(terminals.begin(), terminals.end()), tol);
  out.scene = scene_from_tree(out.tree, name, description);
  out.scene.topology = topology;
  out.scene.metadata["moving_terminal"] = std::to_string(moving);
  out.path = slide_terminal_path(out.tree, moving);
  return out;
}

}  // namespace

std::string_view to_string(AreaRule rule) { return rule == AreaRule::UNION ? "UNION" : "LIMIT"; }

ScenarioCase scenario_fig1(const Tolerance& tol) {
  ScenarioCase out = make_case(kFig1Terminals, kFig1Edges, kFig1Moving, "fig1",
                               "full tree whose upper terminal slides onto its Steiner neighbor; the union area "
                               "drops the lowest spanning edge at t=1",
                               tol);
  out.excluded_edge = kFig1Excluded;
  return out;
}

ScenarioCase scenario_fig2(const Tolerance& tol) {
  return make_case(kFig2Terminals, kFig2Edges, kFig2Moving, "fig2",
                   "collapsing the short edge at terminal 0 yields a limit area that misses part of the larger "
                   "component's area",
                   tol);
}

Region region_at(const DeformationPath& path, const SteinerTree& tree_at_t, double t, AreaRule rule,
                 const Tolerance& tol) {
  if (is_full(tree_at_t)) return Region(char_area_full(tree_at_t, tol));
  if (rule == AreaRule::LIMIT && t >= 1.0) return Region(char_area_limit(path, tol));
  return Region(char_area_union(tree_at_t, tol));
}

double default_jump_threshold(const DeformationPath& path, const Tolerance& tol) {
  const SteinerTree tree = path.tree_at(0.0, tol);
  const MistResult m = mist(tree.terminals, region_at(path, tree, 0.0, AreaRule::UNION, tol), tol);
  return 0.01 * m.length;
}

JumpReport detect_jump(const DeformationPath& path, AreaRule rule, const std::vector<std::size_t>& levels,
                       double threshold, const Tolerance& tol) {
  if (levels.size() < 3 || !std::is_sorted(levels.begin(), levels.end()) ||
      std::adjacent_find(levels.begin(), levels.end()) != levels.end()) {
    throw Error(ErrorKind::MalformedInput, "detect_jump needs at least three strictly ascending levels");
  }
  if (!(threshold > 0.0)) throw Error(ErrorKind::MalformedInput, "jump threshold must be positive");

  JumpReport report;
  report.path = path;
  report.rule = rule;
  report.threshold = threshold;
  for (std::size_t steps : levels) {
    RefinementLevel level;
    level.steps = steps;
    for (const PathSample& sample : sample_path(path, steps, tol)) {
      const Region region = region_at(path, sample.tree, sample.t, rule, tol);
      const MistResult m = mist(sample.tree.terminals, region, tol);
      level.rows.push_back({sample.t, m.length, m.feasible});
      if (!m.feasible) ++level.infeasible_samples;
    }
    for (std::size_t k = 1; k < level.rows.size(); ++k) {
      const SweepRow& a = level.rows[k - 1];
      const SweepRow& b = level.rows[k];
      if (!a.feasible || !b.feasible) continue;
      const double diff = std::abs(b.mist_length - a.mist_length);
      if (diff > level.max_diff) {
        level.max_diff = diff;
        level.t_star = 0.5 * (a.t + b.t);
      }
    }
    report.levels.push_back(std::move(level));
  }

  const RefinementLevel& coarse = report.levels.front();
  const RefinementLevel& fine = report.levels.back();
  report.jump_size = fine.max_diff;
  report.jump_persists = fine.max_diff >= 0.5 * coarse.max_diff && fine.max_diff >= threshold;
  const double coarse_step = 1.0 / static_cast<double>(coarse.steps - 1);
  report.location_stable = std::all_of(report.levels.begin(), report.levels.end(), [&](const RefinementLevel& l) {
    return std::abs(l.t_star - fine.t_star) < coarse_step;
  });
  return report;
}

MonotonicityReport check_monotonicity(const DeformationPath& path, AreaRule rule, const Tolerance& tol) {
  const SteinerTree end = path.tree_at(1.0, tol);
  if (is_full(end)) throw Error(ErrorKind::NotDegenerate, "the t=1 tree is full");

  MonotonicityReport report;
  report.rule = rule;
  report.component_areas = char_area_union(end, tol);
  report.total_area = rule == AreaRule::UNION ? Region(report.component_areas) : Region(char_area_limit(path, tol));
  for (std::size_t i = 0; i < report.component_areas.size(); ++i) {
    const ContainmentReport c = region_contains_region(report.total_area, report.component_areas[i], tol);
    if (!c.contained) report.violations.push_back({i, *c.witness});
  }
  return report;
}

}  // namespace chardom
