#pragma once

// The two counterexample scenes and the checks that expose them: the
// union-of-components area makes the minimal inner spanning tree length jump
// along a continuous deformation, and the limit area breaks containment of
// the component areas.

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "chardom/area.hpp"
#include "chardom/construct.hpp"
#include "chardom/scene.hpp"
#include "chardom/spanning.hpp"

namespace chardom {

enum class AreaRule { UNION, LIMIT };

std::string_view to_string(AreaRule rule);

struct ScenarioCase {
  Scene scene;
  SteinerTree tree;
  DeformationPath path;
  /// fig1 scene only: the spanning edge that stops being inner at t = 1.
  std::optional<TerminalPair> excluded_edge;
};

ScenarioCase scenario_fig1(const Tolerance& tol);
ScenarioCase scenario_fig2(const Tolerance& tol);

/// Characteristic area of the sample at parameter t under the rule. A full
/// tree gets its own area under both rules; at t = 1 UNION uses the
/// component areas and LIMIT uses char_area_limit.
Region region_at(const DeformationPath& path, const SteinerTree& tree_at_t, double t, AreaRule rule,
                 const Tolerance& tol);

struct SweepRow {
  double t = 0.0;
  double mist_length = 0.0;
  bool feasible = true;
};

struct RefinementLevel {
  std::size_t steps = 0;
  double max_diff = 0.0;
  /// Midpoint of the sample interval carrying max_diff.
  double t_star = 0.0;
  std::size_t infeasible_samples = 0;
  std::vector<SweepRow> rows;
};

struct JumpReport {
  DeformationPath path;
  AreaRule rule = AreaRule::UNION;
  double threshold = 0.0;
  std::vector<RefinementLevel> levels;
  bool jump_persists = false;
  double jump_size = 0.0;
  bool location_stable = false;
};

inline constexpr std::array<std::size_t, 3> kDefaultLevels{51, 201, 801};

/// 1% of the MIST length at t = 0.
double default_jump_threshold(const DeformationPath& path, const Tolerance& tol);

/// MIST length along the path at each refinement level. Samples with an
/// infeasible MIST are counted but excluded from the differences.
JumpReport detect_jump(const DeformationPath& path, AreaRule rule, const std::vector<std::size_t>& levels,
                       double threshold, const Tolerance& tol);

struct MonotonicityViolation {
  std::size_t component = 0;
  Point witness;
};

struct MonotonicityReport {
  AreaRule rule = AreaRule::UNION;
  Region total_area;
  std::vector<CharArea> component_areas;
  std::vector<MonotonicityViolation> violations;
};

/// Tests whether the t = 1 area contains every full component's area.
/// Throws NotDegenerate when the t = 1 tree is full.
MonotonicityReport check_monotonicity(const DeformationPath& path, AreaRule rule, const Tolerance& tol);

}  // namespace chardom
