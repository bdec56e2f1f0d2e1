#include "chardom/cli.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>

#include "chardom/error.hpp"
#include "chardom/scenario.hpp"
#include "chardom/scene.hpp"

namespace chardom {
namespace {

struct Options {
  std::string scene_file;
  std::string rule = "union";
  std::optional<std::size_t> terminal;
  std::vector<std::size_t> levels{kDefaultLevels.begin(), kDefaultLevels.end()};
  std::optional<double> threshold;
  std::optional<double> at;
  std::string out_file;
  std::string out_dir = ".";
  bool expect_pass = false;
};

// The area a command works with, plus the terminal positions it spans.
struct Evaluated {
  SteinerTree tree;
  Region region;
};

double triangle_area_sum(const CharArea& area) {
  double sum = 0.0;
  for (const Triangle& t : area.triangles) sum += 0.5 * std::abs(cross(t.b - t.a, t.c - t.a));
  return sum;
}

std::string join_ids(const std::vector<std::size_t>& ids) {
  std::string s;
  for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? " " : "") + std::to_string(ids[i]);
  return s;
}

Scene load(const Options& o, const Tolerance& tol) { return with_built_tree(load_scene(o.scene_file), tol); }

std::size_t moving_terminal(const Options& o, const Scene& scene) {
  if (o.terminal) return *o.terminal;
  const auto it = scene.metadata.find("moving_terminal");
  if (it == scene.metadata.end()) {
    throw Error(ErrorKind::MalformedInput, "no --terminal given and the scene has no moving_terminal metadata");
  }
  try {
    return std::stoul(it->second);
  } catch (const std::exception&) {
    throw Error(ErrorKind::MalformedInput, "moving_terminal metadata is not an index: " + it->second);
  }
}

AreaRule parse_rule(const std::string& rule) { return rule == "limit" ? AreaRule::LIMIT : AreaRule::UNION; }

Evaluated evaluate(const Options& o, const Scene& scene, const Tolerance& tol) {
  const SteinerTree tree = scene.tree();
  if (o.rule == "full") return {tree, Region(char_area_full(tree, tol))};
  if (o.rule == "union") return {tree, Region(char_area_union(tree, tol))};
  const DeformationPath path = slide_terminal_path(tree, moving_terminal(o, scene));
  return {path.tree_at(1.0, tol), Region(char_area_limit(path, tol))};
}

void print_area(std::ostream& out, const CharArea& area, const std::string& label) {
  out << fmt::format("{}: source {} walk [{}] triangles {} embedded {} area {:.9g}\n", label, to_string(area.source),
                     join_ids(area.walk_terminals), area.triangles.size(), area.embedded ? "yes" : "no",
                     triangle_area_sum(area));
}

void print_mist(std::ostream& out, const MistResult& m) {
  if (!m.feasible) {
    out << fmt::format("mist infeasible: {} of the edges a spanning tree needs are inner-connected\n", m.edges.size());
  } else {
    out << fmt::format("mist length {:.12g}\n", m.length);
  }
  std::string edges;
  for (const TerminalPair& e : m.edges) edges += fmt::format(" {}-{}", e.i, e.j);
  out << fmt::format("edges{}\ninner candidate edges {}\n", edges, m.inner_edge_count);
}

void print_jump(std::ostream& out, const JumpReport& r) {
  out << fmt::format("rule {} threshold {:.9g}\n", to_string(r.rule), r.threshold);
  for (const RefinementLevel& level : r.levels) {
    out << fmt::format("  level {}: max |dL| {:.9g} at t* {:.9g}, infeasible samples {}\n", level.steps,
                       level.max_diff, level.t_star, level.infeasible_samples);
  }
  out << fmt::format("jump_persists={} jump_size={:.9g} location_stable={}\n", r.jump_persists, r.jump_size,
                     r.location_stable);
}

void print_monotone(std::ostream& out, const MonotonicityReport& r) {
  out << fmt::format("rule {}: {} component(s), {} violation(s)\n", to_string(r.rule), r.component_areas.size(),
                     r.violations.size());
  for (const MonotonicityViolation& v : r.violations) {
    out << fmt::format("  component {} escapes the total area at ({:.9g}, {:.9g})\n", v.component, v.witness.x,
                       v.witness.y);
  }
}

// ---- rendering ----

std::string render_svg(const SteinerTree& tree, const Region& region, const MistResult& m) {
  std::vector<Point> pts = tree.terminals;
  pts.insert(pts.end(), tree.steiner_points.begin(), tree.steiner_points.end());
  for (const CharArea& a : region.parts) pts.insert(pts.end(), a.walk.begin(), a.walk.end());
  double lo_x = pts[0].x, hi_x = lo_x, lo_y = pts[0].y, hi_y = lo_y;
  for (const Point& p : pts) {
    lo_x = std::min(lo_x, p.x), hi_x = std::max(hi_x, p.x);
    lo_y = std::min(lo_y, p.y), hi_y = std::max(hi_y, p.y);
  }
  const double size = 640.0, margin = 30.0;
  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-12});
  const double scale = (size - 2 * margin) / span;
  auto sx = [&](Point p) { return margin + (p.x - lo_x) * scale; };
  auto sy = [&](Point p) { return size - margin - (p.y - lo_y) * scale; };

  std::string svg = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{0}\" viewBox=\"0 0 {0} {0}\">\n"
      "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n",
      size);
  // two alternating tones so neighboring components stay distinguishable
  static const char* fills[] = {"#c9dcf5", "#cdeec4"};
  static const char* strokes[] = {"#1f4fbf", "#2e8b2e"};
  for (std::size_t k = 0; k < region.parts.size(); ++k) {
    const CharArea& a = region.parts[k];
    for (const Triangle& t : a.triangles) {
      svg += fmt::format("<polygon points=\"{:.3f},{:.3f} {:.3f},{:.3f} {:.3f},{:.3f}\" fill=\"{}\" stroke=\"none\"/>\n",
                         sx(t.a), sy(t.a), sx(t.b), sy(t.b), sx(t.c), sy(t.c), fills[k % 2]);
    }
    std::string walk;
    for (const Point& p : a.walk) walk += fmt::format("{:.3f},{:.3f} ", sx(p), sy(p));
    svg += fmt::format("<polygon points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"1\"/>\n", walk,
                       strokes[k % 2]);
  }
  for (const Edge& e : tree.edges) {
    const Point a = tree.position(e.u), b = tree.position(e.v);
    svg += fmt::format(
        "<line x1=\"{:.3f}\" y1=\"{:.3f}\" x2=\"{:.3f}\" y2=\"{:.3f}\" stroke=\"#555\" stroke-width=\"1.5\" "
        "stroke-dasharray=\"5,3\"/>\n",
        sx(a), sy(a), sx(b), sy(b));
  }
  for (const TerminalPair& e : m.edges) {
    const Point a = tree.terminals[e.i], b = tree.terminals[e.j];
    svg += fmt::format(
        "<line x1=\"{:.3f}\" y1=\"{:.3f}\" x2=\"{:.3f}\" y2=\"{:.3f}\" stroke=\"#c0392b\" stroke-width=\"4\" "
        "stroke-linecap=\"round\"/>\n",
        sx(a), sy(a), sx(b), sy(b));
  }
  for (const Point& s : tree.steiner_points) {
    svg += fmt::format("<circle cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"3\" fill=\"white\" stroke=\"black\"/>\n", sx(s), sy(s));
  }
  for (std::size_t i = 0; i < tree.terminals.size(); ++i) {
    const Point p = tree.terminals[i];
    svg += fmt::format("<circle cx=\"{0:.3f}\" cy=\"{1:.3f}\" r=\"4\" fill=\"black\"/>\n"
                       "<text x=\"{2:.3f}\" y=\"{3:.3f}\" font-size=\"13\" font-family=\"sans-serif\">{4}</text>\n",
                       sx(p), sy(p), sx(p) + 6, sy(p) - 6, i);
  }
  return svg + "</svg>\n";
}

// ---- commands ----

int cmd_validate(const Options& o, const Tolerance& tol, std::ostream& out) {
  const Scene scene = load(o, tol);
  const ValidationReport report = validate(scene.tree(), tol);
  if (report.valid) {
    out << "valid\n";
    return 0;
  }
  out << "invalid\n";
  for (const Violation& v : report.violations) {
    out << fmt::format("  vertex {}: {} (measured {:.9g})\n", v.vertex, to_string(v.kind), v.measured);
  }
  return o.expect_pass ? 1 : 0;
}

int cmd_components(const Options& o, const Tolerance& tol, std::ostream& out) {
  const Scene scene = load(o, tol);
  const auto comps = full_components(scene.tree());
  out << fmt::format("{} full component(s)\n", comps.size());
  for (std::size_t k = 0; k < comps.size(); ++k) {
    out << fmt::format("  component {}: terminals [{}] steiner points {} length {:.12g}\n", k,
                       join_ids(comps[k].parent_terminal_indices), comps[k].parent_steiner_indices.size(),
                       total_length(comps[k].subtree));
  }
  return 0;
}

int cmd_chardom(const Options& o, const Tolerance& tol, std::ostream& out) {
  const Evaluated e = evaluate(o, load(o, tol), tol);
  for (std::size_t k = 0; k < e.region.parts.size(); ++k) print_area(out, e.region.parts[k], fmt::format("part {}", k));
  return 0;
}

int cmd_mist(const Options& o, const Tolerance& tol, std::ostream& out) {
  const Evaluated e = evaluate(o, load(o, tol), tol);
  const MistResult m = mist(e.tree.terminals, e.region, tol);
  print_mist(out, m);
  return (o.expect_pass && !m.feasible) ? 1 : 0;
}

int cmd_sweep(const Options& o, const Tolerance& tol, std::ostream& out) {
  const Scene scene = load(o, tol);
  const DeformationPath path = slide_terminal_path(scene.tree(), moving_terminal(o, scene));
  const double threshold = o.threshold.value_or(default_jump_threshold(path, tol));
  const JumpReport r = detect_jump(path, parse_rule(o.rule), o.levels, threshold, tol);
  for (const RefinementLevel& level : r.levels) {
    out << fmt::format("level {}\n", level.steps);
    for (const SweepRow& row : level.rows) {
      out << fmt::format("  t {:.9f} mist {}\n", row.t, row.feasible ? fmt::format("{:.12g}", row.mist_length) : "infeasible");
    }
  }
  print_jump(out, r);
  return (o.expect_pass && r.jump_persists) ? 1 : 0;
}

int cmd_monotone(const Options& o, const Tolerance& tol, std::ostream& out) {
  const Scene scene = load(o, tol);
  const DeformationPath path = slide_terminal_path(scene.tree(), moving_terminal(o, scene));
  const MonotonicityReport r = check_monotonicity(path, parse_rule(o.rule), tol);
  print_monotone(out, r);
  return (o.expect_pass && !r.violations.empty()) ? 1 : 0;
}

int cmd_fig1(const Options& o, const Tolerance& tol, std::ostream& out) {
  const ScenarioCase fig1 = scenario_fig1(tol);
  const double threshold = default_jump_threshold(fig1.path, tol);
  const JumpReport with_union = detect_jump(fig1.path, AreaRule::UNION, o.levels, threshold, tol);
  const JumpReport with_limit = detect_jump(fig1.path, AreaRule::LIMIT, o.levels, threshold, tol);
  out << fmt::format("fig1: terminal {} slides onto its neighbor; edge {}-{} is no longer inner at t=1\n",
                     fig1.path.moving_terminal, fig1.excluded_edge->i, fig1.excluded_edge->j);
  print_jump(out, with_union);
  print_jump(out, with_limit);
  const bool reproduced = with_union.jump_persists && !with_limit.jump_persists;
  out << (reproduced ? "reproduced: UNION jumps, LIMIT is continuous\n" : "not reproduced\n");
  return (o.expect_pass && !reproduced) ? 1 : 0;
}

int cmd_fig2(const Options& o, const Tolerance& tol, std::ostream& out) {
  const ScenarioCase fig2 = scenario_fig2(tol);
  const MonotonicityReport with_union = check_monotonicity(fig2.path, AreaRule::UNION, tol);
  const MonotonicityReport with_limit = check_monotonicity(fig2.path, AreaRule::LIMIT, tol);
  out << fmt::format("fig2: terminal {} slides onto its neighbor\n", fig2.path.moving_terminal);
  print_monotone(out, with_union);
  print_monotone(out, with_limit);
  const auto& comps = with_union.component_areas;
  const std::size_t larger = triangle_area_sum(comps[0]) >= triangle_area_sum(comps[1]) ? 0 : 1;
  const bool nested = region_contains_region(Region(comps[larger]), comps[1 - larger], tol).contained;
  out << fmt::format("larger component {} contains the smaller: {}\n", larger, nested ? "yes" : "no");
  const bool reproduced = with_union.violations.empty() && !with_limit.violations.empty() && nested;
  out << (reproduced ? "reproduced: LIMIT is not monotone, UNION is\n" : "not reproduced\n");
  return (o.expect_pass && !reproduced) ? 1 : 0;
}

int cmd_render(const Options& o, const Tolerance& tol, std::ostream& out) {
  const Scene scene = load(o, tol);
  Evaluated e;
  if (o.at) {
    // a point along the slide instead of the scene itself
    if (!(*o.at >= 0.0 && *o.at <= 1.0)) throw Error(ErrorKind::MalformedInput, "--at must lie in [0, 1]");
    const DeformationPath path = slide_terminal_path(scene.tree(), moving_terminal(o, scene));
    e.tree = path.tree_at(*o.at, tol);
    e.region = region_at(path, e.tree, *o.at, parse_rule(o.rule), tol);
  } else {
    e = evaluate(o, scene, tol);
  }
  const MistResult m = mist(e.tree.terminals, e.region, tol);
  std::ofstream file(o.out_file);
  if (!file) throw Error(ErrorKind::ParseError, "cannot write " + o.out_file);
  file << render_svg(e.tree, e.region, m);
  out << fmt::format("wrote {}\n", o.out_file);
  return 0;
}

int cmd_export(const Options& o, const Tolerance& tol, std::ostream& out) {
  for (const ScenarioCase& sc : {scenario_fig1(tol), scenario_fig2(tol)}) {
    const std::filesystem::path file = std::filesystem::path(o.out_dir) / (sc.scene.name() + ".yaml");
    save_scene(sc.scene, file);
    out << fmt::format("wrote {}\n", file.string());
  }
  return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Steiner tree characteristic areas and minimal inner spanning trees", "chardom"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> rules_all{"full", "union", "limit"};
  const std::vector<std::string> rules_path{"union", "limit"};

  auto scene_arg = [&](CLI::App* sub) { sub->add_option("scene", o.scene_file, "scene file")->required(); };
  auto expect = [&](CLI::App* sub) {
    sub->add_flag("--expect-pass", o.expect_pass, "exit 1 when the checked property is violated");
  };
  auto terminal = [&](CLI::App* sub) {
    sub->add_option("--terminal", o.terminal, "moving terminal (default: scene metadata moving_terminal)");
  };
  auto levels = [&](CLI::App* sub) {
    sub->add_option("--levels", o.levels, "refinement step counts")->delimiter(',')->capture_default_str();
  };

  CLI::App* validate_cmd = app.add_subcommand("validate", "check tree invariants");
  scene_arg(validate_cmd);
  expect(validate_cmd);

  CLI::App* components_cmd = app.add_subcommand("components", "list full components");
  scene_arg(components_cmd);

  CLI::App* chardom_cmd = app.add_subcommand("chardom", "characteristic area");
  scene_arg(chardom_cmd);
  chardom_cmd->add_option("--rule", o.rule)->check(CLI::IsMember(rules_all))->capture_default_str();
  terminal(chardom_cmd);

  CLI::App* mist_cmd = app.add_subcommand("mist", "minimal inner spanning tree");
  scene_arg(mist_cmd);
  mist_cmd->add_option("--rule", o.rule)->check(CLI::IsMember(rules_all))->capture_default_str();
  terminal(mist_cmd);
  expect(mist_cmd);

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "MIST length along a terminal slide");
  scene_arg(sweep_cmd);
  sweep_cmd->add_option("--rule", o.rule)->check(CLI::IsMember(rules_path))->capture_default_str();
  terminal(sweep_cmd);
  levels(sweep_cmd);
  sweep_cmd->add_option("--threshold", o.threshold, "jump threshold (default: 1% of the t=0 MIST)");
  expect(sweep_cmd);

  CLI::App* monotone_cmd = app.add_subcommand("monotone", "component containment at the end of a slide");
  scene_arg(monotone_cmd);
  monotone_cmd->add_option("--rule", o.rule)->check(CLI::IsMember(rules_path))->capture_default_str();
  terminal(monotone_cmd);
  expect(monotone_cmd);

  CLI::App* fig1_cmd = app.add_subcommand("fig1", "jump of the MIST length (frozen scene)");
  levels(fig1_cmd);
  expect(fig1_cmd);

  CLI::App* fig2_cmd = app.add_subcommand("fig2", "limit area versus component areas (frozen scene)");
  expect(fig2_cmd);

  CLI::App* render_cmd = app.add_subcommand("render", "SVG drawing of tree, area and MIST");
  scene_arg(render_cmd);
  render_cmd->add_option("--out", o.out_file, "output .svg")->required();
  render_cmd->add_option("--rule", o.rule)->check(CLI::IsMember(rules_all))->capture_default_str();
  terminal(render_cmd);
  render_cmd->add_option("--at", o.at, "draw the slide at this t instead (rule union or limit)");

  CLI::App* export_cmd = app.add_subcommand("export-scenes", "write the frozen scenes as scene files");
  export_cmd->add_option("--dir", o.out_dir)->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const Tolerance tol = default_tolerance();
  try {
    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "validate") return cmd_validate(o, tol, out);
    if (name == "components") return cmd_components(o, tol, out);
    if (name == "chardom") return cmd_chardom(o, tol, out);
    if (name == "mist") return cmd_mist(o, tol, out);
    if (name == "sweep") return cmd_sweep(o, tol, out);
    if (name == "monotone") return cmd_monotone(o, tol, out);
    if (name == "fig1") return cmd_fig1(o, tol, out);
    if (name == "fig2") return cmd_fig2(o, tol, out);
    if (name == "render") return cmd_render(o, tol, out);
    return cmd_export(o, tol, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace chardom
