#pragma once

// Scene files: YAML with a fixed field order. Coordinates are written as
// 17-significant-digit decimals so a load/emit round trip is bit-exact.
//
//   metadata:            # free-form string map; name and description first
//     name: fig1
//   terminals:
//     - [0, 1]
//   steiner_points:
//     - [0.5, 0.28867513459481287]
//   edges:
//     - [0, 3]
//   topology:            # optional; used to (re)build Steiner points
//     n_terminals: 3
//     n_steiner: 1
//     edges:
//       - [0, 3]

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chardom/construct.hpp"
#include "chardom/tree.hpp"

namespace chardom {

struct Scene {
  std::vector<Point> terminals;
  std::vector<Point> steiner_points;
  std::vector<Edge> edges;
  std::optional<Topology> topology;
  std::map<std::string, std::string> metadata;

  SteinerTree tree() const { return {terminals, steiner_points, edges}; }
  std::string name() const;

  friend bool operator==(const Scene& a, const Scene& b);
};

Scene scene_from_tree(const SteinerTree& tree, std::string name, std::string description = {});

/// Parses scene text; `origin` names the source in error messages.
/// Throws ParseError for malformed YAML or fields, StructureError when the
/// edges violate tree or degree invariants.
Scene parse_scene(const std::string& text, const std::string& origin = "<string>");

/// Throws ParseError (I/O) when the file cannot be read.
Scene load_scene(const std::filesystem::path& path);

std::string emit_scene(const Scene& scene);

void save_scene(const Scene& scene, const std::filesystem::path& path);

/// If the scene has a topology but no Steiner coordinates, builds them.
Scene with_built_tree(Scene scene, const Tolerance& tol);

}  // namespace chardom
