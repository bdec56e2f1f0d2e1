#include "chardom/scene.hpp"

#include <yaml-cpp/yaml.h>

#include <charconv>
#include <fmt/format.h>
#include <fstream>
#include <sstream>

#include "chardom/error.hpp"

namespace chardom {

namespace {

std::string where(const std::string& origin, const YAML::Node& node, const std::string& field) {
  const YAML::Mark mark = node.Mark();
  if (mark.is_null()) return fmt::format("{}: field '{}'", origin, field);
  return fmt::format("{}:{}:{}: field '{}'", origin, mark.line + 1, mark.column + 1, field);
}

double parse_number(const YAML::Node& node, const std::string& origin, const std::string& field) {
  if (!node.IsScalar()) throw Error(ErrorKind::ParseError, where(origin, node, field) + " expects a number");
  const std::string& s = node.Scalar();
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(value)) {
    throw Error(ErrorKind::ParseError, where(origin, node, field) + " has invalid number '" + s + "'");
  }
  return value;
}

std::size_t parse_index(const YAML::Node& node, const std::string& origin, const std::string& field) {
  if (!node.IsScalar()) throw Error(ErrorKind::ParseError, where(origin, node, field) + " expects an index");
  const std::string& s = node.Scalar();
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorKind::ParseError, where(origin, node, field) + " has invalid index '" + s + "'");
  }
  return value;
}

std::vector<Point> parse_points(const YAML::Node& node, const std::string& origin, const std::string& field) {
  std::vector<Point> out;
  if (!node) return out;
  if (!node.IsSequence()) throw Error(ErrorKind::ParseError, where(origin, node, field) + " expects a list");
  for (const YAML::Node& item : node) {
    if (!item.IsSequence() || item.size() != 2) {
      throw Error(ErrorKind::ParseError, where(origin, item, field) + " entries must be [x, y]");
    }
    out.push_back({parse_number(item[0], origin, field), parse_number(item[1], origin, field)});
  }
  return out;
}

std::vector<Edge> parse_edges(const YAML::Node& node, const std::string& origin, const std::string& field) {
  std::vector<Edge> out;
  if (!node) return out;
  if (!node.IsSequence()) throw Error(ErrorKind::ParseError, where(origin, node, field) + " expects a list");
  for (const YAML::Node& item : node) {
    if (!item.IsSequence() || item.size() != 2) {
      throw Error(ErrorKind::ParseError, where(origin, item, field) + " entries must be [u, v]");
    }
    out.push_back({parse_index(item[0], origin, field), parse_index(item[1], origin, field)});
  }
  return out;
}

void check_structure(const Scene& scene, const std::string& origin) {
  if (scene.terminals.empty()) throw Error(ErrorKind::StructureError, origin + ": scene has no terminals");
  if (scene.edges.empty()) {
    if (!scene.steiner_points.empty()) {
      throw Error(ErrorKind::StructureError, origin + ": Steiner points given without edges");
    }
    return;
  }
  const SteinerTree tree = scene.tree();
  const std::size_t n = tree.vertex_count();
  for (std::size_t i = 0; i < scene.edges.size(); ++i) {
    const Edge& e = scene.edges[i];
    if (e.u >= n || e.v >= n) {
      throw Error(ErrorKind::StructureError,
                  fmt::format("{}: edges[{}] = [{}, {}] references a vertex out of range (|V| = {})", origin, i, e.u,
                              e.v, n));
    }
  }
  const ValidationReport report = validate(tree, Tolerance{});
  for (const Violation& v : report.violations) {
    if (v.kind == ViolationKind::NOT_TREE) {
      throw Error(ErrorKind::StructureError, fmt::format("{}: edges do not form a tree (at vertex {})", origin, v.vertex));
    }
    if (v.kind == ViolationKind::BAD_DEGREE) {
      const bool terminal = tree.is_terminal(v.vertex);
      throw Error(ErrorKind::StructureError,
                  fmt::format("{}: {} vertex {} has degree {} ({})", origin, terminal ? "terminal" : "Steiner",
                              v.vertex, static_cast<int>(v.measured),
                              terminal ? "terminal degrees must be 1, 2 or 3" : "Steiner points must have degree 3"));
    }
  }
}

std::string number(double v) { return fmt::format("{:.17g}", v); }

std::string yaml_string(const std::string& s) {
  YAML::Emitter out;
  out << s;
  return out.c_str();
}

void emit_points(std::ostringstream& os, const std::vector<Point>& pts, const std::string& indent) {
  for (const Point& p : pts) os << indent << "- [" << number(p.x) << ", " << number(p.y) << "]\n";
}

void emit_edges(std::ostringstream& os, const std::vector<Edge>& edges, const std::string& indent) {
  for (const Edge& e : edges) os << indent << "- [" << e.u << ", " << e.v << "]\n";
}

}  // namespace

std::string Scene::name() const {
  const auto it = metadata.find("name");
  return it == metadata.end() ? std::string{} : it->second;
}

bool operator==(const Scene& a, const Scene& b) {
  const bool same_topology =
      a.topology.has_value() == b.topology.has_value() &&
      (!a.topology || (a.topology->n_terminals == b.topology->n_terminals &&
                       a.topology->n_steiner == b.topology->n_steiner && a.topology->edges == b.topology->edges));
  return a.terminals == b.terminals && a.steiner_points == b.steiner_points && a.edges == b.edges && same_topology &&
         a.metadata == b.metadata;
}

Scene scene_from_tree(const SteinerTree& tree, std::string name, std::string description) {
  Scene scene;
  scene.terminals = tree.terminals;
  scene.steiner_points = tree.steiner_points;
  scene.edges = tree.edges;
  scene.metadata["name"] = std::move(name);
  if (!description.empty()) scene.metadata["description"] = std::move(description);
  return scene;
}

Scene parse_scene(const std::string& text, const std::string& origin) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw Error(ErrorKind::ParseError,
                fmt::format("{}:{}:{}: {}", origin, e.mark.line + 1, e.mark.column + 1, e.msg));
  }
  if (!root.IsMap()) throw Error(ErrorKind::ParseError, origin + ": scene must be a mapping");

  Scene scene;
  try {
    if (const YAML::Node meta = root["metadata"]) {
      if (!meta.IsMap()) throw Error(ErrorKind::ParseError, where(origin, meta, "metadata") + " expects a mapping");
      for (const auto& kv : meta) {
        if (!kv.second.IsScalar()) {
          throw Error(ErrorKind::ParseError, where(origin, kv.second, "metadata") + " values must be scalars");
        }
        scene.metadata[kv.first.as<std::string>()] = kv.second.Scalar();
      }
    }
    if (!root["terminals"]) throw Error(ErrorKind::ParseError, origin + ": missing field 'terminals'");
    scene.terminals = parse_points(root["terminals"], origin, "terminals");
    scene.steiner_points = parse_points(root["steiner_points"], origin, "steiner_points");
    scene.edges = parse_edges(root["edges"], origin, "edges");
    if (const YAML::Node topo = root["topology"]) {
      if (!topo.IsMap()) throw Error(ErrorKind::ParseError, where(origin, topo, "topology") + " expects a mapping");
      Topology t;
      if (!topo["n_terminals"] || !topo["n_steiner"]) {
        throw Error(ErrorKind::ParseError, where(origin, topo, "topology") + " needs n_terminals and n_steiner");
      }
      t.n_terminals = parse_index(topo["n_terminals"], origin, "topology.n_terminals");
      t.n_steiner = parse_index(topo["n_steiner"], origin, "topology.n_steiner");
      t.edges = parse_edges(topo["edges"], origin, "topology.edges");
      scene.topology = std::move(t);
    }
  } catch (const YAML::Exception& e) {
    throw Error(ErrorKind::ParseError, fmt::format("{}:{}:{}: {}", origin, e.mark.line + 1, e.mark.column + 1, e.msg));
  }

  check_structure(scene, origin);
  if (scene.topology) {
    try {
      check_topology(*scene.topology);
    } catch (const Error& e) {
      throw Error(ErrorKind::StructureError, origin + ": topology: " + e.what());
    }
    if (scene.topology->n_terminals != scene.terminals.size()) {
      throw Error(ErrorKind::StructureError, origin + ": topology.n_terminals does not match the terminal count");
    }
  }
  return scene;
}

Scene load_scene(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read scene file " + path.string() + " (I/O)");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scene(buf.str(), path.string());
}

std::string emit_scene(const Scene& scene) {
  std::ostringstream os;
  std::vector<std::string> keys;
  for (const char* k : {"name", "description"}) {
    if (scene.metadata.count(k) != 0) keys.emplace_back(k);
  }
  for (const auto& [k, v] : scene.metadata) {
    if (k != "name" && k != "description") keys.push_back(k);
  }
  os << "metadata:" << (keys.empty() ? " {}\n" : "\n");
  for (const std::string& k : keys) os << "  " << yaml_string(k) << ": " << yaml_string(scene.metadata.at(k)) << "\n";

  os << "terminals:" << (scene.terminals.empty() ? " []\n" : "\n");
  emit_points(os, scene.terminals, "  ");
  os << "steiner_points:" << (scene.steiner_points.empty() ? " []\n" : "\n");
  emit_points(os, scene.steiner_points, "  ");
  os << "edges:" << (scene.edges.empty() ? " []\n" : "\n");
  emit_edges(os, scene.edges, "  ");
  if (scene.topology) {
    os << "topology:\n";
    os << "  n_terminals: " << scene.topology->n_terminals << "\n";
    os << "  n_steiner: " << scene.topology->n_steiner << "\n";
    os << "  edges:" << (scene.topology->edges.empty() ? " []\n" : "\n");
    emit_edges(os, scene.topology->edges, "    ");
  }
  return os.str();
}

void save_scene(const Scene& scene, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write scene file " + path.string() + " (I/O)");
  out << emit_scene(scene);
}

Scene with_built_tree(Scene scene, const Tolerance& tol) {
  if (!scene.topology || !scene.edges.empty()) return scene;
  const SteinerTree tree = build_full_tree(*scene.topology, scene.terminals, tol);
  scene.steiner_points = tree.steiner_points;
  scene.edges = tree.edges;
  return scene;
}

}  // namespace chardom
