#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "goldcord/certificate.hpp"
#include "goldcord/graph.hpp"
#include "goldcord/labeling.hpp"

namespace goldcord {

using nlohmann::json;

// --- canonical graph JSON ----------------------------------------------------
//
// {"coords": {"<id>": {"i":..,"j":..,"k":..,"l":..,"m":..} | {"apex": true}},
//  "edges": [[u,v],...], "vertex_count": N}
// Edges ascending within a pair and sorted; "coords" omitted when empty.

inline json coord_to_json(const VertexCoord& c) {
  json j = json::object();
  if (c.apex) {
    j["apex"] = true;
    return j;
  }
  j["i"] = c.block;
  j["j"] = c.slot;
  if (c.copy) j["k"] = *c.copy;
  if (c.arm) j["l"] = *c.arm;
  if (c.position) j["m"] = *c.position;
  return j;
}

inline VertexCoord coord_from_json(const json& j) {
  if (!j.is_object()) throw GraphError(ErrorKind::Format, "coordinate must be an object");
  VertexCoord c;
  if (j.value("apex", false)) return VertexCoord::apex_vertex();
  if (!j.contains("i") || !j.contains("j")) throw GraphError(ErrorKind::Format, "coordinate needs i and j");
  c.block = j.at("i").get<int>();
  c.slot = j.at("j").get<int>();
  if (c.slot < 1 || c.slot > 8) throw GraphError(ErrorKind::Format, "slot j must lie in 1..8");
  if (j.contains("k")) c.copy = j.at("k").get<int>();
  if (j.contains("l")) c.arm = j.at("l").get<int>();
  if (j.contains("m")) c.position = j.at("m").get<int>();
  return c;
}

inline json graph_to_json(const Graph& g, bool with_coords = true) {
  json j;
  j["vertex_count"] = g.vertex_count();
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  if (with_coords && !g.coords().empty()) {
    json coords = json::object();
    for (const auto& [v, c] : g.coords()) coords[std::to_string(v)] = coord_to_json(c);
    j["coords"] = std::move(coords);
  }
  return j;
}

inline Graph graph_from_json(const json& j) {
  try {
    if (!j.is_object() || !j.contains("vertex_count") || !j.contains("edges")) {
      throw GraphError(ErrorKind::Format, "graph needs vertex_count and edges");
    }
    const auto n = j.at("vertex_count").get<long long>();
    if (n < 0) throw GraphError(ErrorKind::Format, "vertex_count must be nonnegative");
    Graph g(static_cast<std::size_t>(n));
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw GraphError(ErrorKind::Format, "edge must be a 2-element array");
      const auto u = e[0].get<long long>();
      const auto v = e[1].get<long long>();
      if (u < 0 || v < 0) throw GraphError(ErrorKind::VertexOutOfRange, "negative vertex ID");
      g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (j.contains("coords")) {
      std::map<VertexCoord, Vertex> seen;
      for (const auto& [key, value] : j.at("coords").items()) {
        const auto v = static_cast<Vertex>(std::stoul(key));
        const VertexCoord c = coord_from_json(value);
        if (!seen.emplace(c, v).second) throw GraphError(ErrorKind::Format, "coordinate map is not injective");
        g.set_coord(v, c);
      }
    }
    return g;
  } catch (const json::exception& e) {
    throw GraphError(ErrorKind::Format, e.what());
  } catch (const std::invalid_argument& e) {
    throw GraphError(ErrorKind::Format, e.what());
  } catch (const std::out_of_range& e) {
    throw GraphError(ErrorKind::Format, e.what());
  }
}

/// One-line canonical serialization followed by a newline.
inline std::string dump_canonical(const json& j) { return j.dump() + "\n"; }

// --- labelings and reports ---------------------------------------------------

inline json labeling_to_json(const Labeling& l) {
  return json{{"vertex_labels", l.vertex_labels()}, {"edge_labels", l.edge_labels()}};
}

/// Reads vertex labels, re-derives edge labels against `g`, and rejects a
/// file whose stored edge labels disagree.
inline Labeling labeling_from_json(const Graph& g, const json& j) {
  try {
    auto vertex = j.at("vertex_labels").get<std::vector<int>>();
    std::vector<Label> labels;
    labels.reserve(vertex.size());
    for (int x : vertex) {
      if (x != 0 && x != 1) throw GraphError(ErrorKind::LabelMismatch, "vertex label outside {0,1}");
      labels.push_back(static_cast<Label>(x));
    }
    Labeling out = induce_edge_labels(g, std::move(labels));
    if (j.contains("edge_labels")) {
      auto stored = j.at("edge_labels").get<std::vector<int>>();
      if (stored.size() != out.edge_labels().size() ||
          !std::equal(stored.begin(), stored.end(), out.edge_labels().begin(),
                      [](int a, Label b) { return a == static_cast<int>(b); })) {
        throw GraphError(ErrorKind::LabelMismatch, "stored edge labels are not induced by the vertex labels");
      }
    }
    return out;
  } catch (const json::exception& e) {
    throw GraphError(ErrorKind::Format, e.what());
  }
}

inline json report_to_json(const CordialityReport& r) {
  return json{{"v0", r.v0},
              {"v1", r.v1},
              {"e0", r.e0},
              {"e1", r.e1},
              {"vertex_diff", r.vertex_diff},
              {"edge_diff", r.edge_diff},
              {"is_cordial", r.is_cordial}};
}

inline CordialityReport report_from_json(const json& j) {
  try {
    auto r = make_report(j.at("v0").get<std::size_t>(), j.at("v1").get<std::size_t>(), j.at("e0").get<std::size_t>(),
                         j.at("e1").get<std::size_t>());
    if (r.vertex_diff != j.at("vertex_diff").get<std::size_t>() || r.edge_diff != j.at("edge_diff").get<std::size_t>() ||
        r.is_cordial != j.at("is_cordial").get<bool>()) {
      throw GraphError(ErrorKind::Format, "report fields are inconsistent");
    }
    return r;
  } catch (const json::exception& e) {
    throw GraphError(ErrorKind::Format, e.what());
  }
}

inline json schedule_to_json(const PatternSchedule& s) {
  json entries = json::array();
  for (const auto& e : s.entries) {
    json item{{"copy", e.where.copy}, {"pattern", to_string(e.pattern)}};
    if (e.where.arm) item["arm"] = e.where.arm;
    if (e.where.position) item["position"] = e.where.position;
    entries.push_back(std::move(item));
  }
  json j{{"entries", std::move(entries)}};
  j["apex_label"] = s.apex_label ? json(*s.apex_label) : json(nullptr);
  return j;
}

/// Elapsed time is left out so that certificate files are reproducible.
inline json certificate_to_json(const SnarkCertificate& c) {
  json bridges = json::array();
  for (const Edge& e : c.bridge_edges) bridges.push_back({e.u, e.v});
  auto tri = [](const std::optional<bool>& b) { return b ? json(*b) : json("unchecked"); };
  return json{{"is_cubic", c.is_cubic},
              {"is_connected", c.is_connected},
              {"bridge_edges", std::move(bridges)},
              {"girth", c.girth ? json(*c.girth) : json("infinity")},
              {"cyclic_edge_connectivity_ge_4", tri(c.cyclic_edge_connectivity_ge_4)},
              {"three_edge_colorable", tri(c.three_edge_colorable)},
              {"is_snark", c.is_snark()},
              {"search_stats",
               {{"coloring_nodes", c.search_stats.coloring_nodes},
                {"cut_subsets_checked", c.search_stats.cut_subsets_checked}}},
              {"notes", c.notes}};
}

// --- DOT and GraphML export ------------------------------------------------

/// Graphviz DOT. Vertices are clustered by composite copy when coordinates
/// carry one, otherwise by Goldberg block. Labels, when given, become fill
/// colors (0 white, 1 black).
inline std::string to_dot(const Graph& g, const Labeling* labels = nullptr) {
  std::map<int, std::vector<Vertex>> clusters;
  std::vector<Vertex> loose;
  bool by_copy = false;
  for (const auto& [v, c] : g.coords()) by_copy = by_copy || c.copy.has_value();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto c = g.coord(v);
    if (c && !c->apex) {
      clusters[by_copy ? c->copy.value_or(0) : c->block].push_back(v);
    } else {
      loose.push_back(v);
    }
  }
  std::ostringstream out;
  auto node = [&](Vertex v, const char* indent) {
    out << indent << v << " [";
    if (auto c = g.coord(v)) {
      if (c->apex) {
        out << "apex=true";
      } else {
        out << "block=" << c->block << ", slot=" << c->slot;
        if (c->copy) out << ", copy=" << *c->copy;
        if (c->arm) out << ", arm=" << *c->arm;
        if (c->position) out << ", position=" << *c->position;
      }
      out << ", ";
    }
    if (labels) {
      const Label l = labels->vertex_labels()[v];
      out << "label=\"" << static_cast<int>(l) << "\", fillcolor=" << (l ? "black" : "white")
          << ", fontcolor=" << (l ? "white" : "black");
    } else {
      out << "label=\"" << v << "\"";
    }
    out << "];\n";
  };

  out << "graph G {\n";
  out << "  node [shape=circle, style=filled, fillcolor=white];\n";
  for (Vertex v : loose) node(v, "  ");
  for (const auto& [key, members] : clusters) {
    const char* kind = by_copy ? "copy" : "block";
    out << "  subgraph cluster_" << kind << "_" << key << " {\n";
    out << "    label=\"" << kind << " " << key << "\";\n";
    out << "    " << kind << "=" << key << ";\n";
    for (Vertex v : members) node(v, "    ");
    out << "  }\n";
  }
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out << "  " << edges[i].u << " -- " << edges[i].v;
    if (labels) out << " [label=\"" << static_cast<int>(labels->edge_labels()[i]) << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

inline std::string to_graphml(const Graph& g, const Labeling* labels = nullptr) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n";
  const char* keys[][2] = {{"i", "int"}, {"j", "int"}, {"k", "int"}, {"l", "int"}, {"m", "int"}, {"apex", "boolean"}};
  for (const auto& [name, type] : keys) {
    out << "  <key id=\"" << name << "\" for=\"node\" attr.name=\"" << name << "\" attr.type=\"" << type << "\"/>\n";
  }
  if (labels) {
    out << "  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"int\"/>\n";
    out << "  <key id=\"elabel\" for=\"edge\" attr.name=\"label\" attr.type=\"int\"/>\n";
  }
  out << "  <graph id=\"G\" edgedefault=\"undirected\">\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "    <node id=\"n" << v << "\">";
    if (auto c = g.coord(v)) {
      if (c->apex) {
        out << "<data key=\"apex\">true</data>";
      } else {
        out << "<data key=\"i\">" << c->block << "</data><data key=\"j\">" << c->slot << "</data>";
        if (c->copy) out << "<data key=\"k\">" << *c->copy << "</data>";
        if (c->arm) out << "<data key=\"l\">" << *c->arm << "</data>";
        if (c->position) out << "<data key=\"m\">" << *c->position << "</data>";
      }
    }
    if (labels) out << "<data key=\"label\">" << static_cast<int>(labels->vertex_labels()[v]) << "</data>";
    out << "</node>\n";
  }
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out << "    <edge source=\"n" << edges[i].u << "\" target=\"n" << edges[i].v << "\"";
    if (labels) {
      out << "><data key=\"elabel\">" << static_cast<int>(labels->edge_labels()[i]) << "</data></edge>\n";
    } else {
      out << "/>\n";
    }
  }
  out << "  </graph>\n</graphml>\n";
  return out.str();
}

}  // namespace goldcord
