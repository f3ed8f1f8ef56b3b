#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace goldcord {

using Vertex = std::uint32_t;

enum class ErrorKind {
  SelfLoop,
  DuplicateEdge,
  VertexOutOfRange,
  NotAnEdge,
  NotCubic,
  BudgetExceeded,
  InvalidParameter,
  LabelMismatch,
  Format,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SelfLoop: return "self-loop";
    case ErrorKind::DuplicateEdge: return "duplicate edge";
    case ErrorKind::VertexOutOfRange: return "vertex out of range";
    case ErrorKind::NotAnEdge: return "not an edge";
    case ErrorKind::NotCubic: return "graph is not cubic";
    case ErrorKind::BudgetExceeded: return "budget exceeded";
    case ErrorKind::InvalidParameter: return "invalid parameter";
    case ErrorKind::LabelMismatch: return "labeling does not match graph";
    case ErrorKind::Format: return "malformed input";
  }
  return "unknown error";
}

class GraphError : public std::runtime_error {
 public:
  GraphError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Unordered vertex pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  auto operator<=>(const Edge&) const = default;
};

/// Structured address of a vertex inside a Goldberg block or a composite.
/// block/slot are 1-based; copy/arm/position are present only in composites.
struct VertexCoord {
  int block = 0;
  int slot = 0;
  std::optional<int> copy;
  std::optional<int> arm;
  std::optional<int> position;
  bool apex = false;

  static VertexCoord apex_vertex() {
    VertexCoord c;
    c.apex = true;
    return c;
  }

  auto operator<=>(const VertexCoord&) const = default;
};

/// Simple undirected graph on dense vertex IDs 0..vertex_count()-1.
///
/// Adjacency lists are kept sorted so that traversal order, and therefore
/// every search built on top of it, is deterministic.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}

  std::size_t vertex_count() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  void add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
      throw GraphError(ErrorKind::SelfLoop, "(" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    auto& nu = adj_[u];
    auto pos = std::lower_bound(nu.begin(), nu.end(), v);
    if (pos != nu.end() && *pos == v) {
      throw GraphError(ErrorKind::DuplicateEdge, "(" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    nu.insert(pos, v);
    auto& nv = adj_[v];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++edge_count_;
  }

  void add_edge(Edge e) { add_edge(e.u, e.v); }

  Vertex add_vertex() {
    adj_.emplace_back();
    return static_cast<Vertex>(adj_.size() - 1);
  }

  bool has_edge(Vertex u, Vertex v) const {
    if (u >= adj_.size() || v >= adj_.size()) return false;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  std::span<const Vertex> neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v];
  }

  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  /// Canonical edge list: each pair ascending, list sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < adj_.size(); ++u) {
      for (Vertex v : adj_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  const std::map<Vertex, VertexCoord>& coords() const noexcept { return coords_; }

  void set_coord(Vertex v, const VertexCoord& c) {
    check_vertex(v);
    coords_[v] = c;
  }

  std::optional<VertexCoord> coord(Vertex v) const {
    auto it = coords_.find(v);
    if (it == coords_.end()) return std::nullopt;
    return it->second;
  }

  void clear_coords() { coords_.clear(); }

  /// Structural equality: same vertex count and edge set. Coordinates ignored.
  bool same_structure(const Graph& other) const { return adj_ == other.adj_; }

  bool operator==(const Graph& other) const {
    return adj_ == other.adj_ && coords_ == other.coords_;
  }

  void check_vertex(Vertex v) const {
    if (v >= adj_.size()) {
      throw GraphError(ErrorKind::VertexOutOfRange,
                       std::to_string(v) + " >= " + std::to_string(adj_.size()));
    }
  }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::map<Vertex, VertexCoord> coords_;
  std::size_t edge_count_ = 0;
};

inline Graph new_graph(std::size_t n) { return Graph(n); }

inline Graph with_edge(Graph g, Vertex u, Vertex v) {
  g.add_edge(u, v);
  return g;
}

inline Graph from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) g.add_edge(e);
  return g;
}

inline Graph from_edges(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

inline std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> out(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) out[v] = g.degree(v);
  return out;
}

/// Adds a vertex v' with N(v') = N(v).
inline Graph duplicate_vertex(const Graph& g, Vertex v) {
  g.check_vertex(v);
  Graph out = g;
  Vertex copy = out.add_vertex();
  for (Vertex w : g.neighbors(v)) out.add_edge(copy, w);
  return out;
}

inline Graph delete_edges(const Graph& g, std::span<const Edge> removed) {
  std::set<Edge> drop;
  for (const Edge& e : removed) {
    if (!g.has_edge(e.u, e.v)) {
      throw GraphError(ErrorKind::NotAnEdge, "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }
    drop.insert(e);
  }
  Graph out(g.vertex_count());
  for (const Edge& e : g.edges()) {
    if (!drop.contains(e)) out.add_edge(e);
  }
  for (const auto& [v, c] : g.coords()) out.set_coord(v, c);
  return out;
}

/// Replaces e = (u,v) with (u,w),(w,v) for a new vertex w = vertex_count().
inline Graph subdivide_edge(const Graph& g, Edge e) {
  if (!g.has_edge(e.u, e.v)) {
    throw GraphError(ErrorKind::NotAnEdge, "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
  }
  Graph out(g.vertex_count() + 1);
  for (const Edge& f : g.edges()) {
    if (f != e) out.add_edge(f);
  }
  const auto mid = static_cast<Vertex>(g.vertex_count());
  out.add_edge(e.u, mid);
  out.add_edge(mid, e.v);
  for (const auto& [v, c] : g.coords()) out.set_coord(v, c);
  return out;
}

/// Induced subgraph on `keep`, relabelled 0..keep.size()-1 in the given order.
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::map<Vertex, Vertex> index;
  for (Vertex v : keep) {
    g.check_vertex(v);
    index.emplace(v, static_cast<Vertex>(index.size()));
  }
  if (index.size() != keep.size()) {
    throw GraphError(ErrorKind::InvalidParameter, "induced_subgraph: repeated vertex");
  }
  Graph out(keep.size());
  for (const Edge& e : g.edges()) {
    auto a = index.find(e.u);
    auto b = index.find(e.v);
    if (a != index.end() && b != index.end()) out.add_edge(a->second, b->second);
  }
  for (const auto& [old_id, new_id] : index) {
    if (auto c = g.coord(old_id)) out.set_coord(new_id, *c);
  }
  return out;
}

// Small fixed graphs used as controls throughout.

inline Graph petersen() {
  Graph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer cycle
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    g.add_edge(i, 5 + i);                // spoke
  }
  return g;
}

inline Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

inline Graph path_graph(std::size_t n) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

inline Graph cycle_graph(std::size_t n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(static_cast<Vertex>(n - 1), 0);
  return g;
}

}  // namespace goldcord
