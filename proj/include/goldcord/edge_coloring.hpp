#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <queue>
#include <vector>

#include "goldcord/graph.hpp"
#include "goldcord/progress.hpp"
#include "goldcord/properties.hpp"

namespace goldcord {

/// Colors in {0,1,2}, aligned with Graph::edges().
using EdgeColoring = std::vector<std::uint8_t>;

struct ColoringSearch {
  std::optional<EdgeColoring> coloring;
  /// Set when the node budget ran out; `coloring` is then meaningless.
  bool exhausted = false;
  std::uint64_t nodes = 0;
  std::chrono::nanoseconds elapsed{0};
};

namespace detail {

class CubicColoringSolver {
 public:
  CubicColoringSolver(const Graph& g, std::uint64_t max_nodes, ProgressFn progress)
      : edges_(g.edges()),
        incident_(g.vertex_count()),
        color_(edges_.size(), kNone),
        max_nodes_(max_nodes),
        ticker_(std::move(progress)) {
    std::vector<std::size_t> fill(g.vertex_count(), 0);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      incident_[edges_[i].u][fill[edges_[i].u]++] = i;
      incident_[edges_[i].v][fill[edges_[i].v]++] = i;
    }
    build_order(g);
  }

  std::optional<EdgeColoring> solve() {
    if (!branch(0)) return std::nullopt;
    EdgeColoring out(color_.begin(), color_.end());
    return out;
  }

  std::uint64_t nodes() const { return nodes_; }
  bool exhausted() const { return exhausted_; }

 private:
  static constexpr std::uint8_t kNone = 3;

  // Edges in the order a BFS from vertex 0 first touches them; remaining
  // components follow from their smallest vertex.
  void build_order(const Graph& g) {
    std::vector<bool> seen_vertex(g.vertex_count(), false), seen_edge(edges_.size(), false);
    std::queue<Vertex> q;
    for (Vertex root = 0; root < g.vertex_count(); ++root) {
      if (seen_vertex[root]) continue;
      seen_vertex[root] = true;
      q.push(root);
      while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        for (std::size_t e : incident_[u]) {
          if (!seen_edge[e]) {
            seen_edge[e] = true;
            order_.push_back(e);
          }
          Vertex w = edges_[e].u == u ? edges_[e].v : edges_[e].u;
          if (!seen_vertex[w]) {
            seen_vertex[w] = true;
            q.push(w);
          }
        }
      }
    }
  }

  bool conflicts(std::size_t e, std::uint8_t c) const {
    for (Vertex x : {edges_[e].u, edges_[e].v}) {
      for (std::size_t f : incident_[x]) {
        if (f != e && color_[f] == c) return true;
      }
    }
    return false;
  }

  // Assigns c to e and closes under the rule that the three edges at a
  // vertex carry three distinct colors. Returns false on contradiction;
  // every assignment made is on trail_ either way.
  bool assign(std::size_t e, std::uint8_t c) {
    std::vector<std::pair<std::size_t, std::uint8_t>> pending{{e, c}};
    while (!pending.empty()) {
      auto [edge, col] = pending.back();
      pending.pop_back();
      if (color_[edge] != kNone) {
        if (color_[edge] != col) return false;
        continue;
      }
      if (conflicts(edge, col)) return false;
      color_[edge] = col;
      trail_.push_back(edge);
      for (Vertex x : {edges_[edge].u, edges_[edge].v}) {
        std::size_t free_edge = 0;
        int uncolored = 0;
        std::uint8_t used = 0;
        for (std::size_t f : incident_[x]) {
          if (color_[f] == kNone) {
            ++uncolored;
            free_edge = f;
          } else {
            used |= static_cast<std::uint8_t>(1u << color_[f]);
          }
        }
        if (uncolored == 1) {
          const auto forced = static_cast<std::uint8_t>(used == 0b011 ? 2 : used == 0b101 ? 1 : 0);
          pending.emplace_back(free_edge, forced);
        }
      }
    }
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      color_[trail_.back()] = kNone;
      trail_.pop_back();
    }
  }

  bool branch(std::size_t pos) {
    while (pos < order_.size() && color_[order_[pos]] != kNone) ++pos;
    if (pos == order_.size()) return true;
    const std::size_t e = order_[pos];
    // Color permutations are symmetries, so the first decision is fixed.
    const std::uint8_t max_color = trail_.empty() ? 1 : 3;
    for (std::uint8_t c = 0; c < max_color; ++c) {
      if (nodes_ >= max_nodes_) {
        exhausted_ = true;
        return false;
      }
      ++nodes_;
      ticker_.tick(nodes_);
      const std::size_t mark = trail_.size();
      if (assign(e, c) && branch(pos + 1)) return true;
      undo_to(mark);
      if (exhausted_) return false;
    }
    return false;
  }

  std::vector<Edge> edges_;
  std::vector<std::array<std::size_t, 3>> incident_;
  std::vector<std::uint8_t> color_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> trail_;
  std::uint64_t nodes_ = 0;
  std::uint64_t max_nodes_;
  bool exhausted_ = false;
  ProgressTicker ticker_;
};

}  // namespace detail

/// Complete backtracking search for a proper 3-edge-coloring of a cubic graph.
/// Unless the node budget is exhausted, an empty `coloring` in the result
/// certifies that none exists.
inline ColoringSearch search_3_edge_coloring(const Graph& g, std::uint64_t max_nodes = UINT64_MAX,
                                             ProgressFn progress = {}) {
  if (!is_cubic(g)) throw GraphError(ErrorKind::NotCubic, "3-edge-coloring search requires a cubic graph");
  const auto start = std::chrono::steady_clock::now();
  detail::CubicColoringSolver solver(g, max_nodes, std::move(progress));
  ColoringSearch out;
  out.coloring = solver.solve();
  out.nodes = solver.nodes();
  out.exhausted = solver.exhausted();
  out.elapsed = std::chrono::steady_clock::now() - start;
  return out;
}

inline std::optional<EdgeColoring> find_3_edge_coloring(const Graph& g) {
  return search_3_edge_coloring(g).coloring;
}

inline bool is_proper_edge_coloring(const Graph& g, const EdgeColoring& colors) {
  const auto edges = g.edges();
  if (colors.size() != edges.size()) return false;
  std::vector<std::uint8_t> seen(g.vertex_count(), 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (colors[i] > 2) return false;
    const auto bit = static_cast<std::uint8_t>(1u << colors[i]);
    for (Vertex x : {edges[i].u, edges[i].v}) {
      if (seen[x] & bit) return false;
      seen[x] |= bit;
    }
  }
  return true;
}

}  // namespace goldcord
