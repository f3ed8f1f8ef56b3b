#pragma once

#include <array>
#include <utility>
#include <vector>

#include "goldcord/graph.hpp"

namespace goldcord {

inline constexpr int slots_per_block = 8;

/// The nine edges inside one block, as (slot, slot) pairs.
inline constexpr std::array<std::pair<int, int>, 9> block_intra_edges{{
    {1, 3}, {2, 4}, {3, 5}, {5, 7},  // (j, j+2), j = 1,2,3,5
    {1, 6}, {3, 8},                  // (j, j+5), j = 1,3
    {1, 2}, {4, 5}, {6, 7},          // (j, j+1), j = 1,4,6
}};

/// Edges from block i to block i+1 (cyclically), as (slot in i, slot in i+1).
inline constexpr std::array<std::pair<int, int>, 3> block_link_edges{{
    {8, 8},
    {6, 7},
    {4, 2},
}};

/// Goldberg snark G_n: n eight-vertex blocks joined cyclically.
/// Vertex (i, j) has ID 8(i-1) + (j-1).
class GoldbergGraph {
 public:
  explicit GoldbergGraph(int n) : n_(n), graph_(check_n(n) * slots_per_block) {
    for (int i = 1; i <= n; ++i) {
      const int next = i % n + 1;
      for (auto [a, b] : block_intra_edges) graph_.add_edge(vertex(i, a), vertex(i, b));
      for (auto [a, b] : block_link_edges) graph_.add_edge(vertex(i, a), vertex(next, b));
      for (int j = 1; j <= slots_per_block; ++j) {
        VertexCoord c;
        c.block = i;
        c.slot = j;
        graph_.set_coord(vertex(i, j), c);
      }
    }
  }

  int n() const noexcept { return n_; }
  const Graph& graph() const noexcept { return graph_; }

  /// n = 3 builds fine but has girth 3 and lies outside the cordiality theorem's range.
  bool outside_theorem_range() const noexcept { return n_ == 3; }

  Vertex vertex(int block, int slot) const {
    if (block < 1 || block > n_ || slot < 1 || slot > slots_per_block) {
      throw GraphError(ErrorKind::VertexOutOfRange,
                       "coordinate (" + std::to_string(block) + "," + std::to_string(slot) + ")");
    }
    return static_cast<Vertex>(slots_per_block * (block - 1) + (slot - 1));
  }

  std::pair<int, int> coord(Vertex v) const {
    graph_.check_vertex(v);
    return {static_cast<int>(v) / slots_per_block + 1, static_cast<int>(v) % slots_per_block + 1};
  }

  /// Induced subgraph H_i on the eight vertices of block i.
  Graph block_subgraph(int block) const {
    if (block < 1 || block > n_) {
      throw GraphError(ErrorKind::InvalidParameter, "block index " + std::to_string(block) + " outside 1.." +
                                                        std::to_string(n_));
    }
    std::vector<Vertex> members;
    for (int j = 1; j <= slots_per_block; ++j) members.push_back(vertex(block, j));
    return induced_subgraph(graph_, members);
  }

 private:
  static std::size_t check_n(int n) {
    if (n < 3) throw GraphError(ErrorKind::InvalidParameter, "n must be at least 3, got " + std::to_string(n));
    if (n % 2 == 0) throw GraphError(ErrorKind::InvalidParameter, "n must be odd, got " + std::to_string(n));
    return static_cast<std::size_t>(n);
  }

  int n_;
  Graph graph_;
};

inline GoldbergGraph goldberg(int n) { return GoldbergGraph(n); }

inline Graph block_subgraph(const GoldbergGraph& g, int block) { return g.block_subgraph(block); }

}  // namespace goldcord
