#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <vector>

#include "goldcord/graph.hpp"

namespace goldcord {

inline bool is_cubic(const Graph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 3) return false;
  }
  return true;
}

/// Component index per vertex, numbered in order of smallest member.
inline std::vector<std::size_t> connected_components(const Graph& g, std::size_t* count = nullptr) {
  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> comp(g.vertex_count(), unset);
  std::size_t next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (comp[s] != unset) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (comp[w] == unset) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return comp;
}

inline bool is_connected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  std::size_t count = 0;
  connected_components(g, &count);
  return count == 1;
}

/// Bridges by lowpoint DFS (iterative), returned in canonical edge order.
inline std::vector<Edge> find_bridges(const Graph& g) {
  const std::size_t n = g.vertex_count();
  constexpr auto unvisited = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> disc(n, unvisited), low(n, 0);
  std::vector<Edge> bridges;
  std::size_t timer = 0;

  struct Frame {
    Vertex v;
    Vertex parent;
    bool has_parent;
    std::size_t next;
  };
  std::vector<Frame> stack;

  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != unvisited) continue;
    disc[root] = low[root] = timer++;
    stack.push_back({root, 0, false, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        Vertex w = nbrs[f.next++];
        if (f.has_parent && w == f.parent) continue;  // simple graph: one parent edge
        if (disc[w] == unvisited) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, f.v, true, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        Frame done = f;
        stack.pop_back();
        if (done.has_parent) {
          low[done.parent] = std::min(low[done.parent], low[done.v]);
          if (low[done.v] > disc[done.parent]) bridges.emplace_back(done.parent, done.v);
        }
      }
    }
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

/// Shortest cycle length, or nullopt for a forest.
///
/// BFS from every vertex; a non-tree edge (u,w) closes a closed walk of
/// length dist[u] + dist[w] + 1, and the minimum over all roots is exact.
inline std::optional<std::size_t> girth(const Graph& g) {
  const std::size_t n = g.vertex_count();
  constexpr auto inf = std::numeric_limits<std::size_t>::max();
  std::size_t best = inf;
  std::vector<std::size_t> dist(n), parent(n);
  std::queue<Vertex> q;
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), inf);
    dist[root] = 0;
    parent[root] = inf;
    q.push(root);
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      if (2 * dist[u] + 1 >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == inf) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          q.push(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
    q = {};
  }
  if (best == inf) return std::nullopt;
  return best;
}

struct CyclicCutResult {
  bool holds = true;
  std::uint64_t subsets_checked = 0;
  std::vector<Edge> witness;  // a cyclic cut of size < k when !holds
};

inline constexpr std::uint64_t default_cut_budget = 50'000'000;

namespace detail {

inline std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t num = n - k + i;
    if (r > std::numeric_limits<std::uint64_t>::max() / num) return std::numeric_limits<std::uint64_t>::max();
    r = r * num / i;
  }
  return r;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { reset(); }

  void reset() { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// Number of components of g - removed that contain a cycle.
inline std::size_t cyclic_component_count(const Graph& g, const std::vector<Edge>& edges,
                                          const std::vector<std::size_t>& removed, DisjointSets& dsu,
                                          std::vector<std::size_t>& vcount, std::vector<std::size_t>& ecount) {
  dsu.reset();
  std::size_t r = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (r < removed.size() && removed[r] == i) {
      ++r;
      continue;
    }
    dsu.unite(edges[i].u, edges[i].v);
  }
  std::fill(vcount.begin(), vcount.end(), 0);
  std::fill(ecount.begin(), ecount.end(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) ++vcount[dsu.find(v)];
  r = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (r < removed.size() && removed[r] == i) {
      ++r;
      continue;
    }
    ++ecount[dsu.find(edges[i].u)];
  }
  std::size_t cyclic = 0;
  for (std::size_t c = 0; c < vcount.size(); ++c) {
    if (vcount[c] > 0 && ecount[c] >= vcount[c]) ++cyclic;
  }
  return cyclic;
}

}  // namespace detail

/// Threshold test for cyclic edge connectivity: true iff no set of fewer than
/// k edges leaves at least two components that each contain a cycle.
/// Exhaustive over all edge subsets of size 1..k-1, so k is capped at 4 and
/// the total subset count at `max_subsets`.
inline CyclicCutResult cyclic_edge_connectivity_check(const Graph& g, int k,
                                                      std::uint64_t max_subsets = default_cut_budget) {
  if (k < 1) throw GraphError(ErrorKind::InvalidParameter, "cyclic connectivity threshold must be >= 1");
  if (k > 4) {
    throw GraphError(ErrorKind::BudgetExceeded,
                     "cyclic connectivity threshold " + std::to_string(k) + " exceeds enumeration limit 4");
  }
  const std::vector<Edge> edges = g.edges();
  const std::size_t m = edges.size();
  std::uint64_t total = 0;
  for (int s = 1; s < k; ++s) {
    const auto c = detail::binomial_saturating(m, static_cast<std::uint64_t>(s));
    total = (total > std::numeric_limits<std::uint64_t>::max() - c) ? std::numeric_limits<std::uint64_t>::max()
                                                                      : total + c;
  }
  if (total > max_subsets) {
    throw GraphError(ErrorKind::BudgetExceeded, std::to_string(total) + " edge subsets exceed budget of " +
                                                    std::to_string(max_subsets));
  }

  CyclicCutResult result;
  detail::DisjointSets dsu(g.vertex_count());
  std::vector<std::size_t> vcount(g.vertex_count()), ecount(g.vertex_count());
  std::vector<std::size_t> removed;

  for (int size = 1; size < k && result.holds; ++size) {
    removed.resize(static_cast<std::size_t>(size));
    std::iota(removed.begin(), removed.end(), std::size_t{0});
    if (removed.size() > m) break;
    while (true) {
      ++result.subsets_checked;
      if (detail::cyclic_component_count(g, edges, removed, dsu, vcount, ecount) >= 2) {
        result.holds = false;
        for (std::size_t i : removed) result.witness.push_back(edges[i]);
        break;
      }
      // next combination in lexicographic order
      std::size_t i = removed.size();
      while (i > 0 && removed[i - 1] == m - removed.size() + (i - 1)) --i;
      if (i == 0) break;
      ++removed[i - 1];
      for (std::size_t j = i; j < removed.size(); ++j) removed[j] = removed[j - 1] + 1;
    }
  }
  return result;
}

inline bool cyclic_edge_connectivity_ge(const Graph& g, int k, std::uint64_t max_subsets = default_cut_budget) {
  return cyclic_edge_connectivity_check(g, k, max_subsets).holds;
}

}  // namespace goldcord
