#pragma once

#include <algorithm>
#include <vector>

#include "goldcord/graph.hpp"
#include "goldcord/properties.hpp"

namespace goldcord {

inline constexpr std::size_t isomorphism_vertex_limit = 16;

namespace detail {

class IsomorphismMatcher {
 public:
  IsomorphismMatcher(const Graph& a, const Graph& b)
      : a_(a), b_(b), map_(a.vertex_count(), kUnmapped), used_(b.vertex_count(), false) {
    // Most-constrained first: high degree, then vertices adjacent to
    // already ordered ones.
    std::vector<bool> placed(a.vertex_count(), false);
    for (std::size_t step = 0; step < a.vertex_count(); ++step) {
      Vertex best = 0;
      long best_score = -1;
      for (Vertex v = 0; v < a.vertex_count(); ++v) {
        if (placed[v]) continue;
        long links = 0;
        for (Vertex w : a.neighbors(v)) links += placed[w] ? 1 : 0;
        const long score = links * 64 + static_cast<long>(a.degree(v));
        if (score > best_score) {
          best_score = score;
          best = v;
        }
      }
      placed[best] = true;
      order_.push_back(best);
    }
  }

  bool run() { return extend(0); }

 private:
  static constexpr Vertex kUnmapped = ~Vertex{0};

  bool consistent(Vertex v, Vertex image) const {
    if (a_.degree(v) != b_.degree(image)) return false;
    for (Vertex w = 0; w < a_.vertex_count(); ++w) {
      if (map_[w] == kUnmapped) continue;
      if (a_.has_edge(v, w) != b_.has_edge(image, map_[w])) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex v = order_[depth];
    for (Vertex image = 0; image < b_.vertex_count(); ++image) {
      if (used_[image] || !consistent(v, image)) continue;
      map_[v] = image;
      used_[image] = true;
      if (extend(depth + 1)) return true;
      map_[v] = kUnmapped;
      used_[image] = false;
    }
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  std::vector<Vertex> map_;
  std::vector<bool> used_;
  std::vector<Vertex> order_;
};

}  // namespace detail

/// Exact isomorphism test by backtracking over degree-compatible maps.
/// Limited to graphs of at most 16 vertices.
inline bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() > isomorphism_vertex_limit || b.vertex_count() > isomorphism_vertex_limit) {
    throw GraphError(ErrorKind::BudgetExceeded, "isomorphism test is limited to " +
                                                    std::to_string(isomorphism_vertex_limit) + " vertices");
  }
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  auto da = degree_sequence(a);
  auto db = degree_sequence(b);
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return detail::IsomorphismMatcher(a, b).run();
}

}  // namespace goldcord
