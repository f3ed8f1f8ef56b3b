#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "goldcord/graph.hpp"
#include "goldcord/labeling.hpp"
#include "goldcord/progress.hpp"

namespace goldcord {

inline constexpr std::size_t exhaustive_vertex_limit = 24;

struct SearchBudget {
  /// Flip moves allowed to the local search. Exhaustive enumeration ignores it.
  std::uint64_t max_nodes = 1'000'000;
  std::uint64_t seed = 0;
};

enum class SearchVerdict { Found, Absent, Unknown };

inline const char* to_string(SearchVerdict v) {
  switch (v) {
    case SearchVerdict::Found: return "found";
    case SearchVerdict::Absent: return "absent";
    case SearchVerdict::Unknown: return "unknown";
  }
  return "?";
}

struct CordialSearch {
  SearchVerdict verdict = SearchVerdict::Unknown;
  std::optional<Labeling> labeling;
  bool exhaustive = false;
  std::uint64_t nodes = 0;
};

namespace detail {

struct IncidentEdges {
  explicit IncidentEdges(const Graph& g) : edges(g.edges()), at(g.vertex_count()) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      at[edges[i].u].push_back(i);
      at[edges[i].v].push_back(i);
    }
  }
  std::vector<Edge> edges;
  std::vector<std::vector<std::size_t>> at;
};

inline std::size_t abs_diff(std::size_t a, std::size_t b) { return a > b ? a - b : b - a; }

// Gray-code walk over all labelings with vertex 0 fixed to 0. Complementing
// a labeling preserves both |v0-v1| and every edge label, so the other half
// of the space adds nothing.
inline CordialSearch enumerate_cordial(const Graph& g, ProgressTicker& ticker) {
  CordialSearch out;
  out.exhaustive = true;
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  if (n == 0) {
    out.verdict = SearchVerdict::Found;
    out.labeling = induce_edge_labels(g, {});
    out.nodes = 1;
    return out;
  }
  IncidentEdges inc(g);
  std::vector<Label> labels(n, 0);
  std::size_t ones = 0;
  std::size_t edge_ones = 0;
  const std::uint64_t steps = std::uint64_t{1} << (n - 1);
  for (std::uint64_t step = 0;; ++step) {
    ++out.nodes;
    ticker.tick(out.nodes);
    if (abs_diff(n - ones, ones) <= 1 && abs_diff(m - edge_ones, edge_ones) <= 1) {
      out.verdict = SearchVerdict::Found;
      out.labeling = induce_edge_labels(g, labels);
      return out;
    }
    if (step + 1 == steps) break;
    // flip vertex 1 + (index of lowest set bit of step+1)
    const auto bit = static_cast<std::size_t>(std::countr_zero(step + 1));
    const Vertex v = static_cast<Vertex>(bit + 1);
    for (std::size_t e : inc.at[v]) {
      const Vertex w = inc.edges[e].u == v ? inc.edges[e].v : inc.edges[e].u;
      if (labels[v] ^ labels[w]) {
        --edge_ones;
      } else {
        ++edge_ones;
      }
    }
    labels[v] ^= 1;
    if (labels[v]) {
      ++ones;
    } else {
      --ones;
    }
  }
  out.verdict = SearchVerdict::Absent;
  return out;
}

// Best-improvement single-flip descent on |v0-v1| + |e0-e1|, ties to the
// lowest vertex ID; a seeded random flip escapes when no move improves.
inline CordialSearch local_search_cordial(const Graph& g, const SearchBudget& budget, ProgressTicker& ticker) {
  CordialSearch out;
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  IncidentEdges inc(g);
  std::mt19937_64 rng(budget.seed);

  std::vector<Label> labels(n, 0);
  for (std::size_t v = 0; v < n; v += 2) labels[v] = 1;
  std::shuffle(labels.begin(), labels.end(), rng);

  std::size_t ones = 0;
  for (Label l : labels) ones += l;
  std::size_t edge_ones = 0;
  for (const Edge& e : inc.edges) edge_ones += labels[e.u] ^ labels[e.v];

  auto cost = [&](std::size_t vo, std::size_t eo) { return abs_diff(n - vo, vo) + abs_diff(m - eo, eo); };
  // edge-one count after flipping v
  auto flipped_edge_ones = [&](Vertex v) {
    std::size_t eo = edge_ones;
    for (std::size_t e : inc.at[v]) {
      const Vertex w = inc.edges[e].u == v ? inc.edges[e].v : inc.edges[e].u;
      if (labels[v] ^ labels[w]) {
        --eo;
      } else {
        ++eo;
      }
    }
    return eo;
  };
  auto apply_flip = [&](Vertex v) {
    edge_ones = flipped_edge_ones(v);
    labels[v] ^= 1;
    if (labels[v]) {
      ++ones;
    } else {
      --ones;
    }
  };

  std::uniform_int_distribution<std::size_t> pick(0, n == 0 ? 0 : n - 1);
  while (true) {
    if (abs_diff(n - ones, ones) <= 1 && abs_diff(m - edge_ones, edge_ones) <= 1) {
      out.verdict = SearchVerdict::Found;
      out.labeling = induce_edge_labels(g, labels);
      return out;
    }
    if (out.nodes >= budget.max_nodes || n == 0) break;
    ++out.nodes;
    ticker.tick(out.nodes);

    const std::size_t current = cost(ones, edge_ones);
    std::size_t best_cost = current;
    std::optional<Vertex> best;
    for (Vertex v = 0; v < n; ++v) {
      const std::size_t c = cost(labels[v] ? ones - 1 : ones + 1, flipped_edge_ones(v));
      if (c < best_cost) {
        best_cost = c;
        best = v;
      }
    }
    apply_flip(best ? *best : static_cast<Vertex>(pick(rng)));
  }
  out.verdict = SearchVerdict::Unknown;
  return out;
}

}  // namespace detail

/// Looks for a cordial labeling. Up to 24 vertices the whole space is
/// enumerated and Absent is a certificate; above that a seeded local search
/// runs within `budget` and may give up with Unknown.
inline CordialSearch search_cordial(const Graph& g, const SearchBudget& budget = {}, ProgressFn progress = {}) {
  ProgressTicker ticker(std::move(progress));
  if (g.vertex_count() <= exhaustive_vertex_limit) return detail::enumerate_cordial(g, ticker);
  return detail::local_search_cordial(g, budget, ticker);
}

}  // namespace goldcord
