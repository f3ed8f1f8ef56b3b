#pragma once

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "goldcord/compositions.hpp"
#include "goldcord/goldberg.hpp"
#include "goldcord/graph.hpp"

namespace goldcord {

using Label = std::uint8_t;

/// Binary vertex labels and the edge labels they induce, |f(u) - f(v)|.
/// Edge labels are aligned with Graph::edges() and always derived.
class Labeling {
 public:
  Labeling() = default;

  const std::vector<Label>& vertex_labels() const noexcept { return vertex_; }
  const std::vector<Label>& edge_labels() const noexcept { return edge_; }

  friend Labeling induce_edge_labels(const Graph& g, std::vector<Label> vertex_labels);
  friend Labeling complement(const Labeling& labeling);

  bool operator==(const Labeling&) const = default;

 private:
  std::vector<Label> vertex_;
  std::vector<Label> edge_;
};

inline Labeling induce_edge_labels(const Graph& g, std::vector<Label> vertex_labels) {
  if (vertex_labels.size() != g.vertex_count()) {
    throw GraphError(ErrorKind::LabelMismatch, std::to_string(vertex_labels.size()) + " labels for " +
                                                   std::to_string(g.vertex_count()) + " vertices");
  }
  for (Label l : vertex_labels) {
    if (l > 1) throw GraphError(ErrorKind::LabelMismatch, "vertex label outside {0,1}");
  }
  Labeling out;
  out.vertex_ = std::move(vertex_labels);
  const auto edges = g.edges();
  out.edge_.reserve(edges.size());
  for (const Edge& e : edges) out.edge_.push_back(out.vertex_[e.u] ^ out.vertex_[e.v]);
  return out;
}

/// Flips every vertex label. Edge labels are unchanged since
/// (1-a) xor (1-b) = a xor b.
inline Labeling complement(const Labeling& labeling) {
  Labeling out = labeling;
  for (Label& l : out.vertex_) l ^= 1;
  return out;
}

struct CordialityReport {
  std::size_t v0 = 0;
  std::size_t v1 = 0;
  std::size_t e0 = 0;
  std::size_t e1 = 0;
  std::size_t vertex_diff = 0;
  std::size_t edge_diff = 0;
  bool is_cordial = false;

  bool operator==(const CordialityReport&) const = default;
};

inline CordialityReport make_report(std::size_t v0, std::size_t v1, std::size_t e0, std::size_t e1) {
  CordialityReport r{v0, v1, e0, e1, 0, 0, false};
  r.vertex_diff = v0 > v1 ? v0 - v1 : v1 - v0;
  r.edge_diff = e0 > e1 ? e0 - e1 : e1 - e0;
  r.is_cordial = r.vertex_diff <= 1 && r.edge_diff <= 1;
  return r;
}

inline CordialityReport cordiality_report(const Graph& g, const Labeling& labeling) {
  if (labeling.vertex_labels().size() != g.vertex_count() || labeling.edge_labels().size() != g.edge_count()) {
    throw GraphError(ErrorKind::LabelMismatch, "labeling sized for a different graph");
  }
  std::size_t v1 = 0;
  for (Label l : labeling.vertex_labels()) v1 += l;
  std::size_t e1 = 0;
  const auto edges = g.edges();
  const auto& vl = labeling.vertex_labels();
  const auto& el = labeling.edge_labels();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (el[i] != (vl[edges[i].u] ^ vl[edges[i].v])) {
      throw GraphError(ErrorKind::LabelMismatch, "edge label is not induced by its endpoints");
    }
    e1 += el[i];
  }
  return make_report(g.vertex_count() - v1, v1, g.edge_count() - e1, e1);
}

// --- theorem labeling patterns ---------------------------------------------

enum class Pattern { P1, P2 };

inline const char* to_string(Pattern p) { return p == Pattern::P1 ? "p1" : "p2"; }

/// Label of slot j (1..8) under each pattern.
/// P1: 0 on even slots. P2: 0 on slots {4,6,7,8}. They differ on slots 2 and 7.
inline Label pattern_label(Pattern p, int slot) {
  if (slot < 1 || slot > slots_per_block) throw GraphError(ErrorKind::InvalidParameter, "slot out of range");
  if (p == Pattern::P1) return slot % 2 == 0 ? 0 : 1;
  switch (slot) {
    case 4:
    case 6:
    case 7:
    case 8: return 0;
    default: return 1;
  }
}

inline std::vector<Label> pattern_vertex_labels(const GoldbergGraph& g, Pattern p) {
  std::vector<Label> labels(g.graph().vertex_count());
  for (Vertex v = 0; v < labels.size(); ++v) labels[v] = pattern_label(p, g.coord(v).second);
  return labels;
}

inline Labeling pattern1(const GoldbergGraph& g) { return induce_edge_labels(g.graph(), pattern_vertex_labels(g, Pattern::P1)); }
inline Labeling pattern2(const GoldbergGraph& g) { return induce_edge_labels(g.graph(), pattern_vertex_labels(g, Pattern::P2)); }

/// Per-copy pattern assignment for a composite, stored explicitly so it can
/// be inspected. Entries follow CompositeGraph::copies() order.
struct PatternSchedule {
  struct Entry {
    CopyCoord where;
    Pattern pattern;

    bool operator==(const Entry&) const = default;
  };
  std::vector<Entry> entries;
  std::optional<Label> apex_label;

  bool operator==(const PatternSchedule&) const = default;
};

inline Labeling apply_schedule(const CompositeGraph& g, const PatternSchedule& schedule) {
  const auto& copies = g.copies();
  if (schedule.entries.size() != copies.size()) {
    throw GraphError(ErrorKind::LabelMismatch, "schedule has " + std::to_string(schedule.entries.size()) +
                                                   " entries for " + std::to_string(copies.size()) + " copies");
  }
  if (g.has_apex() != schedule.apex_label.has_value()) {
    throw GraphError(ErrorKind::LabelMismatch, "apex label presence does not match composite");
  }
  std::vector<Label> labels(g.graph().vertex_count(), 0);
  if (g.has_apex()) labels[g.apex()] = *schedule.apex_label;
  for (std::size_t c = 0; c < copies.size(); ++c) {
    if (schedule.entries[c].where != copies[c]) {
      throw GraphError(ErrorKind::LabelMismatch, "schedule entry does not match copy order");
    }
    for (int i = 1; i <= g.params().n; ++i) {
      for (int j = 1; j <= slots_per_block; ++j) {
        labels[g.vertex(static_cast<int>(c) + 1, i, j)] = pattern_label(schedule.entries[c].pattern, j);
      }
    }
  }
  return induce_edge_labels(g.graph(), std::move(labels));
}

/// Every copy uses the same pattern; apex (if any) labelled 0.
inline PatternSchedule uniform_schedule(const CompositeGraph& g, Pattern p) {
  PatternSchedule s;
  for (const auto& c : g.copies()) s.entries.push_back({c, p});
  if (g.has_apex()) s.apex_label = 0;
  return s;
}

/// Path union: copy k uses P1 when k mod 4 is 1 or 2, P2 otherwise.
inline PatternSchedule path_union_schedule(const CompositeGraph& g) {
  PatternSchedule s;
  for (const auto& c : g.copies()) {
    const int r = c.copy % 4;
    s.entries.push_back({c, (r == 1 || r == 2) ? Pattern::P1 : Pattern::P2});
  }
  return s;
}

/// Open star: apex 0, branches 1..ceil(t/2) use P1, the rest P2.
inline PatternSchedule open_star_schedule(const CompositeGraph& g) {
  const int t = g.params().t;
  const int first_half = (t + 1) / 2;
  PatternSchedule s;
  s.apex_label = 0;
  for (const auto& c : g.copies()) s.entries.push_back({c, c.copy <= first_half ? Pattern::P1 : Pattern::P2});
  return s;
}

/// One-point union: apex 0; arms 1..ceil(t/2) use P1 throughout; on the other
/// arms odd positions use P2 and even positions P1.
inline PatternSchedule one_point_union_schedule(const CompositeGraph& g) {
  const int t = g.params().t;
  const int first_half = (t + 1) / 2;
  PatternSchedule s;
  s.apex_label = 0;
  for (const auto& c : g.copies()) {
    Pattern p = Pattern::P1;
    if (c.arm > first_half && c.position % 2 == 1) p = Pattern::P2;
    s.entries.push_back({c, p});
  }
  return s;
}

inline PatternSchedule theorem_schedule(const CompositeGraph& g) {
  switch (g.family()) {
    case Family::PathUnion: return path_union_schedule(g);
    case Family::OpenStar: return open_star_schedule(g);
    case Family::OnePointUnion: return one_point_union_schedule(g);
  }
  throw GraphError(ErrorKind::InvalidParameter, "unknown family");
}

struct ScheduledLabeling {
  CompositeGraph graph;
  PatternSchedule schedule;
  Labeling labeling;
};

inline ScheduledLabeling label_path_union(int n, int m, AttachmentPolicy policy = {}) {
  auto g = path_union(n, m, policy);
  auto s = path_union_schedule(g);
  auto l = apply_schedule(g, s);
  return {std::move(g), std::move(s), std::move(l)};
}

inline ScheduledLabeling label_open_star(int n, int t, AttachmentPolicy policy = {}) {
  auto g = open_star(n, t, policy);
  auto s = open_star_schedule(g);
  auto l = apply_schedule(g, s);
  return {std::move(g), std::move(s), std::move(l)};
}

inline ScheduledLabeling label_one_point_union(int n, int t, int p, AttachmentPolicy policy = {}) {
  auto g = one_point_union_paths(n, t, p, policy);
  auto s = one_point_union_schedule(g);
  auto l = apply_schedule(g, s);
  return {std::move(g), std::move(s), std::move(l)};
}

}  // namespace goldcord
