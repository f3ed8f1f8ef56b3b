#pragma once

#include <map>
#include <string>
#include <vector>

#include "goldcord/goldberg.hpp"
#include "goldcord/graph.hpp"

namespace goldcord {

/// Which vertex of each Goldberg copy carries the joining edges.
struct AttachmentPolicy {
  int block = 1;
  int slot = 7;
};

enum class Family { PathUnion, OpenStar, OnePointUnion };

inline const char* to_string(Family f) {
  switch (f) {
    case Family::PathUnion: return "path_union";
    case Family::OpenStar: return "open_star";
    case Family::OnePointUnion: return "one_point_union";
  }
  return "?";
}

struct CompositeParams {
  int n = 0;
  int m = 0;  // path union copies
  int t = 0;  // star branches / arms
  int p = 0;  // copies per arm
};

/// Location of one Goldberg copy inside a composite.
/// PathUnion: copy = k. OpenStar: copy = branch k.
/// OnePointUnion: arm = l, position = m (1 nearest the apex), copy = (l-1)p + m.
struct CopyCoord {
  int copy = 0;
  int arm = 0;
  int position = 0;

  auto operator<=>(const CopyCoord&) const = default;
};

class CompositeGraph {
 public:
  const Graph& graph() const noexcept { return graph_; }
  Family family() const noexcept { return family_; }
  const CompositeParams& params() const noexcept { return params_; }
  const AttachmentPolicy& policy() const noexcept { return policy_; }
  bool has_apex() const noexcept { return family_ != Family::PathUnion; }
  /// Apex is always vertex 0 when present.
  Vertex apex() const {
    if (!has_apex()) throw GraphError(ErrorKind::InvalidParameter, "path union has no apex");
    return 0;
  }

  const std::vector<CopyCoord>& copies() const noexcept { return copies_; }

  /// ID of vertex (block, slot) inside the copy with 1-based index `copy`.
  Vertex vertex(int copy, int block, int slot) const {
    if (copy < 1 || copy > static_cast<int>(copies_.size()) || block < 1 || block > params_.n || slot < 1 ||
        slot > slots_per_block) {
      throw GraphError(ErrorKind::VertexOutOfRange, "composite coordinate (copy " + std::to_string(copy) +
                                                        ", " + std::to_string(block) + ", " +
                                                        std::to_string(slot) + ")");
    }
    return base_ + static_cast<Vertex>((copy - 1) * slots_per_block * params_.n) +
           static_cast<Vertex>(slots_per_block * (block - 1) + (slot - 1));
  }

  Vertex attachment(int copy) const { return vertex(copy, policy_.block, policy_.slot); }

  Vertex lookup(const VertexCoord& c) const {
    auto it = index_.find(c);
    if (it == index_.end()) throw GraphError(ErrorKind::VertexOutOfRange, "no vertex with that coordinate");
    return it->second;
  }

  friend CompositeGraph path_union(int, int, AttachmentPolicy);
  friend CompositeGraph open_star(int, int, AttachmentPolicy);
  friend CompositeGraph one_point_union_paths(int, int, int, AttachmentPolicy);

 private:
  CompositeGraph(Family family, CompositeParams params, AttachmentPolicy policy, std::vector<CopyCoord> copies)
      : family_(family), params_(params), policy_(policy), copies_(std::move(copies)) {
    base_ = has_apex() ? 1 : 0;
    const GoldbergGraph unit(params_.n);
    graph_ = Graph(base_ + copies_.size() * unit.graph().vertex_count());
    if (has_apex()) {
      graph_.set_coord(0, VertexCoord::apex_vertex());
      index_.emplace(VertexCoord::apex_vertex(), 0);
    }
    for (std::size_t c = 0; c < copies_.size(); ++c) {
      const int copy = static_cast<int>(c) + 1;
      for (const Edge& e : unit.graph().edges()) {
        auto [bu, su] = unit.coord(e.u);
        auto [bv, sv] = unit.coord(e.v);
        graph_.add_edge(vertex(copy, bu, su), vertex(copy, bv, sv));
      }
      for (int i = 1; i <= params_.n; ++i) {
        for (int j = 1; j <= slots_per_block; ++j) {
          VertexCoord vc;
          vc.block = i;
          vc.slot = j;
          vc.copy = copies_[c].copy;
          if (family_ == Family::OnePointUnion) {
            vc.arm = copies_[c].arm;
            vc.position = copies_[c].position;
          }
          graph_.set_coord(vertex(copy, i, j), vc);
          index_.emplace(vc, vertex(copy, i, j));
        }
      }
    }
  }

  static void validate(int n, const AttachmentPolicy& policy) {
    if (n < 5 || n % 2 == 0) {
      throw GraphError(ErrorKind::InvalidParameter, "n must be odd and at least 5, got " + std::to_string(n));
    }
    if (policy.block < 1 || policy.block > n || policy.slot < 1 || policy.slot > slots_per_block) {
      throw GraphError(ErrorKind::InvalidParameter, "attachment (" + std::to_string(policy.block) + "," +
                                                        std::to_string(policy.slot) + ") outside block range");
    }
  }

  Family family_;
  CompositeParams params_;
  AttachmentPolicy policy_;
  std::vector<CopyCoord> copies_;
  Vertex base_ = 0;
  Graph graph_;
  std::map<VertexCoord, Vertex> index_;
};

/// m copies of G_n, copy k joined to copy k+1 at the attachment vertex.
inline CompositeGraph path_union(int n, int m, AttachmentPolicy policy = {}) {
  CompositeGraph::validate(n, policy);
  if (m < 1) throw GraphError(ErrorKind::InvalidParameter, "m must be at least 1");
  std::vector<CopyCoord> copies;
  for (int k = 1; k <= m; ++k) copies.push_back({k, 0, 0});
  CompositeGraph g(Family::PathUnion, {n, m, 0, 0}, policy, std::move(copies));
  for (int k = 1; k < m; ++k) g.graph_.add_edge(g.attachment(k), g.attachment(k + 1));
  return g;
}

/// S(t, G_n): apex joined to the attachment vertex of each of t copies.
inline CompositeGraph open_star(int n, int t, AttachmentPolicy policy = {}) {
  CompositeGraph::validate(n, policy);
  if (t < 2) throw GraphError(ErrorKind::InvalidParameter, "t must be at least 2");
  std::vector<CopyCoord> copies;
  for (int k = 1; k <= t; ++k) copies.push_back({k, 0, 0});
  CompositeGraph g(Family::OpenStar, {n, 0, t, 0}, policy, std::move(copies));
  for (int k = 1; k <= t; ++k) g.graph_.add_edge(g.apex(), g.attachment(k));
  return g;
}

/// Apex with t arms; each arm is a path union of p copies whose first copy
/// is joined to the apex.
inline CompositeGraph one_point_union_paths(int n, int t, int p, AttachmentPolicy policy = {}) {
  CompositeGraph::validate(n, policy);
  if (t < 2) throw GraphError(ErrorKind::InvalidParameter, "t must be at least 2");
  if (p < 1) throw GraphError(ErrorKind::InvalidParameter, "p must be at least 1");
  std::vector<CopyCoord> copies;
  for (int l = 1; l <= t; ++l) {
    for (int pos = 1; pos <= p; ++pos) copies.push_back({(l - 1) * p + pos, l, pos});
  }
  CompositeGraph g(Family::OnePointUnion, {n, 0, t, p}, policy, std::move(copies));
  for (int l = 1; l <= t; ++l) {
    const int first = (l - 1) * p + 1;
    g.graph_.add_edge(g.apex(), g.attachment(first));
    for (int pos = 1; pos < p; ++pos) g.graph_.add_edge(g.attachment(first + pos - 1), g.attachment(first + pos));
  }
  return g;
}

}  // namespace goldcord
