#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "goldcord/edge_coloring.hpp"
#include "goldcord/goldberg.hpp"
#include "goldcord/graph.hpp"
#include "goldcord/progress.hpp"
#include "goldcord/properties.hpp"

namespace goldcord {

struct SearchStats {
  std::uint64_t coloring_nodes = 0;
  std::uint64_t cut_subsets_checked = 0;
  std::chrono::nanoseconds elapsed{0};
};

/// Outcome of the six snark checks. Fields left empty were not checked,
/// either because a precondition failed or a budget was exceeded; `notes`
/// says which.
struct SnarkCertificate {
  bool is_cubic = false;
  bool is_connected = false;
  std::vector<Edge> bridge_edges;
  std::optional<std::size_t> girth;  // nullopt: acyclic
  std::optional<bool> cyclic_edge_connectivity_ge_4;
  std::optional<bool> three_edge_colorable;
  SearchStats search_stats;
  std::vector<std::string> notes;

  bool is_snark() const {
    return is_cubic && is_connected && bridge_edges.empty() && girth.has_value() && *girth >= 5 &&
           cyclic_edge_connectivity_ge_4.value_or(false) && three_edge_colorable.has_value() &&
           !*three_edge_colorable;
  }

  /// True when some check could not be decided within its budget.
  bool budget_exhausted() const {
    return is_cubic && is_connected && (!cyclic_edge_connectivity_ge_4 || !three_edge_colorable);
  }
};

struct CertificateOptions {
  std::uint64_t max_cut_subsets = default_cut_budget;
  std::uint64_t max_coloring_nodes = UINT64_MAX;
  ProgressFn progress;
};

inline SnarkCertificate snark_certificate(const Graph& g, const CertificateOptions& options = {}) {
  const auto start = std::chrono::steady_clock::now();
  SnarkCertificate cert;
  cert.is_cubic = is_cubic(g);
  cert.is_connected = is_connected(g);
  cert.bridge_edges = find_bridges(g);
  cert.girth = girth(g);

  if (cert.is_cubic && cert.is_connected) {
    try {
      auto cut = cyclic_edge_connectivity_check(g, 4, options.max_cut_subsets);
      cert.cyclic_edge_connectivity_ge_4 = cut.holds;
      cert.search_stats.cut_subsets_checked = cut.subsets_checked;
    } catch (const GraphError& e) {
      if (e.kind() != ErrorKind::BudgetExceeded) throw;
      cert.notes.push_back(std::string("cyclic edge connectivity unchecked: ") + e.what());
    }
  } else {
    cert.notes.push_back("cyclic edge connectivity unchecked: graph is not connected and cubic");
  }

  if (cert.is_cubic) {
    auto search = search_3_edge_coloring(g, options.max_coloring_nodes, options.progress);
    cert.search_stats.coloring_nodes = search.nodes;
    if (search.exhausted) {
      cert.notes.push_back("3-edge-coloring unchecked: node budget of " + std::to_string(options.max_coloring_nodes) +
                           " exhausted");
    } else {
      cert.three_edge_colorable = search.coloring.has_value();
    }
  } else {
    cert.notes.push_back("3-edge-coloring unchecked: graph is not cubic");
  }

  cert.search_stats.elapsed = std::chrono::steady_clock::now() - start;
  return cert;
}

inline SnarkCertificate snark_certificate(const GoldbergGraph& g, const CertificateOptions& options = {}) {
  return snark_certificate(g.graph(), options);
}

}  // namespace goldcord
