#include <gtest/gtest.h>

#include <random>

#include "goldcord/labeling.hpp"
#include "goldcord/search.hpp"
#include "oracles.hpp"

using namespace goldcord;

namespace {

CordialityReport report_of(const ScheduledLabeling& s) { return cordiality_report(s.graph.graph(), s.labeling); }

void expect_matches_recount(const Graph& g, const Labeling& l) {
  const auto c = oracle::recount(g, l.vertex_labels());
  const auto r = cordiality_report(g, l);
  EXPECT_EQ(r.v0, c.v0);
  EXPECT_EQ(r.v1, c.v1);
  EXPECT_EQ(r.e0, c.e0);
  EXPECT_EQ(r.e1, c.e1);
  EXPECT_EQ(r.is_cordial, oracle::counts_cordial(c));
}

}  // namespace

TEST(InduceEdgeLabels, Basics) {
  Graph g = petersen();
  Labeling zero = induce_edge_labels(g, std::vector<Label>(10, 0));
  for (Label l : zero.edge_labels()) EXPECT_EQ(l, 0);
  Labeling one_edge = induce_edge_labels(path_graph(2), {1, 0});
  EXPECT_EQ(one_edge.edge_labels(), std::vector<Label>{1});
  EXPECT_THROW(induce_edge_labels(g, std::vector<Label>(9, 0)), GraphError);
  EXPECT_THROW(induce_edge_labels(path_graph(2), {2, 0}), GraphError);
}

TEST(InduceEdgeLabels, XorIdentity) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = oracle::random_graph(rng, 3 + trial % 15, 0.4);
    std::vector<Label> labels(g.vertex_count());
    for (auto& l : labels) l = static_cast<Label>(rng() & 1);
    Labeling lab = induce_edge_labels(g, labels);
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      EXPECT_EQ(lab.edge_labels()[i], labels[edges[i].u] ^ labels[edges[i].v]);
    }
    expect_matches_recount(g, lab);
  }
}

TEST(CordialityReport, Examples) {
  Graph g = petersen();
  auto zero = cordiality_report(g, induce_edge_labels(g, std::vector<Label>(10, 0)));
  EXPECT_FALSE(zero.is_cordial);
  EXPECT_EQ(zero.edge_diff, 15u);
  auto single = cordiality_report(path_graph(2), induce_edge_labels(path_graph(2), {0, 1}));
  EXPECT_EQ(single.vertex_diff, 0u);
  EXPECT_EQ(single.edge_diff, 1u);
  EXPECT_TRUE(single.is_cordial);
  EXPECT_THROW(cordiality_report(path_graph(3), induce_edge_labels(path_graph(2), {0, 1})), GraphError);
}

TEST(Patterns, SlotTables) {
  for (int j = 1; j <= 8; ++j) {
    const bool differ = pattern_label(Pattern::P1, j) != pattern_label(Pattern::P2, j);
    EXPECT_EQ(differ, j == 2 || j == 7) << "slot " << j;
  }
  auto g = goldberg(5);
  EXPECT_EQ(pattern1(g).vertex_labels()[g.vertex(3, 8)], 0);
  EXPECT_EQ(pattern2(g).vertex_labels()[g.vertex(1, 5)], 1);
}

TEST(Patterns, ExactBalanceOnGoldberg) {
  for (int n : {5, 7, 9, 11}) {
    auto g = goldberg(n);
    for (const Labeling& l : {pattern1(g), pattern2(g)}) {
      auto r = cordiality_report(g.graph(), l);
      EXPECT_EQ(r.v0, static_cast<std::size_t>(4 * n));
      EXPECT_EQ(r.v1, static_cast<std::size_t>(4 * n));
      EXPECT_EQ(r.e0, static_cast<std::size_t>(6 * n));
      EXPECT_EQ(r.e1, static_cast<std::size_t>(6 * n));
      EXPECT_TRUE(r.is_cordial);
      expect_matches_recount(g.graph(), l);
    }
  }
}

TEST(Complement, Properties) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = oracle::random_graph(rng, 2 + trial % 11, 0.5);
    std::vector<Label> labels(g.vertex_count());
    for (auto& l : labels) l = static_cast<Label>(rng() & 1);
    Labeling lab = induce_edge_labels(g, labels);
    Labeling comp = complement(lab);
    auto a = cordiality_report(g, lab);
    auto b = cordiality_report(g, comp);
    EXPECT_EQ(a.v0, b.v1);
    EXPECT_EQ(a.v1, b.v0);
    EXPECT_EQ(lab.edge_labels(), comp.edge_labels());
    EXPECT_EQ(complement(comp), lab);
    EXPECT_EQ(a.vertex_diff, b.vertex_diff);
    EXPECT_EQ(a.is_cordial, b.is_cordial);
    // stored edge labels equal a fresh derivation
    std::vector<Label> flipped = comp.vertex_labels();
    EXPECT_EQ(induce_edge_labels(g, flipped), comp);
  }
}

TEST(PathUnionSchedule, Examples) {
  auto a = report_of(label_path_union(5, 4));
  EXPECT_TRUE(a.is_cordial);
  EXPECT_EQ(a.vertex_diff, 0u);
  EXPECT_EQ(a.edge_diff, 1u);
  auto b = report_of(label_path_union(7, 5));
  EXPECT_TRUE(b.is_cordial);
  EXPECT_EQ(b.vertex_diff, 0u);
  EXPECT_EQ(b.edge_diff, 0u);
  auto single = label_path_union(5, 1);
  EXPECT_EQ(single.labeling.vertex_labels(), pattern1(goldberg(5)).vertex_labels());
}

TEST(PathUnionSchedule, CopyIndexDrivesPattern) {
  auto s = label_path_union(5, 8);
  const std::vector<Pattern> expected{Pattern::P1, Pattern::P1, Pattern::P2, Pattern::P2,
                                      Pattern::P1, Pattern::P1, Pattern::P2, Pattern::P2};
  ASSERT_EQ(s.schedule.entries.size(), expected.size());
  for (std::size_t k = 0; k < expected.size(); ++k) EXPECT_EQ(s.schedule.entries[k].pattern, expected[k]);
  EXPECT_FALSE(s.schedule.apex_label.has_value());
}

TEST(PathUnionSchedule, EdgeBalanceGrid) {
  for (int n : {5, 7}) {
    for (int m = 2; m <= 6; ++m) {
      auto s = label_path_union(n, m);
      auto r = report_of(s);
      EXPECT_EQ(r.vertex_diff, 0u);
      EXPECT_EQ(r.edge_diff, static_cast<std::size_t>((m - 1) % 2)) << n << "," << m;
      // joining edges alternate 0,1,0,...
      for (int k = 1; k < m; ++k) {
        const Label expected = (k % 2 == 1) ? 0 : 1;
        const auto& vl = s.labeling.vertex_labels();
        EXPECT_EQ(vl[s.graph.attachment(k)] ^ vl[s.graph.attachment(k + 1)], expected);
      }
    }
  }
}

TEST(PathUnionSchedule, SlotEightAttachmentBreaksBalance) {
  // with both endpoints on slot 8 every joining edge is labelled 0
  auto s = label_path_union(5, 4, {1, 8});
  EXPECT_EQ(report_of(s).edge_diff, 3u);
  EXPECT_FALSE(report_of(s).is_cordial);
}

TEST(OpenStarSchedule, Examples) {
  auto a = report_of(label_open_star(7, 4));
  EXPECT_EQ(a.vertex_diff, 1u);
  EXPECT_EQ(a.edge_diff, 0u);
  EXPECT_TRUE(a.is_cordial);
  auto b = report_of(label_open_star(5, 3));
  EXPECT_EQ(b.vertex_diff, 1u);
  EXPECT_EQ(b.edge_diff, 1u);
  EXPECT_TRUE(b.is_cordial);
  for (int n : {5, 7}) {
    for (int t = 2; t <= 6; ++t) {
      auto s = label_open_star(n, t);
      auto r = report_of(s);
      EXPECT_EQ(r.v0, r.v1 + 1);
      EXPECT_EQ(r.vertex_diff, 1u);
      EXPECT_EQ(r.edge_diff, static_cast<std::size_t>(t % 2));
      EXPECT_EQ(s.labeling.vertex_labels()[0], 0);
      int p1 = 0;
      for (const auto& e : s.schedule.entries) p1 += e.pattern == Pattern::P1;
      EXPECT_EQ(p1, (t + 1) / 2);
    }
  }
}

TEST(OnePointUnionSchedule, ReferenceShapes) {
  for (auto [n, t, p] : {std::tuple{7, 4, 4}, std::tuple{5, 4, 3}, std::tuple{5, 3, 3}}) {
    auto s = label_one_point_union(n, t, p);
    auto r = report_of(s);
    EXPECT_TRUE(r.is_cordial) << n << "," << t << "," << p;
    expect_matches_recount(s.graph.graph(), s.labeling);
  }
}

TEST(OnePointUnionSchedule, ParityLayout) {
  auto s = label_one_point_union(5, 5, 4);
  for (const auto& e : s.schedule.entries) {
    if (e.where.arm <= 3) {
      EXPECT_EQ(e.pattern, Pattern::P1);
    } else {
      EXPECT_EQ(e.pattern, e.where.position % 2 == 1 ? Pattern::P2 : Pattern::P1);
    }
  }
  EXPECT_EQ(s.schedule.apex_label, Label{0});
}

TEST(OnePointUnionSchedule, SingleCopyArmsMatchOpenStar) {
  auto a = label_one_point_union(5, 2, 1);
  auto b = label_open_star(5, 2);
  ASSERT_EQ(a.schedule.entries.size(), b.schedule.entries.size());
  for (std::size_t i = 0; i < a.schedule.entries.size(); ++i) {
    EXPECT_EQ(a.schedule.entries[i].pattern, b.schedule.entries[i].pattern);
  }
  EXPECT_EQ(a.labeling, b.labeling);
}

TEST(OnePointUnionSchedule, EdgeDifferenceFormula) {
  // zeros - ones over the connecting edges is (ceil(t/2) - floor(t/2)) * (p - 2)
  for (int t = 2; t <= 5; ++t) {
    for (int p = 1; p <= 5; ++p) {
      auto r = report_of(label_one_point_union(5, t, p));
      const int expected = std::abs((t % 2) * (p - 2));
      EXPECT_EQ(r.edge_diff, static_cast<std::size_t>(expected)) << t << "," << p;
      EXPECT_EQ(r.vertex_diff, 1u);
    }
  }
}

TEST(Schedules, ApplyRejectsMismatch) {
  auto star = open_star(5, 3);
  auto pu = path_union(5, 3);
  EXPECT_THROW(apply_schedule(star, path_union_schedule(pu)), GraphError);
  EXPECT_THROW(apply_schedule(pu, open_star_schedule(open_star(5, 2))), GraphError);
}

TEST(Schedules, TheoremLabelingsAgreeWithSearch) {
  // whenever a closed-form labeling is cordial the search must find one too
  for (int n : {5, 7}) {
    auto s = label_open_star(n, 3);
    ASSERT_TRUE(report_of(s).is_cordial);
    auto found = search_cordial(s.graph.graph());
    EXPECT_EQ(found.verdict, SearchVerdict::Found);
  }
}
