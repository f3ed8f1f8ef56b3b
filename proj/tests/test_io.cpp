#include <gtest/gtest.h>

#include <regex>
#include <set>

#include "goldcord/certificate.hpp"
#include "goldcord/io.hpp"
#include "goldcord/labeling.hpp"

using namespace goldcord;

namespace {

std::set<std::pair<Vertex, Vertex>> edges_in(const std::string& text, const std::regex& re) {
  std::set<std::pair<Vertex, Vertex>> out;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), re); it != std::sregex_iterator(); ++it) {
    out.emplace(std::stoul((*it)[1]), std::stoul((*it)[2]));
  }
  return out;
}

std::set<std::pair<Vertex, Vertex>> edge_set(const Graph& g) {
  std::set<std::pair<Vertex, Vertex>> out;
  for (const Edge& e : g.edges()) out.emplace(e.u, e.v);
  return out;
}

}  // namespace

TEST(GraphJson, RoundTripIsByteIdentical) {
  for (const Graph& g : {goldberg(5).graph(), path_union(5, 3).graph(), one_point_union_paths(5, 2, 2).graph(),
                         petersen(), new_graph(0)}) {
    const std::string a = dump_canonical(graph_to_json(g));
    Graph back = graph_from_json(nlohmann::json::parse(a));
    EXPECT_EQ(back, g);
    EXPECT_EQ(dump_canonical(graph_to_json(back)), a);
  }
}

TEST(GraphJson, RejectsMalformedInput) {
  using nlohmann::json;
  EXPECT_THROW(graph_from_json(json::parse(R"({"vertex_count": 2})")), GraphError);
  EXPECT_THROW(graph_from_json(json::parse(R"({"vertex_count": 2, "edges": [[0, 2]]})")), GraphError);
  EXPECT_THROW(graph_from_json(json::parse(R"({"vertex_count": 2, "edges": [[0, 0]]})")), GraphError);
  EXPECT_THROW(graph_from_json(json::parse(R"({"vertex_count": 2, "edges": [[0, 1], [1, 0]]})")), GraphError);
}

TEST(LabelingJson, RoundTrip) {
  auto s = label_open_star(5, 3);
  const Graph& g = s.graph.graph();
  auto j = labeling_to_json(s.labeling);
  EXPECT_EQ(labeling_from_json(g, nlohmann::json::parse(j.dump())), s.labeling);
  auto r = cordiality_report(g, s.labeling);
  EXPECT_EQ(report_from_json(report_to_json(r)), r);
}

TEST(LabelingJson, RejectsTamperedEdgeLabels) {
  Graph g = petersen();
  auto l = induce_edge_labels(g, {0, 1, 0, 1, 0, 1, 0, 1, 0, 1});
  auto j = labeling_to_json(l);
  j["edge_labels"][0] = 1 - j["edge_labels"][0].get<int>();
  try {
    labeling_from_json(g, j);
    FAIL() << "tampered labeling accepted";
  } catch (const GraphError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::LabelMismatch);
  }
  auto bad = labeling_to_json(l);
  bad["vertex_labels"][3] = 2;
  EXPECT_THROW(labeling_from_json(g, bad), GraphError);
}

TEST(ReportJson, RejectsInconsistentFields) {
  auto j = report_to_json(make_report(5, 5, 7, 8));
  j["is_cordial"] = false;
  EXPECT_THROW(report_from_json(j), GraphError);
}

TEST(CertificateJson, Fields) {
  auto j = certificate_to_json(snark_certificate(petersen()));
  EXPECT_EQ(j["girth"], 5);
  EXPECT_EQ(j["is_snark"], true);
  EXPECT_FALSE(j.contains("elapsed"));
  auto tree = certificate_to_json(snark_certificate(path_graph(3)));
  EXPECT_EQ(tree["girth"], "infinity");
}

TEST(Export, DotAndGraphmlCarryTheSameEdges) {
  auto s = label_path_union(5, 2);
  const Graph& g = s.graph.graph();
  const auto expected = edge_set(g);
  const std::string dot = to_dot(g, &s.labeling);
  const std::string xml = to_graphml(g, &s.labeling);
  EXPECT_EQ(edges_in(dot, std::regex(R"((\d+) -- (\d+))")), expected);
  EXPECT_EQ(edges_in(xml, std::regex(R"re(source="n(\d+)" target="n(\d+)")re")), expected);
  EXPECT_NE(dot.find("subgraph cluster_copy_2"), std::string::npos);
  EXPECT_NE(xml.find("<data key=\"k\">2</data>"), std::string::npos);
  EXPECT_EQ(to_dot(g), to_dot(g));
}
