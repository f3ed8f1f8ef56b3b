// goldcord: construct Goldberg snark families, label and verify them,
// certify snark properties and search for cordial labelings.
//
// Exit codes: 0 success / property holds, 1 property fails,
// 2 invalid input, 3 budget exhausted.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "goldcord/goldcord.hpp"

namespace {

using namespace goldcord;

constexpr int kOk = 0;
constexpr int kPropertyFails = 1;
constexpr int kInvalidInput = 2;
constexpr int kBudgetExhausted = 3;

struct Options {
  std::string family;
  std::string graph_file;
  std::string labeling_file;
  std::optional<int> n, m, t, p;
  int attach_block = 1;
  int attach_slot = 7;
  std::string pattern;
  std::string format = "json";
  std::string out;
  std::string report_out;
  std::optional<std::uint64_t> seed;
  std::uint64_t max_nodes = 1'000'000;
  std::optional<std::uint64_t> max_coloring_nodes;
  std::uint64_t max_cut_subsets = default_cut_budget;
  bool repair = false;
};

class InvalidInput : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A graph selected on the command line, with whichever structured view
/// its family provides.
struct Target {
  std::string family;
  Graph graph;
  std::optional<GoldbergGraph> goldberg;
  std::optional<CompositeGraph> composite;
};

int require(const std::optional<int>& v, const char* flag, const std::string& family) {
  if (!v) throw InvalidInput("family " + family + " requires " + flag);
  return *v;
}

Target load_target(const Options& o) {
  if (!o.graph_file.empty()) {
    if (!o.family.empty()) throw InvalidInput("--family and --graph are mutually exclusive");
    std::ifstream in(o.graph_file);
    if (!in) throw InvalidInput("cannot open " + o.graph_file);
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw GraphError(ErrorKind::Format, e.what());
    }
    return {"file", graph_from_json(j), std::nullopt, std::nullopt};
  }
  const AttachmentPolicy policy{o.attach_block, o.attach_slot};
  const std::string& f = o.family;
  if (f.empty()) throw InvalidInput("one of --family or --graph is required");
  if (f == "petersen") return {f, petersen(), std::nullopt, std::nullopt};
  if (f == "goldberg") {
    GoldbergGraph g(require(o.n, "-n", f));
    if (g.outside_theorem_range()) {
      std::cerr << "warning: n = 3 lies outside the range covered by the cordiality theorem\n";
    }
    Graph copy = g.graph();
    return {f, std::move(copy), std::move(g), std::nullopt};
  }
  std::optional<CompositeGraph> c;
  if (f == "path-union") {
    c = path_union(require(o.n, "-n", f), require(o.m, "-m", f), policy);
  } else if (f == "open-star") {
    c = open_star(require(o.n, "-n", f), require(o.t, "-t", f), policy);
  } else if (f == "one-point-union") {
    c = one_point_union_paths(require(o.n, "-n", f), require(o.t, "-t", f), require(o.p, "-p", f), policy);
  } else {
    throw InvalidInput("unknown family '" + f + "'");
  }
  Graph copy = c->graph();
  return {f, std::move(copy), std::nullopt, std::move(c)};
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text;
}

json params_json(const Options& o) {
  json j = json::object();
  if (o.n) j["n"] = *o.n;
  if (o.m) j["m"] = *o.m;
  if (o.t) j["t"] = *o.t;
  if (o.p) j["p"] = *o.p;
  return j;
}

std::uint64_t effective_seed(const Options& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("SNARK_CORDIAL_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InvalidInput(std::string("SNARK_CORDIAL_SEED is not an integer: ") + env);
    }
  }
  return 0;
}

ProgressFn stderr_progress(const char* what) {
  return [what](std::uint64_t nodes) { std::cerr << what << ": " << nodes << " nodes explored\n"; };
}

std::string render_graph(const Graph& g, const std::string& format, const Labeling* labels) {
  if (format == "json") return dump_canonical(graph_to_json(g));
  if (format == "dot") return to_dot(g, labels);
  if (format == "graphml") return to_graphml(g, labels);
  throw InvalidInput("unknown format '" + format + "'");
}

int cmd_construct(const Options& o) {
  const Target target = load_target(o);
  write_text(o.out, render_graph(target.graph, o.format, nullptr));
  return kOk;
}

int cmd_export(const Options& o) {
  const Target target = load_target(o);
  std::optional<Labeling> labels;
  if (!o.labeling_file.empty()) {
    std::ifstream in(o.labeling_file);
    if (!in) throw InvalidInput("cannot open " + o.labeling_file);
    json j;
    in >> j;
    labels = labeling_from_json(target.graph, j);
  }
  write_text(o.out, render_graph(target.graph, o.format, labels ? &*labels : nullptr));
  return kOk;
}

Labeling constant_labeling(const Graph& g, Label value) {
  return induce_edge_labels(g, std::vector<Label>(g.vertex_count(), value));
}

int cmd_label(const Options& o) {
  const Target target = load_target(o);
  const std::string& pat = o.pattern;
  json summary;
  summary["family"] = target.family;
  summary["params"] = params_json(o);
  summary["pattern"] = pat;
  summary["schedule"] = nullptr;

  Labeling labeling;
  if (pat == "constant0" || pat == "constant1") {
    labeling = constant_labeling(target.graph, pat == "constant0" ? 0 : 1);
  } else if (pat == "p1" || pat == "p2" || pat == "theorem") {
    if (target.goldberg) {
      const Pattern which = pat == "p2" ? Pattern::P2 : Pattern::P1;
      labeling = induce_edge_labels(target.graph, pattern_vertex_labels(*target.goldberg, which));
    } else if (target.composite) {
      const PatternSchedule s = pat == "theorem"
                                    ? theorem_schedule(*target.composite)
                                    : uniform_schedule(*target.composite, pat == "p1" ? Pattern::P1 : Pattern::P2);
      summary["schedule"] = schedule_to_json(s);
      labeling = apply_schedule(*target.composite, s);
    } else {
      throw InvalidInput("pattern '" + pat + "' has no schedule for family " + target.family);
    }
  } else {
    throw InvalidInput("unknown pattern '" + pat + "'");
  }

  const CordialityReport report = cordiality_report(target.graph, labeling);
  summary["report"] = report_to_json(report);
  summary["discrepancy"] = !report.is_cordial;

  int code = report.is_cordial ? kOk : kPropertyFails;
  if (!report.is_cordial && o.repair) {
    const auto found = search_cordial(target.graph, {o.max_nodes, effective_seed(o)}, stderr_progress("repair search"));
    json repair{{"verdict", to_string(found.verdict)}, {"exhaustive", found.exhaustive}, {"nodes", found.nodes}};
    if (found.labeling) {
      repair["report"] = report_to_json(cordiality_report(target.graph, *found.labeling));
      labeling = *found.labeling;
      code = kOk;
    } else if (found.verdict == SearchVerdict::Unknown) {
      code = kBudgetExhausted;
    }
    summary["repair"] = std::move(repair);
    std::cerr << "note: " << pat << " labeling is not cordial; repair search verdict: " << to_string(found.verdict)
              << "\n";
  }

  if (!o.out.empty()) write_text(o.out, dump_canonical(labeling_to_json(labeling)));
  if (!o.report_out.empty()) write_text(o.report_out, dump_canonical(report_to_json(cordiality_report(target.graph, labeling))));
  std::cout << summary.dump(2) << "\n";
  return code;
}

int cmd_verify(const Options& o) {
  const Target target = load_target(o);
  if (o.labeling_file.empty()) throw InvalidInput("verify requires --labeling");
  std::ifstream in(o.labeling_file);
  if (!in) throw InvalidInput("cannot open " + o.labeling_file);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw GraphError(ErrorKind::Format, e.what());
  }
  const CordialityReport report = cordiality_report(target.graph, labeling_from_json(target.graph, j));
  write_text(o.out, dump_canonical(report_to_json(report)));
  return report.is_cordial ? kOk : kPropertyFails;
}

int cmd_check_snark(const Options& o) {
  const Target target = load_target(o);
  CertificateOptions opts;
  opts.max_cut_subsets = o.max_cut_subsets;
  if (o.max_coloring_nodes) opts.max_coloring_nodes = *o.max_coloring_nodes;
  opts.progress = stderr_progress("3-edge-coloring search");
  const SnarkCertificate cert = snark_certificate(target.graph, opts);
  write_text(o.out, dump_canonical(certificate_to_json(cert)));
  std::cerr << "elapsed: " << std::chrono::duration_cast<std::chrono::milliseconds>(cert.search_stats.elapsed).count()
            << " ms\n";
  for (const auto& note : cert.notes) std::cerr << "note: " << note << "\n";
  if (cert.is_snark()) return kOk;
  if (cert.budget_exhausted()) return kBudgetExhausted;
  return kPropertyFails;
}

int cmd_search(const Options& o) {
  const Target target = load_target(o);
  const auto found = search_cordial(target.graph, {o.max_nodes, effective_seed(o)}, stderr_progress("cordial search"));
  json doc{{"verdict", to_string(found.verdict)}, {"exhaustive", found.exhaustive}, {"nodes", found.nodes}};
  if (found.labeling) {
    doc["labeling"] = labeling_to_json(*found.labeling);
    doc["report"] = report_to_json(cordiality_report(target.graph, *found.labeling));
  }
  write_text(o.out, dump_canonical(doc));
  switch (found.verdict) {
    case SearchVerdict::Found: return kOk;
    case SearchVerdict::Absent: return kPropertyFails;
    case SearchVerdict::Unknown: return kBudgetExhausted;
  }
  return kPropertyFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Goldberg snark construction, cordial labeling and snark certification"};
  app.require_subcommand(1);
  Options o;

  auto add_graph_options = [&o](CLI::App* cmd) {
    cmd->add_option("--family", o.family, "goldberg, path-union, open-star, one-point-union or petersen");
    cmd->add_option("--graph", o.graph_file, "read the graph from a canonical JSON file instead");
    cmd->add_option("-n", o.n, "Goldberg parameter (odd)");
    cmd->add_option("-m", o.m, "path union copies");
    cmd->add_option("-t", o.t, "branches / arms");
    cmd->add_option("-p", o.p, "copies per arm");
    cmd->add_option("--attach-block", o.attach_block, "block carrying joining edges")->capture_default_str();
    cmd->add_option("--attach-slot", o.attach_slot, "slot carrying joining edges")->capture_default_str();
    cmd->add_option("--out", o.out, "output path (default stdout)");
  };

  auto* construct = app.add_subcommand("construct", "write a graph family as json, dot or graphml");
  add_graph_options(construct);
  construct->add_option("--format", o.format)->check(CLI::IsMember({"json", "dot", "graphml"}));

  auto* label = app.add_subcommand("label", "apply a labeling pattern and report cordiality");
  add_graph_options(label);
  label->add_option("--pattern", o.pattern, "p1, p2, theorem, constant0 or constant1")->required();
  label->add_option("--report", o.report_out, "also write the report JSON here");
  label->add_flag("--repair", o.repair, "search for a cordial labeling when the pattern fails");
  label->add_option("--seed", o.seed);
  label->add_option("--max-nodes", o.max_nodes);

  auto* verify = app.add_subcommand("verify", "check a labeling file against a graph");
  add_graph_options(verify);
  verify->add_option("--labeling", o.labeling_file)->required();

  auto* check = app.add_subcommand("check-snark", "run the six snark checks");
  add_graph_options(check);
  check->add_option("--max-nodes", o.max_coloring_nodes, "node budget for the 3-edge-coloring search");
  check->add_option("--max-cut-subsets", o.max_cut_subsets)->capture_default_str();

  auto* search = app.add_subcommand("search", "search for a cordial labeling");
  add_graph_options(search);
  search->add_option("--seed", o.seed, "local search seed (fallback: SNARK_CORDIAL_SEED, then 0)");
  search->add_option("--max-nodes", o.max_nodes, "local search move budget")->capture_default_str();

  auto* exp = app.add_subcommand("export", "convert a graph (optionally labeled) to json, dot or graphml");
  add_graph_options(exp);
  exp->add_option("--labeling", o.labeling_file);
  exp->add_option("--format", o.format)->check(CLI::IsMember({"json", "dot", "graphml"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidInput;
  }

  try {
    if (*construct) return cmd_construct(o);
    if (*label) return cmd_label(o);
    if (*verify) return cmd_verify(o);
    if (*check) return cmd_check_snark(o);
    if (*search) return cmd_search(o);
    if (*exp) return cmd_export(o);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::BudgetExceeded ? kBudgetExhausted : kInvalidInput;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  return kInvalidInput;
}
