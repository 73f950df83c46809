// Command-line front end: per-graph computation, subdivision
// classification, family tools, the leaf normalization, and the
// exhaustive verification runs.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "superdom/enumeration.hpp"
#include "superdom/errors.hpp"
#include "superdom/families.hpp"
#include "superdom/graph.hpp"
#include "superdom/harness.hpp"
#include "superdom/reports.hpp"
#include "superdom/solvers.hpp"
#include "superdom/subdivision.hpp"
#include "superdom/transform.hpp"

namespace {

using namespace superdom;

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct GraphInput {
  std::string file;
  int path_n = 0;
  int star_k = 0;
  std::string inline_text;
};

void add_graph_options(CLI::App* cmd, GraphInput& in) {
  cmd->add_option("graph", in.file, "edge-list file");
  cmd->add_option("--path", in.path_n, "use the path on N vertices");
  cmd->add_option("--star", in.star_k, "use the star K_{1,k}");
  cmd->add_option("--inline", in.inline_text, "edge-list text: \"n m u v u v ...\"");
}

Graph load_graph(const GraphInput& in) {
  int sources = !in.file.empty();
  sources += in.path_n > 0;
  sources += in.star_k > 0;
  sources += !in.inline_text.empty();
  if (sources != 1)
    throw std::invalid_argument("provide exactly one graph (file, --path, --star or --inline)");
  if (in.path_n > 0) return path_graph(in.path_n);
  if (in.star_k > 0) return star_graph(in.star_k);
  if (!in.inline_text.empty()) {
    std::istringstream ss(in.inline_text);
    int n, m;
    if (!(ss >> n >> m)) throw std::invalid_argument("inline graph: expected \"n m\" prefix");
    std::vector<Edge> es;
    int u, v;
    while (ss >> u >> v) es.push_back({u, v});
    if (static_cast<int>(es.size()) != m)
      throw std::invalid_argument("inline graph: edge count mismatch");
    return Graph::from_edges(n, std::move(es));
  }
  std::ifstream f(in.file);
  if (!f) throw std::invalid_argument("cannot open file: " + in.file);
  try {
    return parse_edge_list(f);
  } catch (const parse_error& ex) {
    throw std::invalid_argument(in.file + ": " + ex.what());
  }
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw std::invalid_argument("cannot write file: " + out_path);
  f << text;
}

std::vector<Edge> parse_edge_args(const std::string& spec) {
  std::vector<Edge> out;
  std::istringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto dash = tok.find('-');
    if (dash == std::string::npos)
      throw std::invalid_argument("bad edge \"" + tok + "\": expected u-v");
    out.push_back({std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1))});
  }
  if (out.empty()) throw std::invalid_argument("no edges given");
  return out;
}

VertexSet parse_vertex_set(const std::string& spec, int n) {
  VertexSet out(n);
  std::istringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.set(std::stoi(tok));
  return out;
}

int cmd_compute(const GraphInput& in, const std::string& params, OutputFormat fmt,
                const std::string& out_path) {
  const Graph g = load_graph(in);
  ComputeReport rep;
  rep.n = g.n();
  rep.m = g.m();
  std::istringstream ss(params);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok == "all") {
      rep.params.push_back({"gamma", gamma(g), gamma_witness(g)});
      rep.params.push_back({"gamma_t", gamma_t(g), gamma_t_witness(g)});
      rep.params.push_back({"gamma_sp", gamma_sp(g), gamma_sp_witness(g)});
    } else if (tok == "gamma") {
      rep.params.push_back({"gamma", gamma(g), gamma_witness(g)});
    } else if (tok == "gamma_t") {
      rep.params.push_back({"gamma_t", gamma_t(g), gamma_t_witness(g)});
    } else if (tok == "gamma_sp") {
      rep.params.push_back({"gamma_sp", gamma_sp(g), gamma_sp_witness(g)});
    } else {
      throw std::invalid_argument("unknown parameter: " + tok);
    }
  }
  write_output(render(rep, fmt), out_path);
  return 0;
}

int cmd_classify(const GraphInput& in, OutputFormat fmt, const std::string& out_path) {
  const Graph g = load_graph(in);
  if (!is_tree(g)) throw std::invalid_argument("classification requires a tree");
  ClassifyReport rep;
  rep.n = g.n();
  rep.m = g.m();
  rep.gamma_sp_value = gamma_sp(g);
  rep.class2 = !single_subdivision_raises(g);
  rep.in_u = rep.class2;
  try {
    const SubdivisionResult r = sd_gamma_sp(g);
    rep.sd = r.sd;
    rep.witness_edges = r.witness_edges;
  } catch (const theorem_violation& ex) {
    rep.sd = 0;
    rep.note = ex.what();
  }
  write_output(render(rep, fmt), out_path);
  return 0;
}

int cmd_subdivide(const GraphInput& in, const std::string& edges, const std::string& out_path) {
  const Graph g = load_graph(in);
  write_output(emit_edge_list(subdivide(g, parse_edge_args(edges))), out_path);
  return 0;
}

int cmd_transform(const GraphInput& in, int leaf, const std::string& set_spec,
                  OutputFormat fmt, const std::string& out_path) {
  const Graph g = load_graph(in);
  const VertexSet result = set_spec.empty()
                               ? exists_normalized(g, leaf)
                               : normalize_for_leaf(g, parse_vertex_set(set_spec, g.n()), leaf);
  std::string text;
  if (fmt == OutputFormat::Json) {
    nlohmann::json j;
    j["leaf"] = leaf;
    j["set"] = result.elements();
    j["complement"] = result.complement().elements();
    text = j.dump(2) + "\n";
  } else {
    text = "set = " + result.to_string() + "\ncomplement = " + result.complement().to_string() +
           "\n";
  }
  write_output(text, out_path);
  return 0;
}

int cmd_family_build(const std::string& cert_path, const std::string& out_path) {
  std::ifstream f(cert_path);
  if (!f) throw std::invalid_argument("cannot open file: " + cert_path);
  nlohmann::json j;
  f >> j;
  write_output(emit_edge_list(replay_certificate(certificate_from_json(j))), out_path);
  return 0;
}

int cmd_family_recognize(const std::string& family, const GraphInput& in, OutputFormat fmt,
                         const std::string& out_path) {
  const Graph g = load_graph(in);
  const Family fam = family_from_name(family);
  bool member = false;
  std::optional<FamilyCertificate> cert;
  nlohmann::json extra;
  switch (fam) {
    case Family::Corona: {
      auto inner = corona_inner(g);
      member = inner.has_value();
      cert = corona_certificate(g);
      if (inner) extra["inner_edge_list"] = emit_edge_list(*inner);
      break;
    }
    case Family::R:
      member = is_in_R(g);
      cert = r_certificate(g);
      break;
    case Family::TFamily: {
      auto rec = recognize_T(g);
      member = rec.member;
      cert = rec.certificate;
      if (member) {
        std::string labels;
        for (Status st : rec.labeling) labels += status_char(st);
        extra["labeling"] = labels;
      }
      break;
    }
    case Family::UFamily:
      member = recognize_U(g);
      cert = u_certificate(g);
      break;
  }
  std::string text;
  if (fmt == OutputFormat::Json) {
    nlohmann::json j;
    j["family"] = family_name(fam);
    j["member"] = member;
    if (cert) j["certificate"] = certificate_to_json(*cert);
    for (auto& [k, v] : extra.items()) j[k] = v;
    text = j.dump(2) + "\n";
  } else {
    std::ostringstream out;
    out << "family " << family_name(fam) << ": " << (member ? "yes" : "no") << "\n";
    for (auto& [k, v] : extra.items())
      out << k << ":\n" << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    if (cert) out << "certificate: " << certificate_to_json(*cert).dump() << "\n";
    text = out.str();
  }
  write_output(text, out_path);
  return 0;
}

int cmd_family_enumerate(const std::string& family, int n_max, OutputFormat fmt,
                         const std::string& out_dir) {
  const Family fam = family_from_name(family);
  const auto graphs = enumerate_family_graphs(fam, n_max);
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    for (const Graph& g : graphs) {
      std::ofstream f(std::filesystem::path(out_dir) / to_hex(canonical_form(g)));
      f << emit_edge_list(g);
    }
  }
  if (fmt == OutputFormat::Json) {
    nlohmann::json j;
    j["family"] = family_name(fam);
    j["n_max"] = n_max;
    j["count"] = graphs.size();
    nlohmann::json arr = nlohmann::json::array();
    for (const Graph& g : graphs)
      arr.push_back({{"n", g.n()}, {"canonical_hex", to_hex(canonical_form(g))}});
    j["members"] = arr;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "family " << family_name(fam) << " members with n <= " << n_max << ": "
              << graphs.size() << "\n";
    for (const Graph& g : graphs)
      std::cout << "n=" << g.n() << "  " << to_hex(canonical_form(g)) << "\n";
  }
  return 0;
}

int cmd_verify(const std::vector<std::string>& theorems, bool all, int n_max, OutputFormat fmt,
               const std::string& out_path) {
  std::vector<VerifyReport> reports;
  if (all || theorems.empty()) {
    reports = verify_all(n_max);
  } else {
    for (const auto& id : theorems) reports.push_back(verify(id, n_max));
  }
  write_output(render(reports, fmt), out_path);
  for (const auto& r : reports)
    if (!r.pass()) return kExitViolation;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact super domination toolkit for trees"};
  app.require_subcommand(1);
  app.fallthrough();  // --format may follow the subcommand

  std::string format = "text";
  app.add_option("--format", format, "output format: text, json or csv")->capture_default_str();

  GraphInput gin;
  std::string params = "all";
  std::string out_path;
  std::string edges;
  std::string set_spec;
  int leaf = -1;
  int n_max = 10;
  std::vector<std::string> theorems;
  bool verify_everything = false;
  std::string family;
  std::string cert_path;

  auto* compute = app.add_subcommand("compute", "domination parameters of one graph");
  add_graph_options(compute, gin);
  compute->add_option("--params", params, "comma list of gamma, gamma_t, gamma_sp, or all")
      ->capture_default_str();
  compute->add_option("--out", out_path, "write output to this file");

  auto* classify = app.add_subcommand("classify", "subdivision number and class of a tree");
  add_graph_options(classify, gin);
  classify->add_option("--out", out_path, "write output to this file");

  auto* subdiv = app.add_subcommand("subdivide", "subdivide edges and print the edge list");
  add_graph_options(subdiv, gin);
  subdiv->add_option("--edges", edges, "comma list of edges, e.g. 0-1,2-3")->required();
  subdiv->add_option("--out", out_path, "write output to this file");

  auto* transform = app.add_subcommand(
      "transform", "rewrite a minimum super dominating set to avoid a chosen leaf");
  add_graph_options(transform, gin);
  transform->add_option("--leaf", leaf, "leaf that must end up outside the set")->required();
  transform->add_option("--set", set_spec,
                        "comma list of vertices of a minimum super dominating set; "
                        "defaults to the solver witness");
  transform->add_option("--out", out_path, "write output to this file");

  auto* fam = app.add_subcommand("family", "family construction tools");
  fam->require_subcommand(1);
  auto* fbuild = fam->add_subcommand("build", "replay a certificate into an edge list");
  fbuild->add_option("certificate", cert_path, "certificate JSON file")->required();
  fbuild->add_option("--out", out_path, "write output to this file");
  auto* frec = fam->add_subcommand("recognize", "decide membership and emit a certificate");
  frec->add_option("name", family, "family: R, T, U or corona")->required();
  add_graph_options(frec, gin);
  frec->add_option("--out", out_path, "write output to this file");
  auto* fenum = fam->add_subcommand("enumerate", "all members up to a size budget");
  fenum->add_option("name", family, "family: R, T, U or corona")->required();
  fenum->add_option("--nmax", n_max, "largest member order")->required();
  fenum->add_option("--out", out_path, "write one edge-list file per member into this directory");

  auto* verify_cmd = app.add_subcommand("verify", "run the exhaustive claim checks");
  verify_cmd->add_option("--theorems", theorems, "comma list of check ids")->delimiter(',');
  verify_cmd->add_flag("--all", verify_everything, "run every registered check");
  verify_cmd->add_option("--nmax", n_max, "tree-order budget")->capture_default_str();
  verify_cmd->add_option("--out", out_path, "write output to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    const OutputFormat fmt = format_from_name(format);
    if (compute->parsed()) return cmd_compute(gin, params, fmt, out_path);
    if (classify->parsed()) return cmd_classify(gin, fmt, out_path);
    if (subdiv->parsed()) return cmd_subdivide(gin, edges, out_path);
    if (transform->parsed()) return cmd_transform(gin, leaf, set_spec, fmt, out_path);
    if (fam->parsed()) {
      if (fbuild->parsed()) return cmd_family_build(cert_path, out_path);
      if (frec->parsed()) return cmd_family_recognize(family, gin, fmt, out_path);
      if (fenum->parsed()) return cmd_family_enumerate(family, n_max, fmt, out_path);
    }
    if (verify_cmd->parsed()) return cmd_verify(theorems, verify_everything, n_max, fmt, out_path);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
