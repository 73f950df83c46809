#include "superdom/reports.hpp"

#include <sstream>
#include <stdexcept>

namespace superdom {

OutputFormat format_from_name(const std::string& name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  throw std::invalid_argument("unknown format: " + name);
}

namespace {

std::string witness_csv(const VertexSet& s) {
  std::string out;
  for (int v = s.first(); v >= 0; v = s.next(v)) {
    if (!out.empty()) out += " ";
    out += std::to_string(v);
  }
  return out;
}

std::string edge_text(const Edge& e) {
  return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

}  // namespace

nlohmann::json compute_to_json(const ComputeReport& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["m"] = r.m;
  for (const auto& p : r.params)
    j[p.name] = {{"value", p.value}, {"witness", p.witness.elements()}};
  return j;
}

nlohmann::json classify_to_json(const ClassifyReport& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["gamma_sp"] = r.gamma_sp_value;
  j["sd_gamma_sp"] = r.sd;
  nlohmann::json ws = nlohmann::json::array();
  for (const auto& e : r.witness_edges) ws.push_back({e.first, e.second});
  j["witness_edges"] = ws;
  j["class"] = r.class2 ? 2 : 1;
  j["in_U"] = r.in_u;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

std::string render(const ComputeReport& r, OutputFormat f) {
  switch (f) {
    case OutputFormat::Json:
      return compute_to_json(r).dump(2) + "\n";
    case OutputFormat::Csv: {
      std::string out = "parameter,value,witness\n";
      for (const auto& p : r.params)
        out += p.name + "," + std::to_string(p.value) + "," + witness_csv(p.witness) + "\n";
      return out;
    }
    default: {
      std::ostringstream out;
      out << "graph: n=" << r.n << " m=" << r.m << "\n";
      for (const auto& p : r.params)
        out << p.name << " = " << p.value << "  witness = " << p.witness.to_string() << "\n";
      return out.str();
    }
  }
}

std::string render(const ClassifyReport& r, OutputFormat f) {
  switch (f) {
    case OutputFormat::Json:
      return classify_to_json(r).dump(2) + "\n";
    case OutputFormat::Csv: {
      std::string out = "n,m,gamma_sp,sd_gamma_sp,class,in_U,witness_edges\n";
      std::string ws;
      for (const auto& e : r.witness_edges) {
        if (!ws.empty()) ws += " ";
        ws += std::to_string(e.first) + "-" + std::to_string(e.second);
      }
      out += std::to_string(r.n) + "," + std::to_string(r.m) + "," +
             std::to_string(r.gamma_sp_value) + "," + std::to_string(r.sd) + "," +
             (r.class2 ? "2" : "1") + "," + (r.in_u ? "yes" : "no") + "," + ws + "\n";
      return out;
    }
    default: {
      std::ostringstream out;
      out << "graph: n=" << r.n << " m=" << r.m << "\n";
      out << "gamma_sp = " << r.gamma_sp_value << "\n";
      out << "sd_gamma_sp = " << r.sd;
      if (!r.witness_edges.empty()) {
        out << "  witness =";
        for (const auto& e : r.witness_edges) out << " " << edge_text(e);
      }
      if (!r.note.empty()) out << "  (" << r.note << ")";
      out << "\n";
      out << "class = " << (r.class2 ? "2" : "1") << "\n";
      out << "in_U = " << (r.in_u ? "yes" : "no") << "\n";
      return out.str();
    }
  }
}

std::string render(const std::vector<VerifyReport>& rs, OutputFormat f) {
  switch (f) {
    case OutputFormat::Json: {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : rs) arr.push_back(report_to_json(r));
      return arr.dump(2) + "\n";
    }
    case OutputFormat::Csv: {
      std::string out =
          "theorem_id,n_min,n_max,instances_checked,skipped_precondition,violations,verdict,"
          "elapsed_ms\n";
      for (const auto& r : rs) {
        out += r.theorem_id + "," + std::to_string(r.n_min) + "," + std::to_string(r.n_max) +
               "," + std::to_string(r.instances_checked) + "," +
               std::to_string(r.skipped_precondition) + "," +
               std::to_string(r.violations.size()) + "," + (r.pass() ? "pass" : "fail") + "," +
               std::to_string(r.elapsed_ms) + "\n";
      }
      return out;
    }
    default: {
      std::ostringstream out;
      for (const auto& r : rs) {
        out << r.theorem_id << "  n=" << r.n_min << ".." << r.n_max
            << "  checked=" << r.instances_checked << "  skipped=" << r.skipped_precondition
            << "  violations=" << r.violations.size() << "  "
            << (r.pass() ? "pass" : "fail") << "  (" << r.elapsed_ms << " ms)\n";
        for (const auto& v : r.violations) {
          std::string tree = v.tree;
          for (auto& c : tree)
            if (c == '\n') c = ' ';
          out << "  violation: " << v.detail << "  tree: " << tree << "\n";
        }
      }
      return out.str();
    }
  }
}

}  // namespace superdom
