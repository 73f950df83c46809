#pragma once

// User-facing rendering of computation results in text, JSON and CSV.
// The three formats carry the same numeric content; the format tests
// hold them to that.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "superdom/harness.hpp"
#include "superdom/subdivision.hpp"
#include "superdom/vertex_set.hpp"

namespace superdom {

enum class OutputFormat { Text, Json, Csv };

OutputFormat format_from_name(const std::string& name);

struct ParameterResult {
  std::string name;  // gamma, gamma_t, gamma_sp
  int value = 0;
  VertexSet witness;
};

struct ComputeReport {
  int n = 0;
  int m = 0;
  std::vector<ParameterResult> params;
};

struct ClassifyReport {
  int n = 0;
  int m = 0;
  int gamma_sp_value = 0;
  bool class2 = false;
  bool in_u = false;
  int sd = 0;  // 0 when no pair of edge subdivisions raises the value
  std::vector<Edge> witness_edges;
  std::string note;  // explains sd == 0
};

std::string render(const ComputeReport& r, OutputFormat f);
std::string render(const ClassifyReport& r, OutputFormat f);
std::string render(const std::vector<VerifyReport>& rs, OutputFormat f);

nlohmann::json compute_to_json(const ComputeReport& r);
nlohmann::json classify_to_json(const ClassifyReport& r);

}  // namespace superdom
