#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "conefn/qseries.hpp"

namespace conefn {

constexpr int kReportSchema = 1;

struct SampleResult {
  std::size_t index = 0;
  Complex z;
  ComplexTuple omegas;
  Complex lhs;
  Complex rhs;
  double residual = 0.0;
  TruncationStats stats;
};

struct VerificationReport {
  std::string theorem;
  std::string cone_label;
  std::vector<IntVector> normals;
  int dim = 0;
  EvalConfig config;
  std::uint64_t seed = 0;
  std::vector<SampleResult> samples;
  std::string status;  // PASS, FAIL or SKIP
  std::string reason;  // why SKIP / FAIL, empty otherwise

  double max_residual() const;
  double median_residual() const;
};

nlohmann::json to_json(Complex z);  // [re, im]
nlohmann::json to_json(const EvalConfig& cfg);
nlohmann::json to_json(const VerificationReport& r);

}  // namespace conefn
