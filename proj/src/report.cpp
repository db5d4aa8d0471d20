#include "conefn/report.hpp"

#include <algorithm>

namespace conefn {

double VerificationReport::max_residual() const {
  double m = 0.0;
  for (const auto& s : samples) m = std::max(m, s.residual);
  return m;
}

double VerificationReport::median_residual() const {
  if (samples.empty()) return 0.0;
  std::vector<double> r;
  for (const auto& s : samples) r.push_back(s.residual);
  std::sort(r.begin(), r.end());
  const std::size_t n = r.size();
  return n % 2 ? r[n / 2] : 0.5 * (r[n / 2 - 1] + r[n / 2]);
}

nlohmann::json to_json(Complex z) { return nlohmann::json::array({z.real(), z.imag()}); }

nlohmann::json to_json(const EvalConfig& cfg) {
  return {{"tail_tol", cfg.tail_tol},
          {"comparison_tol", cfg.comparison_tol},
          {"max_terms", cfg.max_terms},
          {"oracle_radius", cfg.oracle_radius},
          {"max_bernoulli_order", cfg.max_bernoulli_order}};
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json points = nlohmann::json::array();
  for (const auto& s : r.samples) {
    nlohmann::json om = nlohmann::json::array();
    for (const auto& w : s.omegas) om.push_back(to_json(w));
    points.push_back({{"index", s.index},
                      {"z", to_json(s.z)},
                      {"omegas", om},
                      {"lhs", to_json(s.lhs)},
                      {"rhs", to_json(s.rhs)},
                      {"residual", s.residual},
                      {"truncation", {{"terms", s.stats.terms}, {"tail_bound", s.stats.tail_bound}, {"products", s.stats.products}}}});
  }
  nlohmann::json j = {{"schema", kReportSchema},
                      {"theorem", r.theorem},
                      {"cone", {{"label", r.cone_label}, {"dim", r.dim}, {"normals", r.normals}}},
                      {"config", to_json(r.config)},
                      {"seed", r.seed},
                      {"status", r.status},
                      {"points", points},
                      {"max_residual", r.max_residual()},
                      {"median_residual", r.median_residual()}};
  if (!r.reason.empty()) j["reason"] = r.reason;
  return j;
}

}  // namespace conefn
