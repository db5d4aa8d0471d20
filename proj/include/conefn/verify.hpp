#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "conefn/generalized.hpp"
#include "conefn/report.hpp"

namespace conefn {

/// s2c-factorization, s3c-factorization, g1c-factorization, g2c-factorization,
/// g2c-alternative, modular-identity
const std::vector<std::string>& theorem_ids();
bool is_theorem_id(const std::string& id);

struct VerifyOptions {
  std::size_t samples = 5;
  std::uint64_t seed = 1;
  EvalConfig cfg;
  std::string cone_label;
  int max_attempts = 50;  // per sample, on conditioning / budget rejections
};

/// Samples generic points with a seeded generator, evaluates both sides of the
/// identity by independent routes and records residuals. A cone violating the
/// theorem's hypotheses yields status SKIP; PASS iff max residual < comparison_tol.
VerificationReport verify_theorem(const std::string& id, const Cone& c, const VerifyOptions& opts);

/// Single-point report for exp(-pi i/3 B33^C) = prod_f (S K_f)^* G_1 with the reduced action.
VerificationReport modular_identity_check(const Cone& c, Complex z, const ComplexTuple& omegas,
                                          const EvalConfig& cfg = {});

}  // namespace conefn
