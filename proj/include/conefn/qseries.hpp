#pragma once

#include <cstdint>

#include "conefn/lattice_cones.hpp"

namespace conefn {

struct EvalConfig {
  double tail_tol = 1e-14;        // bound on the discarded log-series tail per product
  double comparison_tol = 1e-8;   // pass/fail threshold for identity residuals
  std::int64_t max_terms = 20'000'000;  // factors + series terms per product
  int oracle_radius = 50;         // lattice enumeration cutoff
  int max_bernoulli_order = 8;

  /// Throws DomainError unless 0 < tail_tol < comparison_tol < 1 and the caps are positive.
  void validate() const;
};

/// Work done by a product evaluation; accumulated across calls when shared.
struct TruncationStats {
  std::int64_t terms = 0;
  double tail_bound = 0.0;  // sum of bounds on the discarded log-series tails
  int products = 0;
};

/// e^{2 pi i z}
Complex expi2pi(Complex z);

/// (x | q_0, ..., q_r)_infty in the exponentiated variables. Moduli outside the
/// unit disk are handled by inversion: each |q_j| > 1 is replaced by 1/q_j,
/// x by x/q_j, and the result raised to the power -1. An empty list gives 1 - x.
Complex qpochhammer(Complex x, const ComplexTuple& qs, const EvalConfig& cfg = {},
                    TruncationStats* stats = nullptr);
/// Same with x = e(z), q_j = e(omega_j).
Complex qfactorial(Complex z, const ComplexTuple& omegas, const EvalConfig& cfg = {},
                   TruncationStats* stats = nullptr);

/// Multiple elliptic gamma G_r with r = omegas.size() - 1 (r = -1 allowed).
Complex elliptic_gamma(Complex z, const ComplexTuple& omegas, const EvalConfig& cfg = {},
                       TruncationStats* stats = nullptr);
Complex theta0(Complex z, Complex tau, const EvalConfig& cfg = {}, TruncationStats* stats = nullptr);

enum class SineForm { kPositive, kNegative };
/// Multiple sine S_r via its product formula in q-factorials. r = 1 gives 2 sin(pi z / omega).
/// kPositive uses e(z/omega_k), kNegative the inverted variables e(-z/omega_k).
Complex multiple_sine(Complex z, const ComplexTuple& omegas, const EvalConfig& cfg = {},
                      SineForm form = SineForm::kPositive, TruncationStats* stats = nullptr);

/// |lhs - rhs| / max(|lhs|, |rhs|), zero when both vanish.
double relative_residual(Complex lhs, Complex rhs);

double qfactorial_gluing_check(Complex z, Complex w0, Complex w1, const ComplexTuple& rest,
                               const EvalConfig& cfg = {});
double theta0_modularity_check(Complex z, Complex tau, const EvalConfig& cfg = {});
double G2_gluing_check(Complex z, const ComplexTuple& omegas, const EvalConfig& cfg = {});
/// G_r(z|omega) against the Bernoulli exponential times the r+1 transformed factors;
/// alternative = true uses the inverse S-duality form.
double g_modularity_check(Complex z, const ComplexTuple& omegas, const EvalConfig& cfg = {},
                          bool alternative = false);
/// prod_k G_{r-2}(z/omega_k | omega_j/omega_k) = exp(-2 pi i / r! B_rr(z|omega)), r >= 2.
double g_three_term_check(Complex z, const ComplexTuple& omegas, const EvalConfig& cfg = {});

}  // namespace conefn
