#include "conefn/qseries.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "conefn/bernoulli.hpp"
#include "conefn/errors.hpp"

namespace conefn {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kResonance = 1e-6;
constexpr double kRatioFloor = 1e-9;

struct Ctx {
  const EvalConfig& cfg;
  std::int64_t terms = 0;
  double tail = 0.0;
};

double one_minus_product(const ComplexTuple& qs) {
  double p = 1.0;
  for (const auto& q : qs) p *= 1.0 - std::abs(q);
  return p;
}

void charge(Ctx& ctx, std::int64_t n, double pending) {
  ctx.terms += n;
  if (ctx.terms > ctx.cfg.max_terms)
    throw BudgetError("q-factorial truncation exceeds max_terms=" + std::to_string(ctx.cfg.max_terms), pending);
}

// -sum_n x^n / (n prod_j (1 - q_j^n)), |x| < 1, all |q_j| < 1.
Complex plethystic(Complex x, const ComplexTuple& qs, Ctx& ctx) {
  const double ax = std::abs(x);
  if (ax == 0.0) return 0.0;
  const double denom = (1.0 - ax) * one_minus_product(qs);
  const double target = ctx.cfg.tail_tol * 1e-3;
  ComplexTuple qn(qs);
  Complex xn = x, sum = 0.0;
  double axn = ax;
  for (int n = 1;; ++n) {
    Complex d = 1.0;
    for (const auto& q : qn) d *= 1.0 - q;
    sum -= xn / (static_cast<double>(n) * d);
    axn *= ax;
    const double bound = axn / ((n + 1) * denom);
    charge(ctx, 1, bound);
    if (bound < target) {
      ctx.tail += bound;
      break;
    }
    xn *= x;
    for (std::size_t j = 0; j < qn.size(); ++j) qn[j] *= qs[j];
  }
  return sum;
}

// log (x | qs)_infty with every |q_j| < 1.
Complex log_qf_inside(Complex x, const ComplexTuple& qs, Ctx& ctx) {
  if (qs.empty()) {
    charge(ctx, 1, 0.0);
    return std::log(1.0 - x);
  }
  const double rho = std::clamp(one_minus_product(qs), 0.05, 0.5);
  const double ax = std::abs(x);
  if (ax <= rho) return plethystic(x, qs, ctx);
  // Peel factors along the fastest-decaying modulus until |x| drops below rho.
  std::size_t k = 0;
  for (std::size_t j = 1; j < qs.size(); ++j)
    if (std::abs(qs[j]) < std::abs(qs[k])) k = j;
  const Complex q = qs[k];
  ComplexTuple rest(qs);
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
  const double steps = std::ceil(std::log(rho / ax) / std::log(std::abs(q)));
  if (steps > static_cast<double>(ctx.cfg.max_terms))
    throw BudgetError("q-factorial needs more than max_terms factors", std::numeric_limits<double>::infinity());
  Complex sum = 0.0, xi = x;
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(steps); ++i) {
    sum += log_qf_inside(xi, rest, ctx);
    xi *= q;
  }
  return sum + plethystic(xi, qs, ctx);
}

void check_modulus(Complex q) {
  if (!std::isfinite(q.real()) || !std::isfinite(q.imag())) throw DomainError("non-finite q-factorial modulus");
  const double lq = std::log(std::abs(q));
  if (lq == 0.0) throw NonConvergentError("q-factorial modulus on the unit circle");
  if (std::abs(lq) < kResonance) throw ConditioningError("q-factorial modulus within 1e-6 of the unit circle");
}

void check_ratios(const ComplexTuple& omegas) {
  for (std::size_t j = 0; j < omegas.size(); ++j)
    for (std::size_t k = 0; k < omegas.size(); ++k)
      if (j != k && std::abs((omegas[j] / omegas[k]).imag()) < kRatioFloor)
        throw PreconditionError("period ratio omega_j/omega_k is (numerically) real");
}

}  // namespace

void EvalConfig::validate() const {
  if (!(tail_tol > 0 && tail_tol < comparison_tol && comparison_tol < 1))
    throw DomainError("EvalConfig needs 0 < tail_tol < comparison_tol < 1");
  if (max_terms <= 0 || oracle_radius <= 0 || max_bernoulli_order < 1) throw DomainError("EvalConfig caps must be positive");
}

Complex expi2pi(Complex z) { return std::exp(Complex(0.0, 2 * kPi) * z); }

Complex qpochhammer(Complex x, const ComplexTuple& qs, const EvalConfig& cfg, TruncationStats* stats) {
  if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) throw DomainError("non-finite q-factorial argument");
  Ctx ctx{cfg};
  int flips = 0;
  ComplexTuple inside;
  for (const auto& q : qs) {
    check_modulus(q);
    if (std::abs(q) > 1.0) {
      ++flips;
      x /= q;
      inside.push_back(1.0 / q);
    } else {
      inside.push_back(q);
    }
  }
  const Complex l = x == 0.0 ? Complex(0.0) : log_qf_inside(x, inside, ctx);
  if (stats) {
    stats->terms += ctx.terms;
    stats->tail_bound += ctx.tail;
    stats->products += 1;
  }
  return std::exp(flips % 2 == 0 ? l : -l);
}

Complex qfactorial(Complex z, const ComplexTuple& omegas, const EvalConfig& cfg, TruncationStats* stats) {
  ComplexTuple qs;
  for (const auto& w : omegas) {
    if (w.imag() == 0.0) throw NonConvergentError("real period gives a modulus on the unit circle");
    qs.push_back(expi2pi(w));
  }
  return qpochhammer(expi2pi(z), qs, cfg, stats);
}

Complex elliptic_gamma(Complex z, const ComplexTuple& omegas, const EvalConfig& cfg, TruncationStats* stats) {
  Complex total = 0.0;
  for (const auto& w : omegas) total += w;
  const int r = static_cast<int>(omegas.size()) - 1;
  const Complex a = qfactorial(total - z, omegas, cfg, stats);
  const Complex b = qfactorial(z, omegas, cfg, stats);
  return (r % 2 == 0) ? a * b : a / b;
}

Complex theta0(Complex z, Complex tau, const EvalConfig& cfg, TruncationStats* stats) {
  return elliptic_gamma(z, {tau}, cfg, stats);
}

Complex multiple_sine(Complex z, const ComplexTuple& omegas, const EvalConfig& cfg, SineForm form,
                      TruncationStats* stats) {
  const int r = static_cast<int>(omegas.size());
  if (r == 0) throw DomainError("multiple sine needs at least one period");
  for (const auto& w : omegas)
    if (w == 0.0) throw DomainError("multiple sine period must be nonzero");
  if (r == 1) return 2.0 * std::sin(kPi * z / omegas[0]);
  check_ratios(omegas);
  const double sign = (form == SineForm::kPositive) == (r % 2 == 0) ? 1.0 : -1.0;
  const Complex b = bernoulli_multiple(r, z, omegas, cfg.max_bernoulli_order);
  Complex prod = std::exp(Complex(0.0, sign * kPi / std::tgamma(r + 1.0)) * b);
  const double s = form == SineForm::kPositive ? 1.0 : -1.0;
  for (int k = 0; k < r; ++k) {
    ComplexTuple ratios;
    for (int j = 0; j < r; ++j)
      if (j != k) ratios.push_back(s * omegas[j] / omegas[k]);
    prod *= qfactorial(s * z / omegas[k], ratios, cfg, stats);
  }
  return prod;
}

double relative_residual(Complex lhs, Complex rhs) {
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  if (scale == 0.0) return 0.0;
  return std::abs(lhs - rhs) / scale;
}

double qfactorial_gluing_check(Complex z, Complex w0, Complex w1, const ComplexTuple& rest, const EvalConfig& cfg) {
  auto with = [&](Complex a, Complex b) {
    ComplexTuple w{a, b};
    w.insert(w.end(), rest.begin(), rest.end());
    return w;
  };
  const Complex lhs = qfactorial(z, with(w0, w1), cfg) / qfactorial(z, with(w0, w0 + w1), cfg);
  const Complex rhs = 1.0 / qfactorial(z, with(-w1, w0 + w1), cfg);
  return relative_residual(lhs, rhs);
}

double theta0_modularity_check(Complex z, Complex tau, const EvalConfig& cfg) {
  if (!(tau.imag() > 0)) throw PreconditionError("theta modularity needs Im tau > 0");
  const Complex lhs = theta0(z / tau, -1.0 / tau, cfg);
  const Complex rhs = std::exp(Complex(0.0, -kPi) * bernoulli_multiple(2, z, {tau, -1.0})) * theta0(z, tau, cfg);
  return relative_residual(lhs, rhs);
}

double G2_gluing_check(Complex z, const ComplexTuple& omegas, const EvalConfig& cfg) {
  if (omegas.size() < 2) throw DomainError("gluing needs at least two periods");
  const Complex s = omegas[0] + omegas[1];
  if (std::abs(s.imag()) < kResonance / (2 * kPi)) throw PreconditionError("omega_0 + omega_1 is (numerically) real");
  ComplexTuple glued(omegas), other(omegas);
  glued[1] = s;
  other[0] = -omegas[1];
  other[1] = s;
  const Complex lhs = elliptic_gamma(z, omegas, cfg) / elliptic_gamma(z, glued, cfg);
  const Complex rhs = 1.0 / elliptic_gamma(z, other, cfg);
  return relative_residual(lhs, rhs);
}

double g_modularity_check(Complex z, const ComplexTuple& omegas, const EvalConfig& cfg, bool alternative) {
  check_ratios(omegas);
  const int r = static_cast<int>(omegas.size()) - 1;
  const double eta = alternative ? 1.0 : -1.0;
  ComplexTuple ext(omegas);
  ext.push_back(eta);
  const Complex b = bernoulli_multiple(r + 2, z, ext, cfg.max_bernoulli_order);
  const double sign = alternative ? -1.0 : 1.0;
  Complex rhs = std::exp(Complex(0.0, sign * 2 * kPi / std::tgamma(r + 3.0)) * b);
  for (int k = 0; k <= r; ++k) {
    ComplexTuple w;
    for (int j = 0; j <= r; ++j)
      if (j != k) w.push_back(-eta * omegas[j] / omegas[k]);
    w.push_back(-1.0 / omegas[k]);
    rhs *= elliptic_gamma(-eta * z / omegas[k], w, cfg);
  }
  return relative_residual(elliptic_gamma(z, omegas, cfg), rhs);
}

double g_three_term_check(Complex z, const ComplexTuple& omegas, const EvalConfig& cfg) {
  const int r = static_cast<int>(omegas.size());
  if (r < 2) throw DomainError("three-term identity needs r >= 2");
  check_ratios(omegas);
  Complex lhs = 1.0;
  for (int k = 0; k < r; ++k) {
    ComplexTuple w;
    for (int j = 0; j < r; ++j)
      if (j != k) w.push_back(omegas[j] / omegas[k]);
    lhs *= elliptic_gamma(z / omegas[k], w, cfg);
  }
  const Complex rhs = std::exp(Complex(0.0, -2 * kPi / std::tgamma(r + 1.0)) *
                               bernoulli_multiple(r, z, omegas, cfg.max_bernoulli_order));
  return relative_residual(lhs, rhs);
}

}  // namespace conefn
