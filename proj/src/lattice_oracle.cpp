#include "conefn/lattice_oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "conefn/errors.hpp"

namespace conefn {
namespace {

struct RowFrame {
  IntVector e;                 // interior primitive direction
  std::vector<IntVector> f;    // completion to a unimodular basis
};

RowFrame row_frame(const Cone& c) {
  IntVector e(c.dim(), 0);
  for (const auto& x : c.edge_rays()) e = add(e, x);
  const Int g = gcd_of(e);
  for (Int& v : e) v /= g;
  const IntMatrix q = unimodular_completion(e);
  RowFrame rf{e, {}};
  for (int k = 1; k < c.dim(); ++k) {
    IntVector col(c.dim());
    for (int i = 0; i < c.dim(); ++i) col[i] = q[i][k];
    rf.f.push_back(col);
  }
  return rf;
}

double ceil_div(Int a, Int b) { return std::ceil(static_cast<double>(a) / static_cast<double>(b)); }

}  // namespace

double cone_generating_function(const Cone& c, const std::vector<double>& omega, double t, bool closed,
                                double rel_tol) {
  if (!dual_contains(c, omega, true)) throw DomainError("oracle needs omega strictly inside the dual cone");
  const RowFrame rf = row_frame(c);
  const int m = c.dim() - 1;
  const Int lo = closed ? 0 : 1;
  std::vector<Int> ve, vf0, vf1;
  for (const auto& v : c.normals()) {
    ve.push_back(dot(v, rf.e));
    vf0.push_back(dot(v, rf.f[0]));
    vf1.push_back(m > 1 ? dot(v, rf.f[1]) : 0);
  }
  auto wdot = [&](const IntVector& x) {
    double s = 0;
    for (int i = 0; i < c.dim(); ++i) s += omega[i] * static_cast<double>(x[i]);
    return s;
  };
  const double ew = wdot(rf.e), f0w = wdot(rf.f[0]), f1w = m > 1 ? wdot(rf.f[1]) : 0.0;
  const double row_den = -std::expm1(-t * ew);
  auto row = [&](Int b0, Int b1) {
    double amin = -INFINITY;
    for (std::size_t i = 0; i < ve.size(); ++i)
      amin = std::max(amin, ceil_div(lo - b0 * vf0[i] - b1 * vf1[i], ve[i]));
    return std::exp(-t * (amin * ew + static_cast<double>(b0) * f0w + static_cast<double>(b1) * f1w)) / row_den;
  };
  double total = 0.0;
  for (Int s = 0;; ++s) {
    double shell = 0.0;
    if (m == 1) {
      shell = s == 0 ? row(0, 0) : row(s, 0) + row(-s, 0);
    } else if (s == 0) {
      shell = row(0, 0);
    } else {
      for (Int k = -s; k <= s; ++k) shell += row(k, s) + row(k, -s);
      for (Int k = -s + 1; k <= s - 1; ++k) shell += row(s, k) + row(-s, k);
    }
    total += shell;
    if (s > 3 && shell <= rel_tol * total) break;
    if (s > 1'000'000) throw BudgetError("lattice generating function did not converge", shell);
  }
  return total;
}

std::vector<double> oracle_taylor(const Cone& c, const std::vector<double>& omega, std::optional<double> eta,
                                  const OracleConfig& cfg) {
  const int d = c.dim();
  const int big_d = eta ? d + 1 : d;
  // Poles of the generating function sit at |t| = 2 pi / |omega . x_e| (and 2 pi / |eta|).
  double reach = eta ? std::abs(*eta) : 0.0;
  for (const auto& x : c.edge_rays()) {
    double s = 0;
    for (int i = 0; i < d; ++i) s += omega[i] * static_cast<double>(x[i]);
    reach = std::max(reach, std::abs(s));
  }
  const double b = std::min(cfg.t_max, 0.4 * 2 * std::numbers::pi / reach);
  const double a = std::min(cfg.t_min, 0.25 * b);

  const int rows = 2 * cfg.nodes, cols = cfg.degree + 1;
  Eigen::MatrixXd A(rows, cols);
  Eigen::VectorXd y(rows);
  int r = 0;
  for (int k = 0; k < cfg.nodes; ++k) {
    const double t = a + (b - a) * (1 - std::cos(std::numbers::pi * (k + 0.5) / cfg.nodes)) / 2;
    for (int sgn : {1, -1}) {
      // t^d G_{C°}(t) at +t, and (by reciprocity) t^d G_C(t) at -t.
      double f = std::pow(t, d) * cone_generating_function(c, omega, t, sgn < 0, cfg.rel_tol);
      const double s = sgn * t;
      if (eta) f *= s / std::expm1(*eta * s);
      y(r) = f;
      const double u = s / b;
      double tm = 1.0, tc = u;  // Chebyshev T_0, T_1
      A(r, 0) = 1.0;
      if (cols > 1) A(r, 1) = u;
      for (int n = 2; n < cols; ++n) {
        const double tn = 2 * u * tc - tm;
        A(r, n) = tn;
        tm = tc;
        tc = tn;
      }
      ++r;
    }
  }
  const Eigen::VectorXd coef = A.colPivHouseholderQr().solve(y);
  // Low monomial coefficients of sum_n coef_n T_n(u), then undo the scaling u = t / b.
  std::vector<double> h(big_d + 1, 0.0);
  std::vector<double> tprev(big_d + 1, 0.0), tcur(big_d + 1, 0.0);
  tprev[0] = 1.0;  // T_0
  if (big_d >= 1) tcur[1] = 1.0;  // T_1
  for (int n = 0; n < cols; ++n) {
    const std::vector<double>& tn = n == 0 ? tprev : tcur;
    for (int k = 0; k <= big_d; ++k) h[k] += coef(n) * tn[k];
    if (n >= 1) {
      std::vector<double> next(big_d + 1, 0.0);
      for (int k = 0; k <= big_d; ++k) next[k] = (k > 0 ? 2 * tcur[k - 1] : 0.0) - tprev[k];
      tprev = tcur;
      tcur = next;
    }
  }
  for (int k = 0; k <= big_d; ++k) h[k] /= std::pow(b, k);
  return h;
}

double bernoulli_cone_oracle(const Cone& c, double z, const std::vector<double>& omega, std::optional<double> eta,
                             const OracleConfig& cfg) {
  const std::vector<double> h = oracle_taylor(c, omega, eta, cfg);
  const int big_d = static_cast<int>(h.size()) - 1;
  // t^D e^{zt} G(t) = sum_n B_{D,n} t^n / n!  =>  B_{D,D} = D! sum_k h_k z^{D-k} / (D-k)!
  double s = 0.0;
  for (int k = 0; k <= big_d; ++k) s += h[k] * std::pow(z, big_d - k) / std::tgamma(big_d - k + 1.0);
  return s * std::tgamma(big_d + 1.0);
}

}  // namespace conefn
