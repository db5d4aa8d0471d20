#pragma once

#include <vector>

#include "conefn/lattice_cones.hpp"

namespace conefn {

/// Truncated power series in t with complex coefficients.
class PowerSeries {
 public:
  explicit PowerSeries(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {}
  static PowerSeries exp_linear(Complex a, int order);  // e^{a t}
  // (e^{a t} - 1) / t
  static PowerSeries expm1_over_t(Complex a, int order);

  int order() const { return static_cast<int>(c_.size()); }
  Complex operator[](int k) const { return c_[k]; }
  const std::vector<Complex>& coeffs() const { return c_; }

  PowerSeries operator*(const PowerSeries& o) const;
  /// Newton iteration b <- b (2 - a b), doubling the precision each round.
  PowerSeries reciprocal() const;

 private:
  std::vector<Complex> c_;  // c_[k] multiplies t^k
};

constexpr int kDefaultMaxBernoulliOrder = 8;

/// B_{r,n}(z|omega) with r = omegas.size(): n! [t^n] t^r e^{zt} / prod (e^{omega_i t} - 1).
Complex bernoulli_multiple(int n, Complex z, const ComplexTuple& omegas,
                           int max_order = kDefaultMaxBernoulliOrder);

/// Cone Bernoulli polynomials. Sum over the interior lattice points of the cone.
Complex bernoulli_cone_22(const Cone& c, Complex z, const ComplexTuple& omegas);
Complex bernoulli_cone_22(const std::vector<IntVector>& chain, Complex z, const ComplexTuple& omegas);
Complex bernoulli_cone_33(const Cone& c, Complex z, const ComplexTuple& omegas);
/// Lifted cone C x R_+ with extra period eta: B_{3,3} for 2-d cones, B_{4,4} for 3-d cones.
Complex bernoulli_cone_lifted(const Cone& c, Complex z, const ComplexTuple& omegas, Complex eta);

}  // namespace conefn
