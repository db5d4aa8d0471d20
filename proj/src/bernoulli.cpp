#include "conefn/bernoulli.hpp"

#include <algorithm>
#include <cmath>

#include "conefn/decomposition.hpp"
#include "conefn/errors.hpp"

namespace conefn {

PowerSeries PowerSeries::exp_linear(Complex a, int order) {
  std::vector<Complex> c(order);
  Complex term = 1.0;
  for (int k = 0; k < order; ++k) {
    c[k] = term;
    term *= a / static_cast<double>(k + 1);
  }
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::expm1_over_t(Complex a, int order) {
  std::vector<Complex> c(order);
  Complex term = a;
  for (int k = 0; k < order; ++k) {
    c[k] = term;
    term *= a / static_cast<double>(k + 2);
  }
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
  const int n = std::min(order(), o.order());
  std::vector<Complex> c(n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; i + j < n; ++j) c[i + j] += c_[i] * o.c_[j];
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::reciprocal() const {
  if (c_.empty() || c_[0] == 0.0) throw DomainError("series with zero constant term is not invertible");
  const int n = order();
  PowerSeries b({1.0 / c_[0]});
  for (int p = 1; p < n;) {
    p = std::min(2 * p, n);
    PowerSeries a(std::vector<Complex>(c_.begin(), c_.begin() + p));
    std::vector<Complex> bc = b.coeffs();
    bc.resize(p, 0.0);
    PowerSeries bp(std::move(bc));
    PowerSeries ab = a * bp;
    std::vector<Complex> two_minus(p);
    for (int k = 0; k < p; ++k) two_minus[k] = -ab[k];
    two_minus[0] += 2.0;
    b = bp * PowerSeries(std::move(two_minus));
  }
  return b;
}

Complex bernoulli_multiple(int n, Complex z, const ComplexTuple& omegas, int max_order) {
  if (n < 0) throw DomainError("Bernoulli index must be non-negative");
  if (n > max_order) throw PreconditionError("Bernoulli index " + std::to_string(n) + " exceeds the configured maximum " + std::to_string(max_order));
  const int order = n + 2;
  std::vector<Complex> one(order, 0.0);
  one[0] = 1.0;
  PowerSeries den(std::move(one));
  for (const Complex& w : omegas) {
    if (w == 0.0) throw DomainError("Bernoulli period must be nonzero");
    den = den * PowerSeries::expm1_over_t(w, order);
  }
  const PowerSeries gen = den.reciprocal() * PowerSeries::exp_linear(z, order);
  return gen[n] * std::tgamma(n + 1.0);
}

Complex bernoulli_cone_22(const std::vector<IntVector>& chain, Complex z, const ComplexTuple& omegas) {
  if (omegas.size() != 2) throw DomainError("a 2-d cone needs two periods");
  Complex s = 0.0;
  for (const auto& t : chain_terms(chain, omegas)) s += bernoulli_multiple(2, z + t.shift, {t.a, t.b});
  return s;
}

Complex bernoulli_cone_22(const Cone& c, Complex z, const ComplexTuple& omegas) {
  if (c.dim() != 2) throw UnsupportedError("B_22 of a cone needs a 2-d cone");
  if (!is_good(c)) throw NotGoodError("cone is not good");
  return bernoulli_cone_22(wedge_chain(c).lines, z, omegas);
}

Complex bernoulli_cone_33(const Cone& c, Complex z, const ComplexTuple& omegas) {
  if (c.dim() != 3) throw UnsupportedError("B_33 of a cone needs a 3-d cone");
  const GorensteinTerms g = gorenstein_terms(c, omegas);
  // The apex ray along the Gorenstein direction contributes 3! B_11(z|w1) = 6z/w1 - 3.
  Complex s = 6.0 * bernoulli_multiple(1, z, {g.w1});
  for (const auto& t : g.terms) s += bernoulli_multiple(3, z + t.shift, {g.w1, t.a, t.b});
  return s;
}

Complex bernoulli_cone_lifted(const Cone& c, Complex z, const ComplexTuple& omegas, Complex eta) {
  if (c.dim() == 2) {
    if (!is_good(c)) throw NotGoodError("cone is not good");
    if (omegas.size() != 2) throw DomainError("a 2-d cone needs two periods");
    Complex s = 0.0;
    for (const auto& t : chain_terms(wedge_chain(c).lines, omegas))
      s += bernoulli_multiple(3, z + t.shift, {t.a, t.b, eta});
    return s;
  }
  if (c.dim() == 3) {
    const GorensteinTerms g = gorenstein_terms(c, omegas);
    // Lift of the apex correction: 4!/2! B_22(z|w1, eta).
    Complex s = 12.0 * bernoulli_multiple(2, z, {g.w1, eta});
    for (const auto& t : g.terms) s += bernoulli_multiple(4, z + t.shift, {g.w1, t.a, t.b, eta});
    return s;
  }
  throw UnsupportedError("lifted cone Bernoulli polynomials need dim 2 or 3");
}

}  // namespace conefn
