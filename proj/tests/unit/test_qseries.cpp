#include <cmath>

#include "doctest.h"
#include "support.hpp"
#include "conefn/bernoulli.hpp"
#include "conefn/errors.hpp"
#include "conefn/qseries.hpp"

using namespace conefn;
using testing::rel;
using testing::uniform;

namespace {

// Periods with the given signs of Im.
ComplexTuple signed_periods(std::initializer_list<bool> upper) {
  ComplexTuple w;
  for (bool u : upper) w.push_back(testing::random_period(u));
  return w;
}

ComplexTuple negated(ComplexTuple w) {
  for (auto& x : w) x = -x;
  return w;
}

ComplexTuple without(ComplexTuple w, std::size_t j) {
  w.erase(w.begin() + static_cast<std::ptrdiff_t>(j));
  return w;
}

ComplexTuple flipped(ComplexTuple w, std::size_t j) {
  w[j] = -w[j];
  return w;
}

// Direct truncated product over j_0..j_r <= n, all |q| < 1.
Complex brute_qfactorial(Complex z, const ComplexTuple& w, int n) {
  std::vector<int> j(w.size(), 0);
  Complex p = 1.0;
  for (;;) {
    Complex arg = z;
    for (std::size_t i = 0; i < w.size(); ++i) arg += static_cast<double>(j[i]) * w[i];
    p *= 1.0 - expi2pi(arg);
    std::size_t i = 0;
    while (i < j.size() && ++j[i] > n) j[i++] = 0;
    if (i == j.size()) return p;
  }
}

// Periods with Im bounded away from zero for omega_0, omega_1 and their sum.
bool gluing_ok(Complex a, Complex b) {
  return std::abs(a.imag()) > 0.2 && std::abs(b.imag()) > 0.2 && std::abs((a + b).imag()) > 0.2;
}

}  // namespace

TEST_CASE("q-factorial basics") {
  CHECK(qpochhammer(0.0, {Complex(0.3, 0.1), Complex(-0.2, 0.4)}) == Complex(1.0));
  Complex x{0.3, -0.7};
  CHECK(std::abs(qpochhammer(x, {}) - (1.0 - x)) < 1e-15);
  CHECK(std::abs(qfactorial(0.0, {Complex(0.1, 0.8)})) < 1e-15);  // zero at z = 0
}

TEST_CASE("q-factorial against the direct product") {
  for (int t = 0; t < 10; ++t) {
    Complex z = testing::random_z(0.5, 0.5);
    ComplexTuple w = {Complex(uniform(-0.5, 0.5), uniform(0.8, 1.2)), Complex(uniform(-0.5, 0.5), uniform(0.8, 1.2))};
    CHECK(rel(qfactorial(z, w), brute_qfactorial(z, w, 40)) < 1e-12);
    // One inverted modulus, via the explicit product definition.
    ComplexTuple m = {-w[0], w[1]};
    Complex expected = 1.0 / brute_qfactorial(z + w[0], {w[0], w[1]}, 40);
    CHECK(rel(qfactorial(z, m), expected) < 1e-12);
  }
}

TEST_CASE("block inversion and shift identities") {
  std::vector<std::initializer_list<bool>> patterns = {{true}, {false}, {true, true}, {true, false}, {false, false},
                                                      {true, true, false}, {false, true, false}};
  for (const auto& p : patterns) {
    for (int t = 0; t < 10; ++t) {
      ComplexTuple w = signed_periods(p);
      Complex z = testing::random_z();
      for (std::size_t j = 0; j < w.size(); ++j) {
        Complex inv = qfactorial(z, w) * qfactorial(z - w[j], flipped(w, j));
        CHECK(std::abs(inv - 1.0) < 1e-10);
        Complex shifted = qfactorial(z + w[j], w);
        CHECK(rel(shifted, qfactorial(z, w) / qfactorial(z, without(w, j))) < 1e-10);
      }
    }
  }
}

TEST_CASE("gluing in every sign case") {
  int all_inside = 0, mixed = 0, outside = 0;
  for (int t = 0; t < 2000 && (all_inside < 10 || mixed < 10 || outside < 10); ++t) {
    Complex a = testing::random_period(true), b = testing::random_period(uniform(0, 1) < 0.3);
    if (!gluing_ok(a, b)) continue;
    int& bucket = b.imag() > 0 ? all_inside : (a + b).imag() > 0 ? mixed : outside;
    if (bucket >= 10) continue;
    ++bucket;
    ComplexTuple rest = signed_periods({uniform(0, 1) < 0.5});
    Complex z = testing::random_z();
    CHECK(qfactorial_gluing_check(z, a, b, {}) < 1e-10);
    CHECK(qfactorial_gluing_check(z, a, b, rest) < 1e-10);
  }
  CHECK(all_inside == 10);
  CHECK(mixed == 10);
  CHECK(outside == 10);
}

TEST_CASE("elliptic gamma functional equations") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (int t = 0; t < 10; ++t) {
      ComplexTuple w;
      for (std::size_t i = 0; i < n; ++i) w.push_back(testing::random_period(uniform(0, 1) < 0.6));
      Complex z = testing::random_z();
      Complex g = elliptic_gamma(z, w);
      CHECK(rel(elliptic_gamma(z + 1.0, w), g) < 1e-10);
      CHECK(std::abs(elliptic_gamma(-z, negated(w)) * g - 1.0) < 1e-10);
      for (std::size_t j = 0; j < n; ++j) {
        Complex lower = elliptic_gamma(z, without(w, j));
        CHECK(rel(elliptic_gamma(z + w[j], w), lower * g) < 1e-10);
        CHECK(std::abs(g * elliptic_gamma(z - w[j], flipped(w, j)) - 1.0) < 1e-10);
        CHECK(std::abs(g * elliptic_gamma(z, flipped(w, j)) * lower - 1.0) < 1e-10);
      }
    }
  }
}

TEST_CASE("elliptic gamma product form") {
  for (int t = 0; t < 5; ++t) {
    ComplexTuple w = {Complex(uniform(-0.5, 0.5), uniform(0.8, 1.2)), Complex(uniform(-0.5, 0.5), uniform(0.8, 1.2))};
    Complex z = testing::random_z(0.5, 0.3);
    Complex expect = brute_qfactorial(w[0] + w[1] - z, w, 40) / brute_qfactorial(z, w, 40);
    CHECK(rel(elliptic_gamma(z, w), expect) < 1e-12);
  }
}

TEST_CASE("theta modularity") {
  CHECK(theta0_modularity_check({0.3, 0.2}, {0.0, 1.0}) < 1e-10);
  CHECK(theta0_modularity_check({0.3, 0.2}, {0.0, 2.0}) < 1e-10);
  EvalConfig fine;
  fine.tail_tol = 1e-16;
  CHECK(theta0_modularity_check({0.3, 0.2}, {0.0, 0.05}, fine) < 1e-8);
  for (int t = 0; t < 10; ++t)
    CHECK(theta0_modularity_check(testing::random_z(), testing::random_period(true)) < 1e-10);
  CHECK_THROWS_AS(theta0_modularity_check(0.1, {0.0, -1.0}), PreconditionError);
}

TEST_CASE("modular property of G_r, both forms") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (int t = 0; t < 10; ++t) {
      ComplexTuple w = testing::generic_periods(n);
      Complex z = testing::random_z();
      CHECK(g_modularity_check(z, w) < 1e-8);
      CHECK(g_modularity_check(z, w, {}, true) < 1e-8);
    }
  }
  for (std::size_t n = 2; n <= 3; ++n)
    for (int t = 0; t < 10; ++t) CHECK(g_three_term_check(testing::random_z(), testing::generic_periods(n)) < 1e-10);
}

TEST_CASE("G_r gluing") {
  for (std::size_t extra = 0; extra <= 1; ++extra) {
    int done = 0;
    while (done < 10) {
      Complex a = testing::random_period(uniform(0, 1) < 0.5), b = testing::random_period(uniform(0, 1) < 0.5);
      if (!gluing_ok(a, b)) continue;
      ++done;
      ComplexTuple w = {a, b};
      if (extra) w.push_back(testing::random_period(uniform(0, 1) < 0.5));
      CHECK(G2_gluing_check(testing::random_z(), w) < 1e-10);
    }
  }
  CHECK_THROWS_AS(G2_gluing_check(0.1, {Complex(0.3, 0.5), Complex(0.2, -0.5)}), PreconditionError);
}

TEST_CASE("multiple sine") {
  CHECK(std::abs(multiple_sine(0.25, {1.0}) - std::sqrt(2.0)) < 1e-15);
  for (std::size_t r = 2; r <= 3; ++r) {
    for (int t = 0; t < 20; ++t) {
      ComplexTuple w = testing::generic_periods(r);
      Complex z = testing::random_z();
      Complex sum = 0.0;
      for (auto x : w) sum += x;
      Complex s = multiple_sine(z, w);
      CHECK(rel(multiple_sine(z, w, {}, SineForm::kNegative), s) < 1e-9);
      Complex reflected = multiple_sine(sum - z, w);
      CHECK(rel(r % 2 ? reflected : 1.0 / reflected, s) < 1e-9);
      Complex c = std::polar(uniform(0.7, 1.4), uniform(-3.0, 3.0));
      ComplexTuple cw;
      for (auto x : w) cw.push_back(c * x);
      CHECK(rel(multiple_sine(c * z, cw), s) < 1e-9);
      ComplexTuple rev(w.rbegin(), w.rend());
      CHECK(rel(multiple_sine(z, rev), s) < 1e-9);
      for (std::size_t i = 0; i < r; ++i)
        CHECK(rel(multiple_sine(z + w[i], w), s / multiple_sine(z, without(w, i))) < 1e-9);
    }
  }
  CHECK_THROWS_AS(multiple_sine(0.1, {Complex(1.0, 0.5), Complex(2.0, 1.0)}), PreconditionError);
  CHECK_THROWS_AS(multiple_sine(0.1, {}), DomainError);
}

TEST_CASE("truncation control") {
  ComplexTuple w = {Complex(0.1, 0.3), Complex(-0.2, 0.25)};
  Complex z{0.17, 0.05};
  EvalConfig coarse, fine;
  coarse.tail_tol = 1e-10;
  fine.tail_tol = 0.5e-10;
  TruncationStats sc, sf;
  Complex a = qfactorial(z, w, coarse, &sc), b = qfactorial(z, w, fine, &sf);
  CHECK(sc.products == 1);
  CHECK(sc.tail_bound < coarse.tail_tol);
  CHECK(sf.tail_bound < fine.tail_tol);
  CHECK(sf.terms >= sc.terms);
  CHECK(rel(a, b) < 2 * (sc.tail_bound + sf.tail_bound) + 1e-15);

  TruncationStats acc;
  qfactorial(z, w, {}, &acc);
  qfactorial(z, w, {}, &acc);
  CHECK(acc.products == 2);
}

TEST_CASE("evaluation errors") {
  CHECK_THROWS_AS(qfactorial(0.1, {Complex(0.3, 0.0)}), NonConvergentError);
  CHECK_THROWS_AS(qpochhammer(0.5, {Complex(0.0, 1.0)}), NonConvergentError);
  CHECK_THROWS_AS(qfactorial(0.1, {Complex(0.3, 1e-9)}), ConditioningError);
  EvalConfig tiny;
  tiny.max_terms = 10;
  try {
    qfactorial(0.1, {Complex(0.0, 0.01)}, tiny);
    FAIL("expected a budget error");
  } catch (const BudgetError& e) {
    CHECK(e.partial_tail() > 0.0);
    CHECK(e.kind() == ErrorKind::kBudget);
  }
  EvalConfig bad;
  bad.tail_tol = 1e-3;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  CHECK_NOTHROW(EvalConfig{}.validate());
}
