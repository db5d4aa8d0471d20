#pragma once

#include <cmath>
#include <complex>
#include <random>

#include "conefn/lattice_cones.hpp"

namespace testing {

using conefn::Complex;
using conefn::ComplexTuple;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240917);
  return gen;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline Complex random_z(double re = 0.4, double im = 0.15) { return {uniform(-re, re), uniform(-im, im)}; }

// Upper or lower half plane, bounded away from the real axis.
inline Complex random_period(bool upper) {
  double arg = uniform(0.35, M_PI - 0.35);
  double mod = uniform(0.6, 1.3);
  Complex w = std::polar(mod, arg);
  return upper ? w : -w;
}

// Periods whose pairwise ratios stay off the real axis.
inline ComplexTuple generic_periods(std::size_t n, double min_ratio_im = 0.25) {
  for (;;) {
    ComplexTuple w;
    for (std::size_t i = 0; i < n; ++i) w.push_back(std::polar(uniform(0.6, 1.3), uniform(-M_PI, M_PI)));
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (std::abs(w[i].imag()) < 0.2) ok = false;
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && std::abs((w[i] / w[j]).imag()) < min_ratio_im) ok = false;
    }
    if (ok) return w;
  }
}

inline double rel(Complex a, Complex b) {
  double m = std::max(std::abs(a), std::abs(b));
  return m == 0.0 ? 0.0 : std::abs(a - b) / m;
}

}  // namespace testing
