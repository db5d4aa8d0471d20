#pragma once

#include <optional>
#include <vector>

#include "conefn/lattice_cones.hpp"

namespace conefn {

/// Independent route to the cone Bernoulli polynomials: the lattice generating
/// function G(t) = sum_{n in C°} e^{-t omega.n} is summed numerically along rows
/// of an interior lattice direction, t^d G(t) is fitted by a polynomial on
/// +-[t_min, t_max] (negative t via Stanley reciprocity), and the low Taylor
/// coefficients are read off.
struct OracleConfig {
  double t_min = 0.15;
  double t_max = 1.2;  // shrunk automatically to stay inside the disk of convergence
  int degree = 24;
  int nodes = 40;  // per sign of t
  double rel_tol = 1e-18;
};

/// Interior (closed = false) or closed-cone generating function at real t > 0.
double cone_generating_function(const Cone& c, const std::vector<double>& omega, double t, bool closed,
                                double rel_tol = 1e-18);

/// Taylor coefficients h_0..h_{D} of t^D G_{C°}(t) (times t/(e^{eta t}-1) when lifted), D = dim (+1).
std::vector<double> oracle_taylor(const Cone& c, const std::vector<double>& omega,
                                  std::optional<double> eta = std::nullopt, const OracleConfig& cfg = {});

/// B^C_{D,D}(z | omega[, eta]) from the fitted coefficients. omega must lie in the dual interior.
double bernoulli_cone_oracle(const Cone& c, double z, const std::vector<double>& omega,
                             std::optional<double> eta = std::nullopt, const OracleConfig& cfg = {});

}  // namespace conefn
