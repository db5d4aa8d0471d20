#pragma once

#include <vector>

#include "conefn/lattice_cones.hpp"

namespace conefn {

/// omega x u = det[omega, u] for a 2-vector of periods and an integer normal.
Complex cross(const ComplexTuple& omega, const IntVector& u);

/// One unimodular piece of a subdivided cone: the ordinary function is
/// evaluated at z + shift with periods (prefix..., a, b).
struct WedgeTerm {
  Complex shift;
  Complex a;
  Complex b;
};

/// Pieces of a 2-d chain u_0..u_{n+1}: (0 | A_n, A_{n+1}) followed by
/// (A_j | A_j, A_{j+1}) for j < n, with A_j = omega x u_j.
std::vector<WedgeTerm> chain_terms(const std::vector<IntVector>& lines, const ComplexTuple& omega);

/// 3-d Gorenstein decomposition: periods in the frame P^T omega, with the
/// Gorenstein direction first; every term carries the extra period w1.
struct GorensteinTerms {
  ComplexTuple frame_omega;  // P^T omega
  Complex w1;                // frame_omega[0]
  std::vector<WedgeTerm> terms;
};
GorensteinTerms gorenstein_terms(const Cone& c, const ComplexTuple& omega);

}  // namespace conefn
