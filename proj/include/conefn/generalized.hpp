#pragma once

#include <vector>

#include "conefn/lattice_cones.hpp"
#include "conefn/qseries.hpp"

namespace conefn {

/// Contribution of one 1-d face to a factorized formula.
struct FaceFactor {
  std::size_t face;
  IntMatrix transform;  // S K_f (or S^{-1} K_f)
  Complex z;            // transformed z
  ComplexTuple tau;     // transformed periods, as returned by group_action
  Complex value;
};

enum class G2CVariant { kPrimary, kAlternative };

// Generalized multiple sine, r = 2 and 3.
Complex S2C_decomposed(const Cone& c, Complex z, const ComplexTuple& omegas, const EvalConfig& cfg = {},
                       TruncationStats* stats = nullptr);
Complex S2C_decomposed(const std::vector<IntVector>& chain, Complex z, const ComplexTuple& omegas,
                       const EvalConfig& cfg = {}, TruncationStats* stats = nullptr);
std::vector<FaceFactor> S2C_face_factors(const Cone& c, Complex z, const ComplexTuple& omegas,
                                         const EvalConfig& cfg = {}, TruncationStats* stats = nullptr);
Complex S2C_factorized(const Cone& c, Complex z, const ComplexTuple& omegas, const EvalConfig& cfg = {},
                       TruncationStats* stats = nullptr);

Complex S3C_decomposed(const Cone& c, Complex z, const ComplexTuple& omegas, const EvalConfig& cfg = {},
                       TruncationStats* stats = nullptr);
std::vector<FaceFactor> S3C_face_factors(const Cone& c, Complex z, const ComplexTuple& omegas,
                                         const EvalConfig& cfg = {}, TruncationStats* stats = nullptr);
Complex S3C_factorized(const Cone& c, Complex z, const ComplexTuple& omegas, const EvalConfig& cfg = {},
                       TruncationStats* stats = nullptr);

// Generalized multiple elliptic gamma, r = 1 and 2. Need Im(omega) inside the dual cone.
Complex G1C_direct(const Cone& c, Complex z, const ComplexTuple& omegas, const EvalConfig& cfg = {},
                   TruncationStats* stats = nullptr);
Complex G1C_direct(const std::vector<IntVector>& chain, Complex z, const ComplexTuple& omegas,
                   const EvalConfig& cfg = {}, TruncationStats* stats = nullptr);
std::vector<FaceFactor> G1C_face_factors(const Cone& c, Complex z, const ComplexTuple& omegas,
                                         const EvalConfig& cfg = {}, TruncationStats* stats = nullptr);
Complex G1C_factorized(const Cone& c, Complex z, const ComplexTuple& omegas, const EvalConfig& cfg = {},
                       TruncationStats* stats = nullptr);

Complex G2C_direct(const Cone& c, Complex z, const ComplexTuple& omegas, const EvalConfig& cfg = {},
                   TruncationStats* stats = nullptr);
std::vector<FaceFactor> G2C_face_factors(const Cone& c, Complex z, const ComplexTuple& omegas,
                                         G2CVariant variant, const EvalConfig& cfg = {},
                                         TruncationStats* stats = nullptr);
Complex G2C_factorized(const Cone& c, Complex z, const ComplexTuple& omegas,
                       G2CVariant variant = G2CVariant::kPrimary, const EvalConfig& cfg = {},
                       TruncationStats* stats = nullptr);

/// Truncated product over the lattice points of C and its interior (|n| <= radius).
struct LatticeProduct {
  Complex value;
  double tail_estimate;  // crude bound on the log of the discarded factors
  std::int64_t points;
};
LatticeProduct GC_lattice_product(const Cone& c, Complex z, const ComplexTuple& omegas, int radius);

/// Both sides of exp(-pi i/3 B33^C) = prod_f G_1 under the reduced face action.
struct IdentitySides {
  Complex lhs;
  Complex rhs;
  double residual;
  TruncationStats stats;
};
IdentitySides modular_identity_sides(const Cone& c, Complex z, const ComplexTuple& omegas,
                                     const EvalConfig& cfg = {});

/// Product of (e(z) | e(omega x u_i), e(-omega x u_{i+1})) over consecutive normals, compared
/// with the two-endpoint factor (open chain) or with 1 - e(z) (closed chain, wraps around).
double wedge_product_check(const std::vector<IntVector>& normals, Complex z, const ComplexTuple& omegas,
                           bool closed, const EvalConfig& cfg = {});

/// Throws DomainError unless Im(omega) lies strictly inside the dual cone.
void require_dual_interior(const Cone& c, const ComplexTuple& omegas);

}  // namespace conefn
