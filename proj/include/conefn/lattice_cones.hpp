#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "conefn/int_linalg.hpp"

namespace conefn {

using Complex = std::complex<double>;
using ComplexTuple = std::vector<Complex>;

/// Rational polyhedral cone {x : v_i . x >= 0} given by primitive inward normals.
/// In dimension 3 the normals are listed cyclically, so that consecutive pairs
/// (wrapping around) meet along the edges of the cone.
class Cone {
 public:
  /// Validates and builds. Throws UnsupportedError for dim outside {2,3},
  /// DomainError for zero / non-primitive normals or a bad cyclic order,
  /// DegenerateError for parallel normals.
  static Cone make(int dim, std::vector<IntVector> normals);

  int dim() const { return dim_; }
  const std::vector<IntVector>& normals() const { return normals_; }
  std::size_t size() const { return normals_.size(); }

  /// Generators of the 1-d faces. Entry i is the edge where normal i meets
  /// normal i+1 (dim 3) or the ray lying on the facet of normal i (dim 2).
  const std::vector<IntVector>& edge_rays() const { return rays_; }

  bool operator==(const Cone& o) const { return dim_ == o.dim_ && normals_ == o.normals_; }

 private:
  Cone() = default;
  int dim_ = 0;
  std::vector<IntVector> normals_;
  std::vector<IntVector> rays_;
};

bool is_primitive(const IntVector& v);
bool is_good(const Cone& c);
/// xi with xi . v_i = 1 for all normals, if one exists.
std::optional<IntVector> gorenstein_vector(const Cone& c);

bool dual_contains(const Cone& c, const std::vector<double>& y, bool strict = false);
/// Is there a unit complex c with Re(c * omega) strictly inside the dual cone?
/// Samples 360 phases; the condition defining the cone Bernoulli polynomials.
bool admits_dual_phase(const Cone& c, const ComplexTuple& omegas);

/// Bounded lattice checks in the ball of the given radius.
bool is_strictly_convex(const Cone& c, int radius = 50);
bool is_minimal(const Cone& c, int radius = 50);

/// Unimodular chain u_0 = v1, ..., u_{n+1} = v2 with det[u_i, u_{i+1}] = 1.
/// Requires det[v1, v2] > 0.
std::vector<IntVector> subdivide_wedge(const IntVector& v1, const IntVector& v2);
/// Inserts u_i + u_{i+1} after every u_i; keeps all determinants equal to 1.
std::vector<IntVector> refine_chain(const std::vector<IntVector>& chain);
bool is_unimodular_chain(const std::vector<IntVector>& chain);

/// Chain used by the 2-d decompositions: it runs from one normal to minus the
/// other, so det[u_j, u_{j+1}] = 1 and the half-open pieces
/// {x . u_j >= 0, x . u_{j+1} < 0} tile {x . v1 >= 0, x . v2 > 0}.
struct WedgeChain {
  IntVector first;   // normal whose facet is included
  IntVector second;  // normal whose facet is excluded
  std::vector<IntVector> lines;  // first, ..., -second
};
WedgeChain wedge_chain(const Cone& c);

/// Frame for a 1-Gorenstein 3-d cone. With P unimodular, first column xi,
/// P^T v_i = (1, -L_i). The polygon L_0..L_{N-1} is convex and positively
/// oriented; wedge i is subdivided between L_i - L_{i-1} and L_{i+1} - L_i.
struct GorensteinFrame {
  IntVector xi;
  IntMatrix P;
  std::vector<std::array<Int, 2>> L;
  std::vector<std::vector<IntVector>> wedges;
};
GorensteinFrame gorenstein_frame(const Cone& c);

/// Face data: Ktilde = [n, v_1, ..., v_{r-1}]^{-1}, K = Ktilde (+) 1.
struct FaceMatrix {
  std::size_t face;              // index into edge_rays()
  IntVector ray;                 // x_f
  std::vector<IntVector> normals;  // v_1^f, ..., v_{r-1}^f in the order used
  IntVector n;
  IntMatrix ktilde;
  IntMatrix k;
};

std::vector<FaceMatrix> face_matrices(const Cone& c);
/// Same construction with a caller-provided n (must satisfy the determinant condition).
FaceMatrix face_matrix_with(const Cone& c, std::size_t face, const IntVector& n);

IntMatrix s_matrix(int size);

struct ActionResult {
  Complex z;
  ComplexTuple omegas;
};
/// Linear fractional action on (z | omega_0..omega_r, 1); g has size r+2.
ActionResult group_action(const IntMatrix& g, Complex z, const ComplexTuple& omegas);

}  // namespace conefn
