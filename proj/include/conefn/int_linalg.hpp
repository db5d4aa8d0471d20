#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace conefn {

using Int = std::int64_t;
using IntVector = std::vector<Int>;
// Row-major; all rows have equal length.
using IntMatrix = std::vector<IntVector>;

struct ExtGcd {
  Int g;  // always >= 0
  Int x;
  Int y;  // a*x + b*y == g
};

ExtGcd ext_gcd(Int a, Int b);
Int gcd_of(const IntVector& v);
Int floor_div(Int a, Int b);

Int dot(const IntVector& a, const IntVector& b);
Int det2(const IntVector& a, const IntVector& b);
IntVector cross3(const IntVector& a, const IntVector& b);
Int det3(const IntVector& a, const IntVector& b, const IntVector& c);
IntVector add(const IntVector& a, const IntVector& b);
IntVector scale(Int k, const IntVector& a);
IntVector negate(const IntVector& a);

IntMatrix identity(int n);
IntMatrix transpose(const IntMatrix& m);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntVector multiply(const IntMatrix& a, const IntVector& v);
// Matrix whose columns are the given vectors.
IntMatrix from_columns(const std::vector<IntVector>& cols);

// Fraction-free Gaussian elimination; exact for the small matrices used here.
Int determinant(const IntMatrix& m);
// Exact inverse of a matrix with det = +-1.
IntMatrix inverse_unimodular(const IntMatrix& m);

// Nonzero invariant factors d_1 | d_2 | ... of the Smith normal form.
std::vector<Int> smith_invariants(IntMatrix m);
int rank(const IntMatrix& m);

// Unimodular U with U * v = (1,0,...,0). Requires v primitive.
IntMatrix reduce_to_e1(const IntVector& v);
// det = +1 matrix whose first column is the primitive vector v.
IntMatrix unimodular_completion(const IntVector& v);

std::string to_string(const IntVector& v);
std::string to_string(const IntMatrix& m);

}  // namespace conefn
