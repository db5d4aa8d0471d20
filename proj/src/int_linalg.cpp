#include "conefn/int_linalg.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <utility>

#include "conefn/errors.hpp"

namespace conefn {

ExtGcd ext_gcd(Int a, Int b) {
  Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

Int gcd_of(const IntVector& v) {
  Int g = 0;
  for (Int x : v) g = std::gcd(g, x);
  return g;
}

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int dot(const IntVector& a, const IntVector& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Int det2(const IntVector& a, const IntVector& b) { return a[0] * b[1] - a[1] * b[0]; }

IntVector cross3(const IntVector& a, const IntVector& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Int det3(const IntVector& a, const IntVector& b, const IntVector& c) { return dot(a, cross3(b, c)); }

IntVector add(const IntVector& a, const IntVector& b) {
  IntVector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

IntVector scale(Int k, const IntVector& a) {
  IntVector r(a);
  for (Int& x : r) x *= k;
  return r;
}

IntVector negate(const IntVector& a) { return scale(-1, a); }

IntMatrix identity(int n) {
  IntMatrix m(n, IntVector(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix transpose(const IntMatrix& m) {
  if (m.empty()) return {};
  IntMatrix t(m[0].size(), IntVector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[0].size(); ++j) t[j][i] = m[i][j];
  return t;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.size(), IntVector(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

IntVector multiply(const IntMatrix& a, const IntVector& v) {
  IntVector r(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = dot(a[i], v);
  return r;
}

IntMatrix from_columns(const std::vector<IntVector>& cols) { return transpose(cols); }

Int determinant(const IntMatrix& input) {
  const std::size_t n = input.size();
  if (n == 0) return 1;
  IntMatrix m = input;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
  const int n = static_cast<int>(m.size());
  const Int d = determinant(m);
  if (d != 1 && d != -1) throw DomainError("matrix is not unimodular (det=" + std::to_string(d) + ")");
  IntMatrix inv(n, IntVector(n, 0));
  if (n == 1) {
    inv[0][0] = d;
    return inv;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      IntMatrix minor;
      for (int r = 0; r < n; ++r) {
        if (r == i) continue;
        IntVector row;
        for (int c = 0; c < n; ++c)
          if (c != j) row.push_back(m[r][c]);
        minor.push_back(std::move(row));
      }
      const Int cof = ((i + j) % 2 == 0 ? 1 : -1) * determinant(minor);
      inv[j][i] = cof * d;  // adj / det, and 1/d == d for d = +-1
    }
  }
  return inv;
}

std::vector<Int> smith_invariants(IntMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<Int> out;
  for (std::size_t s = 0; s < std::min(rows, cols); ++s) {
    // Pivot: smallest nonzero magnitude in the trailing block.
    bool found = false;
    std::size_t pi = s, pj = s;
    for (std::size_t i = s; i < rows; ++i)
      for (std::size_t j = s; j < cols; ++j)
        if (m[i][j] != 0 && (!found || std::llabs(m[i][j]) < std::llabs(m[pi][pj]))) {
          found = true;
          pi = i;
          pj = j;
        }
    if (!found) break;
    std::swap(m[s], m[pi]);
    for (auto& row : m) std::swap(row[s], row[pj]);

    for (;;) {
      bool clean = true;
      for (std::size_t i = s + 1; i < rows; ++i) {
        if (m[i][s] == 0) continue;
        const Int q = m[i][s] / m[s][s];
        for (std::size_t j = s; j < cols; ++j) m[i][j] -= q * m[s][j];
        if (m[i][s] != 0) {
          std::swap(m[s], m[i]);
          clean = false;
        }
      }
      for (std::size_t j = s + 1; j < cols; ++j) {
        if (m[s][j] == 0) continue;
        const Int q = m[s][j] / m[s][s];
        for (std::size_t i = s; i < rows; ++i) m[i][j] -= q * m[i][s];
        if (m[s][j] != 0) {
          for (auto& row : m) std::swap(row[s], row[j]);
          clean = false;
        }
      }
      if (!clean) continue;
      // Divisibility: fold any offending entry into the pivot row and retry.
      bool divides = true;
      for (std::size_t i = s + 1; i < rows && divides; ++i)
        for (std::size_t j = s + 1; j < cols; ++j)
          if (m[i][j] % m[s][s] != 0) {
            for (std::size_t c = s; c < cols; ++c) m[s][c] += m[i][c];
            divides = false;
            break;
          }
      if (divides) break;
    }
    out.push_back(std::llabs(m[s][s]));
  }
  return out;
}

int rank(const IntMatrix& m) { return static_cast<int>(smith_invariants(m).size()); }

IntMatrix reduce_to_e1(const IntVector& v) {
  const int n = static_cast<int>(v.size());
  if (gcd_of(v) != 1) throw DomainError("vector " + to_string(v) + " is not primitive");
  IntMatrix u = identity(n);
  IntVector w = v;
  for (int i = 1; i < n; ++i) {
    if (w[i] == 0) continue;
    const ExtGcd e = ext_gcd(w[0], w[i]);
    const Int a = w[0] / e.g, b = w[i] / e.g;
    // [[x, y], [-b, a]] has det 1 and sends (w0, wi) to (g, 0).
    IntVector r0(n), ri(n);
    for (int c = 0; c < n; ++c) {
      r0[c] = e.x * u[0][c] + e.y * u[i][c];
      ri[c] = -b * u[0][c] + a * u[i][c];
    }
    u[0] = std::move(r0);
    u[i] = std::move(ri);
    w[0] = e.g;
    w[i] = 0;
  }
  if (w[0] == -1) {  // only possible when v = -e1 up to the zeros
    for (Int& x : u[0]) x = -x;
    if (n > 1)
      for (Int& x : u[1]) x = -x;
  }
  return u;
}

IntMatrix unimodular_completion(const IntVector& v) { return inverse_unimodular(reduce_to_e1(v)); }

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.size(); ++i) {
    os << (i ? "," : "") << '[';
    for (std::size_t j = 0; j < m[i].size(); ++j) os << (j ? "," : "") << m[i][j];
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace conefn
