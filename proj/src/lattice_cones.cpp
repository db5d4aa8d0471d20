#include "conefn/lattice_cones.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "conefn/errors.hpp"

namespace conefn {
namespace {

IntVector primitive_part(IntVector v) {
  const Int g = gcd_of(v);
  if (g > 1)
    for (Int& x : v) x /= g;
  return v;
}

void require_nonzero_primitive(const IntVector& v) {
  if (gcd_of(v) == 0) throw DomainError("zero normal vector");
  if (gcd_of(v) != 1) throw DomainError("normal " + to_string(v) + " is not primitive");
}

bool lex_less(const IntVector& a, const IntVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Int norm2(const IntVector& v) { return dot(v, v); }

// Canonical representative of n + span_Z(basis): minimal Euclidean length,
// ties broken lexicographically. basis has one or two (independent) vectors.
IntVector shortest_representative(const IntVector& n, std::vector<IntVector> basis) {
  if (basis.size() == 2) {
    // Lagrange reduction so a small search window around the real optimum suffices.
    for (;;) {
      if (norm2(basis[0]) > norm2(basis[1])) std::swap(basis[0], basis[1]);
      const double mu = static_cast<double>(dot(basis[0], basis[1])) / static_cast<double>(norm2(basis[0]));
      const Int k = static_cast<Int>(std::llround(mu));
      if (k == 0) break;
      basis[1] = add(basis[1], scale(-k, basis[0]));
      if (norm2(basis[1]) >= norm2(basis[0])) break;
    }
  }
  // Real least squares for the coefficients.
  std::vector<double> coef(basis.size(), 0.0);
  if (basis.size() == 1) {
    coef[0] = -static_cast<double>(dot(n, basis[0])) / static_cast<double>(norm2(basis[0]));
  } else {
    const double g00 = norm2(basis[0]), g01 = dot(basis[0], basis[1]), g11 = norm2(basis[1]);
    const double r0 = -static_cast<double>(dot(n, basis[0])), r1 = -static_cast<double>(dot(n, basis[1]));
    const double d = g00 * g11 - g01 * g01;
    coef[0] = (r0 * g11 - r1 * g01) / d;
    coef[1] = (g00 * r1 - g01 * r0) / d;
  }
  constexpr Int kWindow = 2;
  IntVector best;
  Int best_norm = 0;
  auto consider = [&](const IntVector& cand) {
    const Int nn = norm2(cand);
    if (best.empty() || nn < best_norm || (nn == best_norm && lex_less(cand, best))) {
      best = cand;
      best_norm = nn;
    }
  };
  const Int c0 = static_cast<Int>(std::floor(coef[0]));
  if (basis.size() == 1) {
    for (Int a = c0 - kWindow; a <= c0 + kWindow + 1; ++a) consider(add(n, scale(a, basis[0])));
  } else {
    const Int c1 = static_cast<Int>(std::floor(coef[1]));
    for (Int a = c0 - kWindow; a <= c0 + kWindow + 1; ++a)
      for (Int b = c1 - kWindow; b <= c1 + kWindow + 1; ++b)
        consider(add(add(n, scale(a, basis[0])), scale(b, basis[1])));
  }
  return best;
}

IntMatrix embed_with_one(const IntMatrix& kt) {
  const std::size_t r = kt.size();
  IntMatrix k(r + 1, IntVector(r + 1, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) k[i][j] = kt[i][j];
  k[r][r] = 1;
  return k;
}

// Lattice points of the cube [-radius, radius]^dim intersected with the ball.
template <class F>
bool any_in_ball(int dim, int radius, F&& pred) {
  const Int r2 = static_cast<Int>(radius) * radius;
  IntVector x(dim, -radius);
  for (;;) {
    if (norm2(x) <= r2 && pred(x)) return true;
    int i = 0;
    while (i < dim && x[i] == radius) x[i++] = -radius;
    if (i == dim) return false;
    ++x[i];
  }
}

bool in_cone(const Cone& c, const IntVector& x) {
  for (const auto& v : c.normals())
    if (dot(v, x) < 0) return false;
  return true;
}

}  // namespace

Cone Cone::make(int dim, std::vector<IntVector> normals) {
  if (dim != 2 && dim != 3) throw UnsupportedError("only 2- and 3-dimensional cones are supported, got dim " + std::to_string(dim));
  for (const auto& v : normals) {
    if (static_cast<int>(v.size()) != dim) throw DomainError("normal " + to_string(v) + " has wrong length for dim " + std::to_string(dim));
    require_nonzero_primitive(v);
  }
  Cone c;
  c.dim_ = dim;
  if (dim == 2) {
    if (normals.size() != 2) throw DomainError("a 2-d cone needs exactly two normals");
    const Int d = det2(normals[0], normals[1]);
    if (d == 0) throw DegenerateError("normals " + to_string(normals[0]) + " and " + to_string(normals[1]) + " are parallel");
    for (std::size_t i = 0; i < 2; ++i) {
      const auto& v = normals[i];
      IntVector x{v[1], -v[0]};
      if (dot(x, normals[1 - i]) < 0) x = negate(x);
      c.rays_.push_back(x);
    }
  } else {
    const std::size_t n = normals.size();
    if (n < 3) throw DomainError("a 3-d cone needs at least three normals");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (gcd_of(cross3(normals[i], normals[j])) == 0)
          throw DegenerateError("normals " + to_string(normals[i]) + " and " + to_string(normals[j]) + " are parallel");
    if (rank(normals) != 3) throw DegenerateError("normals do not span R^3; the cone contains a line");
    for (std::size_t i = 0; i < n; ++i) {
      IntVector x = primitive_part(cross3(normals[i], normals[(i + 1) % n]));
      int pos = 0, neg = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == (i + 1) % n) continue;
        const Int s = dot(x, normals[k]);
        pos += s > 0;
        neg += s < 0;
      }
      if (pos > 0 && neg > 0) throw DomainError("normals are not in cyclic order: " + to_string(normals[i]) + " and " + to_string(normals[(i + 1) % n]) + " do not share an edge");
      if (pos + neg != static_cast<int>(n) - 2) throw DomainError("redundant normal next to " + to_string(normals[i]));
      if (neg > 0) x = negate(x);
      c.rays_.push_back(x);
    }
  }
  c.normals_ = std::move(normals);
  return c;
}

bool is_primitive(const IntVector& v) {
  const Int g = gcd_of(v);
  if (g == 0) throw DomainError("zero vector");
  return g == 1;
}

bool is_good(const Cone& c) {
  if (c.dim() > 3) throw UnsupportedError("goodness is only implemented up to dimension 3");
  for (const auto& v : c.normals())
    if (!is_primitive(v)) return false;
  if (c.dim() == 3) {
    const auto& ns = c.normals();
    for (std::size_t i = 0; i < ns.size(); ++i) {
      const auto inv = smith_invariants({ns[i], ns[(i + 1) % ns.size()]});
      if (inv.size() != 2 || inv[0] != 1 || inv[1] != 1) return false;
    }
  }
  return true;
}

std::optional<IntVector> gorenstein_vector(const Cone& c) {
  const int d = c.dim();
  const auto& ns = c.normals();
  // Pick d independent normals and solve by Cramer's rule; xi is unique if it exists.
  std::vector<std::size_t> idx;
  if (d == 2) {
    idx = {0, 1};
  } else {
    for (std::size_t k = 2; k < ns.size() && idx.empty(); ++k)
      if (det3(ns[0], ns[1], ns[k]) != 0) idx = {0, 1, k};
  }
  IntMatrix a;
  for (auto i : idx) a.push_back(ns[i]);
  const Int det = determinant(a);
  IntVector xi(d);
  for (int col = 0; col < d; ++col) {
    IntMatrix ac = a;
    for (int row = 0; row < d; ++row) ac[row][col] = 1;
    const Int num = determinant(ac);
    if (num % det != 0) return std::nullopt;
    xi[col] = num / det;
  }
  for (const auto& v : ns)
    if (dot(xi, v) != 1) return std::nullopt;
  return xi;
}

bool dual_contains(const Cone& c, const std::vector<double>& y, bool strict) {
  for (const auto& x : c.edge_rays()) {
    double s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += y[i] * static_cast<double>(x[i]);
    if (strict ? !(s > 0) : !(s >= 0)) return false;
  }
  return true;
}

bool admits_dual_phase(const Cone& c, const ComplexTuple& omegas) {
  for (int k = 0; k < 360; ++k) {
    const Complex ph = std::polar(1.0, 2 * std::numbers::pi * k / 360.0);
    std::vector<double> y;
    for (const auto& w : omegas) y.push_back((ph * w).real());
    if (dual_contains(c, y, true)) return true;
  }
  return false;
}

bool is_strictly_convex(const Cone& c, int radius) {
  return !any_in_ball(c.dim(), radius, [&](const IntVector& x) {
    return gcd_of(x) != 0 && in_cone(c, x) && in_cone(c, negate(x));
  });
}

bool is_minimal(const Cone& c, int radius) {
  const auto& ns = c.normals();
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const bool witness = any_in_ball(c.dim(), radius, [&](const IntVector& x) {
      if (dot(ns[i], x) >= 0) return false;
      for (std::size_t k = 0; k < ns.size(); ++k)
        if (k != i && dot(ns[k], x) < 0) return false;
      return true;
    });
    if (!witness) return false;
  }
  return true;
}

std::vector<IntVector> subdivide_wedge(const IntVector& v1, const IntVector& v2) {
  if (v1.size() != 2 || v2.size() != 2) throw DomainError("wedge subdivision needs 2-d vectors");
  require_nonzero_primitive(v1);
  require_nonzero_primitive(v2);
  const Int d0 = det2(v1, v2);
  if (d0 == 0) throw DegenerateError("degenerate wedge: " + to_string(v1) + " and " + to_string(v2) + " are parallel");
  if (d0 < 0) throw DomainError("wedge " + to_string(v1) + ", " + to_string(v2) + " is not convex (det < 0)");
  // Peel off the unique u with det[u, cur] = 1 and 0 < det[v1, u] < det[v1, cur].
  std::vector<IntVector> tail{v2};
  IntVector cur = v2;
  for (Int d = d0; d > 1; d = det2(v1, cur)) {
    const ExtGcd e = ext_gcd(cur[1], -cur[0]);
    IntVector u{e.x, e.y};
    const Int k = -floor_div(det2(v1, u), d);
    u = add(u, scale(k, cur));
    tail.push_back(u);
    cur = u;
  }
  std::vector<IntVector> chain{v1};
  chain.insert(chain.end(), tail.rbegin(), tail.rend());
  return chain;
}

std::vector<IntVector> refine_chain(const std::vector<IntVector>& chain) {
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    out.push_back(chain[i]);
    if (i + 1 < chain.size()) out.push_back(add(chain[i], chain[i + 1]));
  }
  return out;
}

bool is_unimodular_chain(const std::vector<IntVector>& chain) {
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    if (det2(chain[i], chain[i + 1]) != 1) return false;
  return chain.size() >= 2;
}

WedgeChain wedge_chain(const Cone& c) {
  if (c.dim() != 2) throw UnsupportedError("wedge_chain needs a 2-d cone");
  IntVector a = c.normals()[0], b = c.normals()[1];
  if (det2(a, b) > 0) std::swap(a, b);
  WedgeChain w{a, b, subdivide_wedge(a, negate(b))};
  return w;
}

GorensteinFrame gorenstein_frame(const Cone& c) {
  if (c.dim() != 3) throw UnsupportedError("Gorenstein frame needs a 3-d cone");
  if (!is_good(c)) throw NotGoodError("cone is not good");
  const auto xi = gorenstein_vector(c);
  if (!xi) throw PreconditionError("cone is not 1-Gorenstein");
  GorensteinFrame f;
  f.xi = *xi;
  f.P = unimodular_completion(*xi);
  const IntMatrix pt = transpose(f.P);
  for (const auto& v : c.normals()) {
    const IntVector w = multiply(pt, v);
    f.L.push_back({-w[1], -w[2]});
  }
  const std::size_t n = f.L.size();
  auto diff = [&](std::size_t i, std::size_t j) { return IntVector{f.L[i][0] - f.L[j][0], f.L[i][1] - f.L[j][1]}; };
  if (det2(diff(0, n - 1), diff(1, 0)) < 0) std::reverse(f.L.begin(), f.L.end());
  for (std::size_t i = 0; i < n; ++i) {
    const IntVector in = diff(i, (i + n - 1) % n);
    const IntVector out = diff((i + 1) % n, i);
    if (det2(in, out) <= 0) throw DomainError("normal polygon is not strictly convex");
    f.wedges.push_back(subdivide_wedge(primitive_part(in), primitive_part(out)));
  }
  return f;
}

FaceMatrix face_matrix_with(const Cone& c, std::size_t face, const IntVector& n) {
  const auto& ns = c.normals();
  FaceMatrix fm;
  fm.face = face;
  fm.ray = c.edge_rays().at(face);
  if (c.dim() == 2) {
    const IntVector& v = ns[face];
    const Int s = det2(fm.ray, v) > 0 ? 1 : -1;
    if (det2(n, v) != s) throw DomainError("n does not satisfy det[n, v] = " + std::to_string(s));
    fm.normals = {v};
    fm.ktilde = inverse_unimodular(from_columns({n, v}));
  } else {
    IntVector a = ns[face], b = ns[(face + 1) % ns.size()];
    if (det3(fm.ray, a, b) < 0) std::swap(a, b);
    if (det3(n, a, b) != 1) throw DomainError("n does not satisfy det[n, v1, v2] = 1");
    fm.normals = {a, b};
    fm.ktilde = inverse_unimodular(from_columns({n, a, b}));
  }
  fm.n = n;
  fm.k = embed_with_one(fm.ktilde);
  return fm;
}

std::vector<FaceMatrix> face_matrices(const Cone& c) {
  if (!is_good(c)) throw NotGoodError("face matrices need a good cone");
  const auto& ns = c.normals();
  std::vector<FaceMatrix> out;
  for (std::size_t f = 0; f < c.edge_rays().size(); ++f) {
    const IntVector& x = c.edge_rays()[f];
    IntVector n;
    if (c.dim() == 2) {
      const IntVector& v = ns[f];
      const Int s = det2(x, v) > 0 ? 1 : -1;
      // det[n, v] = n . (v1, -v0)
      n = scale(s, reduce_to_e1({v[1], -v[0]})[0]);
      n = shortest_representative(n, {v});
    } else {
      IntVector a = ns[f], b = ns[(f + 1) % ns.size()];
      if (det3(x, a, b) < 0) std::swap(a, b);
      n = reduce_to_e1(cross3(a, b))[0];
      n = shortest_representative(n, {a, b});
    }
    out.push_back(face_matrix_with(c, f, n));
  }
  return out;
}

IntMatrix s_matrix(int size) {
  if (size < 2) throw DomainError("S-matrix needs size >= 2");
  IntMatrix s = identity(size);
  s[0][0] = 0;
  s[size - 1][size - 1] = 0;
  s[0][size - 1] = -1;
  s[size - 1][0] = 1;
  return s;
}

ActionResult group_action(const IntMatrix& g, Complex z, const ComplexTuple& omegas) {
  const std::size_t m = omegas.size() + 1;
  if (g.size() != m) throw DomainError("group element has size " + std::to_string(g.size()) + ", expected " + std::to_string(m));
  ComplexTuple w(omegas);
  w.push_back(1.0);
  ComplexTuple gw(m, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) gw[i] += static_cast<double>(g[i][j]) * w[j];
  const Complex den = gw.back();
  if (std::abs(den) == 0.0) throw SingularActionError("linear fractional action has a vanishing denominator");
  ActionResult r{z / den, {}};
  for (std::size_t i = 0; i + 1 < m; ++i) r.omegas.push_back(gw[i] / den);
  return r;
}

}  // namespace conefn
