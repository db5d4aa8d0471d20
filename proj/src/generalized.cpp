#include "conefn/generalized.hpp"

#include <cmath>
#include <numbers>

#include "conefn/bernoulli.hpp"
#include "conefn/decomposition.hpp"
#include "conefn/errors.hpp"

namespace conefn {
namespace {

constexpr double kPi = std::numbers::pi;

Complex expi(double coeff, Complex b) { return std::exp(Complex(0.0, coeff * kPi) * b); }

void require_dim(const Cone& c, int dim, const char* what) {
  if (c.dim() != dim) throw UnsupportedError(std::string(what) + " needs a " + std::to_string(dim) + "-d cone");
  if (!is_good(c)) throw NotGoodError(std::string(what) + " needs a good cone");
}

void require_periods(const ComplexTuple& omegas, std::size_t n) {
  if (omegas.size() != n) throw DomainError("expected " + std::to_string(n) + " periods, got " + std::to_string(omegas.size()));
}

// Applies g = (S or S^{-1}) K_f to (z | omega) for every face.
std::vector<std::pair<std::size_t, std::pair<IntMatrix, ActionResult>>> transformed(const Cone& c, Complex z,
                                                                                     const ComplexTuple& omegas,
                                                                                     bool inverse_s) {
  const int size = c.dim() + 1;
  IntMatrix s = s_matrix(size);
  if (inverse_s) s = inverse_unimodular(s);
  std::vector<std::pair<std::size_t, std::pair<IntMatrix, ActionResult>>> out;
  for (const auto& fm : face_matrices(c)) {
    IntMatrix g = multiply(s, fm.k);
    ActionResult a = group_action(g, z, omegas);
    out.push_back({fm.face, {std::move(g), std::move(a)}});
  }
  return out;
}

ComplexTuple drop_first(const ComplexTuple& w) { return ComplexTuple(w.begin() + 1, w.end()); }

Complex product(const std::vector<FaceFactor>& fs) {
  Complex p = 1.0;
  for (const auto& f : fs) p *= f.value;
  return p;
}

}  // namespace

void require_dual_interior(const Cone& c, const ComplexTuple& omegas) {
  std::vector<double> im;
  for (const auto& w : omegas) im.push_back(w.imag());
  if (!dual_contains(c, im, true)) throw DomainError("Im(omega) is not in the interior of the dual cone");
}

// ---- S_2^C -------------------------------------------------------------------

Complex S2C_decomposed(const std::vector<IntVector>& chain, Complex z, const ComplexTuple& omegas,
                       const EvalConfig& cfg, TruncationStats* stats) {
  require_periods(omegas, 2);
  Complex p = 1.0;
  for (const auto& t : chain_terms(chain, omegas)) p *= multiple_sine(z + t.shift, {t.a, t.b}, cfg, SineForm::kPositive, stats);
  return p;
}

Complex S2C_decomposed(const Cone& c, Complex z, const ComplexTuple& omegas, const EvalConfig& cfg,
                       TruncationStats* stats) {
  require_dim(c, 2, "S2C");
  return S2C_decomposed(wedge_chain(c).lines, z, omegas, cfg, stats);
}

std::vector<FaceFactor> S2C_face_factors(const Cone& c, Complex z, const ComplexTuple& omegas, const EvalConfig& cfg,
                                         TruncationStats* stats) {
  require_dim(c, 2, "S2C");
  require_periods(omegas, 2);
  std::vector<FaceFactor> out;
  for (auto& [face, ga] : transformed(c, z, omegas, false)) {
    const ActionResult& a = ga.second;
    out.push_back({face, ga.first, a.z, a.omegas, qfactorial(a.z, {a.omegas[1]}, cfg, stats)});
  }
  return out;
}

Complex S2C_factorized(const Cone& c, Complex z, const ComplexTuple& omegas, const EvalConfig& cfg,
                       TruncationStats* stats) {
  const auto faces = S2C_face_factors(c, z, omegas, cfg, stats);
  return expi(0.5, bernoulli_cone_22(c, z, omegas)) * product(faces);
}

// ---- S_3^C -------------------------------------------------------------------

Complex S3C_decomposed(const Cone& c, Complex z, const ComplexTuple& omegas, const EvalConfig& cfg,
                       TruncationStats* stats) {
  require_dim(c, 3, "S3C");
  const GorensteinTerms g = gorenstein_terms(c, omegas);
  Complex p = multiple_sine(z, {g.w1}, cfg, SineForm::kPositive, stats);
  for (const auto& t : g.terms) p *= multiple_sine(z + t.shift, {g.w1, t.a, t.b}, cfg, SineForm::kPositive, stats);
  return p;
}

std::vector<FaceFactor> S3C_face_factors(const Cone& c, Complex z, const ComplexTuple& omegas, const EvalConfig& cfg,
                                         TruncationStats* stats) {
  require_dim(c, 3, "S3C");
  require_periods(omegas, 3);
  std::vector<FaceFactor> out;
  for (auto& [face, ga] : transformed(c, z, omegas, false)) {
    const ActionResult& a = ga.second;
    out.push_back({face, ga.first, a.z, a.omegas, qfactorial(a.z, drop_first(a.omegas), cfg, stats)});
  }
  return out;
}

Complex S3C_factorized(const Cone& c, Complex z, const ComplexTuple& omegas, const EvalConfig& cfg,
                       TruncationStats* stats) {
  const auto faces = S3C_face_factors(c, z, omegas, cfg, stats);
  return expi(-1.0 / 6.0, bernoulli_cone_33(c, z, omegas)) * product(faces);
}

// ---- G_1^C -------------------------------------------------------------------

Complex G1C_direct(const std::vector<IntVector>& chain, Complex z, const ComplexTuple& omegas, const EvalConfig& cfg,
                   TruncationStats* stats) {
  require_periods(omegas, 2);
  Complex p = 1.0;
  for (const auto& t : chain_terms(chain, omegas)) p *= elliptic_gamma(z + t.shift, {t.a, t.b}, cfg, stats);
  return p;
}

Complex G1C_direct(const Cone& c, Complex z, const ComplexTuple& omegas, const EvalConfig& cfg,
                   TruncationStats* stats) {
  require_dim(c, 2, "G1C");
  require_periods(omegas, 2);
  require_dual_interior(c, omegas);
  return G1C_direct(wedge_chain(c).lines, z, omegas, cfg, stats);
}

std::vector<FaceFactor> G1C_face_factors(const Cone& c, Complex z, const ComplexTuple& omegas, const EvalConfig& cfg,
                                         TruncationStats* stats) {
  require_dim(c, 2, "G1C");
  require_periods(omegas, 2);
  require_dual_interior(c, omegas);
  std::vector<FaceFactor> out;
  for (auto& [face, ga] : transformed(c, z, omegas, false)) {
    const ActionResult& a = ga.second;
    out.push_back({face, ga.first, a.z, a.omegas, elliptic_gamma(a.z, a.omegas, cfg, stats)});
  }
  return out;
}

Complex G1C_factorized(const Cone& c, Complex z, const ComplexTuple& omegas, const EvalConfig& cfg,
                       TruncationStats* stats) {
  const auto faces = G1C_face_factors(c, z, omegas, cfg, stats);
  return expi(1.0 / 3.0, bernoulli_cone_lifted(c, z, omegas, -1.0)) * product(faces);
}

// ---- G_2^C -------------------------------------------------------------------

Complex G2C_direct(const Cone& c, Complex z, const ComplexTuple& omegas, const EvalConfig& cfg,
                   TruncationStats* stats) {
  require_dim(c, 3, "G2C");
  require_periods(omegas, 3);
  require_dual_interior(c, omegas);
  const GorensteinTerms g = gorenstein_terms(c, omegas);
  Complex p = elliptic_gamma(z, {g.w1}, cfg, stats);
  for (const auto& t : g.terms) p *= elliptic_gamma(z + t.shift, {g.w1, t.a, t.b}, cfg, stats);
  return p;
}

std::vector<FaceFactor> G2C_face_factors(const Cone& c, Complex z, const ComplexTuple& omegas, G2CVariant variant,
                                         const EvalConfig& cfg, TruncationStats* stats) {
  require_dim(c, 3, "G2C");
  require_periods(omegas, 3);
  require_dual_interior(c, omegas);
  std::vector<FaceFactor> out;
  for (auto& [face, ga] : transformed(c, z, omegas, variant == G2CVariant::kAlternative)) {
    const ActionResult& a = ga.second;
    out.push_back({face, ga.first, a.z, a.omegas, elliptic_gamma(a.z, a.omegas, cfg, stats)});
  }
  return out;
}

Complex G2C_factorized(const Cone& c, Complex z, const ComplexTuple& omegas, G2CVariant variant,
                       const EvalConfig& cfg, TruncationStats* stats) {
  const auto faces = G2C_face_factors(c, z, omegas, variant, cfg, stats);
  const bool alt = variant == G2CVariant::kAlternative;
  const Complex b = bernoulli_cone_lifted(c, z, omegas, alt ? 1.0 : -1.0);
  return expi(alt ? -1.0 / 12.0 : 1.0 / 12.0, b) * product(faces);
}

// ---- checks ------------------------------------------------------------------

LatticeProduct GC_lattice_product(const Cone& c, Complex z, const ComplexTuple& omegas, int radius) {
  require_periods(omegas, static_cast<std::size_t>(c.dim()));
  require_dual_interior(c, omegas);
  const int d = c.dim();
  const int sign = (d - 1) % 2 == 0 ? 1 : -1;  // (-1)^r with r = d - 1
  // Decay rate: Im(omega . x) >= mu |x| on the cone.
  double mu = INFINITY;
  for (const auto& x : c.edge_rays()) {
    double im = 0, nx = 0;
    for (int i = 0; i < d; ++i) {
      im += omegas[i].imag() * static_cast<double>(x[i]);
      nx += static_cast<double>(x[i] * x[i]);
    }
    mu = std::min(mu, im / std::sqrt(nx));
  }
  const Int r2 = static_cast<Int>(radius) * radius;
  Complex log_sum = 0.0;
  std::int64_t points = 0;
  IntVector n(d, -radius);
  for (;;) {
    if (dot(n, n) <= r2) {
      bool closed = true, open = true;
      for (const auto& v : c.normals()) {
        const Int s = dot(v, n);
        closed = closed && s >= 0;
        open = open && s > 0;
      }
      if (closed) {
        Complex nw = 0.0;
        for (int i = 0; i < d; ++i) nw += static_cast<double>(n[i]) * omegas[i];
        log_sum += static_cast<double>(sign) * std::log(1.0 - expi2pi(z + nw));
        if (open) log_sum += std::log(1.0 - expi2pi(-z + nw));
        ++points;
      }
    }
    int i = 0;
    while (i < d && n[i] == radius) n[i++] = -radius;
    if (i == d) break;
    ++n[i];
  }
  // Discarded factors have |e(+-z + n omega)| <= e^{2 pi |Im z|} e^{-2 pi mu |n|}; the shell
  // at |n| = R carries O(R^{d-1}) points and the tail is dominated by it.
  const double shell = std::pow(static_cast<double>(radius) + 1.0, d - 1);
  const double tail = 2 * shell * std::exp(2 * kPi * (std::abs(z.imag()) - mu * radius)) /
                      (1 - std::exp(-2 * kPi * mu));
  return {std::exp(log_sum), tail, points};
}

IdentitySides modular_identity_sides(const Cone& c, Complex z, const ComplexTuple& omegas, const EvalConfig& cfg) {
  require_dim(c, 3, "modular identity");
  require_periods(omegas, 3);
  IdentitySides s{};
  s.lhs = expi(-1.0 / 3.0, bernoulli_cone_33(c, z, omegas));
  s.rhs = 1.0;
  for (auto& [face, ga] : transformed(c, z, omegas, false)) {
    const ActionResult& a = ga.second;
    // Reduced action: the first transformed component is dropped.
    s.rhs *= elliptic_gamma(a.z, drop_first(a.omegas), cfg, &s.stats);
  }
  s.residual = relative_residual(s.lhs, s.rhs);
  return s;
}

double wedge_product_check(const std::vector<IntVector>& normals, Complex z, const ComplexTuple& omegas, bool closed,
                           const EvalConfig& cfg) {
  require_periods(omegas, 2);
  const std::size_t n = normals.size();
  if (n < 2) throw PreconditionError("chain needs at least two normals");
  const std::size_t pairs = closed ? n : n - 1;
  for (std::size_t i = 0; i < pairs; ++i)
    if (det2(normals[i], normals[(i + 1) % n]) != 1)
      throw PreconditionError("chain determinant det[u_i, u_{i+1}] != 1 at position " + std::to_string(i));
  Complex prod = 1.0;
  for (std::size_t i = 0; i < pairs; ++i) {
    const Complex a = cross(omegas, normals[i]);
    const Complex b = cross(omegas, normals[(i + 1) % n]);
    prod *= qfactorial(z, {a, -b}, cfg);
  }
  Complex expected;
  if (closed) {
    expected = 1.0 - expi2pi(z);
  } else {
    expected = qfactorial(z, {cross(omegas, normals.front()), -cross(omegas, normals.back())}, cfg);
  }
  return relative_residual(prod, expected);
}

}  // namespace conefn
