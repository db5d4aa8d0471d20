#include "conefn/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "conefn/errors.hpp"

namespace conefn {
namespace {

struct Sides {
  Complex lhs;
  Complex rhs;
};

enum class PeriodKind { kGeneric, kDualInterior };

struct Theorem {
  std::string id;
  int dim;
  bool needs_gorenstein;
  PeriodKind periods;
  Sides (*eval)(const Cone&, Complex, const ComplexTuple&, const EvalConfig&, TruncationStats*);
};

const std::vector<Theorem>& registry() {
  static const std::vector<Theorem> t = {
      {"s2c-factorization", 2, false, PeriodKind::kGeneric,
       [](const Cone& c, Complex z, const ComplexTuple& w, const EvalConfig& cfg, TruncationStats* st) {
         return Sides{S2C_decomposed(c, z, w, cfg, st), S2C_factorized(c, z, w, cfg, st)};
       }},
      {"s3c-factorization", 3, true, PeriodKind::kGeneric,
       [](const Cone& c, Complex z, const ComplexTuple& w, const EvalConfig& cfg, TruncationStats* st) {
         return Sides{S3C_decomposed(c, z, w, cfg, st), S3C_factorized(c, z, w, cfg, st)};
       }},
      {"g1c-factorization", 2, false, PeriodKind::kDualInterior,
       [](const Cone& c, Complex z, const ComplexTuple& w, const EvalConfig& cfg, TruncationStats* st) {
         return Sides{G1C_direct(c, z, w, cfg, st), G1C_factorized(c, z, w, cfg, st)};
       }},
      {"g2c-factorization", 3, true, PeriodKind::kDualInterior,
       [](const Cone& c, Complex z, const ComplexTuple& w, const EvalConfig& cfg, TruncationStats* st) {
         return Sides{G2C_direct(c, z, w, cfg, st), G2C_factorized(c, z, w, G2CVariant::kPrimary, cfg, st)};
       }},
      {"g2c-alternative", 3, true, PeriodKind::kDualInterior,
       [](const Cone& c, Complex z, const ComplexTuple& w, const EvalConfig& cfg, TruncationStats* st) {
         return Sides{G2C_factorized(c, z, w, G2CVariant::kPrimary, cfg, st),
                      G2C_factorized(c, z, w, G2CVariant::kAlternative, cfg, st)};
       }},
      {"modular-identity", 3, true, PeriodKind::kGeneric,
       [](const Cone& c, Complex z, const ComplexTuple& w, const EvalConfig& cfg, TruncationStats* st) {
         IdentitySides s = modular_identity_sides(c, z, w, cfg);
         if (st) {
           st->terms += s.stats.terms;
           st->tail_bound += s.stats.tail_bound;
           st->products += s.stats.products;
         }
         return Sides{s.lhs, s.rhs};
       }},
  };
  return t;
}

class Sampler {
 public:
  Sampler(std::uint64_t seed, const Cone& c, PeriodKind kind) : rng_(seed), cone_(c), kind_(kind) {}

  Complex z() { return {uniform(-0.4, 0.4), uniform(-0.15, 0.15)}; }

  ComplexTuple omegas() {
    const int d = cone_.dim();
    ComplexTuple w(d);
    if (kind_ == PeriodKind::kGeneric) {
      // Spread the arguments so no two periods are nearly parallel over R.
      for (;;) {
        for (auto& x : w) x = std::polar(uniform(0.6, 1.3), uniform(0.0, 2 * std::numbers::pi));
        double worst = INFINITY;
        for (int j = 0; j < d; ++j)
          for (int k = 0; k < d; ++k)
            if (j != k) worst = std::min(worst, std::abs((w[j] / w[k]).imag()));
        if (worst > 0.25) return w;
      }
    }
    // Im(omega) a positive combination of the normals, i.e. inside the dual cone.
    std::vector<double> im(d, 0.0);
    for (const auto& v : cone_.normals()) {
      const double lam = uniform(0.3, 1.0);
      for (int i = 0; i < d; ++i) im[i] += lam * static_cast<double>(v[i]);
    }
    double norm = 0;
    for (double x : im) norm += x * x;
    norm = std::sqrt(norm);
    for (int i = 0; i < d; ++i) w[i] = Complex(uniform(-0.5, 0.5), 1.2 * im[i] / norm);
    return w;
  }

 private:
  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }
  std::mt19937_64 rng_;
  const Cone& cone_;
  PeriodKind kind_;
};

bool retryable(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::kConditioning:
    case ErrorKind::kBudget:
    case ErrorKind::kNonConvergent:
    case ErrorKind::kPrecondition:
    case ErrorKind::kSingularAction:
      return true;
    default:
      return false;
  }
}

VerificationReport skeleton(const std::string& id, const Cone& c, const EvalConfig& cfg, std::uint64_t seed,
                            const std::string& label) {
  VerificationReport r;
  r.theorem = id;
  r.cone_label = label;
  r.normals = c.normals();
  r.dim = c.dim();
  r.config = cfg;
  r.seed = seed;
  return r;
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& t : registry()) v.push_back(t.id);
    return v;
  }();
  return ids;
}

bool is_theorem_id(const std::string& id) {
  const auto& ids = theorem_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

VerificationReport verify_theorem(const std::string& id, const Cone& c, const VerifyOptions& opts) {
  opts.cfg.validate();
  const auto it = std::find_if(registry().begin(), registry().end(), [&](const Theorem& t) { return t.id == id; });
  if (it == registry().end()) throw DomainError("unknown theorem id '" + id + "'");
  VerificationReport r = skeleton(id, c, opts.cfg, opts.seed, opts.cone_label);

  if (c.dim() != it->dim) {
    r.status = "SKIP";
    r.reason = "theorem needs a " + std::to_string(it->dim) + "-d cone";
    return r;
  }
  if (!is_good(c)) {
    r.status = "SKIP";
    r.reason = "cone is not good";
    return r;
  }
  if (it->needs_gorenstein && !gorenstein_vector(c)) {
    r.status = "SKIP";
    r.reason = "no Gorenstein vector";
    return r;
  }

  Sampler sampler(opts.seed, c, it->periods);
  for (std::size_t i = 0; i < opts.samples; ++i) {
    bool done = false;
    for (int attempt = 0; attempt < opts.max_attempts && !done; ++attempt) {
      SampleResult s;
      s.index = i;
      s.z = sampler.z();
      s.omegas = sampler.omegas();
      try {
        const Sides sides = it->eval(c, s.z, s.omegas, opts.cfg, &s.stats);
        s.lhs = sides.lhs;
        s.rhs = sides.rhs;
        s.residual = relative_residual(s.lhs, s.rhs);
        if (!std::isfinite(s.residual)) continue;
        r.samples.push_back(std::move(s));
        done = true;
      } catch (const Error& e) {
        if (!retryable(e)) throw;
      }
    }
    if (!done) {
      r.status = "FAIL";
      r.reason = "no admissible sample point found for sample " + std::to_string(i);
      return r;
    }
  }
  const bool pass = r.max_residual() < opts.cfg.comparison_tol;
  r.status = pass ? "PASS" : "FAIL";
  if (!pass) r.reason = "max residual exceeds comparison_tol";
  return r;
}

VerificationReport modular_identity_check(const Cone& c, Complex z, const ComplexTuple& omegas, const EvalConfig& cfg) {
  VerificationReport r = skeleton("modular-identity", c, cfg, 0, "");
  SampleResult s;
  s.z = z;
  s.omegas = omegas;
  const IdentitySides sides = modular_identity_sides(c, z, omegas, cfg);
  s.lhs = sides.lhs;
  s.rhs = sides.rhs;
  s.residual = sides.residual;
  s.stats = sides.stats;
  r.samples.push_back(s);
  r.status = s.residual < cfg.comparison_tol ? "PASS" : "FAIL";
  if (r.status == "FAIL") r.reason = "residual exceeds comparison_tol";
  return r;
}

}  // namespace conefn
