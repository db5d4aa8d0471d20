#include "conefn/decomposition.hpp"

#include "conefn/errors.hpp"

namespace conefn {

Complex cross(const ComplexTuple& omega, const IntVector& u) {
  return omega[0] * static_cast<double>(u[1]) - omega[1] * static_cast<double>(u[0]);
}

std::vector<WedgeTerm> chain_terms(const std::vector<IntVector>& lines, const ComplexTuple& omega) {
  if (!is_unimodular_chain(lines)) throw PreconditionError("subdivision chain is not unimodular");
  std::vector<Complex> a;
  for (const auto& u : lines) a.push_back(cross(omega, u));
  const std::size_t n = lines.size() - 2;
  std::vector<WedgeTerm> out{{0.0, a[n], a[n + 1]}};
  for (std::size_t j = 0; j < n; ++j) out.push_back({a[j], a[j], a[j + 1]});
  return out;
}

GorensteinTerms gorenstein_terms(const Cone& c, const ComplexTuple& omega) {
  if (omega.size() != 3) throw DomainError("a 3-d cone needs three periods");
  const GorensteinFrame f = gorenstein_frame(c);
  GorensteinTerms g;
  g.frame_omega.assign(3, 0.0);
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) g.frame_omega[i] += static_cast<double>(f.P[k][i]) * omega[k];
  g.w1 = g.frame_omega[0];
  for (std::size_t i = 0; i < f.L.size(); ++i) {
    const ComplexTuple wi{g.frame_omega[1] + static_cast<double>(f.L[i][0]) * g.w1,
                          g.frame_omega[2] + static_cast<double>(f.L[i][1]) * g.w1};
    const auto& u = f.wedges[i];
    for (std::size_t j = 0; j + 1 < u.size(); ++j) {
      const Complex aj = cross(wi, u[j]);
      g.terms.push_back({aj, aj, cross(wi, u[j + 1])});
    }
  }
  return g;
}

}  // namespace conefn
