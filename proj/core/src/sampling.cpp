#include "latpoly/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace latpoly {

MultiIndex random_multiindex(int n, int m, Rng& rng) {
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  for (int b = 0; b < m; ++b)
    e[rng.uniform_index(static_cast<std::uint64_t>(n))] += 1;
  return MultiIndex(std::move(e));
}

namespace {
Complex draw_coeff(Rng& rng, const RandomPolyOptions& opt) {
  if (opt.unimodular)
    return std::polar(1.0, rng.uniform(0.0, 6.283185307179586));
  if (opt.nonneg_coeffs) return Complex{std::abs(rng.gaussian()), 0.0};
  if (opt.real_coeffs) return Complex{rng.gaussian(), 0.0};
  return Complex{rng.gaussian(), rng.gaussian()};
}
}  // namespace

HomogeneousPolynomial random_polynomial(const SpaceSpec& space, int m,
                                        Rng& rng,
                                        const RandomPolyOptions& opt) {
  const int n = space.dim();
  std::vector<Term> terms;
  const std::size_t count = multiindex_count(n, m, opt.monomial_cap);
  if (count <= opt.monomial_cap) {
    auto basis = enumerate_multiindices(n, m, opt.monomial_cap);
    for (auto& a : basis) {
      if (opt.density < 1.0 && rng.uniform01() > opt.density) continue;
      terms.push_back({std::move(a), draw_coeff(rng, opt)});
    }
    if (terms.empty())
      terms.push_back(
          {enumerate_multiindices(n, m, opt.monomial_cap)[0],
           draw_coeff(rng, opt)});
    return HomogeneousPolynomial::from_terms(space, m, std::move(terms));
  }
  const int want = std::max(1, opt.sparse_terms);
  for (int i = 0; i < want; ++i)
    terms.push_back({random_multiindex(n, m, rng), draw_coeff(rng, opt)});
  // duplicate supports merge; a collision summing to exactly zero is not a
  // concern for gaussian draws
  auto P = HomogeneousPolynomial::accumulate(space, m, std::move(terms));
  if (P.is_zero())
    return HomogeneousPolynomial::monomial(
        space, random_multiindex(n, m, rng), Complex{1.0, 0.0});
  return P;
}

HomogeneousPolynomial normalize_coefficients(const HomogeneousPolynomial& P) {
  double s = 0.0;
  for (const Term& t : P.terms()) s += std::norm(t.coeff);
  if (s <= 0.0) return P;
  const double inv = 1.0 / std::sqrt(s);
  std::vector<Term> ts = P.terms();
  for (Term& t : ts) t.coeff *= inv;
  return HomogeneousPolynomial::from_terms(P.space(), P.degree(),
                                           std::move(ts));
}

}  // namespace latpoly
