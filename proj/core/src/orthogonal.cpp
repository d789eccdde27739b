#include "latpoly/orthogonal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace latpoly {

DiagonalPolynomial DiagonalPolynomial::make(SpaceSpec space, int degree,
                                            cvec diag) {
  if (degree < 1)
    throw std::invalid_argument("DiagonalPolynomial: degree must be >= 1");
  if (static_cast<int>(diag.size()) != space.dim())
    throw std::invalid_argument(
        "DiagonalPolynomial: weight vector length must match dim");
  return DiagonalPolynomial{space, degree, std::move(diag)};
}

DiagonalPolynomial DiagonalPolynomial::from_polynomial(
    const HomogeneousPolynomial& P) {
  if (!P.is_orthogonally_additive())
    throw std::invalid_argument(
        "DiagonalPolynomial: polynomial has off-diagonal support");
  cvec diag(static_cast<std::size_t>(P.space().dim()), Complex{});
  for (const Term& t : P.terms()) {
    for (int j = 0; j < P.space().dim(); ++j) {
      if (t.alpha[j] > 0) {
        diag[static_cast<std::size_t>(j)] = t.coeff;
        break;
      }
    }
  }
  return DiagonalPolynomial{P.space(), P.degree(), std::move(diag)};
}

HomogeneousPolynomial DiagonalPolynomial::to_polynomial() const {
  std::vector<Term> ts;
  const int n = space.dim();
  for (int k = 0; k < n; ++k) {
    if (diag[static_cast<std::size_t>(k)] == Complex{}) continue;
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(k)] = degree;
    ts.push_back({MultiIndex(std::move(e)), diag[static_cast<std::size_t>(k)]});
  }
  return HomogeneousPolynomial::from_terms(space, degree, std::move(ts));
}

cvec phase_rotation_witness(const DiagonalPolynomial& P, const rvec& x) {
  if (x.size() != P.diag.size())
    throw std::invalid_argument("phase_rotation_witness: length mismatch");
  cvec z(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double phi = std::arg(P.diag[k]);  // principal branch in (-pi, pi]
    z[k] = std::polar(x[k], -phi / static_cast<double>(P.degree));
  }
  return z;
}

OaNormPair oa_norm_pair(const DiagonalPolynomial& P,
                        const OptimizerConfig& cfg) {
  const auto poly = P.to_polynomial();
  NormEstimate reg = estimate_regular_norm(poly, cfg);
  NormEstimate sup = estimate_sup_norm(poly, cfg);

  rvec x(reg.witness.size());
  for (std::size_t k = 0; k < x.size(); ++k) x[k] = reg.witness[k].real();
  const cvec rotated = phase_rotation_witness(P, x);
  const double rotated_value = std::abs(poly.evaluate(rotated));
  if (rotated_value > sup.value) {
    sup.value = rotated_value;
    sup.witness = rotated;
  }
  return OaNormPair{std::move(sup), std::move(reg)};
}

double oa_real_ratio(int m) {
  if (m < 2 || m % 2 != 0)
    throw std::invalid_argument(
        "oa_real_ratio: m must be even (odd degrees have equal norms)");
  // P(x) = x_1^m - x_2^m on [-1,1]^2. Even powers are monotone in |x_j|, so
  // the extrema sit on the vertex set {0,1}^2 of the moduli: sup |P| = 1 at
  // (1,0). The modulus polynomial attains x_1^m + x_2^m = 2 at (1,1).
  double real_sup = 0.0;
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 1; ++b)
      real_sup = std::max(real_sup, std::abs(std::pow(a, m) - std::pow(b, m)));
  const double regular = std::pow(1.0, m) + std::pow(1.0, m);
  return regular / real_sup;
}

RadiusReport oa_series_radius_check(
    const std::vector<DiagonalPolynomial>& diag_series,
    const OptimizerConfig& cfg) {
  if (diag_series.empty())
    throw std::invalid_argument("oa_series_radius_check: empty series");
  const SpaceSpec space = diag_series.front().space;
  int max_degree = 0;
  int prev_degree = 0;
  for (const auto& d : diag_series) {
    if (d.space != space)
      throw std::invalid_argument("oa_series_radius_check: space mismatch");
    if (d.degree <= prev_degree)
      throw std::invalid_argument(
          "oa_series_radius_check: degrees must be strictly increasing");
    prev_degree = d.degree;
    max_degree = std::max(max_degree, d.degree);
  }
  PowerSeries f(space, std::max(8, max_degree));
  for (const auto& d : diag_series) f.set_term(d.to_polynomial());
  return radii(f, cfg);
}

}  // namespace latpoly
