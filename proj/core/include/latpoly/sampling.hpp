#pragma once

#include "latpoly/polynomial.hpp"
#include "latpoly/rng.hpp"

namespace latpoly {

/// Random exponent vector with |alpha| = m (m balls into n boxes).
MultiIndex random_multiindex(int n, int m, Rng& rng);

struct RandomPolyOptions {
  double density = 1.0;     // probability of keeping each monomial
  bool real_coeffs = false;
  bool nonneg_coeffs = false;
  bool unimodular = false;  // coefficients e^{i phi}
  // When the full monomial basis exceeds this, draw `sparse_terms` random
  // supports instead of enumerating.
  std::size_t monomial_cap = 2000;
  int sparse_terms = 200;
};

/// Random polynomial over the degree-m monomials of the space. Never returns
/// the zero polynomial.
HomogeneousPolynomial random_polynomial(const SpaceSpec& space, int m,
                                        Rng& rng,
                                        const RandomPolyOptions& opt = {});

/// Rescales so the coefficient 2-norm is one.
HomogeneousPolynomial normalize_coefficients(const HomogeneousPolynomial& P);

}  // namespace latpoly
