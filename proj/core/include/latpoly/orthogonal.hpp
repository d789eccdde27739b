#pragma once

#include <vector>

#include "latpoly/norms.hpp"
#include "latpoly/series.hpp"

namespace latpoly {

/// Orthogonally additive degree-m polynomial P(z) = sum_k c_k z_k^m, stored
/// as its diagonal weight vector. On sequence lattices orthogonal additivity
/// forces diagonal support, so the representation is lossless.
struct DiagonalPolynomial {
  SpaceSpec space;
  int degree = 1;
  cvec diag;

  static DiagonalPolynomial make(SpaceSpec space, int degree, cvec diag);
  static DiagonalPolynomial from_polynomial(const HomogeneousPolynomial& P);
  HomogeneousPolynomial to_polynomial() const;
};

struct OaNormPair {
  NormEstimate sup;
  NormEstimate reg;
};

/// Both norms of an orthogonally additive polynomial. The regular norm comes
/// from the positive-face optimizer; the sup estimate is cross-checked
/// against the exact phase-rotation witness z_k = x_k e^{-i phi_k / m}
/// (phi_k the principal argument of c_k), which turns the regular witness
/// into a sup witness with the same value, so the two norms coincide.
OaNormPair oa_norm_pair(const DiagonalPolynomial& P,
                        const OptimizerConfig& cfg = {});

/// Rotation of a nonnegative witness into a sup-norm witness for the given
/// diagonal weights (principal branch of the m-th root).
cvec phase_rotation_witness(const DiagonalPolynomial& P, const rvec& x);

/// For P(x) = x_1^m - x_2^m on real l_inf^2 with m even: the real sup norm
/// over [-1,1]^2 is exactly 1 while the regular norm is exactly 2; returns
/// the ratio 2. Odd m is rejected (there the two norms agree).
double oa_real_ratio(int m);

/// Radii of the series induced by diagonal terms of strictly increasing
/// degrees; per-degree sup and regular roots agree, so the report must have
/// r == r_reg up to estimate noise.
RadiusReport oa_series_radius_check(
    const std::vector<DiagonalPolynomial>& diag_series,
    const OptimizerConfig& cfg = {});

}  // namespace latpoly
