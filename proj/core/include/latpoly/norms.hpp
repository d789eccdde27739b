#pragma once

#include <cstdint>
#include <utility>

#include "latpoly/polynomial.hpp"

namespace latpoly {

/// Multistart optimizer configuration. All randomness derives from `seed`;
/// results are reproducible bit-for-bit for fixed (seed, starts, tolerances)
/// regardless of `threads`.
struct OptimizerConfig {
  int starts = 64;
  std::uint64_t seed = 0x5eed01;
  double tol = 1e-12;
  int max_iter = 10000;
  int threads = 0;  // <= 0: LATTICE_POLY_THREADS env, then hardware
};

/// Feasible set for the magnitude/phase parametrization.
enum class SphereDomain {
  complex_full,  // z_j = r_j e^{i theta_j}, ||z||_p = 1
  real_signed,   // real vectors on the real p-sphere
  nonnegative,   // x >= 0 on the positive face of the p-sphere
};

/// Certified-from-below norm value with its witness point.
struct NormEstimate {
  double value = 0.0;
  cvec witness;
  int starts = 0;
  double spread = 0.0;  // max - min over converged local optima
  std::uint64_t seed = 0;
  int converged_starts = 0;
  SphereDomain domain = SphereDomain::complex_full;
};

/// Lower-bound estimate of ||P|| = sup { |P(z)| : ||z||_p = 1 } by seeded
/// multistart projected gradient ascent on magnitudes with an inner phase
/// loop. Throws nonconvergence_error when the iteration cap is hit on every
/// start.
NormEstimate estimate_sup_norm(const HomogeneousPolynomial& P,
                               const OptimizerConfig& cfg = {},
                               SphereDomain domain = SphereDomain::complex_full);

/// Lower-bound estimate of the regular norm ||P||_r = || |P| ||. Since |P|
/// has nonnegative coefficients the supremum over the complex ball equals the
/// supremum over the nonnegative real face, so the witness is a nonnegative
/// real vector.
NormEstimate estimate_regular_norm(const HomogeneousPolynomial& P,
                                   const OptimizerConfig& cfg = {});

/// Closed-form bracket for the regular norm on l_1^n:
///   lower = max_alpha |c_alpha| alpha^alpha / m^m   (0^0 = 1)
///   upper = sum_alpha |c_alpha| alpha^alpha / m^m
/// Single-term polynomials give lower == upper == the exact value.
std::pair<double, double> regular_norm_bounds_l1(
    const HomogeneousPolynomial& P);

struct HolderCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

/// Checks P(x^theta y^(1-theta)) <= P(x)^theta P(y)^(1-theta) for a positive
/// polynomial and nonnegative points, with tolerance 1e-10 * max(1, rhs).
HolderCheck holder_check(const HomogeneousPolynomial& P, const rvec& x,
                         const rvec& y, double theta);

}  // namespace latpoly
