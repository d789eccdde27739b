#pragma once

#include <cstdint>
#include <limits>

#include "latpoly/norms.hpp"
#include "latpoly/polynomial.hpp"

namespace latpoly {

/// Configuration of the nested Bohr-radius search. The outer search draws
/// `batch` random unit-coefficient polynomials per restart, ranks them by
/// estimated regular/sup ratio, polishes the best `polish_top` by
/// coordinatewise perturbation with shrinking radius, and re-estimates the
/// winner with the high-accuracy inner config.
struct BohrConfig {
  int batch = 200;
  int restarts = 1;
  int polish_top = 10;
  int polish_rounds = 10;
  int polish_probes = 24;  // coordinate probes per round per candidate
  std::uint64_t seed = 0xb047;
  OptimizerConfig inner_search;
  OptimizerConfig inner_final;
  bool structured_seeds = true;
  int threads = 0;
  std::size_t monomial_cap = 2000;  // above: sparse random supports
  int sparse_terms = 160;
  // Stops the search as soon as a candidate reaches this ratio; callers that
  // only need "good enough" witnesses (the ratio-polynomial constructor) set
  // it to their target. Infinity keeps the full batch-and-polish schedule.
  double early_stop_ratio = std::numeric_limits<double>::infinity();

  BohrConfig() {
    inner_search.starts = 16;
    inner_final.starts = 64;
  }
};

/// Upper-bound certificate for the m-th homogeneous Bohr radius K_m(B_E):
/// ratio_sup is a certified lower bound on sup ||P||_r / ||P|| (witnessed),
/// so k_m = ratio_sup^(-1/m) >= K_m up to inner-estimate slack (reported via
/// the spreads).
struct BohrEstimate {
  SpaceSpec space;
  int m = 1;
  double ratio_sup = 1.0;
  double k_m = 1.0;
  HomogeneousPolynomial witness;
  std::uint64_t seed = 0;
  double witness_sup = 0.0;
  double witness_reg = 0.0;
  double sup_spread = 0.0;
  double reg_spread = 0.0;
};

BohrEstimate estimate_bohr_m(const SpaceSpec& space, int m,
                             const BohrConfig& cfg = {});

struct CkkPolynomial {
  bool is_unit = false;
  HomogeneousPolynomial P;
};

/// P = a x^2 + b y^2 + c xy on l_1^2 for |a| < 1, |b| < 1, 2 < |c| <= 4;
/// is_unit reports whether the exact unit-sup-norm criterion
/// 4|c| - c^2 = 4(|a+b| - ab) holds to 1e-12.
CkkPolynomial ckk_unit_norm_family(double a, double b, double c);

/// Exact Bohr threshold for the extremal Mobius function
/// f_a(z) = (a - z)/(1 - az): the radius where sum |c_k| r^k = 1, namely
/// 1/(1 + 2a), verified internally by series summation.
double disc_bohr_threshold(double a);

}  // namespace latpoly
