#pragma once

#include <vector>

#include "latpoly/bohr.hpp"
#include "latpoly/series.hpp"

namespace latpoly {

struct ConstructionConfig {
  // Search used at each stage of the dimension growth loop; kept lighter
  // than the standalone Bohr defaults since the bisection re-estimates the
  // winner at high accuracy anyway.
  BohrConfig search;
  OptimizerConfig high_acc;
  int n_cap = 64;
  double bisect_tol = 1e-4;
  int bisect_max_steps = 60;
  std::uint64_t seed = 0xc0457;

  ConstructionConfig() {
    search.batch = 64;
    search.polish_top = 6;
    search.polish_rounds = 4;
    search.polish_probes = 16;
    search.inner_search.starts = 12;
    search.inner_final.starts = 64;
    high_acc.starts = 64;
  }
};

struct BisectionStep {
  double t = 0.0;
  double lambda = 0.0;
};

/// Outcome of the ratio-polynomial construction: a polynomial with
/// ||P|| = 1 and ||P||_r^(1/m) within tolerance of the requested eta,
/// obtained by bisecting along the normalized segment between a positive
/// polynomial and an extremal one.
struct ConstructionResult {
  HomogeneousPolynomial P;
  double achieved_eta = 1.0;
  int n_used = 1;
  int bisection_steps = 0;
  HomogeneousPolynomial positive_endpoint;
  HomogeneousPolynomial extremal_endpoint;
  std::vector<BisectionStep> trace;
};

/// Finds a degree-m polynomial on some l_p^n (n grown by doubling up to
/// n_cap) with unit sup norm and ||P||_r^(1/m) = eta +- bisect_tol.
/// Throws eta_unreachable_error when the growth loop caps out and
/// bisection_bracket_error when the re-estimated endpoint fails to bracket.
ConstructionResult construct_ratio_polynomial(double p, int m, double eta,
                                              const ConstructionConfig& cfg = {});

struct SeriesConstruction {
  PowerSeries series;
  std::vector<ConstructionResult> per_degree;  // degrees 2..M
};

/// Series f = sum_{m=2}^{M} P_{m,eta} with eta = 1/tau, every term embedded
/// into the common ambient dimension by zero padding; the tail-window radii
/// then report r near 1 and r_reg near tau.
SeriesConstruction construct_small_regular_radius_series_detailed(
    double p, double tau, int M, const ConstructionConfig& cfg = {});

PowerSeries construct_small_regular_radius_series(
    double p, double tau, int M, const ConstructionConfig& cfg = {});

}  // namespace latpoly
