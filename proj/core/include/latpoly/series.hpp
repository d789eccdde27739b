#pragma once

#include <optional>
#include <vector>

#include "latpoly/norms.hpp"
#include "latpoly/polynomial.hpp"

namespace latpoly {

/// Power series sum_m P_m on a common space, truncated at degree M. Absent
/// degrees are zero polynomials.
class PowerSeries {
public:
  PowerSeries(SpaceSpec space, int truncation);

  /// Sets the degree-m term (must match the series space and have degree m).
  void set_term(HomogeneousPolynomial P);

  const SpaceSpec& space() const { return space_; }
  int truncation() const { return truncation_; }
  bool has_term(int m) const;
  /// Degree-m term; zero polynomial when absent.
  HomogeneousPolynomial term(int m) const;

private:
  SpaceSpec space_;
  int truncation_;
  std::vector<std::optional<HomogeneousPolynomial>> terms_;
};

struct DegreeRoots {
  int m = 0;
  double root_sup = 0.0;  // ||P_m||^(1/m)
  double root_reg = 0.0;  // ||P_m||_r^(1/m)
};

/// Tail-window estimates of the radius of convergence r and the radius of
/// regular convergence r_reg, with the full per-degree root table so the
/// quality of the limsup proxy is visible.
struct RadiusReport {
  double r = 0.0;
  double r_reg = 0.0;
  bool all_zero = false;  // radii reported as +infinity
  std::vector<DegreeRoots> per_degree;
  int window_lo = 0;
  int window_hi = 0;
};

/// Estimates both radii as reciprocals of the maximum m-th root norm over
/// the upper half-window [ceil(M/2), M]. Requires truncation >= 8.
RadiusReport radii(const PowerSeries& f, const OptimizerConfig& cfg = {});

enum class ConvergenceVerdict { converges, diverges, inconclusive };

struct ConvergenceReport {
  ConvergenceVerdict verdict = ConvergenceVerdict::inconclusive;
  std::vector<double> partial_sums;  // S_M = sum_{m<=M} |P_m|(|z|)
};

/// Three-valued regular convergence test of sum |P_m|(|z|) at a point:
/// converges when tail increments decay geometrically (fit ratio < 1 - tol
/// over the last half), diverges when they are nondecreasing, inconclusive
/// otherwise. Truncated data cannot certify convergence, hence the verdict.
ConvergenceReport regular_converges_at(const PowerSeries& f, const cvec& z,
                                       double tol = 1e-3);

struct LogConvexityReport {
  int pairs_tested = 0;
  int checks = 0;
  int violations = 0;
  int solidity_checks = 0;
  int solidity_violations = 0;
};

/// Samples pairs of regular-convergence points, walks the theta-grid of
/// coordinatewise geometric means, and checks that convergence persists
/// (log-convexity of the regular convergence domain) plus solid domination
/// spot checks.
LogConvexityReport log_convexity_probe(const PowerSeries& f, int samples,
                                       std::uint64_t seed);

struct CoherencePair {
  Complex at_origin_expansion;  // |f|_0 (i/2)
  Complex at_center_expansion;  // |f|_{i/2} (i/2)
};

/// The one-variable coherence demonstration for f(z) = 1/(1-z): moduli of
/// the Taylor expansions about 0 and about i/2 evaluated at i/2 disagree,
/// so |f| cannot be defined locally from recentred expansions.
CoherencePair coherence_demo();

/// Full geometric monomial series (all c_alpha = 1) truncated at M; the
/// classical example whose regular convergence at |z_j| = q < 1 has closed
/// form prod_j 1/(1 - q).
PowerSeries geometric_full_series(const SpaceSpec& space, int truncation);

}  // namespace latpoly
