#include "latpoly/construct.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "latpoly/errors.hpp"
#include "latpoly/rng.hpp"

namespace latpoly {

namespace {

HomogeneousPolynomial first_monomial(const SpaceSpec& space, int m) {
  std::vector<int> e(static_cast<std::size_t>(space.dim()), 0);
  e[0] = m;
  return HomogeneousPolynomial::monomial(space, MultiIndex(std::move(e)),
                                         Complex{1.0, 0.0});
}

HomogeneousPolynomial scale_poly(const HomogeneousPolynomial& P, double s) {
  return linear_combination(Complex{s, 0.0}, P, Complex{0.0, 0.0}, P);
}

struct LambdaValue {
  double lambda = 0.0;
  double sup = 0.0;
  bool degenerate = false;
};

LambdaValue eval_lambda(const HomogeneousPolynomial& Q,
                        const HomogeneousPolynomial& P, double t, int m,
                        const OptimizerConfig& cfg) {
  const auto S =
      linear_combination(Complex{1.0 - t, 0.0}, Q, Complex{t, 0.0}, P);
  LambdaValue out;
  if (S.is_zero()) {
    out.degenerate = true;
    return out;
  }
  const double sup = estimate_sup_norm(S, cfg).value;
  if (sup < 1e-8) {
    out.degenerate = true;
    return out;
  }
  const double reg = estimate_regular_norm(S, cfg).value;
  out.sup = sup;
  out.lambda = std::pow(reg / sup, 1.0 / static_cast<double>(m));
  return out;
}

HomogeneousPolynomial embed(const HomogeneousPolynomial& P,
                            const SpaceSpec& ambient) {
  if (P.space().dim() == ambient.dim() && P.space() == ambient) return P;
  std::vector<Term> ts;
  ts.reserve(P.terms().size());
  for (const Term& t : P.terms()) {
    std::vector<int> e = t.alpha.exponents();
    e.resize(static_cast<std::size_t>(ambient.dim()), 0);
    ts.push_back({MultiIndex(std::move(e)), t.coeff});
  }
  return HomogeneousPolynomial::from_terms(ambient, P.degree(), std::move(ts));
}

}  // namespace

ConstructionResult construct_ratio_polynomial(double p, int m, double eta,
                                              const ConstructionConfig& cfg) {
  if (m < 1)
    throw std::invalid_argument("construct_ratio_polynomial: m must be >= 1");
  if (!(eta >= 1.0))
    throw std::invalid_argument(
        "construct_ratio_polynomial: eta must be >= 1");
  if (!(p >= 1.0))
    throw std::invalid_argument("construct_ratio_polynomial: p must be >= 1");

  const double tol = cfg.bisect_tol;

  if (eta - 1.0 <= tol) {
    const SpaceSpec line = SpaceSpec::lp(1, p);
    const auto Q = first_monomial(line, m);
    return ConstructionResult{Q, 1.0, 1, 0, Q, Q, {}};
  }

  // Stage 1: grow the dimension until the ratio search produces a witness
  // whose lambda(1) at least reaches the bisection band around eta.
  const double target_ratio = std::pow(eta, m);
  double best_seen = 1.0;
  int n = 2;
  SpaceSpec space = SpaceSpec::lp(n, p);
  BohrEstimate found{space, m, 0.0, 1.0, first_monomial(space, m), 0, 0, 0};
  bool ok = false;
  while (n <= cfg.n_cap) {
    space = SpaceSpec::lp(n, p);
    BohrConfig search = cfg.search;
    std::uint64_t chain = cfg.seed ^ (static_cast<std::uint64_t>(n) << 24) ^
                          static_cast<std::uint64_t>(m);
    search.seed = splitmix64(chain);
    search.early_stop_ratio = target_ratio * (1.0 + 4.0 * tol);
    const BohrEstimate est = estimate_bohr_m(space, m, search);
    best_seen = std::max(best_seen, est.ratio_sup);
    if (std::pow(est.ratio_sup, 1.0 / static_cast<double>(m)) >=
        eta - 0.25 * tol) {
      found = est;
      ok = true;
      break;
    }
    n *= 2;
  }
  if (!ok)
    throw eta_unreachable_error(
        "construct_ratio_polynomial: eta " + std::to_string(eta) +
            " unreachable for degree " + std::to_string(m) + " with n <= " +
            std::to_string(cfg.n_cap) + " (best eta " +
            std::to_string(std::pow(best_seen, 1.0 / m)) + ")",
        m, std::pow(best_seen, 1.0 / m));

  HomogeneousPolynomial P_m = found.witness;
  HomogeneousPolynomial Q_m = first_monomial(space, m);

  ConstructionResult result{P_m, 0.0, n, 0, Q_m, P_m, {}};

  // Stage 2: bisection on the normalized segment gamma(t). The bracket
  // [t_lo, t_hi] keeps lambda(t_lo) < eta < lambda(t_hi) by re-evaluated
  // values; monotonicity of lambda is never assumed. A vanishing segment
  // norm switches the positive endpoint to a two-monomial waypoint.
  for (int attempt = 0; attempt < 2; ++attempt) {
    LambdaValue hi = eval_lambda(Q_m, P_m, 1.0, m, cfg.high_acc);
    if (hi.degenerate)
      throw bisection_bracket_error(
          "construct_ratio_polynomial: extremal endpoint has vanishing norm");
    result.trace.push_back({1.0, hi.lambda});
    if (hi.lambda < eta - tol)
      throw bisection_bracket_error(
          "construct_ratio_polynomial: lambda(1) = " +
          std::to_string(hi.lambda) + " fails to bracket eta = " +
          std::to_string(eta) + " after re-estimation");

    double t_lo = 0.0;
    double t_hi = 1.0;
    double accepted_t = -1.0;
    double accepted_lambda = 0.0;
    bool degenerate = false;
    if (hi.lambda <= eta + tol) {
      accepted_t = 1.0;
      accepted_lambda = hi.lambda;
    }
    int steps = 0;
    while (accepted_t < 0.0 && steps < cfg.bisect_max_steps) {
      const double mid = 0.5 * (t_lo + t_hi);
      const LambdaValue lv = eval_lambda(Q_m, P_m, mid, m, cfg.high_acc);
      ++steps;
      if (lv.degenerate) {
        degenerate = true;
        break;
      }
      result.trace.push_back({mid, lv.lambda});
      if (std::abs(lv.lambda - eta) <= tol) {
        accepted_t = mid;
        accepted_lambda = lv.lambda;
        break;
      }
      if (lv.lambda < eta)
        t_lo = mid;
      else
        t_hi = mid;
    }
    result.bisection_steps += steps;

    if (degenerate) {
      // Positive waypoint keeps lambda(0) = 1 while steering the segment
      // away from the cancellation.
      if (space.dim() < 2)
        throw bisection_bracket_error(
            "construct_ratio_polynomial: degenerate path on a line");
      std::vector<int> e(static_cast<std::size_t>(space.dim()), 0);
      e[1] = m;
      Q_m = linear_combination(
          Complex{0.5, 0.0}, Q_m, Complex{0.5, 0.0},
          HomogeneousPolynomial::monomial(space, MultiIndex(std::move(e)),
                                          Complex{1.0, 0.0}));
      result.positive_endpoint = Q_m;
      continue;
    }
    if (accepted_t < 0.0)
      throw nonconvergence_error(
          "construct_ratio_polynomial: bisection exhausted " +
          std::to_string(cfg.bisect_max_steps) + " steps without entering "
          "the tolerance band");

    const auto S = linear_combination(Complex{1.0 - accepted_t, 0.0}, Q_m,
                                      Complex{accepted_t, 0.0}, P_m);
    const double sup = estimate_sup_norm(S, cfg.high_acc).value;
    result.P = scale_poly(S, 1.0 / sup);
    const double reg = estimate_regular_norm(result.P, cfg.high_acc).value;
    result.achieved_eta = std::pow(reg, 1.0 / static_cast<double>(m));
    (void)accepted_lambda;
    return result;
  }
  throw bisection_bracket_error(
      "construct_ratio_polynomial: path stayed degenerate after waypoint");
}

SeriesConstruction construct_small_regular_radius_series_detailed(
    double p, double tau, int M, const ConstructionConfig& cfg) {
  if (!(tau > 0.0 && tau <= 1.0))
    throw std::invalid_argument(
        "construct_small_regular_radius_series: tau must lie in (0, 1]");
  if (M < 2)
    throw std::invalid_argument(
        "construct_small_regular_radius_series: need truncation M >= 2");
  const double eta = 1.0 / tau;

  std::vector<ConstructionResult> parts;
  parts.reserve(static_cast<std::size_t>(M) - 1);
  for (int m = 2; m <= M; ++m) {
    ConstructionConfig per = cfg;
    per.seed = splitmix64(per.seed += static_cast<std::uint64_t>(m));
    try {
      parts.push_back(construct_ratio_polynomial(p, m, eta, per));
    } catch (const eta_unreachable_error& e) {
      throw eta_unreachable_error(
          "construct_small_regular_radius_series: degree " +
              std::to_string(m) + " failed: " + e.what(),
          m, e.best_eta);
    }
  }

  int n_amb = 1;
  for (const auto& part : parts) n_amb = std::max(n_amb, part.n_used);
  const SpaceSpec ambient = SpaceSpec::lp(n_amb, p);

  SeriesConstruction out{PowerSeries(ambient, M), std::move(parts)};
  for (const auto& part : out.per_degree)
    out.series.set_term(embed(part.P, ambient));
  return out;
}

PowerSeries construct_small_regular_radius_series(
    double p, double tau, int M, const ConstructionConfig& cfg) {
  return construct_small_regular_radius_series_detailed(p, tau, M, cfg)
      .series;
}

}  // namespace latpoly
