#include "latpoly/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "latpoly/errors.hpp"
#include "latpoly/parallel.hpp"
#include "latpoly/rng.hpp"

namespace latpoly {

namespace {

struct StartOutcome {
  double value = 0.0;
  cvec witness;
  bool converged = false;
};

// Clamp negatives and radially project onto the magnitude feasible set:
// the p-sphere for finite p, the cube [0,1]^n (with at least one coordinate
// at 1) for p = infinity. Returns false when the vector collapses to zero.
bool project_magnitudes(const SpaceSpec& space, rvec& r) {
  for (double& v : r) v = std::max(v, 0.0);
  if (space.is_inf()) {
    double mx = 0.0;
    for (double& v : r) {
      v = std::min(v, 1.0);
      mx = std::max(mx, v);
    }
    if (mx <= 0.0) return false;
    // Homogeneity: pushing the largest magnitude to the distinguished
    // boundary never decreases |P|.
    for (double& v : r) v /= mx;
    return true;
  }
  const double nrm = p_norm_nonneg(space, r);
  if (!(nrm > 0.0) || !std::isfinite(nrm)) return false;
  for (double& v : r) v /= nrm;
  return true;
}

bool project_signed(const SpaceSpec& space, rvec& x) {
  if (space.is_inf()) {
    double mx = 0.0;
    for (double& v : x) {
      v = std::clamp(v, -1.0, 1.0);
      mx = std::max(mx, std::abs(v));
    }
    if (mx <= 0.0) return false;
    for (double& v : x) v /= mx;
    return true;
  }
  rvec a(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) a[j] = std::abs(x[j]);
  const double nrm = p_norm_nonneg(space, a);
  if (!(nrm > 0.0) || !std::isfinite(nrm)) return false;
  for (double& v : x) v /= nrm;
  return true;
}

double norm2(const rvec& g) {
  double s = 0.0;
  for (double v : g) s += v * v;
  return std::sqrt(s);
}

// Euclidean normal of the p-sphere {||x||_p = 1} at a point on it. For the
// magnitude parametrization the point is nonnegative; for the signed real
// domain the sign enters through |x_j|^(p-1) sgn(x_j).
void sphere_normal(const SpaceSpec& space, const rvec& x, rvec& nu) {
  const double p = space.p();
  nu.resize(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double a = std::abs(x[j]);
    double mag;
    if (p == 1.0)
      mag = a > 0.0 ? 1.0 : 0.0;  // subgradient choice at kinks: free direction
    else if (p == 2.0)
      mag = a;
    else
      mag = a > 0.0 ? std::pow(a, p - 1.0) : 0.0;
    nu[j] = x[j] >= 0.0 ? mag : -mag;
  }
}

// Removes the constraint-normal component so the step is an ascent
// direction for the problem restricted to the sphere. Returns the norm of
// the tangential direction (0 at a constrained critical point). For
// p = infinity the feasible set is a box and plain clamping is the exact
// projection, so no tangentialization is applied.
double tangentialize(const SpaceSpec& space, const rvec& x, rvec& g,
                     rvec& scratch) {
  if (!space.is_inf()) {
    sphere_normal(space, x, scratch);
    double gn = 0.0, nn = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      gn += g[j] * scratch[j];
      nn += scratch[j] * scratch[j];
    }
    if (nn > 0.0) {
      const double c = gn / nn;
      for (std::size_t j = 0; j < x.size(); ++j) g[j] -= c * scratch[j];
    }
  }
  return norm2(g);
}

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Ascent over z_j = r_j e^{i theta_j} with magnitudes projected onto the
// p-sphere and an inner gradient loop for the phases. Objective |P(z)|^2.
StartOutcome ascend_complex(const HomogeneousPolynomial& P,
                            const SpaceSpec& space, Rng rng,
                            const OptimizerConfig& cfg, int variant) {
  const int n = space.dim();
  EvalWorkspace ws;
  std::vector<Complex> grad;
  rvec r(static_cast<std::size_t>(n));
  rvec theta(static_cast<std::size_t>(n));
  cvec z(static_cast<std::size_t>(n));

  auto assemble = [&]() {
    for (int j = 0; j < n; ++j)
      z[static_cast<std::size_t>(j)] =
          std::polar(r[static_cast<std::size_t>(j)],
                     theta[static_cast<std::size_t>(j)]);
  };
  auto objective = [&]() {
    const Complex v = P.evaluate(z, ws);
    return std::norm(v);
  };

  // Start variants cycle through generic phases, sign patterns, the positive
  // orthant and near-vertex concentrations so real, positive and face optima
  // are reached as reliably as interior complex ones.
  double F = 0.0;
  for (int attempt = 0; attempt < 8; ++attempt) {
    const int concentrate =
        (variant % 4 == 3) ? static_cast<int>(rng.uniform_index(
                                 static_cast<std::uint64_t>(n)))
                           : -1;
    for (int j = 0; j < n; ++j) {
      double mag = std::abs(rng.gaussian());
      if (concentrate >= 0) mag = 0.15 * mag + (j == concentrate ? 1.0 : 0.0);
      r[static_cast<std::size_t>(j)] = mag;
      switch (variant % 4) {
        case 1:
          theta[static_cast<std::size_t>(j)] =
              rng.uniform01() < 0.5 ? 0.0 : kTwoPi / 2.0;
          break;
        case 2:
          theta[static_cast<std::size_t>(j)] = 0.0;
          break;
        default:
          theta[static_cast<std::size_t>(j)] = rng.uniform(0.0, kTwoPi);
          break;
      }
    }
    if (!project_magnitudes(space, r)) continue;
    assemble();
    F = objective();
    if (F > 0.0) break;
    variant = 0;
  }

  rvec gr(static_cast<std::size_t>(n));
  rvec gth(static_cast<std::size_t>(n));
  rvec r_try(static_cast<std::size_t>(n));
  rvec th_try(static_cast<std::size_t>(n));
  double step_r = 0.25;
  double step_th = 0.25;
  StartOutcome out;
  out.converged = false;
  int stalls = 0;

  int iter = 0;
  for (; iter < cfg.max_iter; ++iter) {
    const double F_before = F;

    // Phase subloop: for fixed magnitudes each phase enters polynomially;
    // no closed form for m >= 2, so a short gradient loop aligns them.
    for (int pit = 0; pit < 60; ++pit) {
      assemble();
      const Complex val = P.evaluate_gradient(z, grad, ws);
      const Complex cval = std::conj(val);
      for (int j = 0; j < n; ++j)
        gth[static_cast<std::size_t>(j)] =
            -2.0 * std::imag(cval * grad[static_cast<std::size_t>(j)] *
                             z[static_cast<std::size_t>(j)]);
      const double gn = norm2(gth);
      if (gn <= 1e-18) break;
      bool accepted = false;
      double s = step_th;
      for (int h = 0; h < 30; ++h) {
        for (int j = 0; j < n; ++j)
          th_try[static_cast<std::size_t>(j)] =
              theta[static_cast<std::size_t>(j)] +
              s * gth[static_cast<std::size_t>(j)] / gn;
        std::swap(theta, th_try);
        assemble();
        const double F_try = objective();
        if (F_try > F) {
          F = F_try;
          accepted = true;
          step_th = std::min(s * 2.0, 1.0);
          break;
        }
        std::swap(theta, th_try);
        s *= 0.5;
      }
      if (!accepted) {
        step_th = std::max(step_th * 0.5, 1e-16);
        break;
      }
      if (F - F_before <= 0.05 * cfg.tol * std::max(F_before, 1e-300) &&
          pit >= 2)
        break;
    }

    // Magnitude step with backtracking line search and projection.
    assemble();
    const Complex val = P.evaluate_gradient(z, grad, ws);
    const Complex cval = std::conj(val);
    for (int j = 0; j < n; ++j) {
      const Complex phase = std::polar(1.0, theta[static_cast<std::size_t>(j)]);
      gr[static_cast<std::size_t>(j)] =
          2.0 * std::real(cval * grad[static_cast<std::size_t>(j)] * phase);
    }
    const double gn = tangentialize(space, r, gr, r_try);
    if (gn > 1e-18) {
      double s = step_r;
      for (int h = 0; h < 40; ++h) {
        for (int j = 0; j < n; ++j)
          r_try[static_cast<std::size_t>(j)] =
              r[static_cast<std::size_t>(j)] +
              s * gr[static_cast<std::size_t>(j)] / gn;
        if (project_magnitudes(space, r_try)) {
          std::swap(r, r_try);
          assemble();
          const double F_try = objective();
          if (F_try > F) {
            F = F_try;
            step_r = std::min(s * 2.0, 1.0);
            break;
          }
          std::swap(r, r_try);
        }
        s *= 0.5;
        if (h == 39) step_r = std::max(step_r * 0.5, 1e-16);
      }
    }

    if (F - F_before <= cfg.tol * std::max(F_before, 1e-300)) {
      // Optima on l_p polytope faces keep tiny magnitudes alive long after
      // gradient progress dies; zeroing them one at a time is an exact move
      // onto the face.
      bool snapped = false;
      for (int j = 0; j < n; ++j) {
        if (r[static_cast<std::size_t>(j)] <= 0.0) continue;
        r_try = r;
        r_try[static_cast<std::size_t>(j)] = 0.0;
        if (!project_magnitudes(space, r_try)) continue;
        std::swap(r, r_try);
        assemble();
        const double F_try = objective();
        if (F_try > F) {
          F = F_try;
          snapped = true;
        } else {
          std::swap(r, r_try);
        }
      }
      if (snapped) {
        stalls = 0;
        continue;
      }
      if (++stalls >= 2 && iter >= 2) {
        out.converged = true;
        break;
      }
    } else {
      stalls = 0;
    }
  }

  assemble();
  out.witness = z;
  out.value = std::abs(P.evaluate(z, ws));
  return out;
}

// Real/signed and nonnegative ascent share this driver; `clamp_nonneg`
// selects the positive face.
StartOutcome ascend_real(const HomogeneousPolynomial& P,
                         const SpaceSpec& space, Rng rng,
                         const OptimizerConfig& cfg, bool nonneg,
                         int variant) {
  const int n = space.dim();
  EvalWorkspace ws;
  rvec x(static_cast<std::size_t>(n));
  rvec g(static_cast<std::size_t>(n));
  rvec x_try(static_cast<std::size_t>(n));

  const bool positive_fast = nonneg && P.has_real_coefficients();
  std::vector<Complex> cgrad;
  cvec zbuf(static_cast<std::size_t>(n));
  rvec rgrad(static_cast<std::size_t>(n));

  auto project = [&](rvec& v) {
    return nonneg ? project_magnitudes(space, v) : project_signed(space, v);
  };
  auto objective = [&](const rvec& v) {
    if (positive_fast) return P.evaluate_nonneg(v, ws);
    for (int j = 0; j < n; ++j)
      zbuf[static_cast<std::size_t>(j)] =
          Complex{v[static_cast<std::size_t>(j)], 0.0};
    return std::norm(P.evaluate(zbuf, ws));
  };
  auto gradient = [&](const rvec& v, rvec& gout) {
    if (positive_fast) {
      return P.evaluate_nonneg_gradient(v, gout, ws);
    }
    for (int j = 0; j < n; ++j)
      zbuf[static_cast<std::size_t>(j)] =
          Complex{v[static_cast<std::size_t>(j)], 0.0};
    const Complex val = P.evaluate_gradient(zbuf, cgrad, ws);
    const Complex cval = std::conj(val);
    for (int j = 0; j < n; ++j)
      gout[static_cast<std::size_t>(j)] =
          2.0 * std::real(cval * cgrad[static_cast<std::size_t>(j)]);
    return std::norm(val);
  };

  double F = 0.0;
  for (int attempt = 0; attempt < 8; ++attempt) {
    const int concentrate =
        (variant % 3 == 2) ? static_cast<int>(rng.uniform_index(
                                 static_cast<std::uint64_t>(n)))
                           : -1;
    for (int j = 0; j < n; ++j) {
      double gval = rng.gaussian();
      if (nonneg) gval = std::abs(gval);
      if (concentrate >= 0)
        gval = 0.15 * gval + (j == concentrate ? 1.0 : 0.0);
      x[static_cast<std::size_t>(j)] = gval;
    }
    if (!project(x)) continue;
    F = objective(x);
    if (F > 0.0 || P.is_zero()) break;
    variant = 0;
  }

  double step = 0.25;
  rvec scratch(static_cast<std::size_t>(n));
  StartOutcome out;
  int stalls = 0;
  int iter = 0;
  for (; iter < cfg.max_iter; ++iter) {
    const double F_before = F;
    gradient(x, g);
    const double gn = tangentialize(space, x, g, scratch);
    if (gn > 1e-18) {
      double s = step;
      for (int h = 0; h < 40; ++h) {
        for (int j = 0; j < n; ++j)
          x_try[static_cast<std::size_t>(j)] =
              x[static_cast<std::size_t>(j)] +
              s * g[static_cast<std::size_t>(j)] / gn;
        if (project(x_try)) {
          const double F_try = objective(x_try);
          if (F_try > F) {
            F = F_try;
            std::swap(x, x_try);
            step = std::min(s * 2.0, 1.0);
            break;
          }
        }
        s *= 0.5;
        if (h == 39) step = std::max(step * 0.5, 1e-16);
      }
    }
    if (F - F_before <= cfg.tol * std::max(F_before, 1e-300)) {
      bool snapped = false;
      for (int j = 0; j < n; ++j) {
        if (x[static_cast<std::size_t>(j)] == 0.0) continue;
        x_try = x;
        x_try[static_cast<std::size_t>(j)] = 0.0;
        if (!project(x_try)) continue;
        const double F_try = objective(x_try);
        if (F_try > F) {
          F = F_try;
          std::swap(x, x_try);
          snapped = true;
        }
      }
      if (snapped) {
        stalls = 0;
        continue;
      }
      if (++stalls >= 2 && iter >= 2) {
        out.converged = true;
        break;
      }
    } else {
      stalls = 0;
    }
  }

  out.witness.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    out.witness[static_cast<std::size_t>(j)] =
        Complex{x[static_cast<std::size_t>(j)], 0.0};
  out.value = positive_fast ? P.evaluate_nonneg(x, ws)
                            : std::abs(P.evaluate(out.witness, ws));
  return out;
}

NormEstimate run_multistart(const HomogeneousPolynomial& P,
                            const OptimizerConfig& cfg, SphereDomain domain) {
  if (P.degree() < 1)
    throw std::invalid_argument("norm estimate: degree must be >= 1");
  if (cfg.starts < 1)
    throw std::invalid_argument("norm estimate: starts must be >= 1");

  NormEstimate est;
  est.starts = cfg.starts;
  est.seed = cfg.seed;
  est.domain = domain;

  if (P.is_zero()) {
    est.value = 0.0;
    est.witness.assign(static_cast<std::size_t>(P.space().dim()),
                       Complex{0.0, 0.0});
    est.witness[0] = Complex{1.0, 0.0};
    est.converged_starts = cfg.starts;
    est.spread = 0.0;
    return est;
  }

  std::vector<StartOutcome> outcomes(static_cast<std::size_t>(cfg.starts));
  parallel_for(cfg.starts, cfg.threads, [&](int i) {
    Rng rng = Rng::child(cfg.seed, static_cast<std::uint64_t>(i));
    switch (domain) {
      case SphereDomain::complex_full:
        outcomes[static_cast<std::size_t>(i)] =
            ascend_complex(P, P.space(), rng, cfg, i);
        break;
      case SphereDomain::real_signed:
        outcomes[static_cast<std::size_t>(i)] =
            ascend_real(P, P.space(), rng, cfg, false, i);
        break;
      case SphereDomain::nonnegative:
        outcomes[static_cast<std::size_t>(i)] =
            ascend_real(P, P.space(), rng, cfg, true, i);
        break;
    }
  });

  int best = -1;
  double best_value = -1.0;
  double cmin = std::numeric_limits<double>::infinity();
  double cmax = -std::numeric_limits<double>::infinity();
  int converged = 0;
  for (int i = 0; i < cfg.starts; ++i) {
    const StartOutcome& o = outcomes[static_cast<std::size_t>(i)];
    if (o.value > best_value) {
      best_value = o.value;
      best = i;
    }
    if (o.converged) {
      ++converged;
      cmin = std::min(cmin, o.value);
      cmax = std::max(cmax, o.value);
    }
  }
  if (converged == 0)
    throw nonconvergence_error(
        "norm estimate: iteration cap hit on every start");

  est.value = best_value;
  est.witness = outcomes[static_cast<std::size_t>(best)].witness;
  est.converged_starts = converged;
  est.spread = converged > 0 ? cmax - cmin : 0.0;
  return est;
}

}  // namespace

NormEstimate estimate_sup_norm(const HomogeneousPolynomial& P,
                               const OptimizerConfig& cfg,
                               SphereDomain domain) {
  if (domain == SphereDomain::nonnegative)
    return run_multistart(P, cfg, SphereDomain::nonnegative);
  return run_multistart(P, cfg, domain);
}

NormEstimate estimate_regular_norm(const HomogeneousPolynomial& P,
                                   const OptimizerConfig& cfg) {
  // |P| has nonnegative coefficients, so the complex supremum is attained on
  // the positive face; optimizing there is exact, not a heuristic.
  NormEstimate est =
      run_multistart(P.modulus(), cfg, SphereDomain::nonnegative);
  return est;
}

std::pair<double, double> regular_norm_bounds_l1(
    const HomogeneousPolynomial& P) {
  const SpaceSpec& s = P.space();
  if (s.is_inf() || s.p() != 1.0)
    throw std::invalid_argument("regular_norm_bounds_l1: space must be l_1^n");
  const int m = P.degree();
  double lower = 0.0;
  double upper = 0.0;
  for (const Term& t : P.terms()) {
    // sup over the positive l_1 sphere of x^alpha is alpha^alpha / m^m.
    double val = std::abs(t.coeff);
    for (int j = 0; j < t.alpha.size(); ++j) {
      const int a = t.alpha[j];
      if (a > 0)
        val *= std::pow(static_cast<double>(a) / static_cast<double>(m),
                        static_cast<double>(a));
    }
    lower = std::max(lower, val);
    upper += val;
  }
  return {lower, upper};
}

HolderCheck holder_check(const HomogeneousPolynomial& P, const rvec& x,
                         const rvec& y, double theta) {
  if (!P.has_nonnegative_coefficients())
    throw std::invalid_argument("holder_check: coefficients must be >= 0");
  if (!(theta > 0.0 && theta < 1.0))
    throw std::invalid_argument("holder_check: theta must lie in (0, 1)");
  for (double v : x)
    if (v < 0.0) throw std::invalid_argument("holder_check: x must be >= 0");
  for (double v : y)
    if (v < 0.0) throw std::invalid_argument("holder_check: y must be >= 0");
  EvalWorkspace ws;
  const rvec mid = log_interpolate(x, y, theta);
  HolderCheck out;
  out.lhs = P.evaluate_nonneg(mid, ws);
  out.rhs = std::pow(P.evaluate_nonneg(x, ws), theta) *
            std::pow(P.evaluate_nonneg(y, ws), 1.0 - theta);
  out.holds = out.lhs <= out.rhs + 1e-10 * std::max(1.0, out.rhs);
  return out;
}

}  // namespace latpoly
