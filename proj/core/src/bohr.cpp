#include "latpoly/bohr.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "latpoly/errors.hpp"
#include "latpoly/parallel.hpp"
#include "latpoly/sampling.hpp"
#include "poly_builders.hpp"

namespace latpoly {

namespace {

struct Candidate {
  std::vector<MultiIndex> basis;
  std::vector<Complex> coeff;
  double ratio = -1.0;
};

HomogeneousPolynomial candidate_poly(const SpaceSpec& space, int m,
                                     const Candidate& c) {
  std::vector<Term> ts;
  ts.reserve(c.basis.size());
  for (std::size_t i = 0; i < c.basis.size(); ++i)
    if (c.coeff[i] != Complex{}) ts.push_back({c.basis[i], c.coeff[i]});
  return HomogeneousPolynomial::from_terms(space, m, std::move(ts));
}

void normalize_coeff(std::vector<Complex>& c) {
  double s = 0.0;
  for (const Complex& v : c) s += std::norm(v);
  if (s <= 0.0) return;
  const double inv = 1.0 / std::sqrt(s);
  for (Complex& v : c) v *= inv;
}

double rate_ratio(const SpaceSpec& space, int m, const Candidate& c,
                  const OptimizerConfig& inner) {
  try {
    const auto P = candidate_poly(space, m, c);
    if (P.is_zero()) return -1.0;
    const double sup = estimate_sup_norm(P, inner).value;
    if (sup <= 1e-13) return -1.0;
    const double reg = estimate_regular_norm(P, inner).value;
    return reg / sup;
  } catch (const nonconvergence_error&) {
    return -1.0;
  }
}

Candidate from_poly(const HomogeneousPolynomial& P,
                    const std::vector<MultiIndex>* full_basis) {
  Candidate c;
  if (full_basis) {
    c.basis = *full_basis;
    c.coeff.assign(c.basis.size(), Complex{});
    for (const Term& t : P.terms()) {
      const auto it = std::find(c.basis.begin(), c.basis.end(), t.alpha);
      c.coeff[static_cast<std::size_t>(it - c.basis.begin())] = t.coeff;
    }
  } else {
    for (const Term& t : P.terms()) {
      c.basis.push_back(t.alpha);
      c.coeff.push_back(t.coeff);
    }
  }
  normalize_coeff(c.coeff);
  return c;
}

// Coordinatewise perturbation descent with shrinking radius. Greedy within a
// candidate; deterministic given the stream.
void polish_candidate(const SpaceSpec& space, int m, Candidate& cand,
                      const BohrConfig& cfg, Rng rng) {
  const std::size_t dim = cand.basis.size();
  if (dim == 0) return;
  OptimizerConfig inner = cfg.inner_search;
  inner.threads = 1;
  double sigma = 0.25;
  for (int round = 0; round < cfg.polish_rounds; ++round) {
    const int probes =
        std::min<int>(cfg.polish_probes, static_cast<int>(4 * dim));
    for (int probe = 0; probe < probes; ++probe) {
      const std::size_t coord = rng.uniform_index(dim);
      Complex delta;
      switch (probe % 4) {
        case 0: delta = {sigma, 0.0}; break;
        case 1: delta = {-sigma, 0.0}; break;
        case 2: delta = {0.0, sigma}; break;
        default: delta = {0.0, -sigma}; break;
      }
      Candidate trial = cand;
      trial.coeff[coord] += delta;
      normalize_coeff(trial.coeff);
      trial.ratio = rate_ratio(space, m, trial, inner);
      if (trial.ratio > cand.ratio) cand = std::move(trial);
    }
    sigma *= 0.5;
  }
}

}  // namespace

BohrEstimate estimate_bohr_m(const SpaceSpec& space, int m,
                             const BohrConfig& cfg) {
  if (m < 1)
    throw std::invalid_argument("estimate_bohr_m: degree must be >= 1");
  const int n = space.dim();

  const std::size_t mono_count = multiindex_count(n, m, cfg.monomial_cap);
  const bool dense = mono_count <= cfg.monomial_cap;
  std::vector<MultiIndex> full_basis;
  if (dense) full_basis = enumerate_multiindices(n, m, cfg.monomial_cap);

  std::vector<Candidate> cands;
  bool early_stopped = false;
  if (cfg.structured_seeds) {
    for (const auto& P : detail::structured_candidates(space, m))
      cands.push_back(from_poly(P, dense ? &full_basis : nullptr));
    if (std::isfinite(cfg.early_stop_ratio) && !cands.empty()) {
      OptimizerConfig inner = cfg.inner_search;
      inner.threads = 1;
      parallel_for(static_cast<int>(cands.size()), cfg.threads, [&](int i) {
        cands[static_cast<std::size_t>(i)].ratio =
            rate_ratio(space, m, cands[static_cast<std::size_t>(i)], inner);
      });
      for (const Candidate& c : cands)
        if (c.ratio >= cfg.early_stop_ratio) early_stopped = true;
    }
  }
  for (int restart = 0; !early_stopped && restart < std::max(1, cfg.restarts);
       ++restart) {
    for (int i = 0; i < cfg.batch; ++i) {
      Rng rng = Rng::child(cfg.seed,
                           static_cast<std::uint64_t>(restart) * 1000003u +
                               static_cast<std::uint64_t>(i));
      RandomPolyOptions opt;
      opt.monomial_cap = cfg.monomial_cap;
      opt.sparse_terms = cfg.sparse_terms;
      switch (i % 4) {
        case 1: opt.unimodular = true; break;
        case 2: opt.real_coeffs = true; break;
        case 3: opt.density = 0.25; break;
        default: break;
      }
      const auto P = random_polynomial(space, m, rng, opt);
      cands.push_back(from_poly(P, dense ? &full_basis : nullptr));
    }
  }

  // Rank every candidate by its estimated ratio.
  {
    OptimizerConfig inner = cfg.inner_search;
    inner.threads = 1;
    parallel_for(static_cast<int>(cands.size()), cfg.threads, [&](int i) {
      if (cands[static_cast<std::size_t>(i)].ratio < 0.0)
        cands[static_cast<std::size_t>(i)].ratio =
            rate_ratio(space, m, cands[static_cast<std::size_t>(i)], inner);
    });
  }
  for (const Candidate& c : cands)
    if (c.ratio >= cfg.early_stop_ratio) early_stopped = true;
  std::stable_sort(cands.begin(), cands.end(),
                   [](const Candidate& a, const Candidate& b) {
                     return a.ratio > b.ratio;
                   });
  if (!early_stopped) {
    const int top =
        std::min<int>(cfg.polish_top, static_cast<int>(cands.size()));
    parallel_for(top, cfg.threads, [&](int i) {
      polish_candidate(
          space, m, cands[static_cast<std::size_t>(i)], cfg,
          Rng::child(cfg.seed, 7000019u + static_cast<std::uint64_t>(i)));
    });
  }

  int best = 0;
  for (int i = 1; i < static_cast<int>(cands.size()); ++i)
    if (cands[static_cast<std::size_t>(i)].ratio >
        cands[static_cast<std::size_t>(best)].ratio)
      best = i;

  auto finish = [&](const HomogeneousPolynomial& W) {
    NormEstimate sup, reg;
    try {
      sup = estimate_sup_norm(W, cfg.inner_final);
      reg = estimate_regular_norm(W, cfg.inner_final);
    } catch (const nonconvergence_error& e) {
      throw nonconvergence_error(
          std::string("estimate_bohr_m: final witness estimate failed: ") +
          e.what());
    }
    return std::pair<NormEstimate, NormEstimate>{sup, reg};
  };

  HomogeneousPolynomial witness =
      candidate_poly(space, m, cands[static_cast<std::size_t>(best)]);
  auto [sup, reg] = finish(witness);
  double ratio = sup.value > 0.0 ? reg.value / sup.value : -1.0;

  // The monomial z_1^m has ||P|| = ||P||_r exactly, so the true supremum is
  // at least 1; floor the certificate there when search noise lands below.
  if (!(ratio >= 1.0)) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[0] = m;
    witness = HomogeneousPolynomial::monomial(space, MultiIndex(std::move(e)),
                                              Complex{1.0, 0.0});
    std::tie(sup, reg) = finish(witness);
    ratio = 1.0;
  }

  BohrEstimate out{space,
                   m,
                   ratio,
                   std::pow(ratio, -1.0 / static_cast<double>(m)),
                   witness,
                   cfg.seed,
                   sup.value,
                   reg.value,
                   sup.spread,
                   reg.spread};
  if (out.k_m > 1.0) out.k_m = 1.0;
  return out;
}

CkkPolynomial ckk_unit_norm_family(double a, double b, double c) {
  if (!(std::abs(a) < 1.0) || !(std::abs(b) < 1.0) ||
      !(std::abs(c) > 2.0 && std::abs(c) <= 4.0))
    throw std::invalid_argument(
        "ckk_unit_norm_family: need |a| < 1, |b| < 1, 2 < |c| <= 4");
  const SpaceSpec l12 = SpaceSpec::lp(2, 1.0);
  std::vector<Term> ts;
  if (a != 0.0) ts.push_back({MultiIndex({2, 0}), {a, 0.0}});
  if (b != 0.0) ts.push_back({MultiIndex({0, 2}), {b, 0.0}});
  ts.push_back({MultiIndex({1, 1}), {c, 0.0}});
  const double lhs = 4.0 * std::abs(c) - c * c;
  const double rhs = 4.0 * (std::abs(a + b) - a * b);
  return CkkPolynomial{std::abs(lhs - rhs) <= 1e-12,
                       HomogeneousPolynomial::from_terms(l12, 2, std::move(ts))};
}

double disc_bohr_threshold(double a) {
  if (!(a > 0.0 && a < 1.0))
    throw std::invalid_argument("disc_bohr_threshold: a must lie in (0, 1)");
  const double r = 1.0 / (1.0 + 2.0 * a);
  // f_a(z) = (a - z)/(1 - az) has |c_0| = a, |c_k| = (1 - a^2) a^(k-1);
  // confirm sum |c_k| r^k = 1 by direct summation.
  double sum = a;
  double ak = 1.0;
  double rk = r;
  for (int k = 1; k <= 1000; ++k) {
    sum += (1.0 - a * a) * ak * rk;
    ak *= a;
    rk *= r;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::logic_error("disc_bohr_threshold: series check failed");
  return r;
}

}  // namespace latpoly
