#include "latpoly/series.hpp"
#include <limits>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "latpoly/parallel.hpp"
#include "latpoly/rng.hpp"

namespace latpoly {

PowerSeries::PowerSeries(SpaceSpec space, int truncation)
    : space_(space), truncation_(truncation) {
  if (truncation < 0)
    throw std::invalid_argument("PowerSeries: truncation must be >= 0");
  terms_.resize(static_cast<std::size_t>(truncation) + 1);
}

void PowerSeries::set_term(HomogeneousPolynomial P) {
  if (P.space() != space_)
    throw std::invalid_argument("PowerSeries: term space mismatch");
  if (P.degree() < 0 || P.degree() > truncation_)
    throw std::invalid_argument("PowerSeries: degree outside truncation");
  terms_[static_cast<std::size_t>(P.degree())] = std::move(P);
}

bool PowerSeries::has_term(int m) const {
  return m >= 0 && m <= truncation_ &&
         terms_[static_cast<std::size_t>(m)].has_value() &&
         !terms_[static_cast<std::size_t>(m)]->is_zero();
}

HomogeneousPolynomial PowerSeries::term(int m) const {
  if (m < 0 || m > truncation_)
    throw std::out_of_range("PowerSeries: degree outside truncation");
  if (terms_[static_cast<std::size_t>(m)].has_value())
    return *terms_[static_cast<std::size_t>(m)];
  return HomogeneousPolynomial::zero(space_, m);
}

RadiusReport radii(const PowerSeries& f, const OptimizerConfig& cfg) {
  const int M = f.truncation();
  if (M < 8) throw std::invalid_argument("radii: truncation must be >= 8");

  RadiusReport report;
  report.window_lo = (M + 1) / 2;
  report.window_hi = M;
  report.per_degree.assign(static_cast<std::size_t>(M), DegreeRoots{});

  // degree-0 terms carry no root information; estimate degrees 1..M
  parallel_for(M, cfg.threads, [&](int i) {
    const int m = i + 1;
    DegreeRoots row;
    row.m = m;
    if (f.has_term(m)) {
      OptimizerConfig inner = cfg;
      inner.threads = 1;
      const auto P = f.term(m);
      const double sup = estimate_sup_norm(P, inner).value;
      const double reg = estimate_regular_norm(P, inner).value;
      const double inv_m = 1.0 / static_cast<double>(m);
      row.root_sup = sup > 0.0 ? std::pow(sup, inv_m) : 0.0;
      row.root_reg = reg > 0.0 ? std::pow(reg, inv_m) : 0.0;
    }
    report.per_degree[static_cast<std::size_t>(i)] = row;
  });

  double max_sup = 0.0;
  double max_reg = 0.0;
  for (const DegreeRoots& row : report.per_degree) {
    if (row.m < report.window_lo || row.m > report.window_hi) continue;
    max_sup = std::max(max_sup, row.root_sup);
    max_reg = std::max(max_reg, row.root_reg);
  }
  if (max_sup == 0.0 && max_reg == 0.0) {
    bool any = false;
    for (int m = 1; m <= M; ++m) any = any || f.has_term(m);
    report.all_zero = !any;
  }
  report.r = max_sup > 0.0 ? 1.0 / max_sup
                           : std::numeric_limits<double>::infinity();
  report.r_reg = max_reg > 0.0 ? 1.0 / max_reg
                               : std::numeric_limits<double>::infinity();
  return report;
}

ConvergenceReport regular_converges_at(const PowerSeries& f, const cvec& z,
                                       double tol) {
  if (static_cast<int>(z.size()) != f.space().dim())
    throw std::invalid_argument("regular_converges_at: dimension mismatch");
  const int M = f.truncation();
  const rvec az = modulus_point(z);
  cvec azc(az.size());
  for (std::size_t j = 0; j < az.size(); ++j) azc[j] = Complex{az[j], 0.0};

  ConvergenceReport report;
  std::vector<double> inc(static_cast<std::size_t>(M) + 1, 0.0);
  EvalWorkspace ws;
  double running = 0.0;
  for (int m = 0; m <= M; ++m) {
    if (f.has_term(m))
      inc[static_cast<std::size_t>(m)] =
          f.term(m).modulus().evaluate(azc, ws).real();
    running += inc[static_cast<std::size_t>(m)];
    report.partial_sums.push_back(running);
  }

  const int lo = std::max(1, M - (M + 1) / 2 + 1);  // last ceil(M/2) degrees
  double max_inc = 0.0;
  for (int m = lo; m <= M; ++m)
    max_inc = std::max(max_inc, inc[static_cast<std::size_t>(m)]);
  if (max_inc == 0.0) {
    report.verdict = ConvergenceVerdict::converges;  // finite tail
    return report;
  }

  bool nondecreasing = true;
  for (int m = lo; m < M; ++m) {
    if (inc[static_cast<std::size_t>(m + 1)] <
        inc[static_cast<std::size_t>(m)] * (1.0 - 1e-12))
      nondecreasing = false;
  }
  if (nondecreasing && inc[static_cast<std::size_t>(M)] > 0.0) {
    report.verdict = ConvergenceVerdict::diverges;
    return report;
  }

  // geometric fit over the strictly positive tail increments
  double logsum = 0.0;
  int count = 0;
  int first = -1, last = -1;
  for (int m = lo; m <= M; ++m) {
    if (inc[static_cast<std::size_t>(m)] > 0.0) {
      if (first < 0) first = m;
      last = m;
    }
  }
  if (first >= 0 && last > first) {
    logsum = std::log(inc[static_cast<std::size_t>(last)] /
                      inc[static_cast<std::size_t>(first)]);
    count = last - first;
  }
  if (count > 0) {
    const double ratio = std::exp(logsum / static_cast<double>(count));
    report.verdict = ratio < 1.0 - tol ? ConvergenceVerdict::converges
                                       : ConvergenceVerdict::inconclusive;
  } else {
    report.verdict = ConvergenceVerdict::inconclusive;
  }
  return report;
}

LogConvexityReport log_convexity_probe(const PowerSeries& f, int samples,
                                       std::uint64_t seed) {
  if (samples < 1)
    throw std::invalid_argument("log_convexity_probe: samples must be >= 1");
  const int n = f.space().dim();
  LogConvexityReport report;
  Rng rng(seed);

  std::vector<cvec> hits;
  int attempts = 0;
  while (static_cast<int>(hits.size()) < 2 * samples &&
         attempts < 40 * samples) {
    ++attempts;
    cvec z(static_cast<std::size_t>(n));
    const double scale = rng.uniform(0.05, 1.1);
    for (auto& v : z)
      v = std::polar(scale * rng.uniform01(), rng.uniform(0.0, 6.2831853));
    if (regular_converges_at(f, z).verdict == ConvergenceVerdict::converges)
      hits.push_back(std::move(z));
  }

  for (int s = 0; s + 1 < static_cast<int>(hits.size()); s += 2) {
    const rvec a = modulus_point(hits[static_cast<std::size_t>(s)]);
    const rvec b = modulus_point(hits[static_cast<std::size_t>(s) + 1]);
    ++report.pairs_tested;
    for (int t = 1; t <= 9; ++t) {
      const double theta = 0.1 * t;
      const rvec mid = log_interpolate(a, b, theta);
      cvec midc(mid.size());
      for (std::size_t j = 0; j < mid.size(); ++j)
        midc[j] = Complex{mid[j], 0.0};
      ++report.checks;
      if (regular_converges_at(f, midc).verdict ==
          ConvergenceVerdict::diverges)
        ++report.violations;
    }
    // solidity: any w with |w| <= |z| inherits convergence
    cvec w(a.size());
    for (std::size_t j = 0; j < a.size(); ++j)
      w[j] = std::polar(a[j] * rng.uniform01(), rng.uniform(0.0, 6.2831853));
    ++report.solidity_checks;
    if (regular_converges_at(f, w).verdict == ConvergenceVerdict::diverges)
      ++report.solidity_violations;
  }
  return report;
}

CoherencePair coherence_demo() {
  // f(z) = 1/(1-z). About 0 the coefficients are 1; about z0 = i/2 they are
  // a_m = 1/(1 - i/2)^(m+1). Both modulus series are evaluated at i/2.
  const Complex z0{0.0, 0.5};
  CoherencePair out;

  Complex sum{};
  Complex pw{1.0, 0.0};
  for (int m = 0; m < 10000; ++m) {
    const Complex term = pw;  // |1| * (i/2)^m
    sum += term;
    if (std::abs(term) < 1e-15 && m > 0) break;
    pw *= z0;
  }
  out.at_origin_expansion = sum;

  const Complex base = 1.0 / (Complex{1.0, 0.0} - z0);
  double coeff = std::abs(base);  // |a_0|
  Complex sum2{};
  Complex diffpw{1.0, 0.0};       // (z - z0)^m at z = z0
  for (int m = 0; m < 10000; ++m) {
    const Complex term = coeff * diffpw;
    sum2 += term;
    if (std::abs(term) < 1e-15) break;
    coeff *= std::abs(base);
    diffpw *= (z0 - z0);
  }
  out.at_center_expansion = sum2;
  return out;
}

PowerSeries geometric_full_series(const SpaceSpec& space, int truncation) {
  PowerSeries f(space, truncation);
  for (int m = 0; m <= truncation; ++m) {
    auto basis = enumerate_multiindices(space.dim(), m);
    std::vector<Term> ts;
    ts.reserve(basis.size());
    for (auto& a : basis) ts.push_back({std::move(a), Complex{1.0, 0.0}});
    f.set_term(HomogeneousPolynomial::from_terms(space, m, std::move(ts)));
  }
  return f;
}

}  // namespace latpoly
