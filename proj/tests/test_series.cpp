#include <cmath>

#include "doctest.h"
#include "latpoly/series.hpp"
#include "test_support.hpp"

using namespace latpoly;
namespace ts = latpoly::testsupport;

namespace {
OptimizerConfig quick_cfg() {
  OptimizerConfig cfg;
  cfg.starts = 24;
  cfg.seed = 314;
  return cfg;
}
}  // namespace

TEST_CASE("radii of the one-variable geometric series") {
  const SpaceSpec s = SpaceSpec::lp(1, 2.0);
  PowerSeries f(s, 20);
  for (int m = 0; m <= 20; ++m)
    f.set_term(HomogeneousPolynomial::monomial(s, MultiIndex({m}), 1.0));
  const auto rep = radii(f, quick_cfg());
  CHECK(rep.r == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(rep.r_reg == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(rep.window_lo == 10);
  CHECK(rep.window_hi == 20);
  CHECK(rep.r_reg <= rep.r + 1e-6);
}

TEST_CASE("radii of sum 2^m z1^m are 1/2") {
  const SpaceSpec s = SpaceSpec::lp(2, 1.0);
  PowerSeries f(s, 16);
  for (int m = 1; m <= 16; ++m)
    f.set_term(HomogeneousPolynomial::monomial(s, MultiIndex({m, 0}),
                                               std::pow(2.0, m)));
  const auto rep = radii(f, quick_cfg());
  CHECK(rep.r == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(rep.r_reg == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("radii of the zero series are flagged infinite") {
  PowerSeries f(SpaceSpec::lp(2, 2.0), 12);
  const auto rep = radii(f, quick_cfg());
  CHECK(rep.all_zero);
  CHECK(std::isinf(rep.r));
  CHECK(std::isinf(rep.r_reg));

  PowerSeries g(SpaceSpec::lp(2, 2.0), 5);
  CHECK_THROWS_AS(radii(g, quick_cfg()), std::invalid_argument);
}

TEST_CASE("regular convergence of the full geometric series") {
  const SpaceSpec s = SpaceSpec::lp(2, 1.0);
  const PowerSeries f = geometric_full_series(s, 60);

  const cvec half = {{0.5, 0.0}, {0.0, -0.5}};  // moduli (1/2, 1/2)
  const auto rep = regular_converges_at(f, half);
  CHECK(rep.verdict == ConvergenceVerdict::converges);
  CHECK(rep.partial_sums.back() == doctest::Approx(4.0).epsilon(1e-6));

  const cvec edge = {{1.0, 0.0}, {0.5, 0.0}};
  CHECK(regular_converges_at(f, edge).verdict ==
        ConvergenceVerdict::diverges);

  PowerSeries zero(s, 20);
  CHECK(regular_converges_at(zero, half).verdict ==
        ConvergenceVerdict::converges);
}

TEST_CASE("closed form of the geometric series at uniform modulus") {
  for (int n = 1; n <= 3; ++n) {
    const PowerSeries f = geometric_full_series(SpaceSpec::lp(n, 1.0), 60);
    cvec z(static_cast<std::size_t>(n), Complex{0.5, 0.0});
    const auto rep = regular_converges_at(f, z);
    CHECK(rep.verdict == ConvergenceVerdict::converges);
    CHECK(rep.partial_sums.back() ==
          doctest::Approx(std::pow(2.0, n)).epsilon(1e-6));
  }
}

TEST_CASE("polydisc domination of partial sums") {
  const SpaceSpec s = SpaceSpec::lp(2, 1.0);
  const PowerSeries f = geometric_full_series(s, 40);
  Rng rng(2718);
  for (int trial = 0; trial < 20; ++trial) {
    cvec z(2);
    for (auto& v : z)
      v = std::polar(rng.uniform(0.0, 0.8), rng.uniform(0.0, 6.28));
    const auto at_z = regular_converges_at(f, z);
    if (at_z.verdict != ConvergenceVerdict::converges) continue;
    const double lambda = rng.uniform(0.1, 0.9);
    cvec w(2);
    for (int j = 0; j < 2; ++j) w[static_cast<std::size_t>(j)] = lambda * z[static_cast<std::size_t>(j)];
    const auto at_w = regular_converges_at(f, w);
    CHECK(at_w.verdict == ConvergenceVerdict::converges);
    // termwise increments dominated by lambda^m scaling
    for (std::size_t m = 1; m < at_w.partial_sums.size(); ++m) {
      const double iw = at_w.partial_sums[m] - at_w.partial_sums[m - 1];
      const double iz = at_z.partial_sums[m] - at_z.partial_sums[m - 1];
      CHECK(iw <= std::pow(lambda, static_cast<double>(m)) * iz * (1 + 1e-9) +
                      1e-12);
    }
  }
}

TEST_CASE("log-convexity probe finds no violations") {
  const PowerSeries f = geometric_full_series(SpaceSpec::lp(2, 1.0), 40);
  const auto rep = log_convexity_probe(f, 10, 97);
  CHECK(rep.pairs_tested > 0);
  CHECK(rep.violations == 0);
  CHECK(rep.solidity_violations == 0);
}

TEST_CASE("log-convexity interpolant converges for the known pair") {
  const PowerSeries f = geometric_full_series(SpaceSpec::lp(2, 1.0), 40);
  const cvec z = {{0.8, 0.0}, {0.2, 0.0}};
  const cvec w = {{0.2, 0.0}, {0.8, 0.0}};
  REQUIRE(regular_converges_at(f, z).verdict ==
          ConvergenceVerdict::converges);
  const rvec mid = log_interpolate(modulus_point(z), modulus_point(w), 0.5);
  CHECK(mid[0] == doctest::Approx(0.4));
  CHECK(mid[1] == doctest::Approx(0.4));
  cvec midc = {{mid[0], 0.0}, {mid[1], 0.0}};
  CHECK(regular_converges_at(f, midc).verdict ==
        ConvergenceVerdict::converges);
}

TEST_CASE("r_reg never exceeds r on random series") {
  Rng rng(1123);
  OptimizerConfig cfg = quick_cfg();
  for (int trial = 0; trial < 5; ++trial) {
    const SpaceSpec s = SpaceSpec::lp(2, trial % 2 == 0 ? 1.0 : 2.0);
    PowerSeries f(s, 12);
    for (int m = 1; m <= 12; ++m)
      f.set_term(ts::random_poly(s, m, rng, 0.8));
    const auto rep = radii(f, cfg);
    CHECK(rep.r_reg <= rep.r + 1e-6);
  }
}

TEST_CASE("coherence demonstration values") {
  const auto pair = coherence_demo();
  CHECK(std::abs(pair.at_origin_expansion - Complex{0.8, 0.4}) < 1e-12);
  CHECK(std::abs(pair.at_center_expansion -
                 Complex{2.0 / std::sqrt(5.0), 0.0}) < 1e-12);
  CHECK(std::abs(pair.at_origin_expansion - pair.at_center_expansion) >
        0.1);
}
