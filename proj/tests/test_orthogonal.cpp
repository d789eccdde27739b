#include <cmath>

#include "doctest.h"
#include "latpoly/orthogonal.hpp"
#include "test_support.hpp"

using namespace latpoly;
namespace ts = latpoly::testsupport;

namespace {
OptimizerConfig quick_cfg() {
  OptimizerConfig cfg;
  cfg.starts = 24;
  cfg.seed = 66;
  return cfg;
}

DiagonalPolynomial random_diagonal(Rng& rng, int n, int m, double p) {
  cvec diag(static_cast<std::size_t>(n));
  for (auto& c : diag) c = Complex{rng.gaussian(), rng.gaussian()};
  const SpaceSpec space =
      p == 0.0 ? SpaceSpec::linf(n) : SpaceSpec::lp(n, p);
  return DiagonalPolynomial::make(space, m, std::move(diag));
}
}  // namespace

TEST_CASE("diagonal conversion round trip") {
  const auto d = DiagonalPolynomial::make(SpaceSpec::lp(3, 2.0), 3,
                                          {{1, 0}, {0, 0}, {0, -2}});
  const auto P = d.to_polynomial();
  CHECK(P.term_count() == 2);
  CHECK(P.is_orthogonally_additive());
  const auto back = DiagonalPolynomial::from_polynomial(P);
  CHECK(back.diag[0] == Complex{1, 0});
  CHECK(back.diag[1] == Complex{0, 0});
  CHECK(back.diag[2] == Complex{0, -2});

  const auto mixed = HomogeneousPolynomial::monomial(
      SpaceSpec::lp(2, 2.0), MultiIndex({1, 1}), 1.0);
  CHECK_THROWS_AS(DiagonalPolynomial::from_polynomial(mixed),
                  std::invalid_argument);
}

TEST_CASE("norms agree for z1^2 - z2^2 on l_inf^2") {
  const auto d = DiagonalPolynomial::make(SpaceSpec::linf(2), 2,
                                          {{1, 0}, {-1, 0}});
  const auto pair = oa_norm_pair(d, quick_cfg());
  CHECK(pair.sup.value == doctest::Approx(2.0).epsilon(1e-8));
  CHECK(pair.reg.value == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("monomial and positive diagonal cases") {
  const auto mono = DiagonalPolynomial::make(SpaceSpec::lp(2, 2.0), 4,
                                             {{1, 0}, {0, 0}});
  const auto mp = oa_norm_pair(mono, quick_cfg());
  CHECK(mp.sup.value == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(mp.reg.value == doctest::Approx(1.0).epsilon(1e-8));

  const auto pos = DiagonalPolynomial::make(SpaceSpec::lp(3, 1.0), 2,
                                            {{1, 0}, {2, 0}, {0.5, 0}});
  const auto pp = oa_norm_pair(pos, quick_cfg());
  CHECK(pp.sup.value == doctest::Approx(pp.reg.value).epsilon(1e-10));
}

TEST_CASE("phase rotation witness is exact") {
  Rng rng(404);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng.uniform_index(6));
    const int m = 1 + static_cast<int>(rng.uniform_index(6));
    const double p = trial % 3 == 0 ? 1.0 : (trial % 3 == 1 ? 2.0 : 0.0);
    const auto d = random_diagonal(rng, n, m, p);
    const auto poly = d.to_polynomial();
    const rvec x = ts::random_nonneg(n, rng);
    const cvec z = phase_rotation_witness(d, x);
    cvec xc(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) xc[j] = Complex{x[j], 0.0};
    const double lhs = std::abs(poly.evaluate(z));
    const double rhs = poly.modulus().evaluate(xc).real();
    CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, rhs));
  }
}

TEST_CASE("regular and sup norms coincide on random diagonals") {
  Rng rng(505);
  OptimizerConfig cfg = quick_cfg();
  cfg.starts = 16;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng.uniform_index(6));
    const int m = 1 + static_cast<int>(rng.uniform_index(6));
    const double p = trial % 3 == 0 ? 1.0 : (trial % 3 == 1 ? 2.0 : 0.0);
    const auto d = random_diagonal(rng, n, m, p);
    const auto pair = oa_norm_pair(d, cfg);
    CHECK(std::abs(pair.sup.value - pair.reg.value) <=
          1e-6 * std::max(1e-12, pair.reg.value));
  }
}

TEST_CASE("orthogonal additivity over disjoint supports") {
  Rng rng(606);
  EvalWorkspace ws;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng.uniform_index(5));
    const int m = 1 + static_cast<int>(rng.uniform_index(5));
    const auto d = random_diagonal(rng, n, m, 2.0);
    const auto poly = d.to_polynomial();
    const int cut = 1 + static_cast<int>(rng.uniform_index(
                            static_cast<std::uint64_t>(n - 1)));
    cvec z(static_cast<std::size_t>(n), Complex{});
    cvec w(static_cast<std::size_t>(n), Complex{});
    for (int j = 0; j < n; ++j) {
      const Complex v{rng.gaussian(), rng.gaussian()};
      (j < cut ? z : w)[static_cast<std::size_t>(j)] = v;
    }
    REQUIRE(disjoint(z, w));
    cvec zw(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
      zw[static_cast<std::size_t>(j)] = z[static_cast<std::size_t>(j)] +
                                        w[static_cast<std::size_t>(j)];
    const Complex lhs = poly.evaluate(zw, ws);
    const Complex rhs = poly.evaluate(z, ws) + poly.evaluate(w, ws);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("real and imaginary parts of diagonals stay diagonal") {
  Rng rng(707);
  for (int trial = 0; trial < 50; ++trial) {
    const auto d = random_diagonal(rng, 4, 3, 2.0);
    const auto [re, im] = d.to_polynomial().real_imag_parts();
    CHECK(re.is_orthogonally_additive());
    CHECK(im.is_orthogonally_additive());
  }
}

TEST_CASE("real even-degree sharpness family") {
  CHECK(oa_real_ratio(2) == 2.0);
  CHECK(oa_real_ratio(4) == 2.0);
  CHECK(oa_real_ratio(6) == 2.0);
  CHECK_THROWS_AS(oa_real_ratio(3), std::invalid_argument);
  CHECK_THROWS_AS(oa_real_ratio(1), std::invalid_argument);
}

TEST_CASE("diagonal series radius equality") {
  const SpaceSpec s = SpaceSpec::linf(2);
  std::vector<DiagonalPolynomial> series;
  for (int m = 1; m <= 12; ++m)
    series.push_back(
        DiagonalPolynomial::make(s, m, {{1, 0}, {-1, 0}}));
  const auto rep = oa_series_radius_check(series, quick_cfg());
  CHECK(rep.r == doctest::Approx(rep.r_reg).epsilon(1e-6));

  std::vector<DiagonalPolynomial> geo;
  const SpaceSpec s2 = SpaceSpec::lp(2, 1.0);
  for (int m = 1; m <= 10; ++m)
    geo.push_back(DiagonalPolynomial::make(
        s2, m, {{std::pow(2.0, m), 0}, {0, 0}}));
  const auto rep2 = oa_series_radius_check(geo, quick_cfg());
  CHECK(rep2.r == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(rep2.r_reg == doctest::Approx(0.5).epsilon(1e-9));

  std::vector<DiagonalPolynomial> uni;
  const SpaceSpec s3 = SpaceSpec::lp(1, 2.0);
  for (int m = 1; m <= 10; ++m) {
    const Complex im_pow = std::pow(Complex{0.0, 1.0}, m);
    uni.push_back(DiagonalPolynomial::make(s3, m, {im_pow}));
  }
  const auto rep3 = oa_series_radius_check(uni, quick_cfg());
  CHECK(rep3.r == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(rep3.r_reg == doctest::Approx(1.0).epsilon(1e-9));

  // degrees must strictly increase
  std::vector<DiagonalPolynomial> bad = {
      DiagonalPolynomial::make(s2, 3, {{1, 0}, {0, 0}}),
      DiagonalPolynomial::make(s2, 3, {{1, 0}, {0, 0}})};
  CHECK_THROWS_AS(oa_series_radius_check(bad, quick_cfg()),
                  std::invalid_argument);
}
