#include <cmath>

#include "doctest.h"
#include "latpoly/rng.hpp"
#include "latpoly/space.hpp"

using namespace latpoly;

namespace {
const double kSqrt2 = std::sqrt(2.0);
}

TEST_CASE("modulus_point coordinatewise magnitudes") {
  const cvec z1 = {{3.0, 4.0}, {0.0, 0.0}};
  const rvec m1 = modulus_point(z1);
  CHECK(m1[0] == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(m1[1] == 0.0);

  const cvec z2 = {{1.0, 0.0}, {0.0, 1.0}};
  const rvec m2 = modulus_point(z2);
  CHECK(m2[0] == doctest::Approx(1.0));
  CHECK(m2[1] == doctest::Approx(1.0));

  const cvec z3 = {{1.0, 1.0}, {2.0, -2.0}};
  const rvec m3 = modulus_point(z3);
  CHECK(m3[0] == doctest::Approx(kSqrt2).epsilon(1e-15));
  CHECK(m3[1] == doctest::Approx(2.0 * kSqrt2).epsilon(1e-15));
}

TEST_CASE("modulus agrees with the theta-grid supremum form") {
  // |z_j| = sup_theta (x_j cos t + y_j sin t), checked on a 1e4-point grid.
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Complex z{rng.gaussian(), rng.gaussian()};
    double sup = 0.0;
    const int grid = 10000;
    for (int i = 0; i < grid; ++i) {
      const double t = 2.0 * M_PI * static_cast<double>(i) / grid;
      sup = std::max(sup, z.real() * std::cos(t) + z.imag() * std::sin(t));
    }
    CHECK(std::abs(std::abs(z) - sup) < 1e-7 * std::max(1.0, std::abs(z)));
  }
}

TEST_CASE("modulus absolute homogeneity and triangle inequality") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng.uniform_index(5));
    cvec z(n), w(n);
    for (auto& v : z) v = {rng.gaussian(), rng.gaussian()};
    for (auto& v : w) v = {rng.gaussian(), rng.gaussian()};
    const Complex lambda{rng.gaussian(), rng.gaussian()};
    cvec lz(n), zw(n);
    for (int j = 0; j < n; ++j) {
      lz[j] = lambda * z[j];
      zw[j] = z[j] + w[j];
    }
    const rvec mz = modulus_point(z);
    const rvec mw = modulus_point(w);
    const rvec mlz = modulus_point(lz);
    const rvec mzw = modulus_point(zw);
    for (int j = 0; j < n; ++j) {
      CHECK(mlz[j] ==
            doctest::Approx(std::abs(lambda) * mz[j]).epsilon(1e-12));
      CHECK(mzw[j] <= mz[j] + mw[j] + 1e-12);
    }
  }
}

TEST_CASE("p_norm on l_1, l_2, l_inf") {
  CHECK(p_norm(SpaceSpec::lp(2, 1.0), {{0.5, 0.0}, {0.0, 0.5}}) ==
        doctest::Approx(1.0));
  CHECK(p_norm(SpaceSpec::lp(2, 2.0), {{3.0, 0.0}, {0.0, 4.0}}) ==
        doctest::Approx(5.0));
  CHECK(p_norm(SpaceSpec::linf(2), {{1.0, 1.0}, {0.0, 0.0}}) ==
        doctest::Approx(kSqrt2));
  CHECK_THROWS_AS(p_norm(SpaceSpec::lp(3, 2.0), {{1.0, 0.0}}),
                  std::invalid_argument);
}

TEST_CASE("p_norm depends only on the modulus") {
  Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng.uniform_index(4));
    const double p = 1.0 + 3.0 * rng.uniform01();
    cvec z(n);
    for (auto& v : z) v = {rng.gaussian(), rng.gaussian()};
    const rvec m = modulus_point(z);
    cvec zabs(n);
    for (int j = 0; j < n; ++j) zabs[j] = {m[j], 0.0};
    const SpaceSpec s = SpaceSpec::lp(n, p);
    CHECK(p_norm(s, z) == doctest::Approx(p_norm(s, zabs)).epsilon(1e-13));
  }
}

TEST_CASE("disjoint supports") {
  CHECK(disjoint({{1, 0}, {0, 0}}, {{0, 0}, {0, 1}}));
  CHECK_FALSE(disjoint({{1, 0}, {1, 0}}, {{0, 0}, {1, 0}}));
  CHECK(disjoint({{1, 1}, {0, 0}}, {{0, 0}, {2, -1}}));
}

TEST_CASE("log_interpolate") {
  const rvec a = log_interpolate({4, 1}, {1, 4}, 0.5);
  CHECK(a[0] == doctest::Approx(2.0));
  CHECK(a[1] == doctest::Approx(2.0));

  const rvec b = log_interpolate({2, 3}, {2, 3}, 0.37);
  CHECK(b[0] == doctest::Approx(2.0));
  CHECK(b[1] == doctest::Approx(3.0));

  const rvec c = log_interpolate({1, 0}, {1, 1}, 0.5);
  CHECK(c[0] == doctest::Approx(1.0));
  CHECK(c[1] == 0.0);

  CHECK_THROWS_AS(log_interpolate({1}, {1}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(log_interpolate({1}, {1}, 1.0), std::invalid_argument);
}

TEST_CASE("log_interpolate bounded by coordinatewise max") {
  Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng.uniform_index(5));
    rvec x(n), y(n);
    for (auto& v : x) v = std::abs(rng.gaussian());
    for (auto& v : y) v = std::abs(rng.gaussian());
    const double theta = rng.uniform(0.01, 0.99);
    const rvec g = log_interpolate(x, y, theta);
    for (int j = 0; j < n; ++j)
      CHECK(g[j] <= std::max(x[j], y[j]) * (1.0 + 1e-12));
  }
}

TEST_CASE("polydisc membership") {
  const Polydisc d1 = Polydisc::make({{0, 0}, {0, 0}}, {1.0, 1.0});
  CHECK(polydisc_contains(d1, {{1, 0}, {0, 1}}));       // boundary included
  CHECK_FALSE(polydisc_contains(d1, {{1.01, 0}, {0, 0}}));
  const Polydisc d2 = Polydisc::make({{1, 0}, {0, 0}}, {0.0, 0.0});
  CHECK(polydisc_contains(d2, {{1, 0}, {0, 0}}));       // degenerate polydisc
  CHECK_THROWS_AS(Polydisc::make({{0, 0}}, {-0.5}), std::invalid_argument);
}

TEST_CASE("SpaceSpec validation") {
  CHECK_THROWS_AS(SpaceSpec::lp(0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(SpaceSpec::lp(2, 0.5), std::invalid_argument);
  CHECK(SpaceSpec::linf(3).is_inf());
  CHECK(SpaceSpec::lp(3, 1.5).p() == 1.5);
}
