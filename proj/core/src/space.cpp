#include "latpoly/space.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace latpoly {

SpaceSpec SpaceSpec::lp(int dim, double p) {
  if (dim < 1) throw std::invalid_argument("SpaceSpec: dim must be >= 1");
  if (!(p >= 1.0) || std::isinf(p))
    throw std::invalid_argument("SpaceSpec: p must be a finite real >= 1");
  return SpaceSpec(dim, p, false);
}

SpaceSpec SpaceSpec::linf(int dim) {
  if (dim < 1) throw std::invalid_argument("SpaceSpec: dim must be >= 1");
  return SpaceSpec(dim, 0.0, true);
}

rvec modulus_point(const cvec& z) {
  rvec out(z.size());
  for (std::size_t j = 0; j < z.size(); ++j) out[j] = std::abs(z[j]);
  return out;
}

double p_norm_nonneg(const SpaceSpec& space, const rvec& x) {
  if (static_cast<int>(x.size()) != space.dim())
    throw std::invalid_argument("p_norm: vector length does not match dim");
  if (space.is_inf()) {
    double m = 0.0;
    for (double v : x) m = std::max(m, v);
    return m;
  }
  const double p = space.p();
  if (p == 1.0) {
    double s = 0.0;
    for (double v : x) s += v;
    return s;
  }
  if (p == 2.0) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return std::sqrt(s);
  }
  double s = 0.0;
  for (double v : x) s += std::pow(v, p);
  return std::pow(s, 1.0 / p);
}

double p_norm(const SpaceSpec& space, const cvec& z) {
  return p_norm_nonneg(space, modulus_point(z));
}

bool disjoint(const cvec& z, const cvec& w, double tol) {
  if (z.size() != w.size())
    throw std::invalid_argument("disjoint: vector lengths differ");
  for (std::size_t j = 0; j < z.size(); ++j) {
    if (std::min(std::abs(z[j]), std::abs(w[j])) > tol) return false;
  }
  return true;
}

rvec log_interpolate(const rvec& x, const rvec& y, double theta) {
  if (x.size() != y.size())
    throw std::invalid_argument("log_interpolate: vector lengths differ");
  if (!(theta > 0.0 && theta < 1.0))
    throw std::invalid_argument("log_interpolate: theta must lie in (0, 1)");
  rvec out(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double a = x[j];
    const double b = y[j];
    if (a < 0.0 || b < 0.0)
      throw std::invalid_argument("log_interpolate: inputs must be >= 0");
    if (a == 0.0 || b == 0.0) {
      out[j] = 0.0;  // 0^t = 0 for t > 0; theta in (0,1) keeps both exponents positive
    } else {
      out[j] = std::pow(a, theta) * std::pow(b, 1.0 - theta);
    }
  }
  return out;
}

Polydisc Polydisc::make(cvec center, rvec polyradius) {
  if (center.size() != polyradius.size())
    throw std::invalid_argument("Polydisc: center/polyradius lengths differ");
  for (double a : polyradius)
    if (a < 0.0)
      throw std::invalid_argument("Polydisc: polyradius entries must be >= 0");
  return Polydisc{std::move(center), std::move(polyradius)};
}

bool polydisc_contains(const Polydisc& d, const cvec& z) {
  if (z.size() != d.center.size())
    throw std::invalid_argument("polydisc_contains: dimension mismatch");
  for (std::size_t j = 0; j < z.size(); ++j) {
    if (std::abs(z[j] - d.center[j]) > d.polyradius[j]) return false;
  }
  return true;
}

}  // namespace latpoly
