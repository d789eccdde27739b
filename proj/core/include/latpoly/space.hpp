#pragma once

#include <complex>
#include <vector>

namespace latpoly {

using Complex = std::complex<double>;
using cvec = std::vector<Complex>;
using rvec = std::vector<double>;

/// A finite-dimensional complex Banach lattice l_p^n. The exponent is an
/// extended real: p = infinity is carried as an explicit flag so that norm
/// code branches once and never touches floating-point infinities.
class SpaceSpec {
public:
  static SpaceSpec lp(int dim, double p);
  static SpaceSpec linf(int dim);

  int dim() const { return dim_; }
  bool is_inf() const { return inf_; }
  /// Only meaningful when !is_inf().
  double p() const { return p_; }

  bool operator==(const SpaceSpec& o) const {
    return dim_ == o.dim_ && inf_ == o.inf_ && (inf_ || p_ == o.p_);
  }
  bool operator!=(const SpaceSpec& o) const { return !(*this == o); }

private:
  SpaceSpec(int dim, double p, bool inf) : dim_(dim), p_(p), inf_(inf) {}
  int dim_;
  double p_;
  bool inf_;
};

/// Coordinatewise Krivine modulus |z| = (sqrt(x_j^2 + y_j^2))_j.
rvec modulus_point(const cvec& z);

/// Lattice norm ||z|| = || |z| ||_p on the given space.
double p_norm(const SpaceSpec& space, const cvec& z);
/// Same for an already-nonnegative real vector.
double p_norm_nonneg(const SpaceSpec& space, const rvec& x);

/// True iff min(|z_j|, |w_j|) <= tol for every coordinate, i.e. the lattice
/// infimum |z| ^ |w| vanishes up to floating-point tolerance.
bool disjoint(const cvec& z, const cvec& w, double tol = 1e-12);

/// Coordinatewise weighted geometric mean (x_j^theta * y_j^(1-theta))_j for
/// theta strictly inside (0, 1). Zero entries absorb: 0^t = 0 for t > 0.
rvec log_interpolate(const rvec& x, const rvec& y, double theta);

/// Polydisc D(w, a) = { z : |z_j - w_j| <= a_j }.
struct Polydisc {
  cvec center;
  rvec polyradius;  // entries >= 0

  static Polydisc make(cvec center, rvec polyradius);
};

bool polydisc_contains(const Polydisc& d, const cvec& z);

}  // namespace latpoly
