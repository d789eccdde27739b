#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "latpoly/space.hpp"

namespace latpoly {

/// Exponent vector of a monomial z^alpha. Canonical order between indices of
/// equal length is graded lexicographic: lower total degree first, then
/// lexicographically descending exponents, which makes (2,0) precede (1,1)
/// precede (0,2).
class MultiIndex {
public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> exponents);

  int size() const { return static_cast<int>(e_.size()); }
  int operator[](int j) const { return e_[static_cast<std::size_t>(j)]; }
  const std::vector<int>& exponents() const { return e_; }

  int degree() const;
  /// Number of variables with nonzero exponent.
  int support_size() const;

  /// True when a comes before b in canonical order.
  static bool canonical_before(const MultiIndex& a, const MultiIndex& b);

  bool operator==(const MultiIndex& o) const { return e_ == o.e_; }
  bool operator!=(const MultiIndex& o) const { return e_ != o.e_; }

private:
  std::vector<int> e_;
};

/// All alpha with |alpha| = m over n variables, in canonical order. The count
/// C(m+n-1, n-1) is checked against `cap` before any allocation.
std::vector<MultiIndex> enumerate_multiindices(int n, int m,
                                               std::size_t cap = 1000000);

/// C(m+n-1, n-1) clamped to cap+1 when it overflows the cap.
std::size_t multiindex_count(int n, int m, std::size_t cap = 1000000);

struct Term {
  MultiIndex alpha;
  Complex coeff;
};

/// Scratch buffers for repeated evaluations of one polynomial; hot loops
/// construct it once and reuse it across iterations.
struct EvalWorkspace {
  std::vector<Complex> powers;       // concatenated per-variable power tables
  std::vector<double> rpowers;       // same for real nonnegative evaluation
  std::vector<Complex> prefix;
  std::vector<Complex> suffix;
};

/// Degree-m homogeneous polynomial as a sparse monomial coefficient map in
/// canonical graded-lex order with exact-zero coefficients purged. Immutable
/// after construction.
class HomogeneousPolynomial {
public:
  /// Builds from terms; duplicate keys are rejected. Every |alpha| must equal
  /// `degree` and every alpha length must equal space.dim().
  static HomogeneousPolynomial from_terms(const SpaceSpec& space, int degree,
                                          std::vector<Term> terms);
  /// Same but duplicate keys are summed (used by symbolic constructions).
  static HomogeneousPolynomial accumulate(const SpaceSpec& space, int degree,
                                          std::vector<Term> terms);
  static HomogeneousPolynomial zero(const SpaceSpec& space, int degree);
  static HomogeneousPolynomial monomial(const SpaceSpec& space,
                                        MultiIndex alpha, Complex coeff);

  const SpaceSpec& space() const { return space_; }
  int degree() const { return degree_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }

  /// Sum of c_alpha * z^alpha in canonical term order.
  Complex evaluate(const cvec& z) const;
  Complex evaluate(const cvec& z, EvalWorkspace& ws) const;
  /// Evaluation together with the holomorphic gradient dP/dz_j.
  Complex evaluate_gradient(const cvec& z, std::vector<Complex>& grad,
                            EvalWorkspace& ws) const;
  /// Fast path for real-coefficient polynomials at nonnegative points.
  /// Requires all coefficients real (callers pass modulus polynomials).
  double evaluate_nonneg(const rvec& x, EvalWorkspace& ws) const;
  double evaluate_nonneg_gradient(const rvec& x, rvec& grad,
                                  EvalWorkspace& ws) const;

  /// |P|: same keys, coefficients replaced by |c_alpha|.
  HomogeneousPolynomial modulus() const;

  /// Coefficientwise decomposition P = P0 + i*P1 into real polynomials.
  std::pair<HomogeneousPolynomial, HomogeneousPolynomial> real_imag_parts()
      const;

  bool has_real_coefficients() const;
  bool has_nonnegative_coefficients() const;

  /// True iff every monomial involves at most one variable, i.e.
  /// P(z) = sum_k c_k z_k^m.
  bool is_orthogonally_additive() const;

  /// Largest exponent appearing for any single variable.
  int max_exponent() const { return max_exp_; }

private:
  HomogeneousPolynomial(const SpaceSpec& space, int degree,
                        std::vector<Term> terms);
  void pack();

  SpaceSpec space_;
  int degree_;
  std::vector<Term> terms_;

  // Packed form for evaluation: per-term coefficient plus (variable,
  // exponent) pairs for the active variables only.
  struct Packed {
    Complex c;
    std::uint32_t begin;
    std::uint32_t count;
  };
  std::vector<Packed> packed_;
  std::vector<std::int32_t> active_var_;
  std::vector<std::int32_t> active_exp_;
  std::vector<std::int32_t> pow_offset_;  // per variable, into power tables
  std::vector<std::int32_t> pow_extent_;  // max exponent + 1 per variable
  int pow_total_ = 0;
  int max_exp_ = 0;
  int max_active_ = 0;

  void fill_power_tables(const cvec& z, EvalWorkspace& ws) const;
  void fill_power_tables(const rvec& x, EvalWorkspace& ws) const;
};

/// The complexification of a real-coefficient polynomial. Monomial data is
/// unchanged; complex evaluation realizes the canonical extension. Throws if
/// any coefficient has a nonzero imaginary part (exact check).
HomogeneousPolynomial complexify(const HomogeneousPolynomial& P);

/// Taylor coefficient polynomial of order k at the anchor:
/// y -> (1/k!) d^k P(a)(y), a k-homogeneous polynomial in canonical order.
HomogeneousPolynomial derivative_poly(const HomogeneousPolynomial& P, int k,
                                      const cvec& anchor);

/// Record of a Frechet derivative request (base, order, anchor).
struct DerivativePolynomial {
  HomogeneousPolynomial base;
  int order;
  cvec anchor;

  static DerivativePolynomial make(HomogeneousPolynomial base, int order,
                                   cvec anchor);
  /// The Taylor-normalized derivative polynomial.
  HomogeneousPolynomial polynomial() const {
    return derivative_poly(base, order, anchor);
  }
};

/// a*P + b*Q for equal space and degree (coefficientwise).
HomogeneousPolynomial linear_combination(Complex a,
                                         const HomogeneousPolynomial& P,
                                         Complex b,
                                         const HomogeneousPolynomial& Q);

}  // namespace latpoly
