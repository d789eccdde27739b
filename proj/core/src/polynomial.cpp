#include "latpoly/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace latpoly {

namespace {

double binomial(int n, int k) {
  static constexpr int kMax = 70;
  static const auto table = [] {
    std::vector<double> t(kMax * kMax, 0.0);
    for (int i = 0; i < kMax; ++i) {
      t[static_cast<std::size_t>(i * kMax)] = 1.0;
      for (int j = 1; j <= i; ++j)
        t[static_cast<std::size_t>(i * kMax + j)] =
            t[static_cast<std::size_t>((i - 1) * kMax + j - 1)] +
            (j < i ? t[static_cast<std::size_t>((i - 1) * kMax + j)] : 0.0);
    }
    return t;
  }();
  if (k < 0 || k > n) return 0.0;
  if (n >= kMax) throw std::invalid_argument("binomial: degree too large");
  return table[static_cast<std::size_t>(n * kMax + k)];
}

}  // namespace

MultiIndex::MultiIndex(std::vector<int> exponents) : e_(std::move(exponents)) {
  for (int v : e_)
    if (v < 0)
      throw std::invalid_argument("MultiIndex: exponents must be >= 0");
}

int MultiIndex::degree() const {
  int d = 0;
  for (int v : e_) d += v;
  return d;
}

int MultiIndex::support_size() const {
  int s = 0;
  for (int v : e_) s += (v != 0);
  return s;
}

bool MultiIndex::canonical_before(const MultiIndex& a, const MultiIndex& b) {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da < db;
  return a.e_ > b.e_;  // lexicographically descending within a grade
}

std::size_t multiindex_count(int n, int m, std::size_t cap) {
  if (n < 1 || m < 0)
    throw std::invalid_argument("multiindex_count: need n >= 1, m >= 0");
  // C(m+n-1, n-1) with incremental overflow clamp.
  long double c = 1.0L;
  for (int i = 1; i <= n - 1; ++i) {
    c = c * static_cast<long double>(m + i) / static_cast<long double>(i);
    if (c > static_cast<long double>(cap) * 2.0L)
      return cap + 1;
  }
  const auto rounded = static_cast<std::size_t>(c + 0.5L);
  return rounded;
}

namespace {
void gen_indices(int vars_left, int deg_left, std::vector<int>& prefix,
                 std::vector<MultiIndex>& out) {
  if (vars_left == 1) {
    prefix.push_back(deg_left);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int e = deg_left; e >= 0; --e) {
    prefix.push_back(e);
    gen_indices(vars_left - 1, deg_left - e, prefix, out);
    prefix.pop_back();
  }
}
}  // namespace

std::vector<MultiIndex> enumerate_multiindices(int n, int m, std::size_t cap) {
  const std::size_t count = multiindex_count(n, m, cap);
  if (count > cap)
    throw std::overflow_error("enumerate_multiindices: count " +
                              std::to_string(count) + " exceeds cap " +
                              std::to_string(cap));
  std::vector<MultiIndex> out;
  out.reserve(count);
  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(n));
  gen_indices(n, m, prefix, out);
  return out;
}

HomogeneousPolynomial::HomogeneousPolynomial(const SpaceSpec& space,
                                             int degree,
                                             std::vector<Term> terms)
    : space_(space), degree_(degree), terms_(std::move(terms)) {
  pack();
}

HomogeneousPolynomial HomogeneousPolynomial::from_terms(
    const SpaceSpec& space, int degree, std::vector<Term> terms) {
  if (degree < 0)
    throw std::invalid_argument("polynomial: degree must be >= 0");
  for (const Term& t : terms) {
    if (t.alpha.size() != space.dim())
      throw std::invalid_argument(
          "polynomial: multi-index length does not match space dimension");
    if (t.alpha.degree() != degree)
      throw std::invalid_argument("polynomial: term with |alpha| != degree");
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return MultiIndex::canonical_before(a.alpha, b.alpha);
  });
  for (std::size_t i = 1; i < terms.size(); ++i)
    if (terms[i].alpha == terms[i - 1].alpha)
      throw std::invalid_argument("polynomial: duplicate monomial key");
  std::erase_if(terms, [](const Term& t) { return t.coeff == Complex{}; });
  return HomogeneousPolynomial(space, degree, std::move(terms));
}

HomogeneousPolynomial HomogeneousPolynomial::accumulate(
    const SpaceSpec& space, int degree, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return MultiIndex::canonical_before(a.alpha, b.alpha);
  });
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (Term& t : terms) {
    if (!merged.empty() && merged.back().alpha == t.alpha)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(std::move(t));
  }
  return from_terms(space, degree, std::move(merged));
}

HomogeneousPolynomial HomogeneousPolynomial::zero(const SpaceSpec& space,
                                                  int degree) {
  return from_terms(space, degree, {});
}

HomogeneousPolynomial HomogeneousPolynomial::monomial(const SpaceSpec& space,
                                                      MultiIndex alpha,
                                                      Complex coeff) {
  const int degree = alpha.degree();
  std::vector<Term> terms;
  terms.push_back({std::move(alpha), coeff});
  return from_terms(space, degree, std::move(terms));
}

void HomogeneousPolynomial::pack() {
  const int n = space_.dim();
  pow_extent_.assign(static_cast<std::size_t>(n), 0);
  max_exp_ = 0;
  max_active_ = 0;
  for (const Term& t : terms_) {
    for (int j = 0; j < n; ++j) {
      const int e = t.alpha[j];
      if (e > 0) {
        pow_extent_[static_cast<std::size_t>(j)] =
            std::max(pow_extent_[static_cast<std::size_t>(j)], e + 1);
        max_exp_ = std::max(max_exp_, e);
      }
    }
    max_active_ = std::max(max_active_, t.alpha.support_size());
  }
  pow_offset_.assign(static_cast<std::size_t>(n), 0);
  int off = 0;
  for (int j = 0; j < n; ++j) {
    pow_offset_[static_cast<std::size_t>(j)] = off;
    off += pow_extent_[static_cast<std::size_t>(j)];
  }
  pow_total_ = off;

  packed_.clear();
  active_var_.clear();
  active_exp_.clear();
  packed_.reserve(terms_.size());
  for (const Term& t : terms_) {
    Packed p;
    p.c = t.coeff;
    p.begin = static_cast<std::uint32_t>(active_var_.size());
    int count = 0;
    for (int j = 0; j < n; ++j) {
      if (t.alpha[j] > 0) {
        active_var_.push_back(j);
        active_exp_.push_back(t.alpha[j]);
        ++count;
      }
    }
    p.count = static_cast<std::uint32_t>(count);
    packed_.push_back(p);
  }
}

void HomogeneousPolynomial::fill_power_tables(const cvec& z,
                                              EvalWorkspace& ws) const {
  ws.powers.resize(static_cast<std::size_t>(pow_total_));
  const int n = space_.dim();
  for (int j = 0; j < n; ++j) {
    const int ext = pow_extent_[static_cast<std::size_t>(j)];
    if (ext == 0) continue;
    Complex* t = ws.powers.data() + pow_offset_[static_cast<std::size_t>(j)];
    t[0] = Complex{1.0, 0.0};
    for (int e = 1; e < ext; ++e) t[e] = t[e - 1] * z[static_cast<std::size_t>(j)];
  }
}

void HomogeneousPolynomial::fill_power_tables(const rvec& x,
                                              EvalWorkspace& ws) const {
  ws.rpowers.resize(static_cast<std::size_t>(pow_total_));
  const int n = space_.dim();
  for (int j = 0; j < n; ++j) {
    const int ext = pow_extent_[static_cast<std::size_t>(j)];
    if (ext == 0) continue;
    double* t = ws.rpowers.data() + pow_offset_[static_cast<std::size_t>(j)];
    t[0] = 1.0;
    for (int e = 1; e < ext; ++e) t[e] = t[e - 1] * x[static_cast<std::size_t>(j)];
  }
}

Complex HomogeneousPolynomial::evaluate(const cvec& z) const {
  EvalWorkspace ws;
  return evaluate(z, ws);
}

Complex HomogeneousPolynomial::evaluate(const cvec& z,
                                        EvalWorkspace& ws) const {
  if (static_cast<int>(z.size()) != space_.dim())
    throw std::invalid_argument("evaluate: dimension mismatch");
  if (terms_.empty()) return Complex{};
  fill_power_tables(z, ws);
  Complex sum{};
  for (const Packed& p : packed_) {
    Complex prod = p.c;
    for (std::uint32_t i = 0; i < p.count; ++i) {
      const int v = active_var_[p.begin + i];
      const int e = active_exp_[p.begin + i];
      prod *= ws.powers[static_cast<std::size_t>(
          pow_offset_[static_cast<std::size_t>(v)] + e)];
    }
    sum += prod;
  }
  return sum;
}

Complex HomogeneousPolynomial::evaluate_gradient(const cvec& z,
                                                 std::vector<Complex>& grad,
                                                 EvalWorkspace& ws) const {
  if (static_cast<int>(z.size()) != space_.dim())
    throw std::invalid_argument("evaluate_gradient: dimension mismatch");
  grad.assign(z.size(), Complex{});
  if (terms_.empty()) return Complex{};
  fill_power_tables(z, ws);
  ws.prefix.resize(static_cast<std::size_t>(max_active_) + 1);
  ws.suffix.resize(static_cast<std::size_t>(max_active_) + 1);
  Complex sum{};
  for (const Packed& p : packed_) {
    const int s = static_cast<int>(p.count);
    ws.prefix[0] = Complex{1.0, 0.0};
    for (int i = 0; i < s; ++i) {
      const int v = active_var_[p.begin + static_cast<std::uint32_t>(i)];
      const int e = active_exp_[p.begin + static_cast<std::uint32_t>(i)];
      ws.prefix[static_cast<std::size_t>(i) + 1] =
          ws.prefix[static_cast<std::size_t>(i)] *
          ws.powers[static_cast<std::size_t>(
              pow_offset_[static_cast<std::size_t>(v)] + e)];
    }
    ws.suffix[static_cast<std::size_t>(s)] = Complex{1.0, 0.0};
    for (int i = s - 1; i >= 0; --i) {
      const int v = active_var_[p.begin + static_cast<std::uint32_t>(i)];
      const int e = active_exp_[p.begin + static_cast<std::uint32_t>(i)];
      ws.suffix[static_cast<std::size_t>(i)] =
          ws.powers[static_cast<std::size_t>(
              pow_offset_[static_cast<std::size_t>(v)] + e)] *
          ws.suffix[static_cast<std::size_t>(i) + 1];
    }
    sum += p.c * ws.prefix[static_cast<std::size_t>(s)];
    for (int i = 0; i < s; ++i) {
      const int v = active_var_[p.begin + static_cast<std::uint32_t>(i)];
      const int e = active_exp_[p.begin + static_cast<std::uint32_t>(i)];
      const Complex rest = ws.prefix[static_cast<std::size_t>(i)] *
                           ws.suffix[static_cast<std::size_t>(i) + 1];
      grad[static_cast<std::size_t>(v)] +=
          p.c * rest * static_cast<double>(e) *
          ws.powers[static_cast<std::size_t>(
              pow_offset_[static_cast<std::size_t>(v)] + e - 1)];
    }
  }
  return sum;
}

double HomogeneousPolynomial::evaluate_nonneg(const rvec& x,
                                              EvalWorkspace& ws) const {
  if (static_cast<int>(x.size()) != space_.dim())
    throw std::invalid_argument("evaluate_nonneg: dimension mismatch");
  if (terms_.empty()) return 0.0;
  fill_power_tables(x, ws);
  double sum = 0.0;
  for (const Packed& p : packed_) {
    double prod = p.c.real();
    for (std::uint32_t i = 0; i < p.count; ++i) {
      const int v = active_var_[p.begin + i];
      const int e = active_exp_[p.begin + i];
      prod *= ws.rpowers[static_cast<std::size_t>(
          pow_offset_[static_cast<std::size_t>(v)] + e)];
    }
    sum += prod;
  }
  return sum;
}

double HomogeneousPolynomial::evaluate_nonneg_gradient(const rvec& x,
                                                       rvec& grad,
                                                       EvalWorkspace& ws) const {
  if (static_cast<int>(x.size()) != space_.dim())
    throw std::invalid_argument("evaluate_nonneg_gradient: dimension mismatch");
  grad.assign(x.size(), 0.0);
  if (terms_.empty()) return 0.0;
  fill_power_tables(x, ws);
  double sum = 0.0;
  for (const Packed& p : packed_) {
    const int s = static_cast<int>(p.count);
    // prefix/suffix over the active factors, in doubles
    double pre[64];
    double suf[64];
    pre[0] = 1.0;
    for (int i = 0; i < s; ++i) {
      const int v = active_var_[p.begin + static_cast<std::uint32_t>(i)];
      const int e = active_exp_[p.begin + static_cast<std::uint32_t>(i)];
      pre[i + 1] = pre[i] * ws.rpowers[static_cast<std::size_t>(
                                pow_offset_[static_cast<std::size_t>(v)] + e)];
    }
    suf[s] = 1.0;
    for (int i = s - 1; i >= 0; --i) {
      const int v = active_var_[p.begin + static_cast<std::uint32_t>(i)];
      const int e = active_exp_[p.begin + static_cast<std::uint32_t>(i)];
      suf[i] = ws.rpowers[static_cast<std::size_t>(
                   pow_offset_[static_cast<std::size_t>(v)] + e)] *
               suf[i + 1];
    }
    const double c = p.c.real();
    sum += c * pre[s];
    for (int i = 0; i < s; ++i) {
      const int v = active_var_[p.begin + static_cast<std::uint32_t>(i)];
      const int e = active_exp_[p.begin + static_cast<std::uint32_t>(i)];
      grad[static_cast<std::size_t>(v)] +=
          c * pre[i] * suf[i + 1] * static_cast<double>(e) *
          ws.rpowers[static_cast<std::size_t>(
              pow_offset_[static_cast<std::size_t>(v)] + e - 1)];
    }
  }
  return sum;
}

HomogeneousPolynomial HomogeneousPolynomial::modulus() const {
  std::vector<Term> ts = terms_;
  for (Term& t : ts) t.coeff = Complex{std::abs(t.coeff), 0.0};
  return HomogeneousPolynomial(space_, degree_, std::move(ts));
}

std::pair<HomogeneousPolynomial, HomogeneousPolynomial>
HomogeneousPolynomial::real_imag_parts() const {
  std::vector<Term> re;
  std::vector<Term> im;
  re.reserve(terms_.size());
  im.reserve(terms_.size());
  for (const Term& t : terms_) {
    if (t.coeff.real() != 0.0) re.push_back({t.alpha, {t.coeff.real(), 0.0}});
    if (t.coeff.imag() != 0.0) im.push_back({t.alpha, {t.coeff.imag(), 0.0}});
  }
  return {HomogeneousPolynomial(space_, degree_, std::move(re)),
          HomogeneousPolynomial(space_, degree_, std::move(im))};
}

bool HomogeneousPolynomial::has_real_coefficients() const {
  for (const Term& t : terms_)
    if (t.coeff.imag() != 0.0) return false;
  return true;
}

bool HomogeneousPolynomial::has_nonnegative_coefficients() const {
  for (const Term& t : terms_)
    if (t.coeff.imag() != 0.0 || t.coeff.real() < 0.0) return false;
  return true;
}

bool HomogeneousPolynomial::is_orthogonally_additive() const {
  for (const Term& t : terms_)
    if (t.alpha.support_size() > 1) return false;
  return true;
}

HomogeneousPolynomial complexify(const HomogeneousPolynomial& P) {
  if (!P.has_real_coefficients())
    throw std::invalid_argument("complexify: nonreal coefficient present");
  return P;
}

namespace {
void distribute_order(const std::vector<int>& alpha_active_exp,
                      const std::vector<int>& alpha_active_var, int pos,
                      int k_left, std::vector<int>& beta_active,
                      const std::vector<Complex>& anchor_pows_flat,
                      const std::vector<int>& anchor_offsets, Complex factor,
                      Complex coeff, int n, std::vector<Term>& out) {
  const int s = static_cast<int>(alpha_active_exp.size());
  if (pos == s) {
    if (k_left != 0) return;
    std::vector<int> beta(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < s; ++i)
      beta[static_cast<std::size_t>(alpha_active_var[static_cast<std::size_t>(
          i)])] = beta_active[static_cast<std::size_t>(i)];
    out.push_back({MultiIndex(std::move(beta)), coeff * factor});
    return;
  }
  const int aj = alpha_active_exp[static_cast<std::size_t>(pos)];
  // remaining capacity bound prunes infeasible branches
  int capacity_rest = 0;
  for (int i = pos + 1; i < s; ++i)
    capacity_rest += alpha_active_exp[static_cast<std::size_t>(i)];
  const int lo = std::max(0, k_left - capacity_rest);
  const int hi = std::min(aj, k_left);
  for (int b = lo; b <= hi; ++b) {
    beta_active[static_cast<std::size_t>(pos)] = b;
    const Complex apow =
        anchor_pows_flat[static_cast<std::size_t>(
            anchor_offsets[static_cast<std::size_t>(pos)] + (aj - b))];
    distribute_order(alpha_active_exp, alpha_active_var, pos + 1, k_left - b,
                     beta_active, anchor_pows_flat, anchor_offsets,
                     factor * binomial(aj, b) * apow, coeff, n, out);
  }
  beta_active[static_cast<std::size_t>(pos)] = 0;
}
}  // namespace

HomogeneousPolynomial derivative_poly(const HomogeneousPolynomial& P, int k,
                                      const cvec& anchor) {
  const int m = P.degree();
  if (k < 0 || k > m)
    throw std::out_of_range("derivative_poly: order k outside [0, degree]");
  if (static_cast<int>(anchor.size()) != P.space().dim())
    throw std::invalid_argument("derivative_poly: anchor dimension mismatch");
  const int n = P.space().dim();
  std::vector<Term> out;
  for (const Term& t : P.terms()) {
    std::vector<int> av;
    std::vector<int> ae;
    for (int j = 0; j < n; ++j) {
      if (t.alpha[j] > 0) {
        av.push_back(j);
        ae.push_back(t.alpha[j]);
      }
    }
    // anchor powers a_j^0..a_j^{alpha_j} per active variable
    std::vector<Complex> apows;
    std::vector<int> aoff(av.size(), 0);
    for (std::size_t i = 0; i < av.size(); ++i) {
      aoff[i] = static_cast<int>(apows.size());
      Complex p{1.0, 0.0};
      for (int e = 0; e <= ae[i]; ++e) {
        apows.push_back(p);
        p *= anchor[static_cast<std::size_t>(av[i])];
      }
    }
    std::vector<int> beta_active(av.size(), 0);
    distribute_order(ae, av, 0, k, beta_active, apows, aoff, Complex{1.0, 0.0},
                     t.coeff, n, out);
  }
  return HomogeneousPolynomial::accumulate(P.space(), k, std::move(out));
}

DerivativePolynomial DerivativePolynomial::make(HomogeneousPolynomial base,
                                                int order, cvec anchor) {
  if (order < 0 || order > base.degree())
    throw std::out_of_range("DerivativePolynomial: order outside [0, degree]");
  if (static_cast<int>(anchor.size()) != base.space().dim())
    throw std::invalid_argument("DerivativePolynomial: anchor mismatch");
  return DerivativePolynomial{std::move(base), order, std::move(anchor)};
}

HomogeneousPolynomial linear_combination(Complex a,
                                         const HomogeneousPolynomial& P,
                                         Complex b,
                                         const HomogeneousPolynomial& Q) {
  if (P.space() != Q.space() || P.degree() != Q.degree())
    throw std::invalid_argument(
        "linear_combination: space or degree mismatch");
  std::vector<Term> ts;
  ts.reserve(P.terms().size() + Q.terms().size());
  for (const Term& t : P.terms()) ts.push_back({t.alpha, a * t.coeff});
  for (const Term& t : Q.terms()) ts.push_back({t.alpha, b * t.coeff});
  return HomogeneousPolynomial::accumulate(P.space(), P.degree(),
                                           std::move(ts));
}

}  // namespace latpoly
