#pragma once

// Internal builders for structured extremal candidates: quadratic blocks with
// a large regular-to-sup norm gap, their tensor products across disjoint
// variable blocks, and the Choi-Kim-Ki unit-sphere family. The sup norm is
// multiplicative across disjoint blocks up to a shared split factor that
// cancels in regular/sup ratios, so tensoring multiplies the ratios exactly.

#include <algorithm>
#include <cmath>
#include <vector>

#include "latpoly/polynomial.hpp"

namespace latpoly::detail {

/// Product of polynomials supported on pairwise disjoint variable sets of a
/// common ambient space.
inline HomogeneousPolynomial tensor_disjoint(
    const SpaceSpec& ambient, const std::vector<HomogeneousPolynomial>& blocks) {
  int degree = 0;
  for (const auto& b : blocks) degree += b.degree();
  std::vector<Term> acc{{MultiIndex(std::vector<int>(
                             static_cast<std::size_t>(ambient.dim()), 0)),
                         Complex{1.0, 0.0}}};
  for (const auto& b : blocks) {
    std::vector<Term> next;
    next.reserve(acc.size() * b.terms().size());
    for (const Term& s : acc) {
      for (const Term& t : b.terms()) {
        std::vector<int> e = s.alpha.exponents();
        for (int j = 0; j < ambient.dim(); ++j) e[static_cast<std::size_t>(j)] += t.alpha[j];
        next.push_back({MultiIndex(std::move(e)), s.coeff * t.coeff});
      }
    }
    acc = std::move(next);
  }
  return HomogeneousPolynomial::accumulate(ambient, degree, std::move(acc));
}

/// 2 sum z_j^2 - (sum z_j)^2 on `nv` variables starting at `offset`.
/// Diagonalizes to (2 - nv) w_1^2 + 2 (w_2^2 + ... ) in rotated coordinates,
/// so on l_2 the sup norm is max(nv - 2, 2) while the regular norm is nv.
inline HomogeneousPolynomial quadric_block(const SpaceSpec& ambient,
                                           int offset, int nv) {
  std::vector<Term> ts;
  const int n = ambient.dim();
  for (int i = 0; i < nv; ++i) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(offset + i)] = 2;
    ts.push_back({MultiIndex(std::move(e)), Complex{1.0, 0.0}});
    for (int j = i + 1; j < nv; ++j) {
      std::vector<int> f(static_cast<std::size_t>(n), 0);
      f[static_cast<std::size_t>(offset + i)] = 1;
      f[static_cast<std::size_t>(offset + j)] = 1;
      ts.push_back({MultiIndex(std::move(f)), Complex{-2.0, 0.0}});
    }
  }
  return HomogeneousPolynomial::from_terms(ambient, 2, std::move(ts));
}

/// Symmetric Paley conference matrix of order q + 1 for a prime
/// q = 1 (mod 4); eigenvalues are +-sqrt(q).
inline std::vector<std::vector<int>> conference_matrix(int q) {
  std::vector<int> chi(static_cast<std::size_t>(q), -1);
  chi[0] = 0;
  for (int x = 1; x < q; ++x)
    chi[static_cast<std::size_t>((x * x) % q)] = 1;
  const int n = q + 1;
  std::vector<std::vector<int>> c(static_cast<std::size_t>(n),
                                  std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int j = 1; j < n; ++j) {
    c[0][static_cast<std::size_t>(j)] = 1;
    c[static_cast<std::size_t>(j)][0] = 1;
  }
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j)
      if (i != j)
        c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            chi[static_cast<std::size_t>(((i - j) % q + q) % q)];
  return c;
}

/// sum_{i<j} C_ij z_i z_j for the order-(q+1) conference matrix; on l_2 the
/// sup norm is sqrt(q)/... precisely: sup |z^T C z|/2 = sqrt(q)/2 against a
/// regular norm of q/2, a ratio of sqrt(q).
inline HomogeneousPolynomial conference_block(const SpaceSpec& ambient,
                                              int offset, int q) {
  const auto c = conference_matrix(q);
  const int nv = q + 1;
  const int n = ambient.dim();
  std::vector<Term> ts;
  for (int i = 0; i < nv; ++i) {
    for (int j = i + 1; j < nv; ++j) {
      if (c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == 0)
        continue;
      std::vector<int> e(static_cast<std::size_t>(n), 0);
      e[static_cast<std::size_t>(offset + i)] = 1;
      e[static_cast<std::size_t>(offset + j)] = 1;
      ts.push_back({MultiIndex(std::move(e)),
                    Complex{static_cast<double>(
                                c[static_cast<std::size_t>(i)]
                                 [static_cast<std::size_t>(j)]),
                            0.0}});
    }
  }
  return HomogeneousPolynomial::from_terms(ambient, 2, std::move(ts));
}

/// (1/2)x^2 - (1/2)y^2 + (2 + sqrt 3)xy placed at `offset`; the classical
/// unit-sup-norm polynomial on l_1^2 with regular norm (3 + sqrt 3)/4.
inline HomogeneousPolynomial ckk_extremal_block(const SpaceSpec& ambient,
                                                int offset) {
  const int n = ambient.dim();
  auto mono = [&](int i, int j) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] += 1;
    e[static_cast<std::size_t>(j)] += 1;
    return MultiIndex(std::move(e));
  };
  return HomogeneousPolynomial::from_terms(
      ambient, 2,
      {{mono(offset, offset), {0.5, 0.0}},
       {mono(offset + 1, offset + 1), {-0.5, 0.0}},
       {mono(offset, offset + 1), {2.0 + std::sqrt(3.0), 0.0}}});
}

inline HomogeneousPolynomial linear_block(const SpaceSpec& ambient,
                                          int offset) {
  std::vector<int> e(static_cast<std::size_t>(ambient.dim()), 0);
  e[static_cast<std::size_t>(offset)] = 1;
  return HomogeneousPolynomial::monomial(ambient, MultiIndex(std::move(e)),
                                         Complex{1.0, 0.0});
}

struct BlockKind {
  int vars;
  int degree;
  double l2_ratio;  // exact on l_2, a ranking heuristic elsewhere
  double l1_ratio;  // same role for p near 1
  HomogeneousPolynomial (*build)(const SpaceSpec&, int);
};

inline const std::vector<BlockKind>& block_library() {
  static const std::vector<BlockKind> lib = {
      {3, 2, 1.5, 1.0,
       [](const SpaceSpec& s, int o) { return quadric_block(s, o, 3); }},
      {4, 2, 2.0, 1.0,
       [](const SpaceSpec& s, int o) { return quadric_block(s, o, 4); }},
      {6, 2, std::sqrt(5.0), 1.0,
       [](const SpaceSpec& s, int o) { return conference_block(s, o, 5); }},
      {14, 2, std::sqrt(13.0), 1.0,
       [](const SpaceSpec& s, int o) { return conference_block(s, o, 13); }},
      {2, 2, 1.05, (3.0 + std::sqrt(3.0)) / 4.0,
       [](const SpaceSpec& s, int o) { return ckk_extremal_block(s, o); }},
  };
  return lib;
}

/// Deterministic structured candidates for the degree-m ratio search on the
/// given space: tensor combinations of gap blocks padded with linear factors,
/// ranked by their heuristic ratio, plus the plain monomial (exact ratio 1).
inline std::vector<HomogeneousPolynomial> structured_candidates(
    const SpaceSpec& space, int m, std::size_t max_candidates = 12,
    std::size_t max_terms = 20000) {
  const int n = space.dim();
  std::vector<HomogeneousPolynomial> out;
  {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[0] = m;
    out.push_back(HomogeneousPolynomial::monomial(space, MultiIndex(std::move(e)),
                                                  Complex{1.0, 0.0}));
  }
  const auto& lib = block_library();
  const bool near_l1 = !space.is_inf() && space.p() < 1.5;

  struct Combo {
    std::vector<int> counts;
    double proxy;
    double terms;
    int vars;
  };
  std::vector<Combo> combos;
  std::vector<int> counts(lib.size(), 0);

  auto consider = [&](auto&& self, std::size_t k, int deg2, int vars,
                      double proxy, double terms) -> void {
    if (2 * deg2 > m || vars > n) return;
    if (k == lib.size()) {
      const int fill = m - 2 * deg2;
      if (vars + fill > n) return;
      if (deg2 == 0) return;
      combos.push_back({counts, proxy, terms, vars + fill});
      return;
    }
    for (int c = 0; c <= m / 2; ++c) {
      counts[k] = c;
      const double ratio = near_l1 ? lib[k].l1_ratio : lib[k].l2_ratio;
      const double pr = proxy * std::pow(ratio, c);
      const double tm =
          terms *
          std::pow(static_cast<double>(std::max<std::size_t>(
                       1, static_cast<std::size_t>(
                              lib[k].vars * (lib[k].vars + 1) / 2))),
                   c);
      const int vr = vars + c * lib[k].vars;
      const int dg = deg2 + c;
      if (2 * dg > m || vr > n || tm > static_cast<double>(max_terms)) break;
      self(self, k + 1, dg, vr, pr, tm);
    }
    counts[k] = 0;
  };
  consider(consider, 0, 0, 0, 1.0, 1.0);
  // also the zero-blocks case was skipped above; pure monomial already added

  std::sort(combos.begin(), combos.end(),
            [](const Combo& a, const Combo& b) { return a.proxy > b.proxy; });
  if (combos.size() > max_candidates) combos.resize(max_candidates);

  for (const Combo& combo : combos) {
    std::vector<HomogeneousPolynomial> blocks;
    int offset = 0;
    int deg = 0;
    for (std::size_t k = 0; k < lib.size(); ++k) {
      for (int c = 0; c < combo.counts[k]; ++c) {
        blocks.push_back(lib[k].build(space, offset));
        offset += lib[k].vars;
        deg += lib[k].degree;
      }
    }
    for (; deg < m; ++deg) {
      blocks.push_back(linear_block(space, offset));
      offset += 1;
    }
    out.push_back(tensor_disjoint(space, blocks));
  }
  return out;
}

}  // namespace latpoly::detail
