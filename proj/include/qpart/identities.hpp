#pragma once

// Builders and verifiers for the q-series side: the four-letter key identity,
// its three- and two-letter reductions, the double-bounded polynomial
// identities, the quadruple product, and the mod-15 dilation.
//
// Every left-hand side is a sum over the constraint fiber of a target
// (i, j, k, l) of a summand
//
//   q^E * brace / prod_x (q)_{f_x},
//
// evaluated exactly up to the requested q-degree.

#include <algorithm>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "qpart/classical.hpp"
#include "qpart/colored.hpp"
#include "qpart/parallel.hpp"
#include "qpart/report.hpp"
#include "qpart/series.hpp"

namespace qpart {

/// Memoized 1/(q)_n truncated at a given degree. Not thread-safe; use one per
/// worker.
class InversePochhammerCache {
 public:
  const Series& get(int n, int truncation) {
    auto key = std::make_pair(n, truncation);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, invert(pochhammer(1, n, truncation))).first;
    return it->second;
  }

  /// 1 / prod (q)_{n_x} for all listed n_x.
  Series product(std::span<const int> ns, int truncation) {
    Series r = Series::one(truncation);
    for (int n : ns)
      if (n > 0) r = mul(r, get(n, truncation));
    return r;
  }

 private:
  std::map<std::pair<int, int>, Series> cache_;
};

namespace detail {

inline std::string target_label(const MarkerExponents& t, int letters) {
  static constexpr std::string_view kNames[] = {"(i)", "(i,j)", "(i,j,k)", "(i,j,k,l)"};
  std::string s = std::string(kNames[letters - 1]) + "=(";
  for (int x = 0; x < letters; ++x) s += (x ? "," : "") + std::to_string(t[x]);
  return s + ")";
}

// Brace polynomial given as (degree, sign) terms, truncated.
inline Series signed_terms(std::initializer_list<std::pair<int, int>> terms, int truncation) {
  Series s(truncation);
  for (auto [d, sign] : terms) s.add_term(d, {}, sign);
  return s;
}

// q^exponent * brace / prod (q)_{ns}, truncated at `truncation`.
inline Series fraction_summand(std::int64_t exponent, std::initializer_list<std::pair<int, int>> brace,
                               std::span<const int> ns, int truncation, InversePochhammerCache& cache) {
  if (exponent < 0) throw DomainError("summand exponent is negative");
  if (exponent > truncation) return Series(truncation);
  const int budget = truncation - static_cast<int>(exponent);
  Series body = mul(cache.product(ns, budget), signed_terms(brace, budget));
  return shift_degree(body, static_cast<int>(exponent), truncation);
}

inline VerificationReport compare_series_cells(std::string name, const std::vector<MarkerExponents>& targets,
                                               unsigned jobs, int letters,
                                               const std::function<std::pair<Series, Series>(const MarkerExponents&)>& sides) {
  VerificationReport report(std::move(name));
  auto outcomes = parallel_map(targets.size(), jobs, [&](std::size_t idx) {
    auto [lhs, rhs] = sides(targets[idx]);
    return first_difference(lhs, rhs, target_label(targets[idx], letters));
  });
  for (auto& o : outcomes) {
    ++report.cells_checked;
    if (o) report.fail(*o);
  }
  return report;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Four-letter key identity

/// q^{T_i+T_j+T_k+T_l} / ((q)_i (q)_j (q)_k (q)_l).
inline Series rhs_quadruple(const MarkerExponents& target, int truncation, InversePochhammerCache& cache) {
  const std::int64_t e = triangular(target.i) + triangular(target.j) + triangular(target.k) + triangular(target.l);
  const int ns[] = {target.i, target.j, target.k, target.l};
  return detail::fraction_summand(e, {{0, 1}}, ns, truncation, cache);
}

inline Series rhs_quadruple(const MarkerExponents& target, int truncation) {
  InversePochhammerCache cache;
  return rhs_quadruple(target, truncation, cache);
}

/// Switches for deliberately corrupted variants, used to show the checks
/// are sensitive to each term.
struct KeyIdentityOptions {
  bool subtract_linear_secondary = true;  // the -bc-bd-cd correction
};

/// Exponent T_tau + sum T_sec - bc - bd - cd + 4 T_{Q-1} + 3Q + 2 Q tau.
inline std::int64_t key_identity_exponent(const FreqVector& f, const KeyIdentityOptions& opt = {}) {
  const std::int64_t tau = f.tau();
  std::int64_t e = triangular(tau);
  for (int sec : {f.ab(), f.ac(), f.ad(), f.bc(), f.bd(), f.cd()}) e += triangular(sec);
  if (opt.subtract_linear_secondary) e -= f.bc() + f.bd() + f.cd();
  e += 4 * triangular(f.Q() - 1) + 3 * f.Q() + 2 * f.Q() * tau;
  return e;
}

/// One fiber cell of the key identity's left-hand side.
inline Series key_identity_summand(const FreqVector& f, int truncation, InversePochhammerCache& cache,
                                   const KeyIdentityOptions& opt = {}) {
  const int a = f.a(), b = f.b();
  const int e1 = a + f.bc() + f.bd() + f.Q();
  // (1 - q^a) + q^{e1} (1 - q^b) + q^{e1 + b + cd}
  return detail::fraction_summand(key_identity_exponent(f, opt),
                                  {{0, 1}, {a, -1}, {e1, 1}, {e1 + b, -1}, {e1 + b + f.cd(), 1}},
                                  f.counts(), truncation, cache);
}

inline Series lhs_key_identity(const MarkerExponents& target, int truncation, InversePochhammerCache& cache,
                               const KeyIdentityOptions& opt = {}) {
  Series sum(truncation);
  for_each_fiber_cell(target, [&](const FreqVector& f) {
    if (key_identity_exponent(f, opt) <= truncation) sum = add(sum, key_identity_summand(f, truncation, cache, opt));
  });
  return sum;
}

inline Series lhs_key_identity(const MarkerExponents& target, int truncation, const KeyIdentityOptions& opt = {}) {
  InversePochhammerCache cache;
  return lhs_key_identity(target, truncation, cache, opt);
}

inline VerificationReport verify_key_identity(const MarkerExponents& ijkl_max, int truncation, unsigned jobs = 1,
                                              const KeyIdentityOptions& opt = {}) {
  return detail::compare_series_cells("key26", detail::marker_box(ijkl_max), jobs, 4, [&](const MarkerExponents& t) {
    InversePochhammerCache cache;
    return std::make_pair(lhs_key_identity(t, truncation, cache, opt), rhs_quadruple(t, truncation, cache));
  });
}

// ---------------------------------------------------------------------------
// Three-letter reduction

/// Exponent T_tau + T_ab + T_ac + T_{bc-1} for a three-letter cell.
inline std::int64_t goellnitz_exponent(const FreqVector& f) {
  return triangular(f.tau()) + triangular(f.ab()) + triangular(f.ac()) + triangular(f.bc() - 1);
}

namespace detail {
inline void require_three_letter(const FreqVector& f) {
  if (f.d() || f.ad() || f.bd() || f.cd() || f.Q()) throw DomainError("three-letter cell has D-bearing frequencies");
}
inline void require_two_letter(const FreqVector& f) {
  require_three_letter(f);
  if (f.c() || f.ac() || f.bc()) throw DomainError("two-letter cell has C-bearing frequencies");
}
}  // namespace detail

inline Series goellnitz_summand(const FreqVector& f, int truncation, InversePochhammerCache& cache) {
  detail::require_three_letter(f);
  const int a = f.a();
  // 1 - q^a + q^{a + bc}
  return detail::fraction_summand(goellnitz_exponent(f), {{0, 1}, {a, -1}, {a + f.bc(), 1}}, f.counts(), truncation,
                                  cache);
}

inline Series lhs_goellnitz(int i, int j, int k, int truncation, InversePochhammerCache& cache) {
  Series sum(truncation);
  for_each_fiber_cell(MarkerExponents{i, j, k, 0}, [&](const FreqVector& f) {
    if (goellnitz_exponent(f) <= truncation) sum = add(sum, goellnitz_summand(f, truncation, cache));
  });
  return sum;
}

inline Series lhs_goellnitz(int i, int j, int k, int truncation) {
  InversePochhammerCache cache;
  return lhs_goellnitz(i, j, k, truncation, cache);
}

inline VerificationReport verify_goellnitz_identity(int ijk_max, int truncation, unsigned jobs = 1) {
  return detail::compare_series_cells("goellnitz32", detail::marker_box({ijk_max, ijk_max, ijk_max, 0}), jobs, 3,
                                      [&](const MarkerExponents& t) {
                                        InversePochhammerCache cache;
                                        return std::make_pair(lhs_goellnitz(t.i, t.j, t.k, truncation, cache),
                                                              rhs_quadruple(t, truncation, cache));
                                      });
}

// ---------------------------------------------------------------------------
// Two-letter reduction

inline std::int64_t schur_exponent(const FreqVector& f) {
  return triangular(f.a() + f.b() + f.ab()) + triangular(f.ab());
}

inline Series schur_summand(const FreqVector& f, int truncation, InversePochhammerCache& cache) {
  detail::require_two_letter(f);
  return detail::fraction_summand(schur_exponent(f), {{0, 1}}, f.counts(), truncation, cache);
}

inline Series lhs_schur(int i, int j, int truncation, InversePochhammerCache& cache) {
  Series sum(truncation);
  for_each_fiber_cell(MarkerExponents{i, j, 0, 0}, [&](const FreqVector& f) {
    if (schur_exponent(f) <= truncation) sum = add(sum, schur_summand(f, truncation, cache));
  });
  return sum;
}

inline Series lhs_schur(int i, int j, int truncation) {
  InversePochhammerCache cache;
  return lhs_schur(i, j, truncation, cache);
}

inline VerificationReport verify_schur_identity(int ij_max, int truncation, unsigned jobs = 1) {
  return detail::compare_series_cells("schur33", detail::marker_box({ij_max, ij_max, 0, 0}), jobs, 2,
                                      [&](const MarkerExponents& t) {
                                        InversePochhammerCache cache;
                                        return std::make_pair(lhs_schur(t.i, t.j, truncation, cache),
                                                              rhs_quadruple(t, truncation, cache));
                                      });
}

/// Term-wise reductions: each three-letter cell equals the four-letter cell
/// with d = ad = bd = cd = Q = 0 (exponent and full summand), and each
/// three-letter cell with c = ac = bc = 0 equals the two-letter cell.
inline VerificationReport reduction_check(int ijk_max, int truncation) {
  VerificationReport report("reduction");
  InversePochhammerCache cache;
  for (const auto& t : detail::marker_box({ijk_max, ijk_max, ijk_max, 0})) {
    for_each_fiber_cell(t, [&](const FreqVector& f) {
      const std::string cell = detail::target_label(t, 3) + " f=" + f.to_string();
      ++report.cells_checked;
      if (key_identity_exponent(f) != goellnitz_exponent(f))
        report.fail({cell + " exponent", 0, {}, std::to_string(key_identity_exponent(f)),
                     std::to_string(goellnitz_exponent(f))});
      if (auto ce = first_difference(key_identity_summand(f, truncation, cache), goellnitz_summand(f, truncation, cache),
                                     cell + " 4->3"))
        report.fail(*ce);
      if (t.k == 0) {
        ++report.cells_checked;
        if (goellnitz_exponent(f) != schur_exponent(f))
          report.fail({cell + " exponent", 0, {}, std::to_string(goellnitz_exponent(f)),
                       std::to_string(schur_exponent(f))});
        if (auto ce = first_difference(goellnitz_summand(f, truncation, cache), schur_summand(f, truncation, cache),
                                       cell + " 3->2"))
          report.fail(*ce);
      }
    });
  }
  return report;
}

// ---------------------------------------------------------------------------
// Double-bounded polynomial identities

/// Thread-safe memo of Gaussian binomials [top choose bottom].
class GaussianBinomialCache {
 public:
  const Polynomial& get(int top, int bottom) {
    if (bottom < 0) return zero_;
    std::lock_guard lock(mutex_);
    auto key = std::make_pair(top, bottom);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, gaussian_binomial<CheckedInt>(top, bottom)).first;
    return it->second;  // map nodes are stable
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<int, int>, Polynomial> cache_;
  Polynomial zero_;
};

struct BoundParams {
  int L = 0;
  int M = 0;

  BoundParams(int l, int m) : L(l), M(m) {
    if (l < 0 || m < 0) throw DomainError("BoundParams: L and M must be nonnegative");
  }
};

using PolynomialPair = std::pair<Polynomial, Polynomial>;

namespace detail {
inline Polynomial product_of(std::initializer_list<const Polynomial*> factors, Polynomial acc) {
  for (const Polynomial* f : factors) {
    if (acc.is_zero()) break;
    acc = acc * *f;
  }
  return acc;
}
}  // namespace detail

/// Both sides of the double-bounded two-letter identity:
///   sum_k q^{T_{i+j-k}+T_k} [M-i-j+k, k] [M-j, i-k] [L-i, j-k]
///     = [L, j] [M-j, i] q^{T_i+T_j}.
inline PolynomialPair bounded_schur(const BoundParams& bp, int i, int j, GaussianBinomialCache& bin) {
  const int L = bp.L, M = bp.M;
  Polynomial lhs;
  for (int k = 0; k <= std::min(i, j); ++k) {
    lhs += detail::product_of({&bin.get(M - i - j + k, k), &bin.get(M - j, i - k), &bin.get(L - i, j - k)},
                              Polynomial::monomial(static_cast<int>(triangular(i + j - k) + triangular(k))));
  }
  Polynomial rhs = detail::product_of({&bin.get(L, j), &bin.get(M - j, i)},
                                      Polynomial::monomial(static_cast<int>(triangular(i) + triangular(j))));
  return {lhs, rhs};
}

inline PolynomialPair bounded_schur(const BoundParams& bp, int i, int j) {
  GaussianBinomialCache bin;
  return bounded_schur(bp, i, j, bin);
}

/// Left-hand side of the double-bounded three-letter identity alone.
inline Polynomial bounded_goellnitz_lhs(const BoundParams& bp, int i, int j, int k, GaussianBinomialCache& bin) {
  const int L = bp.L, M = bp.M;
  Polynomial lhs;
  for_each_fiber_cell(MarkerExponents{i, j, k, 0}, [&](const FreqVector& f) {
    const int a = f.a(), b = f.b(), c = f.c(), ab = f.ab(), ac = f.ac(), bc = f.bc();
    const int tau = f.tau();
    const Polynomial pre = Polynomial::monomial(static_cast<int>(goellnitz_exponent(f)));
    const Polynomial& shared_b = bin.get(L - tau + b, b);
    const Polynomial& shared_c = bin.get(M - tau + c, c);
    const Polynomial& shared_ab = bin.get(L - tau, ab);
    const Polynomial& shared_ac = bin.get(M - tau, ac);
    Polynomial first = detail::product_of(
        {&bin.get(L - tau + a, a), &shared_b, &shared_c, &shared_ab, &shared_ac, &bin.get(M - tau, bc)},
        Polynomial::monomial(bc));
    Polynomial second = detail::product_of(
        {&bin.get(L - tau + a - 1, a - 1), &shared_b, &shared_c, &shared_ab, &shared_ac, &bin.get(M - tau, bc - 1)},
        Polynomial::one());
    lhs += pre * (first + second);
  });
  return lhs;
}

/// Right-hand side: sum_t q^{t(M+2) - T_t + T_{i-t} + T_{j-t} + T_{k-t}}
///   [L-t, t] [L-2t, i-t] [L-i-t, j-t] [M-i-j, k-t].
inline Polynomial bounded_goellnitz_rhs(const BoundParams& bp, int i, int j, int k, GaussianBinomialCache& bin) {
  const int L = bp.L, M = bp.M;
  Polynomial rhs;
  for (int t = 0; t <= std::min({i, j, k}); ++t) {
    const std::int64_t e = static_cast<std::int64_t>(t) * (M + 2) - triangular(t) + triangular(i - t) +
                           triangular(j - t) + triangular(k - t);
    rhs += detail::product_of(
        {&bin.get(L - t, t), &bin.get(L - 2 * t, i - t), &bin.get(L - i - t, j - t), &bin.get(M - i - j, k - t)},
        Polynomial::monomial(static_cast<int>(e)));
  }
  return rhs;
}

inline PolynomialPair bounded_goellnitz(const BoundParams& bp, int i, int j, int k, GaussianBinomialCache& bin) {
  return {bounded_goellnitz_lhs(bp, i, j, k, bin), bounded_goellnitz_rhs(bp, i, j, k, bin)};
}

inline PolynomialPair bounded_goellnitz(const BoundParams& bp, int i, int j, int k) {
  GaussianBinomialCache bin;
  return bounded_goellnitz(bp, i, j, k, bin);
}

namespace detail {
inline std::string bounded_label(int L, int M, std::initializer_list<int> idx) {
  std::string s = "L=" + std::to_string(L) + " M=" + std::to_string(M) + " (";
  bool first = true;
  for (int v : idx) {
    s += (first ? "" : ",") + std::to_string(v);
    first = false;
  }
  return s + ")";
}
}  // namespace detail

/// Exact equality for all 0 <= L, M <= lm_max and 0 <= i, j <= ij_max.
inline VerificationReport verify_bounded_schur(int lm_max, int ij_max, unsigned jobs = 1) {
  struct Cell { int L, M, i, j; };
  std::vector<Cell> cells;
  for (int L = 0; L <= lm_max; ++L)
    for (int M = 0; M <= lm_max; ++M)
      for (int i = 0; i <= ij_max; ++i)
        for (int j = 0; j <= ij_max; ++j) cells.push_back({L, M, i, j});
  GaussianBinomialCache bin;
  auto outcomes = parallel_map(cells.size(), jobs, [&](std::size_t idx) {
    const Cell& c = cells[idx];
    auto [lhs, rhs] = bounded_schur(BoundParams(c.L, c.M), c.i, c.j, bin);
    return first_difference(lhs, rhs, detail::bounded_label(c.L, c.M, {c.i, c.j}));
  });
  VerificationReport report("bounded43");
  for (auto& o : outcomes) {
    ++report.cells_checked;
    if (o) report.fail(*o);
  }
  return report;
}

/// Exact equality for all 0 <= L, M <= lm_max and 0 <= i, j, k <= ijk_max.
inline VerificationReport verify_bounded_goellnitz(int lm_max, int ijk_max, unsigned jobs = 1) {
  struct Cell { int L, M, i, j, k; };
  std::vector<Cell> cells;
  for (int L = 0; L <= lm_max; ++L)
    for (int M = 0; M <= lm_max; ++M)
      for (int i = 0; i <= ijk_max; ++i)
        for (int j = 0; j <= ijk_max; ++j)
          for (int k = 0; k <= ijk_max; ++k) cells.push_back({L, M, i, j, k});
  GaussianBinomialCache bin;
  auto outcomes = parallel_map(cells.size(), jobs, [&](std::size_t idx) {
    const Cell& c = cells[idx];
    auto [lhs, rhs] = bounded_goellnitz(BoundParams(c.L, c.M), c.i, c.j, c.k, bin);
    return first_difference(lhs, rhs, detail::bounded_label(c.L, c.M, {c.i, c.j, c.k}));
  });
  VerificationReport report("bounded44");
  for (auto& o : outcomes) {
    ++report.cells_checked;
    if (o) report.fail(*o);
  }
  return report;
}

/// Truncation of an exact polynomial; negative-degree terms are an error.
inline Series polynomial_to_series(const Polynomial& p, int truncation) {
  if (!p.is_polynomial()) throw DomainError("polynomial_to_series: negative-degree term");
  Series s(truncation);
  for (const auto& [d, c] : p.terms()) s.add_term(d, {}, c);
  return s;
}

/// At large L = M = bound, both sides of the bounded identities agree with the
/// unbounded series up to q-degree `degree`.
inline VerificationReport bounded_limit_check(int bound, int idx_max, int degree) {
  VerificationReport report("bounded-limit");
  GaussianBinomialCache bin;
  InversePochhammerCache cache;
  const BoundParams bp(bound, bound);
  for (int i = 0; i <= idx_max; ++i) {
    for (int j = 0; j <= idx_max; ++j) {
      ++report.cells_checked;
      auto [lhs, rhs] = bounded_schur(bp, i, j, bin);
      const Series limit = lhs_schur(i, j, degree, cache);
      const std::string cell = detail::bounded_label(bound, bound, {i, j});
      if (auto ce = first_difference(polynomial_to_series(lhs, degree), limit, cell + " schur lhs")) report.fail(*ce);
      if (auto ce = first_difference(polynomial_to_series(rhs, degree), rhs_quadruple({i, j, 0, 0}, degree, cache),
                                     cell + " schur rhs"))
        report.fail(*ce);
      for (int k = 0; k <= idx_max; ++k) {
        ++report.cells_checked;
        const std::string cell3 = detail::bounded_label(bound, bound, {i, j, k});
        const Polynomial lhs3 = bounded_goellnitz_lhs(bp, i, j, k, bin);
        const Polynomial rhs3 = bounded_goellnitz_rhs(bp, i, j, k, bin);
        if (auto ce = first_difference(polynomial_to_series(lhs3, degree), lhs_goellnitz(i, j, k, degree, cache),
                                       cell3 + " goellnitz lhs"))
          report.fail(*ce);
        if (auto ce = first_difference(polynomial_to_series(rhs3, degree), rhs_quadruple({i, j, k, 0}, degree, cache),
                                       cell3 + " goellnitz rhs"))
          report.fail(*ce);
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Quadruple product and dilation

/// sum over (i,j,k,l) of A^i B^j C^k D^l times the key identity's right-hand
/// side equals prod_m (1 + A q^m)(1 + B q^m)(1 + C q^m)(1 + D q^m).
inline VerificationReport full_product_check(int truncation) {
  VerificationReport report("product41");
  InversePochhammerCache cache;
  Series marker_sum(truncation);
  int max_idx = 0;
  while (triangular(max_idx + 1) <= truncation) ++max_idx;
  for (const auto& t : detail::marker_box({max_idx, max_idx, max_idx, max_idx})) {
    if (triangular(t.i) + triangular(t.j) + triangular(t.k) + triangular(t.l) > truncation) continue;
    ++report.cells_checked;
    marker_sum = add(marker_sum, with_markers(rhs_quadruple(t, truncation, cache), t));
  }
  if (auto ce = first_difference(marker_sum, euler_quadruple_product(truncation), "N=" + std::to_string(truncation)))
    report.fail(*ce);
  return report;
}

/// The dilation q -> q^15, A -> A q^-8, B -> B q^-4, C -> C q^-2, D -> D q^-1.
inline Translation mod15_translation() { return Translation(15, {-8, -4, -2, -1}); }

/// Dilating the letter-refined product gives the letter-refined generating
/// function of the mod-15 P-side partitions, checked against direct
/// enumeration for all n <= truncation.
inline VerificationReport theorem1_genfunc_check(int truncation) {
  VerificationReport report("dilation");
  // Every part has weight w and image 15w - r >= 7w, so source degree <= N/7.
  const Series source = euler_quadruple_product(truncation / 7);
  const Series dilated = apply_dilation(source, mod15_translation(), truncation);
  report.cells_checked = static_cast<std::uint64_t>(truncation + 1);
  if (auto ce = first_difference(dilated, p1_refined_series(truncation), "N=" + std::to_string(truncation)))
    report.fail(*ce);
  return report;
}

/// For each target <= ijkl_max and n <= n_max: the q^n coefficients of the
/// key identity's two sides and the fiber sum of G-side counts all agree.
inline VerificationReport three_way_check(const MarkerExponents& ijkl_max, int n_max, unsigned jobs = 1) {
  VerificationReport report("three-way");
  const G2Tally tally = tally_g2(n_max, ijkl_max);
  const auto targets = detail::marker_box(ijkl_max);
  auto sides = parallel_map(targets.size(), jobs, [&](std::size_t idx) {
    InversePochhammerCache cache;
    return std::make_pair(lhs_key_identity(targets[idx], n_max, cache), rhs_quadruple(targets[idx], n_max, cache));
  });
  for (std::size_t idx = 0; idx < targets.size(); ++idx) {
    const auto& t = targets[idx];
    for (int n = 0; n <= n_max; ++n) {
      ++report.cells_checked;
      const CheckedInt lhs = sides[idx].first.coefficient(n);
      const CheckedInt rhs = sides[idx].second.coefficient(n);
      const CheckedInt g = tally.fiber_sum(n, t);
      if (lhs != rhs || lhs != g) {
        report.fail({"n=" + std::to_string(n) + " " + detail::target_label(t, 4), n, t, to_string(lhs),
                     to_string(rhs) + " (G-side " + to_string(g) + ")"});
      }
    }
  }
  return report;
}

}  // namespace qpart
