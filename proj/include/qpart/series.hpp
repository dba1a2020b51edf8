#pragma once

// Truncated formal power series in q with four marker variables A, B, C, D.
//
// A series stores a sparse map from (q-degree, marker exponents) to an exact
// coefficient. Only q-degrees 0..N are retained; marker exponents are never
// truncated, they stay bounded by whatever construction produced the series.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "qpart/checked_int.hpp"
#include "qpart/laurent.hpp"

namespace qpart {

/// Exponents (i, j, k, l) of the markers A, B, C, D.
struct MarkerExponents {
  int i = 0;
  int j = 0;
  int k = 0;
  int l = 0;

  static constexpr int kCount = 4;

  constexpr int operator[](int idx) const {
    switch (idx) {
      case 0: return i;
      case 1: return j;
      case 2: return k;
      default: return l;
    }
  }
  constexpr int& operator[](int idx) {
    switch (idx) {
      case 0: return i;
      case 1: return j;
      case 2: return k;
      default: return l;
    }
  }

  constexpr bool is_zero() const { return i == 0 && j == 0 && k == 0 && l == 0; }
  constexpr bool is_valid() const { return i >= 0 && j >= 0 && k >= 0 && l >= 0; }
  constexpr int total() const { return i + j + k + l; }
  /// Componentwise <=.
  constexpr bool fits_within(const MarkerExponents& cap) const {
    return i <= cap.i && j <= cap.j && k <= cap.k && l <= cap.l;
  }

  friend constexpr MarkerExponents operator+(MarkerExponents a, const MarkerExponents& b) {
    return {a.i + b.i, a.j + b.j, a.k + b.k, a.l + b.l};
  }
  friend constexpr MarkerExponents operator-(MarkerExponents a, const MarkerExponents& b) {
    return {a.i - b.i, a.j - b.j, a.k - b.k, a.l - b.l};
  }
  friend constexpr bool operator==(const MarkerExponents&, const MarkerExponents&) = default;
  friend constexpr auto operator<=>(const MarkerExponents&, const MarkerExponents&) = default;

  std::string to_string() const {
    std::ostringstream os;
    os << '(' << i << ',' << j << ',' << k << ',' << l << ')';
    return os.str();
  }

  /// Unit exponent vector for marker `idx` (0 = A, ..., 3 = D).
  static constexpr MarkerExponents unit(int idx) {
    MarkerExponents m;
    m[idx] = 1;
    return m;
  }
};

/// Key of a stored term. Ordered by q-degree first.
struct Monomial {
  int degree = 0;
  MarkerExponents markers;

  friend constexpr bool operator==(const Monomial&, const Monomial&) = default;
  friend constexpr auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Triangular number T_n = n(n+1)/2, defined for n >= -1 (T_{-1} = 0).
constexpr std::int64_t triangular(std::int64_t n) {
  if (n < -1) throw DomainError("triangular: index below -1");
  return n * (n + 1) / 2;
}

template <class C = CheckedInt>
class TruncatedSeries {
 public:
  using Coefficient = C;
  using TermMap = std::map<Monomial, C>;

  explicit TruncatedSeries(int truncation) : truncation_(truncation) {
    if (truncation < 0) throw DomainError("TruncatedSeries: negative truncation");
  }

  static TruncatedSeries zero(int truncation) { return TruncatedSeries(truncation); }
  static TruncatedSeries one(int truncation) { return monomial(truncation, 0); }
  static TruncatedSeries monomial(int truncation, int degree, MarkerExponents markers = {}, C coeff = C{1}) {
    TruncatedSeries s(truncation);
    s.add_term(degree, markers, coeff);
    return s;
  }

  int truncation() const { return truncation_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  C coefficient(int degree, MarkerExponents markers = {}) const {
    auto it = terms_.find(Monomial{degree, markers});
    return it == terms_.end() ? C{0} : it->second;
  }

  /// Accumulates c * q^degree * markers. Degrees above the truncation are
  /// dropped; negative degrees are an error.
  void add_term(int degree, MarkerExponents markers, const C& coeff) {
    if (degree < 0) throw DomainError("TruncatedSeries: negative q-degree");
    if (!markers.is_valid()) throw DomainError("TruncatedSeries: negative marker exponent");
    if (degree > truncation_ || coeff == C{0}) return;
    auto [it, inserted] = terms_.try_emplace(Monomial{degree, markers}, coeff);
    if (!inserted) {
      it->second = it->second + coeff;
      if (it->second == C{0}) terms_.erase(it);
    }
  }

  /// Terms with q-degree exactly `degree`, as an iterator range.
  auto degree_range(int degree) const {
    struct Range {
      typename TermMap::const_iterator b, e;
      auto begin() const { return b; }
      auto end() const { return e; }
    };
    return Range{terms_.lower_bound(Monomial{degree, {}}), terms_.lower_bound(Monomial{degree + 1, {}})};
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_truncation(a, b);
    return a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << c;
      if (m.degree != 0) os << "*q^" << m.degree;
      if (!m.markers.is_zero()) os << "*" << m.markers.to_string();
    }
    os << " + O(q^" << truncation_ + 1 << ")";
    return os.str();
  }

  static void require_same_truncation(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.truncation_ != b.truncation_) throw DomainError("TruncatedSeries: mismatched truncation degrees");
  }

 private:
  int truncation_;
  TermMap terms_;
};

template <class C>
TruncatedSeries<C> add(const TruncatedSeries<C>& a, const TruncatedSeries<C>& b) {
  TruncatedSeries<C>::require_same_truncation(a, b);
  TruncatedSeries<C> r = a;
  for (const auto& [m, c] : b.terms()) r.add_term(m.degree, m.markers, c);
  return r;
}

template <class C>
TruncatedSeries<C> negate(const TruncatedSeries<C>& a) {
  TruncatedSeries<C> r(a.truncation());
  for (const auto& [m, c] : a.terms()) r.add_term(m.degree, m.markers, C{0} - c);
  return r;
}

template <class C>
TruncatedSeries<C> sub(const TruncatedSeries<C>& a, const TruncatedSeries<C>& b) {
  return add(a, negate(b));
}

/// Cauchy product, truncated at the common truncation degree.
template <class C>
TruncatedSeries<C> mul(const TruncatedSeries<C>& a, const TruncatedSeries<C>& b) {
  TruncatedSeries<C>::require_same_truncation(a, b);
  const int n = a.truncation();
  std::map<Monomial, C> acc;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      const int d = ma.degree + mb.degree;
      if (d > n) break;  // b's terms are ordered by degree
      auto [it, inserted] = acc.try_emplace(Monomial{d, ma.markers + mb.markers}, ca * cb);
      if (!inserted) it->second = it->second + ca * cb;
    }
  }
  TruncatedSeries<C> r(n);
  for (const auto& [m, c] : acc) r.add_term(m.degree, m.markers, c);
  return r;
}

template <class C>
TruncatedSeries<C> operator+(const TruncatedSeries<C>& a, const TruncatedSeries<C>& b) { return add(a, b); }
template <class C>
TruncatedSeries<C> operator-(const TruncatedSeries<C>& a, const TruncatedSeries<C>& b) { return sub(a, b); }
template <class C>
TruncatedSeries<C> operator*(const TruncatedSeries<C>& a, const TruncatedSeries<C>& b) { return mul(a, b); }

/// Multiplicative inverse up to truncation. The constant term must be +1 or
/// -1 with zero marker exponents, and every other term must have positive
/// q-degree.
template <class C>
TruncatedSeries<C> invert(const TruncatedSeries<C>& s) {
  const C c0 = s.coefficient(0);
  if (!(c0 == C{1} || c0 == C{-1})) throw DomainError("invert: constant term is not +1 or -1");
  for (const auto& term : s.degree_range(0)) {
    if (!term.first.markers.is_zero()) throw DomainError("invert: marker-bearing term of q-degree 0");
  }
  // s = c0 + r with r of positive degree; t_D = c0 * ([D == 0] - sum_{e>=1} r_e t_{D-e}).
  const int n = s.truncation();
  TruncatedSeries<C> t = TruncatedSeries<C>::monomial(n, 0, {}, c0);
  for (int d = 1; d <= n; ++d) {
    std::map<MarkerExponents, C> level;
    for (int e = 1; e <= d; ++e) {
      for (const auto& [mr, cr] : s.degree_range(e)) {
        for (const auto& [mt, ct] : t.degree_range(d - e)) {
          auto [it, inserted] = level.try_emplace(mr.markers + mt.markers, cr * ct);
          if (!inserted) it->second = it->second + cr * ct;
        }
      }
    }
    for (const auto& [mk, c] : level) t.add_term(d, mk, C{0} - c0 * c);
  }
  return t;
}

/// Multiplies by q^shift (shift >= 0), dropping what passes the truncation.
template <class C>
TruncatedSeries<C> shift_degree(const TruncatedSeries<C>& s, int shift) {
  if (shift < 0) throw DomainError("shift_degree: negative shift");
  TruncatedSeries<C> r(s.truncation());
  for (const auto& [m, c] : s.terms()) r.add_term(m.degree + shift, m.markers, c);
  return r;
}

/// Multiplies by q^shift (shift >= 0) and re-truncates at `truncation_out`.
template <class C>
TruncatedSeries<C> shift_degree(const TruncatedSeries<C>& s, int shift, int truncation_out) {
  if (shift < 0) throw DomainError("shift_degree: negative shift");
  TruncatedSeries<C> r(truncation_out);
  for (const auto& [m, c] : s.terms()) r.add_term(m.degree + shift, m.markers, c);
  return r;
}

/// Multiplies every term by the marker monomial A^i B^j C^k D^l.
template <class C>
TruncatedSeries<C> with_markers(const TruncatedSeries<C>& s, MarkerExponents markers) {
  TruncatedSeries<C> r(s.truncation());
  for (const auto& [m, c] : s.terms()) r.add_term(m.degree, m.markers + markers, c);
  return r;
}

/// The pure-q series multiplying A^i B^j C^k D^l in s.
template <class C>
TruncatedSeries<C> marker_coefficient(const TruncatedSeries<C>& s, MarkerExponents markers) {
  TruncatedSeries<C> r(s.truncation());
  for (const auto& [m, c] : s.terms())
    if (m.markers == markers) r.add_term(m.degree, {}, c);
  return r;
}

/// Same terms, re-truncated at a lower degree.
template <class C>
TruncatedSeries<C> truncate(const TruncatedSeries<C>& s, int truncation) {
  if (truncation > s.truncation()) throw DomainError("truncate: cannot raise the truncation degree");
  TruncatedSeries<C> r(truncation);
  for (const auto& [m, c] : s.terms()) r.add_term(m.degree, m.markers, c);
  return r;
}

/// Sum of coefficients at fixed markers, i.e. the pure-q series evaluated at q = 1.
template <class C>
C value_at_one(const TruncatedSeries<C>& s) {
  C sum{0};
  for (const auto& [m, c] : s.terms()) sum = sum + c;
  return sum;
}

namespace detail {

// 1 / (1 - q^e) for e != 0, as a truncated series. For e < 0 this is
// -q^{-e} / (1 - q^{-e}).
template <class C>
TruncatedSeries<C> inverse_binomial_factor(int e, int truncation) {
  if (e == 0) throw DomainError("pochhammer: zero divisor (1 - q^0) in the n < 0 case");
  TruncatedSeries<C> r(truncation);
  if (e > 0) {
    for (int d = 0; d <= truncation; d += e) r.add_term(d, {}, C{1});
  } else {
    for (int d = -e; d <= truncation; d += -e) r.add_term(d, {}, C{-1});
  }
  return r;
}

}  // namespace detail

/// (q^e; q)_n for integer n, truncated at q-degree `truncation`.
///
/// n > 0 gives prod_{j=0}^{n-1} (1 - q^{e+j}); every exponent e + j must be
/// nonnegative (a zero exponent makes the whole product vanish). n < 0 gives
/// prod_{j=1}^{-n} (1 - q^{e-j})^{-1}; an exponent e - j equal to zero is a
/// division by zero.
template <class C = CheckedInt>
TruncatedSeries<C> pochhammer(int e, int n, int truncation) {
  using S = TruncatedSeries<C>;
  S r = S::one(truncation);
  if (n > 0) {
    if (e < 0) throw DomainError("pochhammer: negative q-power in a positive-length product");
    for (int j = 0; j < n; ++j) {
      const int p = e + j;
      if (p == 0) return S::zero(truncation);
      if (p > truncation) break;
      S factor = S::one(truncation);
      factor.add_term(p, {}, C{-1});
      r = mul(r, factor);
    }
  } else if (n < 0) {
    for (int j = 1; j <= -n; ++j) r = mul(r, detail::inverse_binomial_factor<C>(e - j, truncation));
  }
  return r;
}

/// A single term c * q^degree * markers, used as the base of a marker-bearing
/// Pochhammer symbol.
template <class C = CheckedInt>
struct SeriesTerm {
  C coeff{1};
  int degree = 0;
  MarkerExponents markers;
};

/// (base; q)_n = prod_{j=0}^{n-1} (1 - base * q^j) for n >= 0. The negative-n
/// clause is only supported for pure q-power bases (see the overload above).
template <class C = CheckedInt>
TruncatedSeries<C> pochhammer(const SeriesTerm<C>& base, int n, int truncation) {
  using S = TruncatedSeries<C>;
  if (n < 0) throw DomainError("pochhammer: negative length requires a pure q-power base");
  if (base.degree < 0) throw DomainError("pochhammer: negative q-power in base");
  S r = S::one(truncation);
  for (int j = 0; j < n; ++j) {
    if (base.degree + j > truncation) break;
    S factor = S::one(truncation);
    factor.add_term(base.degree + j, base.markers, C{0} - base.coeff);
    r = mul(r, factor);
  }
  return r;
}

/// Gaussian binomial [m+n choose n] = (q^{m+1})_n / (q)_n as a truncated
/// series; 0 when n < 0. Throws DomainError when the exact value has a
/// negative-degree term (m < -n with n > 0), which a power series cannot hold;
/// use gaussian_binomial() for those.
template <class C = CheckedInt>
TruncatedSeries<C> qbinomial(int m, int n, int truncation) {
  const LaurentPolynomial<C> p = gaussian_binomial<C>(m + n, n);
  if (!p.is_polynomial()) throw DomainError("qbinomial: value is a Laurent polynomial with negative degrees");
  TruncatedSeries<C> r(truncation);
  for (const auto& [d, c] : p.terms()) r.add_term(d, {}, c);
  return r;
}

/// prod_{m>=1} (1 + A q^m)(1 + B q^m)(1 + C q^m)(1 + D q^m), truncated.
template <class C = CheckedInt>
TruncatedSeries<C> euler_quadruple_product(int truncation) {
  TruncatedSeries<C> r = TruncatedSeries<C>::one(truncation);
  for (int marker = 0; marker < MarkerExponents::kCount; ++marker) {
    const SeriesTerm<C> base{C{-1}, 1, MarkerExponents::unit(marker)};
    r = mul(r, pochhammer<C>(base, truncation, truncation));
  }
  return r;
}

/// q -> q^modulus together with marker_x -> marker_x * q^{shifts[x]}.
struct Translation {
  int modulus = 1;
  std::array<int, 4> shifts{};

  Translation() = default;
  Translation(int m, std::array<int, 4> s) : modulus(m), shifts(s) {
    if (m < 1) throw DomainError("Translation: modulus must be >= 1");
  }

  static Translation identity() { return {}; }

  /// Applying `first` and then `second` equals applying compose(first, second).
  friend Translation compose(const Translation& first, const Translation& second) {
    std::array<int, 4> s{};
    for (int x = 0; x < 4; ++x) s[x] = second.modulus * first.shifts[x] + second.shifts[x];
    return Translation(first.modulus * second.modulus, s);
  }

  int image_degree(const Monomial& m) const {
    int d = modulus * m.degree;
    for (int x = 0; x < 4; ++x) d += m.markers[x] * shifts[x];
    return d;
  }
};

/// Term (d, markers) maps to q-degree modulus*d + sum markers[x]*shifts[x],
/// markers unchanged. Terms landing above `truncation_out` are dropped; a
/// negative image degree is an error.
template <class C>
TruncatedSeries<C> apply_dilation(const TruncatedSeries<C>& s, const Translation& t, int truncation_out) {
  TruncatedSeries<C> r(truncation_out);
  for (const auto& [m, c] : s.terms()) {
    const int d = t.image_degree(m);
    if (d < 0) throw DomainError("apply_dilation: negative transformed exponent");
    r.add_term(d, m.markers, c);
  }
  return r;
}

using Series = TruncatedSeries<CheckedInt>;
using Polynomial = LaurentPolynomial<CheckedInt>;

}  // namespace qpart
