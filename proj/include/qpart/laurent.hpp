#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "qpart/checked_int.hpp"

namespace qpart {

/// Raised for arguments outside an operation's mathematical domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <class C>
std::string coeff_to_string(const C& c) {
  std::ostringstream os;
  os << c;
  return os.str();
}

/// Exact Laurent polynomial in q with integer coefficients.
///
/// Used for the bounded identities, where Gaussian binomials with a negative
/// top entry are genuine Laurent polynomials and nothing is truncated.
template <class C = CheckedInt>
class LaurentPolynomial {
 public:
  using Coefficient = C;
  using TermMap = std::map<int, C>;

  LaurentPolynomial() = default;

  static LaurentPolynomial monomial(int degree, C coeff = C{1}) {
    LaurentPolynomial p;
    p.add_term(degree, coeff);
    return p;
  }
  static LaurentPolynomial one() { return monomial(0); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  C coefficient(int degree) const {
    auto it = terms_.find(degree);
    return it == terms_.end() ? C{0} : it->second;
  }

  /// Lowest degree; requires a nonzero polynomial.
  int min_degree() const {
    if (terms_.empty()) throw DomainError("min_degree of the zero polynomial");
    return terms_.begin()->first;
  }
  int max_degree() const {
    if (terms_.empty()) throw DomainError("max_degree of the zero polynomial");
    return terms_.rbegin()->first;
  }

  /// True when no term has negative degree.
  bool is_polynomial() const { return terms_.empty() || terms_.begin()->first >= 0; }

  void add_term(int degree, const C& coeff) {
    if (coeff == C{0}) return;
    auto [it, inserted] = terms_.try_emplace(degree, coeff);
    if (!inserted) {
      it->second = it->second + coeff;
      if (it->second == C{0}) terms_.erase(it);
    }
  }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
    for (const auto& [d, c] : o.terms_) add_term(d, c);
    return *this;
  }
  LaurentPolynomial& operator-=(const LaurentPolynomial& o) {
    for (const auto& [d, c] : o.terms_) add_term(d, C{0} - c);
    return *this;
  }

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }

  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial r;
    for (const auto& [da, ca] : a.terms_)
      for (const auto& [db, cb] : b.terms_) r.add_term(da + db, ca * cb);
    return r;
  }
  LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  /// Sum of coefficients, i.e. the value at q = 1.
  C value_at_one() const {
    C s{0};
    for (const auto& [d, c] : terms_) s = s + c;
    return s;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << c;
      if (d != 0) os << "*q^" << d;
    }
    return os.str();
  }

 private:
  TermMap terms_;
};

/// Exact quotient num/den. The lowest coefficient of den must be +1 or -1;
/// throws DomainError if den does not divide num.
template <class C>
LaurentPolynomial<C> divide_exact(LaurentPolynomial<C> num, const LaurentPolynomial<C>& den) {
  if (den.is_zero()) throw DomainError("division by the zero polynomial");
  const int den_lo = den.min_degree();
  const C lead = den.coefficient(den_lo);
  if (!(lead == C{1} || lead == C{-1})) throw DomainError("divide_exact: lowest coefficient of divisor is not a unit");
  LaurentPolynomial<C> quotient;
  if (num.is_zero()) return quotient;
  const int last = num.max_degree() - den.max_degree();
  while (!num.is_zero()) {
    const int lo = num.min_degree();
    if (lo - den_lo > last) throw DomainError("divide_exact: divisor does not divide dividend");
    const C c = num.coefficient(lo) * lead;
    const int shift = lo - den_lo;
    quotient.add_term(shift, c);
    for (const auto& [d, dc] : den.terms()) num.add_term(d + shift, C{0} - c * dc);
  }
  return quotient;
}

/// Gaussian binomial [top choose bottom] = (q^{top-bottom+1};q)_bottom / (q;q)_bottom,
/// and 0 when bottom < 0. Negative top gives a Laurent polynomial.
template <class C = CheckedInt>
LaurentPolynomial<C> gaussian_binomial(int top, int bottom) {
  using P = LaurentPolynomial<C>;
  if (bottom < 0) return P{};
  const int m = top - bottom;
  P num = P::one();
  P den = P::one();
  for (int j = 0; j < bottom; ++j) {
    const int e = m + 1 + j;
    if (e == 0) return P{};  // factor (1 - q^0) vanishes
    num *= P::one() - P::monomial(e);
    den *= P::one() - P::monomial(j + 1);
  }
  return divide_exact(num, den);
}

}  // namespace qpart
