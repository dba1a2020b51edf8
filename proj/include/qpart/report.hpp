#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>

#include "qpart/series.hpp"

namespace qpart {

/// Enough to reproduce a mismatch by hand.
struct Counterexample {
  std::string cell;  // parameter cell, e.g. "(i,j,k,l)=(1,2,0,0)"
  int degree = 0;    // q-degree (or n for counting checks)
  MarkerExponents markers;
  std::string lhs;
  std::string rhs;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

/// Outcome of one identity or theorem check. A failed report always carries
/// the first counterexample in cell order.
struct VerificationReport {
  std::string identity;
  std::uint64_t cells_checked = 0;
  std::optional<Counterexample> counterexample;

  explicit VerificationReport(std::string name = {}) : identity(std::move(name)) {}

  bool passed() const { return !counterexample.has_value(); }

  /// Keeps the first failure only.
  void fail(Counterexample ce) {
    if (!counterexample) counterexample = std::move(ce);
  }

  /// Merges a sub-report, keeping this report's name.
  void absorb(const VerificationReport& other) {
    cells_checked += other.cells_checked;
    if (other.counterexample) fail(*other.counterexample);
  }

  std::string to_text() const {
    std::ostringstream os;
    if (passed()) {
      os << "PASS " << identity << ": " << cells_checked << " cells checked";
    } else {
      const auto& ce = *counterexample;
      os << "FAIL " << identity << ": cell " << ce.cell << " degree " << ce.degree << " markers "
         << ce.markers.to_string() << ": lhs=" << ce.lhs << " rhs=" << ce.rhs;
    }
    return os.str();
  }

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// First differing monomial of two series, lowest in term order.
template <class C>
std::optional<Counterexample> first_difference(const TruncatedSeries<C>& lhs, const TruncatedSeries<C>& rhs,
                                               const std::string& cell) {
  auto diff = sub(lhs, rhs);
  if (diff.is_zero()) return std::nullopt;
  const Monomial m = diff.terms().begin()->first;
  return Counterexample{cell, m.degree, m.markers, coeff_to_string(lhs.coefficient(m.degree, m.markers)),
                        coeff_to_string(rhs.coefficient(m.degree, m.markers))};
}

template <class C>
std::optional<Counterexample> first_difference(const LaurentPolynomial<C>& lhs, const LaurentPolynomial<C>& rhs,
                                               const std::string& cell) {
  auto diff = lhs - rhs;
  if (diff.is_zero()) return std::nullopt;
  const int d = diff.min_degree();
  return Counterexample{cell, d, {}, coeff_to_string(lhs.coefficient(d)), coeff_to_string(rhs.coefficient(d))};
}

}  // namespace qpart
