#pragma once

// Integer-partition counterparts of the colored theorems: the mod-15 theorem
// obtained by the substitution A_n -> 15n-8, B_n -> 15n-4, C_n -> 15n-2,
// D_n -> 15n-1, and the mod-6 Goellnitz theorem from A_n -> 6n-4,
// B_n -> 6n-2, C_n -> 6n-1.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "qpart/colored.hpp"
#include "qpart/report.hpp"
#include "qpart/series.hpp"

namespace qpart {

/// A partition into positive integers, stored in non-increasing order.
class IntegerPartition {
 public:
  IntegerPartition() = default;
  IntegerPartition(std::initializer_list<int> parts) : IntegerPartition(std::vector<int>(parts)) {}
  explicit IntegerPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    for (int p : parts_) {
      if (p <= 0) throw DomainError("IntegerPartition: parts must be positive");
      total_ += p;
    }
  }

  std::span<const int> parts() const { return parts_; }
  int total() const { return total_; }
  std::size_t size() const { return parts_.size(); }
  bool contains(int part) const { return std::find(parts_.begin(), parts_.end(), part) != parts_.end(); }

  std::string to_string() const {
    if (parts_.empty()) return "[]";
    std::string s;
    for (int p : parts_) s += (s.empty() ? "" : " ") + std::to_string(p);
    return s;
  }

  friend bool operator==(const IntegerPartition&, const IntegerPartition&) = default;

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

// ---------------------------------------------------------------------------
// Substitutions

/// Offset r with A_n -> 15n - r.
constexpr int offset_15(Color c) {
  constexpr std::array<int, kColorCount> kOffsets = {8, 4, 2, 1, 12, 10, 9, 6, 5, 3, 15};
  return kOffsets[index_of(c)];
}

constexpr int substitute_15(const ColoredPart& p) { return 15 * p.weight - offset_15(p.color); }

/// Offset r with A_n -> 6n - r, three-letter alphabet only.
constexpr int offset_6(Color c) {
  switch (c) {
    case Color::A: return 4;
    case Color::B: return 2;
    case Color::C: return 1;
    case Color::AB: return 6;
    case Color::AC: return 5;
    case Color::BC: return 3;
    default: throw DomainError("substitute_6: color outside the three-letter alphabet");
  }
}

constexpr int substitute_6(const ColoredPart& p) { return 6 * p.weight - offset_6(p.color); }

/// Inverse of substitute_15 on integers that are images of valid symbols.
inline std::optional<ColoredPart> desubstitute_15(int m) {
  if (m <= 0) return std::nullopt;
  for (Color c : kAllColors) {
    const int shifted = m + offset_15(c);
    if (shifted % 15 == 0 && shifted / 15 >= min_weight(c)) return ColoredPart(c, shifted / 15);
  }
  return std::nullopt;
}

/// Ascending positive integers m with m mod 15 not in {0, 1, 2, 4, 8},
/// where m > 15 unless m is coprime to 15.
inline std::vector<int> nonquaternary_images_expected(int count) {
  std::vector<int> out;
  for (int m = 1; static_cast<int>(out.size()) < count; ++m) {
    const int r = m % 15;
    if (r == 0 || r == 1 || r == 2 || r == 4 || r == 8) continue;
    if (std::gcd(m, 15) != 1 && m <= 15) continue;
    out.push_back(m);
  }
  return out;
}

/// The first `count` nonquaternary symbols in increasing symbol order.
inline std::vector<ColoredPart> first_nonquaternary_symbols(int count) {
  std::vector<ColoredPart> out;
  for (int w = 1; static_cast<int>(out.size()) < count; ++w)
    for (Color c : kColorsByRank)
      if (!is_quaternary(c) && w >= min_weight(c) && static_cast<int>(out.size()) < count) out.emplace_back(c, w);
  return out;
}

/// Checks that substitute_15 carries the first `count` nonquaternary symbols,
/// in symbol order, onto the ascending integers prime to the excluded
/// residues; that primary images are coprime to 15 and secondary images are
/// not; and that including ABCD_n (n >= 4) keeps the map strictly increasing
/// up to the same weight.
inline VerificationReport order_isomorphism_check(int count) {
  if (count < 1) throw DomainError("order_isomorphism_check: count must be >= 1");
  VerificationReport report("order15");
  const auto symbols = first_nonquaternary_symbols(count);
  const auto expected = nonquaternary_images_expected(count);
  for (int x = 0; x < count; ++x) {
    ++report.cells_checked;
    const int image = substitute_15(symbols[x]);
    const bool coprime = std::gcd(image, 15) == 1;
    const bool kind_ok = is_primary(symbols[x].color) ? coprime : !coprime;
    const bool increasing = x == 0 || image > substitute_15(symbols[x - 1]);
    if (image != expected[x] || !kind_ok || !increasing) {
      report.fail({"symbol #" + std::to_string(x + 1) + " " + symbols[x].to_string(), image, {},
                   std::to_string(image), std::to_string(expected[x])});
    }
  }
  // Full alphabet including quaternary symbols.
  const int max_weight = symbols.back().weight;
  std::vector<ColoredPart> all;
  for (int w = 1; w <= max_weight; ++w)
    for (Color c : kColorsByRank)
      if (w >= min_weight(c)) all.emplace_back(c, w);
  for (std::size_t x = 1; x < all.size(); ++x) {
    ++report.cells_checked;
    const int lo = substitute_15(all[x - 1]);
    const int hi = substitute_15(all[x]);
    if (hi <= lo) report.fail({all[x - 1].to_string() + " < " + all[x].to_string(), hi, {}, std::to_string(lo),
                               std::to_string(hi)});
    if (is_quaternary(all[x].color) && (hi % 15 != 0 || hi < 45))
      report.fail({all[x].to_string(), hi, {}, std::to_string(hi), "multiple of 15 >= 45"});
  }
  return report;
}

// ---------------------------------------------------------------------------
// Mod-15 partitions

/// Numeric knobs of the mod-15 G-side conditions.
struct G1Rules {
  int nonmultiple_gap = 15;
  int multiple_gap = 60;
  int bound_with_seven = 30;
  int bound_without_seven = 45;
  int bound_per_tau = 30;
  int non_coprime_floor = 15;  // non-coprime non-multiples must exceed this

  int multiple_bound(int tau, bool has_seven) const {
    return (has_seven ? bound_with_seven : bound_without_seven) + bound_per_tau * tau;
  }
};

constexpr bool is_excluded_residue_15(int m) {
  const int r = m % 15;
  return r == 1 || r == 2 || r == 4 || r == 8;
}

/// Admissible non-multiple of 15 for the G-side.
constexpr bool g1_nonmultiple_admissible(int m, const G1Rules& rules) {
  if (m <= 0 || m % 15 == 0 || is_excluded_residue_15(m)) return false;
  return std::gcd(m, 15) == 1 || m > rules.non_coprime_floor;
}

constexpr bool g1_step_allowed(int larger, int smaller, const G1Rules& rules) {
  const int diff = larger - smaller;
  if (diff > rules.nonmultiple_gap) return true;
  return diff == rules.nonmultiple_gap && std::gcd(larger, 15) == 1;
}

inline bool is_valid_g1(const IntegerPartition& p, const G1Rules& rules = {}) {
  int tau = 0;
  bool has_seven = false;
  std::optional<int> prev_non, prev_mult;
  for (int part : p.parts()) {
    if (part % 15 == 0) {
      if (prev_mult && *prev_mult - part < rules.multiple_gap) return false;
      prev_mult = part;
    } else {
      if (!g1_nonmultiple_admissible(part, rules)) return false;
      if (prev_non && !g1_step_allowed(*prev_non, part, rules)) return false;
      prev_non = part;
      ++tau;
      has_seven = has_seven || part == 7;
    }
  }
  if (prev_mult && *prev_mult < rules.multiple_bound(tau, has_seven)) return false;
  return true;
}

namespace detail {

// Smallest-first search over chains of admissible parts in which each part
// may follow the previous one under `step(larger, smaller)`. Calls
// visit(chain, total) for every chain, including the empty one.
template <class Admissible, class Step, class Visit>
void integer_chain_search(int max_total, Admissible admissible, Step step, Visit visit) {
  std::vector<int> chain;
  auto rec = [&](auto&& self, int used) -> void {
    visit(chain, used);
    const int start = chain.empty() ? 1 : chain.back() + 1;
    for (int m = start; used + m <= max_total; ++m) {
      if (!admissible(m)) continue;
      if (!chain.empty() && !step(m, chain.back())) continue;
      chain.push_back(m);
      self(self, used + m);
      chain.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace detail

/// Visits every mod-15 G-side partition with total <= n_max.
template <class Visit>
void for_each_g1(int n_max, Visit visit, const G1Rules& rules = {}) {
  std::vector<int> mults;
  detail::integer_chain_search(
      n_max, [&](int m) { return g1_nonmultiple_admissible(m, rules); },
      [&](int larger, int smaller) { return g1_step_allowed(larger, smaller, rules); },
      [&](const std::vector<int>& chain, int used) {
        const int tau = static_cast<int>(chain.size());
        const bool has_seven = std::find(chain.begin(), chain.end(), 7) != chain.end();
        int bound = std::max(15, rules.multiple_bound(tau, has_seven));
        bound = (bound + 14) / 15 * 15;
        auto rec = [&](auto&& self, int next_min, int total) -> void {
          std::vector<int> parts(chain.begin(), chain.end());
          parts.insert(parts.end(), mults.begin(), mults.end());
          visit(IntegerPartition(std::move(parts)));
          for (int m = next_min; total + m <= n_max; m += 15) {
            mults.push_back(m);
            self(self, (m + std::max(1, rules.multiple_gap) + 14) / 15 * 15, total + m);
            mults.pop_back();
          }
        };
        rec(rec, bound, used);
      });
}

/// count_g1(n) for every n <= n_max.
inline std::vector<CheckedInt> g1_counts(int n_max, const G1Rules& rules = {}) {
  std::vector<CheckedInt> counts(n_max + 1, CheckedInt{0});
  for_each_g1(n_max, [&](const IntegerPartition& p) { counts[p.total()] += 1; }, rules);
  return counts;
}

inline CheckedInt count_g1(int n, const G1Rules& rules = {}) {
  if (n < 0) throw DomainError("count_g1: n must be >= 0");
  return g1_counts(n, rules)[n];
}

inline std::vector<IntegerPartition> enumerate_g1(int n, const G1Rules& rules = {}) {
  std::vector<IntegerPartition> out;
  for_each_g1(n, [&](const IntegerPartition& p) {
    if (p.total() == n) out.push_back(p);
  }, rules);
  return out;
}

/// Marker index (0..3) of a mod-15 P-side part, or -1 if the residue is not
/// one of 7, 11, 13, 14.
constexpr int p1_class(int m) {
  switch (m % 15) {
    case 7: return 0;
    case 11: return 1;
    case 13: return 2;
    case 14: return 3;
    default: return -1;
  }
}

namespace detail {
// Number of partitions into distinct parts drawn from `allowed`, per total.
inline std::vector<CheckedInt> distinct_parts_counts(int n_max, const std::vector<int>& allowed) {
  std::vector<CheckedInt> counts(n_max + 1, CheckedInt{0});
  counts[0] = 1;
  for (int part : allowed)
    for (int n = n_max; n >= part; --n) counts[n] += counts[n - part];
  return counts;
}
}  // namespace detail

/// count_p1(n) for every n <= n_max: distinct parts congruent to 7, 11, 13, 14 (mod 15).
inline std::vector<CheckedInt> p1_counts(int n_max) {
  std::vector<int> allowed;
  for (int m = 1; m <= n_max; ++m)
    if (p1_class(m) >= 0) allowed.push_back(m);
  return detail::distinct_parts_counts(n_max, allowed);
}

inline CheckedInt count_p1(int n) {
  if (n < 0) throw DomainError("count_p1: n must be >= 0");
  return p1_counts(n)[n];
}

/// Visits every mod-15 P-side partition with total <= n_max.
template <class Visit>
void for_each_p1(int n_max, Visit visit) {
  std::vector<int> chain;
  auto rec = [&](auto&& self, int start, int used) -> void {
    visit(IntegerPartition(chain));
    for (int m = start; used + m <= n_max; ++m) {
      if (p1_class(m) < 0) continue;
      chain.push_back(m);
      self(self, m + 1, used + m);
      chain.pop_back();
    }
  };
  rec(rec, 1, 0);
}

/// P-side refined counts: coefficient of A^i B^j C^k D^l q^n is the number of
/// mod-15 P-side partitions of n with i parts = 7, j = 11, k = 13, l = 14 (mod 15).
inline Series p1_refined_series(int n_max) {
  Series s(n_max);
  for_each_p1(n_max, [&](const IntegerPartition& p) {
    MarkerExponents m;
    for (int part : p.parts()) ++m[p1_class(part)];
    s.add_term(p.total(), m, 1);
  });
  return s;
}

/// G-side refined counts: each part is mapped back to its colored symbol and
/// the letters of its color are counted.
inline Series g1_refined_series(int n_max, const G1Rules& rules = {}) {
  Series s(n_max);
  for_each_g1(n_max, [&](const IntegerPartition& p) {
    MarkerExponents m;
    for (int part : p.parts()) {
      const auto sym = desubstitute_15(part);
      if (!sym) throw DomainError("g1_refined_series: part " + std::to_string(part) + " has no colored preimage");
      for (int x = 0; x < 4; ++x)
        if (has_letter(sym->color, x)) ++m[x];
    }
    s.add_term(p.total(), m, 1);
  }, rules);
  return s;
}

namespace detail {
inline VerificationReport compare_counts(std::string name, const std::vector<CheckedInt>& lhs,
                                         const std::vector<CheckedInt>& rhs) {
  VerificationReport report(std::move(name));
  for (std::size_t n = 0; n < lhs.size(); ++n) {
    ++report.cells_checked;
    if (lhs[n] != rhs[n])
      report.fail({"n=" + std::to_string(n), static_cast<int>(n), {}, to_string(lhs[n]), to_string(rhs[n])});
  }
  return report;
}
}  // namespace detail

/// G(n) = P(n) for the mod-15 theorem, all n <= n_max.
inline VerificationReport verify_theorem1(int n_max, const G1Rules& rules = {}) {
  return detail::compare_counts("thm1", g1_counts(n_max, rules), p1_counts(n_max));
}

/// Refinement by letters: G-side parts decoded to colored symbols versus
/// P-side parts classified by residue.
inline VerificationReport verify_theorem1_refined(int n_max, const G1Rules& rules = {}) {
  VerificationReport report("thm1-refined");
  report.cells_checked = static_cast<std::uint64_t>(n_max + 1);
  if (auto ce = first_difference(g1_refined_series(n_max, rules), p1_refined_series(n_max), "refined counts"))
    report.fail(*ce);
  return report;
}

// ---------------------------------------------------------------------------
// Mod-6 partitions

constexpr bool is_primary_residue_6(int m) {
  const int r = m % 6;
  return r == 2 || r == 4 || r == 5;
}

constexpr bool gg_admissible(int m) { return m >= 2 && m != 3; }

constexpr bool gg_step_allowed(int larger, int smaller) {
  const int diff = larger - smaller;
  return diff > 6 || (diff == 6 && is_primary_residue_6(larger));
}

inline bool is_valid_gg(const IntegerPartition& p) {
  const auto parts = p.parts();
  for (std::size_t x = 0; x < parts.size(); ++x) {
    if (!gg_admissible(parts[x])) return false;
    if (x > 0 && !gg_step_allowed(parts[x - 1], parts[x])) return false;
  }
  return true;
}

template <class Visit>
void for_each_gg(int n_max, Visit visit) {
  detail::integer_chain_search(
      n_max, gg_admissible, gg_step_allowed,
      [&](const std::vector<int>& chain, int) { visit(IntegerPartition(chain)); });
}

inline std::vector<CheckedInt> gg_counts(int n_max) {
  std::vector<CheckedInt> counts(n_max + 1, CheckedInt{0});
  for_each_gg(n_max, [&](const IntegerPartition& p) { counts[p.total()] += 1; });
  return counts;
}

inline CheckedInt count_gg(int n) {
  if (n < 0) throw DomainError("count_gg: n must be >= 0");
  return gg_counts(n)[n];
}

/// Distinct parts congruent to 2, 4, 5 (mod 6).
inline std::vector<CheckedInt> pg_counts(int n_max) {
  std::vector<int> allowed;
  for (int m = 1; m <= n_max; ++m)
    if (is_primary_residue_6(m)) allowed.push_back(m);
  return detail::distinct_parts_counts(n_max, allowed);
}

inline CheckedInt count_pg(int n) {
  if (n < 0) throw DomainError("count_pg: n must be >= 0");
  return pg_counts(n)[n];
}

inline VerificationReport verify_theorem_g(int n_max) {
  return detail::compare_counts("thmG", gg_counts(n_max), pg_counts(n_max));
}

// ---------------------------------------------------------------------------
// Transport of the colored conditions through the substitutions

/// Pushes every valid four-letter G-side partition through substitute_15 and
/// checks that each image satisfies the mod-15 G-side conditions and that the
/// image counts equal count_g1(n) for every n <= n_max.
inline VerificationReport transport_check_15(int n_max, const G2Rules& colored_rules = {},
                                             const G1Rules& integer_rules = {}) {
  VerificationReport report("transport15");
  std::vector<CheckedInt> counts(n_max + 1, CheckedInt{0});
  G2Search s;
  s.max_cost = n_max;
  s.rules = colored_rules;
  for_each_g2(s, [](const ColoredPart& p) { return substitute_15(p); }, [&](const G2Candidate& c) {
    std::vector<int> image;
    for (const auto& p : c.nonquaternary) image.push_back(substitute_15(p));
    for (const auto& p : c.quaternary) image.push_back(substitute_15(p));
    IntegerPartition ip(std::move(image));
    if (!is_valid_g1(ip, integer_rules))
      report.fail({c.partition().to_string(), c.cost, {}, ip.to_string(), "image violates mod-15 conditions"});
    counts[c.cost] += 1;
  });
  report.absorb(detail::compare_counts("transport15", counts, g1_counts(n_max, integer_rules)));
  return report;
}

/// Same for the three-letter alphabet under substitute_6 and the mod-6 theorem.
inline VerificationReport transport_check_6(int n_max) {
  VerificationReport report("transport6");
  std::vector<CheckedInt> counts(n_max + 1, CheckedInt{0});
  G2Search s;
  s.max_cost = n_max;
  s.alphabet = kThreeLetterColors;
  for_each_g2(s, [](const ColoredPart& p) { return substitute_6(p); }, [&](const G2Candidate& c) {
    std::vector<int> image;
    for (const auto& p : c.nonquaternary) image.push_back(substitute_6(p));
    IntegerPartition ip(std::move(image));
    if (!is_valid_gg(ip)) report.fail({c.partition().to_string(), c.cost, {}, ip.to_string(), "image violates mod-6 conditions"});
    counts[c.cost] += 1;
  });
  report.absorb(detail::compare_counts("transport6", counts, gg_counts(n_max)));
  return report;
}

}  // namespace qpart
