#pragma once

// Weighted words over four primary letters A, B, C, D.
//
// The alphabet has eleven colors: the four primaries, the six secondary pairs
// and the quaternary ABCD. Ternary colors are not part of the alphabet. Parts
// are ordered by weight, and equal weights by color rank:
//
//   ABCD < AB < AC < AD < A < BC < BD < B < CD < C < D

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "qpart/checked_int.hpp"
#include "qpart/parallel.hpp"
#include "qpart/report.hpp"
#include "qpart/series.hpp"

namespace qpart {

/// Declared in frequency-vector order (a, b, c, d, ab, ac, ad, bc, bd, cd, Q).
enum class Color : std::uint8_t { A, B, C, D, AB, AC, AD, BC, BD, CD, ABCD };

inline constexpr int kColorCount = 11;
inline constexpr std::array<Color, kColorCount> kAllColors = {Color::A,  Color::B,  Color::C,  Color::D,
                                                               Color::AB, Color::AC, Color::AD, Color::BC,
                                                               Color::BD, Color::CD, Color::ABCD};

enum class ColorKind { primary, secondary, quaternary };

struct ColorInfo {
  std::string_view name;
  ColorKind kind;
  std::uint8_t letters;  // bit x set when letter x (0 = A .. 3 = D) is a component
  int rank;
  int min_weight;
};

namespace detail {
inline constexpr std::array<ColorInfo, kColorCount> kColorTable = {{
    {"A", ColorKind::primary, 0b0001, 4, 1},
    {"B", ColorKind::primary, 0b0010, 7, 1},
    {"C", ColorKind::primary, 0b0100, 9, 1},
    {"D", ColorKind::primary, 0b1000, 10, 1},
    {"AB", ColorKind::secondary, 0b0011, 1, 2},
    {"AC", ColorKind::secondary, 0b0101, 2, 2},
    {"AD", ColorKind::secondary, 0b1001, 3, 2},
    {"BC", ColorKind::secondary, 0b0110, 5, 2},
    {"BD", ColorKind::secondary, 0b1010, 6, 2},
    {"CD", ColorKind::secondary, 0b1100, 8, 2},
    {"ABCD", ColorKind::quaternary, 0b1111, 0, 4},
}};
}  // namespace detail

constexpr const ColorInfo& info(Color c) { return detail::kColorTable[static_cast<int>(c)]; }
constexpr int index_of(Color c) { return static_cast<int>(c); }
constexpr int rank(Color c) { return info(c).rank; }
constexpr int min_weight(Color c) { return info(c).min_weight; }
constexpr ColorKind kind(Color c) { return info(c).kind; }
constexpr bool is_primary(Color c) { return kind(c) == ColorKind::primary; }
constexpr bool is_quaternary(Color c) { return kind(c) == ColorKind::quaternary; }
constexpr bool has_letter(Color c, int letter) { return (info(c).letters >> letter) & 1u; }
constexpr std::string_view name(Color c) { return info(c).name; }

/// Colors sorted by rank, lowest first.
inline constexpr std::array<Color, kColorCount> kColorsByRank = [] {
  std::array<Color, kColorCount> out{};
  for (Color c : kAllColors) out[rank(c)] = c;
  return out;
}();

inline std::optional<Color> parse_color(std::string_view s) {
  for (Color c : kAllColors)
    if (name(c) == s) return c;
  return std::nullopt;
}

/// Bitmask over colors (bit index_of(c)).
class ColorSet {
 public:
  constexpr ColorSet() = default;
  constexpr ColorSet(std::initializer_list<Color> colors) {
    for (Color c : colors) bits_ |= 1u << index_of(c);
  }
  static constexpr ColorSet all() {
    ColorSet s;
    s.bits_ = (1u << kColorCount) - 1;
    return s;
  }
  constexpr bool contains(Color c) const { return (bits_ >> index_of(c)) & 1u; }

 private:
  std::uint32_t bits_ = 0;
};

/// The three-letter alphabet with D-bearing colors and ABCD removed.
inline constexpr ColorSet kThreeLetterColors = {Color::A, Color::B, Color::C, Color::AB, Color::AC, Color::BC};

/// The symbol color_weight, e.g. AB_5.
struct ColoredPart {
  Color color = Color::A;
  int weight = 1;

  constexpr ColoredPart() = default;
  constexpr ColoredPart(Color c, int w) : color(c), weight(w) {
    if (w < min_weight(c)) throw DomainError("ColoredPart: weight below the color's minimum");
  }

  std::string to_string() const { return std::string(name(color)) + "_" + std::to_string(weight); }

  friend constexpr bool operator==(const ColoredPart&, const ColoredPart&) = default;
};

/// Symbol order: weight first, then color rank.
constexpr std::strong_ordering compare_symbols(const ColoredPart& x, const ColoredPart& y) {
  if (auto c = x.weight <=> y.weight; c != 0) return c;
  return rank(x.color) <=> rank(y.color);
}

constexpr bool symbol_less(const ColoredPart& x, const ColoredPart& y) { return compare_symbols(x, y) < 0; }

inline std::optional<ColoredPart> parse_part(std::string_view s) {
  const auto us = s.find('_');
  if (us == std::string_view::npos) return std::nullopt;
  auto c = parse_color(s.substr(0, us));
  if (!c) return std::nullopt;
  int w = 0;
  for (char ch : s.substr(us + 1)) {
    if (ch < '0' || ch > '9') return std::nullopt;
    w = w * 10 + (ch - '0');
  }
  if (us + 1 == s.size() || w < min_weight(*c)) return std::nullopt;
  return ColoredPart(*c, w);
}

/// A multiset of colored parts stored in non-increasing symbol order.
///
/// Repeated symbols are representable so that the validity predicates can
/// reject them; every partition a predicate accepts is strictly decreasing.
class ColoredPartition {
 public:
  ColoredPartition() = default;
  ColoredPartition(std::initializer_list<ColoredPart> parts) : ColoredPartition(std::vector<ColoredPart>(parts)) {}
  explicit ColoredPartition(std::vector<ColoredPart> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end(), [](const auto& x, const auto& y) { return symbol_less(y, x); });
    for (const auto& p : parts_) total_ += p.weight;
  }

  std::span<const ColoredPart> parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  int total() const { return total_; }
  bool contains(const ColoredPart& p) const { return std::find(parts_.begin(), parts_.end(), p) != parts_.end(); }

  std::string to_string() const {
    if (parts_.empty()) return "[]";
    std::string s;
    for (const auto& p : parts_) s += (s.empty() ? "" : " ") + p.to_string();
    return s;
  }

  friend bool operator==(const ColoredPartition&, const ColoredPartition&) = default;

 private:
  std::vector<ColoredPart> parts_;
  int total_ = 0;
};

/// Part counts per color. Note ab is the number of AB parts, not a*b.
class FreqVector {
 public:
  constexpr FreqVector() = default;
  /// Counts in the order a, b, c, d, ab, ac, ad, bc, bd, cd, Q.
  constexpr explicit FreqVector(std::array<int, kColorCount> counts) : counts_(counts) {
    for (int v : counts_)
      if (v < 0) throw DomainError("FreqVector: negative frequency");
  }

  constexpr int operator[](Color c) const { return counts_[index_of(c)]; }
  constexpr int& operator[](Color c) { return counts_[index_of(c)]; }
  constexpr const std::array<int, kColorCount>& counts() const { return counts_; }

  constexpr int a() const { return counts_[0]; }
  constexpr int b() const { return counts_[1]; }
  constexpr int c() const { return counts_[2]; }
  constexpr int d() const { return counts_[3]; }
  constexpr int ab() const { return counts_[4]; }
  constexpr int ac() const { return counts_[5]; }
  constexpr int ad() const { return counts_[6]; }
  constexpr int bc() const { return counts_[7]; }
  constexpr int bd() const { return counts_[8]; }
  constexpr int cd() const { return counts_[9]; }
  constexpr int Q() const { return counts_[10]; }

  /// Number of nonquaternary parts.
  constexpr int tau() const {
    int t = 0;
    for (int x = 0; x < 10; ++x) t += counts_[x];
    return t;
  }

  std::string to_string() const {
    std::string s = "(";
    for (int x = 0; x < kColorCount; ++x) {
      if (x) s += ',';
      s += std::to_string(counts_[x]);
    }
    return s + ")";
  }

  friend constexpr bool operator==(const FreqVector&, const FreqVector&) = default;
  friend constexpr auto operator<=>(const FreqVector&, const FreqVector&) = default;

 private:
  std::array<int, kColorCount> counts_{};
};

struct FreqVectorHash {
  std::size_t operator()(const FreqVector& f) const {
    std::size_t h = 0;
    for (int v : f.counts()) h = h * 31 + static_cast<std::size_t>(v);
    return h;
  }
};

inline FreqVector freq_vector(const ColoredPartition& p) {
  FreqVector f;
  for (const auto& part : p.parts()) ++f[part.color];
  return f;
}

/// (i, j, k, l): the number of A, B, C, D components over all parts.
constexpr MarkerExponents constraints_image(const FreqVector& f) {
  MarkerExponents m;
  for (Color c : kAllColors)
    for (int x = 0; x < 4; ++x)
      if (has_letter(c, x)) m[x] += f[c];
  return m;
}

/// Calls fn(f) for every FreqVector with constraints_image(f) == target, in
/// lexicographic order of (Q, ab, ac, ad, bc, bd, cd).
template <class Fn>
void for_each_fiber_cell(const MarkerExponents& target, Fn&& fn) {
  const auto [i, j, k, l] = target;
  const int q_max = std::min({i, j, k, l});
  for (int Q = 0; Q <= q_max; ++Q)
    for (int ab = 0; ab <= std::min(i, j) - Q; ++ab)
      for (int ac = 0; ac <= std::min(i - Q - ab, k - Q); ++ac)
        for (int ad = 0; ad <= std::min(i - Q - ab - ac, l - Q); ++ad)
          for (int bc = 0; bc <= std::min(j - Q - ab, k - Q - ac); ++bc)
            for (int bd = 0; bd <= std::min(j - Q - ab - bc, l - Q - ad); ++bd)
              for (int cd = 0; cd <= std::min(k - Q - ac - bc, l - Q - ad - bd); ++cd) {
                const int a = i - Q - ab - ac - ad;
                const int b = j - Q - ab - bc - bd;
                const int c = k - Q - ac - bc - cd;
                const int d = l - Q - ad - bd - cd;
                fn(FreqVector({a, b, c, d, ab, ac, ad, bc, bd, cd, Q}));
              }
}

inline std::vector<FreqVector> fiber(const MarkerExponents& target) {
  std::vector<FreqVector> out;
  for_each_fiber_cell(target, [&](const FreqVector& f) { out.push_back(f); });
  return out;
}

// ---------------------------------------------------------------------------
// Validity

/// Numeric knobs of the quaternary rules. Defaults are the theorem; tests
/// perturb them to confirm the checks can fail.
struct G2Rules {
  int quaternary_gap = 4;
  int bound_base_with_a1 = 3;
  int bound_base = 4;
  int bound_per_tau = 2;

  int quaternary_bound(int tau, bool has_a1) const {
    return (has_a1 ? bound_base_with_a1 : bound_base) + bound_per_tau * tau;
  }
};

/// Whether `larger` may directly follow `smaller` in a chain of nonquaternary
/// parts: weights differ by at least 2, or by exactly 1 when both share one
/// primary color or when larger's color outranks smaller's.
constexpr bool nonquaternary_step_allowed(const ColoredPart& larger, const ColoredPart& smaller) {
  const int diff = larger.weight - smaller.weight;
  if (diff >= 2) return true;
  if (diff != 1) return false;
  if (larger.color == smaller.color && is_primary(larger.color)) return true;
  return rank(larger.color) > rank(smaller.color);
}

inline bool is_valid_p2(const ColoredPartition& p) {
  const auto parts = p.parts();
  for (std::size_t x = 0; x < parts.size(); ++x) {
    if (!is_primary(parts[x].color)) return false;
    if (x > 0 && parts[x] == parts[x - 1]) return false;
  }
  return true;
}

namespace detail {
inline bool nonquaternary_chain_valid(std::span<const ColoredPart> parts) {
  const ColoredPart* prev = nullptr;
  for (const auto& p : parts) {
    if (is_quaternary(p.color)) continue;
    if (prev && !nonquaternary_step_allowed(*prev, p)) return false;
    prev = &p;
  }
  return true;
}
}  // namespace detail

inline bool is_valid_g2(const ColoredPartition& p, const G2Rules& rules = {}) {
  const auto parts = p.parts();
  if (!detail::nonquaternary_chain_valid(parts)) return false;
  int tau = 0;
  bool has_a1 = false;
  const ColoredPart* prev_quaternary = nullptr;
  int least_quaternary = 0;
  for (const auto& part : parts) {
    if (is_quaternary(part.color)) {
      if (prev_quaternary && prev_quaternary->weight - part.weight < rules.quaternary_gap) return false;
      prev_quaternary = &part;
      least_quaternary = part.weight;
    } else {
      ++tau;
      has_a1 = has_a1 || part == ColoredPart(Color::A, 1);
    }
  }
  if (prev_quaternary && least_quaternary < rules.quaternary_bound(tau, has_a1)) return false;
  return true;
}

/// Validity for the three-letter theorem: colors A, B, C, AB, AC, BC under the
/// nonquaternary step rule.
inline bool is_valid_ga(const ColoredPartition& p) {
  for (const auto& part : p.parts())
    if (!kThreeLetterColors.contains(part.color)) return false;
  return detail::nonquaternary_chain_valid(p.parts());
}

// ---------------------------------------------------------------------------
// Enumeration

inline constexpr int kUnbounded = std::numeric_limits<int>::max() / 4;

/// Bounds for a G-side search. `cost` of a part defaults to its weight; the
/// dilated theorems reuse the search with the substituted integer as cost.
struct G2Search {
  int max_cost = 0;
  MarkerExponents letter_caps{kUnbounded, kUnbounded, kUnbounded, kUnbounded};
  std::array<int, kColorCount> color_caps = [] {
    std::array<int, kColorCount> a{};
    a.fill(kUnbounded);
    return a;
  }();
  ColorSet alphabet = ColorSet::all();
  G2Rules rules;
};

/// A complete G-side partition as produced by the search: the nonquaternary
/// and quaternary chains, both in decreasing order.
struct G2Candidate {
  std::span<const ColoredPart> nonquaternary;
  std::span<const ColoredPart> quaternary;
  int cost = 0;
  const FreqVector& freq;

  ColoredPartition partition() const {
    std::vector<ColoredPart> all(nonquaternary.begin(), nonquaternary.end());
    all.insert(all.end(), quaternary.begin(), quaternary.end());
    return ColoredPartition(std::move(all));
  }
};

namespace detail {

template <class Cost, class Visit>
class G2Walker {
 public:
  G2Walker(const G2Search& search, Cost& cost, Visit& visit) : s_(search), cost_(cost), visit_(visit) {
    for (Color c : kColorsByRank)
      if (!is_quaternary(c) && s_.alphabet.contains(c)) nonquaternary_colors_.push_back(c);
  }

  void run() {
    nonquaternary_step(0);
  }

 private:
  bool can_take(Color c) const {
    if (freq_[c] >= s_.color_caps[index_of(c)]) return false;
    for (int x = 0; x < 4; ++x)
      if (has_letter(c, x) && letters_[x] >= s_.letter_caps[x]) return false;
    return true;
  }
  void take(const ColoredPart& p, int cost) {
    ++freq_[p.color];
    for (int x = 0; x < 4; ++x)
      if (has_letter(p.color, x)) ++letters_[x];
    used_ += cost;
  }
  void untake(const ColoredPart& p, int cost) {
    --freq_[p.color];
    for (int x = 0; x < 4; ++x)
      if (has_letter(p.color, x)) --letters_[x];
    used_ -= cost;
  }

  // chain_ holds the nonquaternary parts smallest first.
  void nonquaternary_step(int min_weight_next) {
    quaternary_completions();
    // copied: push_back below may reallocate chain_
    const bool has_last = !chain_.empty();
    const ColoredPart last = has_last ? chain_.back() : ColoredPart{};
    for (int w = std::max(1, min_weight_next);; ++w) {
      bool any_affordable = false;
      for (Color c : nonquaternary_colors_) {
        if (w < min_weight(c)) continue;
        const ColoredPart p(c, w);
        const int cost = cost_(p);
        if (used_ + cost > s_.max_cost) continue;
        any_affordable = true;
        if (!can_take(c)) continue;
        if (has_last && !nonquaternary_step_allowed(p, last)) continue;
        take(p, cost);
        chain_.push_back(p);
        nonquaternary_step(w + 1);
        chain_.pop_back();
        untake(p, cost);
      }
      if (!any_affordable && w >= 4) break;  // every color is available from weight 4 on
    }
  }

  void quaternary_completions() {
    if (!s_.alphabet.contains(Color::ABCD)) {
      emit();
      return;
    }
    const int tau = static_cast<int>(chain_.size());
    const bool has_a1 = std::find(chain_.begin(), chain_.end(), ColoredPart(Color::A, 1)) != chain_.end();
    const int bound = std::max(min_weight(Color::ABCD), s_.rules.quaternary_bound(tau, has_a1));
    quaternary_step(bound);
  }

  // quaternary_ holds quaternary parts smallest first.
  void quaternary_step(int min_weight_next) {
    emit();
    if (!can_take(Color::ABCD)) return;
    for (int w = min_weight_next;; ++w) {
      const ColoredPart p(Color::ABCD, w);
      const int cost = cost_(p);
      if (used_ + cost > s_.max_cost) break;
      take(p, cost);
      quaternary_.push_back(p);
      quaternary_step(w + std::max(1, s_.rules.quaternary_gap));
      quaternary_.pop_back();
      untake(p, cost);
    }
  }

  void emit() {
    desc_nonquaternary_.assign(chain_.rbegin(), chain_.rend());
    desc_quaternary_.assign(quaternary_.rbegin(), quaternary_.rend());
    visit_(G2Candidate{desc_nonquaternary_, desc_quaternary_, used_, freq_});
  }

  const G2Search& s_;
  Cost& cost_;
  Visit& visit_;
  std::vector<Color> nonquaternary_colors_;
  std::vector<ColoredPart> chain_, quaternary_, desc_nonquaternary_, desc_quaternary_;
  FreqVector freq_;
  MarkerExponents letters_;
  int used_ = 0;
};

}  // namespace detail

/// Visits every G-side partition (valid under search.rules) whose total cost
/// is at most search.max_cost and which respects the letter and color caps.
/// `cost` must be positive and increasing in symbol order.
template <class Cost, class Visit>
void for_each_g2(const G2Search& search, Cost cost, Visit visit) {
  detail::G2Walker<Cost, Visit> walker(search, cost, visit);
  walker.run();
}

template <class Visit>
void for_each_g2(const G2Search& search, Visit visit) {
  for_each_g2(search, [](const ColoredPart& p) { return p.weight; }, std::move(visit));
}

/// All valid G-side partitions of exactly n, in enumeration order.
inline std::vector<ColoredPartition> enumerate_g2(int n, const G2Rules& rules = {}) {
  G2Search s;
  s.max_cost = n;
  s.rules = rules;
  std::vector<ColoredPartition> out;
  for_each_g2(s, [&](const G2Candidate& c) {
    if (c.cost == n) out.push_back(c.partition());
  });
  return out;
}

/// G(n; f): valid G-side partitions of n with exactly the frequencies f.
inline CheckedInt count_g2(int n, const FreqVector& f, const G2Rules& rules = {}) {
  G2Search s;
  s.max_cost = n;
  s.rules = rules;
  s.color_caps = f.counts();
  CheckedInt count = 0;
  for_each_g2(s, [&](const G2Candidate& c) {
    if (c.cost == n && c.freq == f) count += 1;
  });
  return count;
}

/// Counts of valid G-side partitions keyed by (n, frequency vector).
class G2Tally {
 public:
  void add(int n, const FreqVector& f) {
    auto& row = by_total_.try_emplace(n).first->second;
    row[f] += 1;
  }

  CheckedInt count(int n, const FreqVector& f) const {
    auto it = by_total_.find(n);
    if (it == by_total_.end()) return 0;
    auto jt = it->second.find(f);
    return jt == it->second.end() ? CheckedInt{0} : jt->second;
  }

  /// Sum of count(n, f) over the constraint fiber of target.
  CheckedInt fiber_sum(int n, const MarkerExponents& target) const {
    CheckedInt sum = 0;
    if (!by_total_.contains(n)) return sum;
    for_each_fiber_cell(target, [&](const FreqVector& f) { sum += count(n, f); });
    return sum;
  }

  const std::map<int, std::unordered_map<FreqVector, CheckedInt, FreqVectorHash>>& rows() const { return by_total_; }

 private:
  std::map<int, std::unordered_map<FreqVector, CheckedInt, FreqVectorHash>> by_total_;
};

inline G2Tally tally_g2(int n_max, const MarkerExponents& letter_caps, const G2Rules& rules = {},
                        ColorSet alphabet = ColorSet::all()) {
  G2Search s;
  s.max_cost = n_max;
  s.letter_caps = letter_caps;
  s.rules = rules;
  s.alphabet = alphabet;
  G2Tally tally;
  for_each_g2(s, [&](const G2Candidate& c) { tally.add(c.cost, c.freq); });
  return tally;
}

// ---------------------------------------------------------------------------
// P-side counts

/// Number of partitions of m into exactly r distinct positive parts, for
/// m <= max_total and r <= max_parts.
class DistinctPartsTable {
 public:
  DistinctPartsTable(int max_total, int max_parts)
      : max_total_(max_total), max_parts_(max_parts), table_((max_total + 1) * (max_parts + 1), CheckedInt{0}) {
    at(0, 0) = 1;
    for (int part = 1; part <= max_total; ++part)
      for (int m = max_total; m >= part; --m)
        for (int r = max_parts; r >= 1; --r) at(m, r) += at(m - part, r - 1);
  }

  CheckedInt operator()(int m, int r) const {
    if (m < 0 || r < 0 || m > max_total_ || r > max_parts_) return 0;
    return table_[m * (max_parts_ + 1) + r];
  }

 private:
  CheckedInt& at(int m, int r) { return table_[m * (max_parts_ + 1) + r]; }

  int max_total_, max_parts_;
  std::vector<CheckedInt> table_;
};

/// P(n; i, j, k, l): partitions of n into four colors of distinct parts with
/// the given number of parts per color.
inline CheckedInt count_p2(int n, const MarkerExponents& target, const DistinctPartsTable& table) {
  if (n < 0) return 0;
  CheckedInt total = 0;
  for (int n1 = 0; n1 <= n; ++n1) {
    const CheckedInt c1 = table(n1, target.i);
    if (c1 == 0) continue;
    for (int n2 = 0; n1 + n2 <= n; ++n2) {
      const CheckedInt c2 = table(n2, target.j);
      if (c2 == 0) continue;
      for (int n3 = 0; n1 + n2 + n3 <= n; ++n3) {
        const CheckedInt c3 = table(n3, target.k);
        if (c3 == 0) continue;
        total += c1 * c2 * c3 * table(n - n1 - n2 - n3, target.l);
      }
    }
  }
  return total;
}

inline CheckedInt count_p2(int n, const MarkerExponents& target) {
  if (n < 0) return 0;
  return count_p2(n, target, DistinctPartsTable(n, std::max({target.i, target.j, target.k, target.l})));
}

// ---------------------------------------------------------------------------
// Verification

namespace detail {

inline std::string cell_label(int n, const MarkerExponents& m, int letters) {
  static constexpr std::string_view kNames[] = {"(i)", "(i,j)", "(i,j,k)", "(i,j,k,l)"};
  std::string s = "n=" + std::to_string(n) + " " + std::string(kNames[letters - 1]) + "=(";
  for (int x = 0; x < letters; ++x) s += (x ? "," : "") + std::to_string(m[x]);
  return s + ")";
}

inline std::vector<MarkerExponents> marker_box(const MarkerExponents& cap) {
  std::vector<MarkerExponents> out;
  for (int i = 0; i <= cap.i; ++i)
    for (int j = 0; j <= cap.j; ++j)
      for (int k = 0; k <= cap.k; ++k)
        for (int l = 0; l <= cap.l; ++l) out.push_back({i, j, k, l});
  return out;
}

inline VerificationReport compare_fibers(std::string name, int n_max, const MarkerExponents& cap, const G2Tally& tally,
                                         int letters) {
  VerificationReport report(std::move(name));
  const DistinctPartsTable table(std::max(n_max, 0), std::max({cap.i, cap.j, cap.k, cap.l}));
  for (int n = 0; n <= n_max; ++n) {
    for (const auto& target : marker_box(cap)) {
      ++report.cells_checked;
      const CheckedInt g = tally.fiber_sum(n, target);
      const CheckedInt p = count_p2(n, target, table);
      if (g != p) report.fail({cell_label(n, target, letters), n, target, to_string(g), to_string(p)});
    }
  }
  return report;
}

}  // namespace detail

/// Checks sum over the constraint fiber of G(n; f) against P(n; i, j, k, l)
/// for all n <= n_max and all (i, j, k, l) <= ijkl_max componentwise.
inline VerificationReport verify_theorem2(int n_max, const MarkerExponents& ijkl_max, const G2Rules& rules = {}) {
  const G2Tally tally = tally_g2(n_max, ijkl_max, rules);
  return detail::compare_fibers("thm2", n_max, ijkl_max, tally, 4);
}

inline VerificationReport verify_theorem2(int n_max, int ijkl_max, const G2Rules& rules = {}) {
  return verify_theorem2(n_max, MarkerExponents{ijkl_max, ijkl_max, ijkl_max, ijkl_max}, rules);
}

/// Three-letter P-side count P(n; i, j, k).
inline CheckedInt count_pa(int n, int i, int j, int k) { return count_p2(n, {i, j, k, 0}); }

/// Three-letter G-side count for frequencies (a, b, c, ab, ac, bc).
inline CheckedInt count_ga(int n, std::array<int, 6> freq) {
  const FreqVector f({freq[0], freq[1], freq[2], 0, freq[3], freq[4], 0, freq[5], 0, 0, 0});
  G2Search s;
  s.max_cost = n;
  s.alphabet = kThreeLetterColors;
  s.color_caps = f.counts();
  CheckedInt count = 0;
  for_each_g2(s, [&](const G2Candidate& c) {
    if (c.cost == n && c.freq == f) count += 1;
  });
  return count;
}

inline G2Tally tally_ga(int n_max, int ijk_max) {
  return tally_g2(n_max, {ijk_max, ijk_max, ijk_max, 0}, {}, kThreeLetterColors);
}

inline VerificationReport verify_theorem_a(int n_max, int ijk_max) {
  return detail::compare_fibers("thmA", n_max, {ijk_max, ijk_max, ijk_max, 0}, tally_ga(n_max, ijk_max), 3);
}

}  // namespace qpart
