#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "properties.hpp"
#include "qpart/colored.hpp"

using namespace qpart;

namespace {

ColoredPart P(std::string_view s) { return parse_part(s).value(); }

FreqVector freq(std::initializer_list<std::pair<Color, int>> counts) {
  FreqVector f;
  for (auto [c, n] : counts) f[c] = n;
  return f;
}

}  // namespace

TEST(Colors, RankChain) {
  const std::vector<std::string> expect = {"ABCD", "AB", "AC", "AD", "A", "BC", "BD", "B", "CD", "C", "D"};
  for (int r = 0; r < kColorCount; ++r) EXPECT_EQ(name(kColorsByRank[r]), expect[r]);
  EXPECT_EQ(min_weight(Color::A), 1);
  EXPECT_EQ(min_weight(Color::BD), 2);
  EXPECT_EQ(min_weight(Color::ABCD), 4);
  EXPECT_FALSE(parse_color("ABC").has_value());  // no ternary colors
}

TEST(Colors, PartsRespectMinimumWeight) {
  EXPECT_THROW(ColoredPart(Color::AB, 1), DomainError);
  EXPECT_THROW(ColoredPart(Color::ABCD, 3), DomainError);
  EXPECT_FALSE(parse_part("AB_1").has_value());
  EXPECT_FALSE(parse_part("A_").has_value());
  EXPECT_EQ(P("CD_7"), ColoredPart(Color::CD, 7));
}

TEST(CompareSymbols, Examples) {
  EXPECT_TRUE(symbol_less(P("AB_5"), P("A_5")));
  EXPECT_TRUE(symbol_less(P("A_3"), P("D_3")));
  EXPECT_TRUE(symbol_less(P("C_2"), P("ABCD_4")));
  EXPECT_EQ(compare_symbols(P("B_2"), P("B_2")), std::strong_ordering::equal);
}

TEST(CompareSymbols, TotalOrderRandom) {
  const auto o = props::order_totality(1000);
  EXPECT_TRUE(o.ok()) << *o.failure;
}

TEST(Validity, PSideExamples) {
  EXPECT_TRUE(is_valid_p2({}));
  EXPECT_TRUE(is_valid_p2({P("A_2"), P("A_1"), P("B_1")}));
  EXPECT_FALSE(is_valid_p2({P("AB_2")}));
  EXPECT_FALSE(is_valid_p2({P("A_2"), P("A_2")}));
}

TEST(Validity, GSideExamples) {
  EXPECT_TRUE(is_valid_g2({P("D_2"), P("A_1")}));
  EXPECT_FALSE(is_valid_g2({P("A_2"), P("D_1")}));
  EXPECT_TRUE(is_valid_g2({P("ABCD_4")}));
  EXPECT_FALSE(is_valid_g2({P("ABCD_4"), P("A_1")}));
  EXPECT_FALSE(is_valid_g2({P("AB_3"), P("AB_2")}));
  EXPECT_TRUE(is_valid_g2({P("A_2"), P("A_1")}));  // same primary color
  EXPECT_FALSE(is_valid_g2({P("B_2"), P("B_2")}));
  EXPECT_FALSE(is_valid_g2({P("ABCD_8"), P("ABCD_5")}));
  EXPECT_TRUE(is_valid_g2({P("ABCD_9"), P("ABCD_5")}));
  // a quaternary part may share a weight with a nonquaternary one
  EXPECT_TRUE(is_valid_g2({P("ABCD_6"), P("C_6")}));
  EXPECT_FALSE(is_valid_g2({P("ABCD_5"), P("C_6")}));  // bound 4 + 2
  EXPECT_TRUE(is_valid_g2({P("ABCD_5"), P("A_1")}));   // bound 3 + 2 with A_1
  EXPECT_FALSE(is_valid_g2({P("ABCD_5"), P("B_1")}));  // bound 4 + 2 otherwise
  EXPECT_TRUE(is_valid_g2({P("ABCD_6"), P("B_1")}));
}

TEST(Validity, ThreeLetterExamples) {
  EXPECT_TRUE(is_valid_ga({P("BC_2"), P("A_1")}));
  EXPECT_FALSE(is_valid_ga({P("D_2"), P("A_1")}));
}

TEST(Validity, PredicateAgreesWithOracleOnRandomPartitions) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> size(0, 4);
  for (int c = 0; c < 1000; ++c) {
    std::vector<ColoredPart> parts;
    std::vector<oracle::Symbol> symbols;
    for (int s = size(rng); s > 0; --s) {
      const ColoredPart p = oracle::random_part(rng, 9);
      parts.push_back(p);
      symbols.push_back({std::string(name(p.color)), p.weight});
    }
    const ColoredPartition cp(parts);
    EXPECT_EQ(is_valid_g2(cp), oracle::g2_valid(symbols)) << cp.to_string();
  }
}

TEST(FreqVectors, Examples) {
  EXPECT_EQ(freq_vector({}), FreqVector{});
  const FreqVector f = freq_vector({P("D_2"), P("A_1")});
  EXPECT_EQ(f, freq({{Color::A, 1}, {Color::D, 1}}));
  EXPECT_EQ(f.tau(), 2);
  const FreqVector q = freq_vector({P("ABCD_4")});
  EXPECT_EQ(q.Q(), 1);
  EXPECT_EQ(q.tau(), 0);
}

TEST(FreqVectors, ConstraintImageExamples) {
  EXPECT_EQ(constraints_image(FreqVector{}), (MarkerExponents{0, 0, 0, 0}));
  EXPECT_EQ(constraints_image(freq({{Color::ABCD, 1}})), (MarkerExponents{1, 1, 1, 1}));
  EXPECT_EQ(constraints_image(freq({{Color::A, 1}, {Color::BC, 1}})), (MarkerExponents{1, 1, 1, 0}));
}

TEST(FreqVectors, ConstraintImageCountsLetters) {
  for (int n = 0; n <= 10; ++n)
    for (const auto& p : enumerate_g2(n)) {
      MarkerExponents letters;
      for (const auto& part : p.parts())
        for (int x = 0; x < 4; ++x) letters[x] += has_letter(part.color, x) ? 1 : 0;
      EXPECT_EQ(constraints_image(freq_vector(p)), letters) << p.to_string();
    }
}

TEST(FreqVectors, FiberIsExactlyThePreimage) {
  const MarkerExponents t{2, 1, 2, 1};
  const auto cells = fiber(t);
  EXPECT_EQ(std::set<FreqVector>(cells.begin(), cells.end()).size(), cells.size());
  for (const auto& f : cells) EXPECT_EQ(constraints_image(f), t);
  // brute force over all frequency vectors with entries <= 2
  int brute = 0;
  std::array<int, kColorCount> v{};
  std::function<void(int)> rec = [&](int x) {
    if (x == kColorCount) {
      brute += constraints_image(FreqVector(v)) == t ? 1 : 0;
      return;
    }
    for (v[x] = 0; v[x] <= 2; ++v[x]) rec(x + 1);
  };
  rec(0);
  EXPECT_EQ(static_cast<int>(cells.size()), brute);
}

TEST(CountP2, Examples) {
  EXPECT_EQ(count_p2(1, {1, 0, 0, 0}), 1);
  EXPECT_EQ(count_p2(3, {1, 1, 0, 0}), 2);
  EXPECT_EQ(count_p2(0, {0, 0, 0, 0}), 1);
}

TEST(CountP2, MatchesBruteForce) {
  for (int n = 0; n <= 14; ++n)
    for (const auto& t : detail::marker_box({3, 3, 2, 2}))
      EXPECT_EQ(count_p2(n, t), oracle::brute_p2(n, t)) << n << " " << t.to_string();
}

TEST(CountP2, SingleLetterGeneratingFunction) {
  const int N = 30;
  for (int i = 0; triangular(i) <= N; ++i) {
    const Series gf = shift_degree(invert(pochhammer(1, i, N)), static_cast<int>(triangular(i)));
    for (int n = 0; n <= N; ++n) EXPECT_EQ(count_p2(n, {i, 0, 0, 0}), gf.coefficient(n)) << i << " " << n;
  }
}

TEST(CountG2, Examples) {
  EXPECT_EQ(count_g2(0, FreqVector{}), 1);
  EXPECT_EQ(count_g2(1, freq({{Color::A, 1}})), 1);
  EXPECT_EQ(count_g2(3, freq({{Color::A, 1}, {Color::D, 1}})), 1);
  const auto three = enumerate_g2(3);
  EXPECT_NE(std::find(three.begin(), three.end(), ColoredPartition{P("D_2"), P("A_1")}), three.end());
  EXPECT_EQ(std::find(three.begin(), three.end(), ColoredPartition{P("A_2"), P("D_1")}), three.end());
}

TEST(CountG2, MatchesNaiveOracle) {
  const int n_max = 12;
  const auto naive = oracle::naive_g2_tally(n_max);
  for (const auto& [key, count] : naive) EXPECT_EQ(count_g2(key.first, key.second), count) << key.second.to_string();
  for (int n = 0; n <= n_max; ++n) {
    std::int64_t naive_total = 0;
    for (const auto& [key, count] : naive) naive_total += key.first == n ? count : 0;
    const auto listed = enumerate_g2(n);
    EXPECT_EQ(static_cast<std::int64_t>(listed.size()), naive_total) << n;
    for (const auto& p : listed) {
      EXPECT_TRUE(is_valid_g2(p)) << p.to_string();
      EXPECT_EQ(p.total(), n);
    }
  }
}

TEST(CountG2, ZeroBelowMinimumTotal) {
  const FreqVector f = freq({{Color::A, 2}, {Color::BC, 1}, {Color::ABCD, 1}});
  // distinct A parts >= 1 + 2, a BC part >= 2, a quaternary part >= 4
  for (int n = 0; n < 9; ++n) EXPECT_EQ(count_g2(n, f), 0) << n;
}

TEST(Theorem2, Verifies) {
  EXPECT_TRUE(verify_theorem2(0, 0).passed());
  const auto r = verify_theorem2(16, 2);
  EXPECT_TRUE(r.passed()) << r.to_text();
}

TEST(Theorem2, LooserQuaternaryBoundIsCaught) {
  G2Rules loose;
  loose.bound_base = 3;
  const auto r = verify_theorem2(16, 2, loose);
  EXPECT_FALSE(r.passed());
  ASSERT_TRUE(r.counterexample.has_value());
  EXPECT_NE(r.counterexample->lhs, r.counterexample->rhs);
}

TEST(TheoremA, Verifies) {
  EXPECT_EQ(count_pa(1, 1, 0, 0), 1);
  const auto r = verify_theorem_a(20, 3);
  EXPECT_TRUE(r.passed()) << r.to_text();
  EXPECT_EQ(count_ga(3, {1, 0, 0, 0, 0, 1}), 1);  // BC_2 A_1
}

TEST(TheoremA, AgreesWithFourLetterSliceCellByCell) {
  const int n_max = 20;
  const G2Tally three = tally_ga(n_max, 3);
  const G2Tally four = tally_g2(n_max, {3, 3, 3, 0});
  for (int n = 0; n <= n_max; ++n)
    for (const auto& t : detail::marker_box({3, 3, 3, 0})) {
      EXPECT_EQ(three.fiber_sum(n, t), four.fiber_sum(n, t)) << n << " " << t.to_string();
      EXPECT_EQ(three.fiber_sum(n, t), count_p2(n, t));
    }
}
