#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qpart/identities.hpp"

using namespace qpart;

namespace {

Series geometric_from(int start, int N) {  // q^start / (1 - q)
  Series s(N);
  for (int d = start; d <= N; ++d) s.add_term(d, {}, 1);
  return s;
}

FreqVector freq(std::initializer_list<std::pair<Color, int>> counts) {
  FreqVector f;
  for (auto [c, n] : counts) f[c] = n;
  return f;
}

}  // namespace

TEST(KeyIdentity, RhsExamples) {
  const int N = 20;
  EXPECT_EQ(rhs_quadruple({0, 0, 0, 0}, N), Series::one(N));
  EXPECT_EQ(rhs_quadruple({1, 0, 0, 0}, N), geometric_from(1, N));
}

TEST(KeyIdentity, RhsCountsPSidePartitions) {
  const int N = 25;
  for (const auto& t : detail::marker_box({2, 2, 2, 2})) {
    const Series rhs = rhs_quadruple(t, N);
    for (int n = 0; n <= N; ++n) EXPECT_EQ(rhs.coefficient(n), count_p2(n, t)) << t.to_string() << " " << n;
  }
  for (int n = 0; n <= 12; ++n)
    EXPECT_EQ(rhs_quadruple({2, 1, 1, 0}, 12).coefficient(n), oracle::brute_p2(n, {2, 1, 1, 0}));
}

TEST(KeyIdentity, ExponentExamples) {
  EXPECT_EQ(key_identity_exponent(FreqVector{}), 0);  // needs T_{-1} = 0
  EXPECT_EQ(key_identity_exponent(freq({{Color::ABCD, 1}})), 3);
  EXPECT_EQ(key_identity_exponent(freq({{Color::BC, 1}})), 1);  // T_1 + T_1 - 1
  EXPECT_EQ(key_identity_exponent(freq({{Color::AB, 1}})), 2);  // no linear correction for ab
  // tau = 2, Q = 2: T_2 + 4 T_1 + 6 + 8
  EXPECT_EQ(key_identity_exponent(freq({{Color::A, 1}, {Color::C, 1}, {Color::ABCD, 2}})), 3 + 4 + 6 + 8);
}

TEST(KeyIdentity, LhsExamples) {
  const int N = 25;
  EXPECT_EQ(lhs_key_identity({0, 0, 0, 0}, N), Series::one(N));
  EXPECT_EQ(lhs_key_identity({1, 0, 0, 0}, N), geometric_from(1, N));
  EXPECT_EQ(lhs_key_identity({1, 1, 1, 1}, N), rhs_quadruple({1, 1, 1, 1}, N));
}

TEST(KeyIdentity, Verifies) {
  EXPECT_TRUE(verify_key_identity({0, 0, 0, 0}, 10).passed());
  const auto r = verify_key_identity({2, 2, 2, 2}, 25, 2);
  EXPECT_TRUE(r.passed()) << r.to_text();
  EXPECT_EQ(r.cells_checked, 81u);
}

TEST(KeyIdentity, DroppingLinearCorrectionIsCaught) {
  KeyIdentityOptions drop;
  drop.subtract_linear_secondary = false;
  const auto r = verify_key_identity({1, 1, 1, 1}, 15, 1, drop);
  EXPECT_FALSE(r.passed());
  ASSERT_TRUE(r.counterexample.has_value());
  EXPECT_NE(r.counterexample->lhs, r.counterexample->rhs);
}

TEST(KeyIdentity, SettingOneIndexToZeroGivesThreeLetterSeries) {
  const int N = 30;
  for (int x = 0; x <= 2; ++x)
    for (int y = 0; y <= 2; ++y)
      for (int z = 0; z <= 2; ++z) {
        const Series three = lhs_goellnitz(x, y, z, N);
        EXPECT_EQ(lhs_key_identity({0, x, y, z}, N), three);
        EXPECT_EQ(lhs_key_identity({x, 0, y, z}, N), three);
        EXPECT_EQ(lhs_key_identity({x, y, 0, z}, N), three);
        EXPECT_EQ(lhs_key_identity({x, y, z, 0}, N), three);
      }
}

TEST(KeyIdentity, ThreeWayAgreement) {
  const auto r = three_way_check({2, 2, 2, 2}, 20);
  EXPECT_TRUE(r.passed()) << r.to_text();
}

TEST(ThreeLetter, Examples) {
  const int N = 20;
  EXPECT_EQ(lhs_goellnitz(0, 0, 0, N), Series::one(N));
  // q^2 / (1 - q)^2
  const Series expect = shift_degree(invert(pochhammer(1, 1, N) * pochhammer(1, 1, N)), 2);
  EXPECT_EQ(lhs_goellnitz(1, 1, 0, N), expect);
  EXPECT_EQ(lhs_goellnitz(2, 2, 2, 50), rhs_quadruple({2, 2, 2, 0}, 50));
  EXPECT_TRUE(verify_goellnitz_identity(3, 30).passed());
}

TEST(TwoLetter, Examples) {
  const int N = 20;
  EXPECT_EQ(lhs_schur(0, 0, N), Series::one(N));
  const Series expect = shift_degree(invert(pochhammer(1, 1, N) * pochhammer(1, 1, N)), 2);
  EXPECT_EQ(lhs_schur(1, 1, N), expect);
  EXPECT_TRUE(verify_schur_identity(5, 40).passed());
}

TEST(Reduction, Examples) {
  const FreqVector bc = freq({{Color::BC, 1}});
  EXPECT_EQ(key_identity_exponent(bc), 2 - 1);
  EXPECT_EQ(goellnitz_exponent(bc), key_identity_exponent(bc));
  InversePochhammerCache cache;
  EXPECT_EQ(goellnitz_summand(FreqVector{}, 10, cache), Series::one(10));
  const auto r = reduction_check(2, 25);
  EXPECT_TRUE(r.passed()) << r.to_text();
}

TEST(Bounded, TwoLetterExamples) {
  auto [l0, r0] = bounded_schur(BoundParams(3, 3), 0, 0);
  EXPECT_EQ(l0, Polynomial::one());
  EXPECT_EQ(r0, Polynomial::one());
  auto [l, r] = bounded_schur(BoundParams(2, 2), 1, 1);
  EXPECT_EQ(l, r);
  EXPECT_FALSE(l.is_zero());
  EXPECT_THROW(BoundParams(-1, 0), DomainError);
}

TEST(Bounded, ThreeLetterExamples) {
  auto [l0, r0] = bounded_goellnitz(BoundParams(3, 2), 0, 0, 0);
  EXPECT_EQ(l0, Polynomial::one());
  EXPECT_EQ(r0, Polynomial::one());
  auto [l, r] = bounded_goellnitz(BoundParams(4, 4), 1, 1, 1);
  EXPECT_EQ(l, r);
  EXPECT_FALSE(l.is_zero());
}

TEST(Bounded, SmallGrids) {
  EXPECT_TRUE(verify_bounded_schur(5, 5).passed());
  EXPECT_TRUE(verify_bounded_goellnitz(4, 3).passed());
}

// Both sides are genuine polynomials once L and M reach the total index.
TEST(Bounded, PolynomialWhereBoundsCoverIndices) {
  GaussianBinomialCache bin;
  for (int L = 0; L <= 6; ++L)
    for (int M = 0; M <= 6; ++M) {
      for (int i = 0; i <= 6; ++i)
        for (int j = 0; i + j <= std::min(L, M); ++j) {
          auto [l, r] = bounded_schur(BoundParams(L, M), i, j, bin);
          EXPECT_TRUE(l.is_polynomial() && r.is_polynomial()) << L << " " << M << " " << i << " " << j;
        }
      for (int i = 0; i <= 4; ++i)
        for (int j = 0; j <= 4; ++j)
          for (int k = 0; i + j + k <= std::min(L, M); ++k) {
            auto [l, r] = bounded_goellnitz(BoundParams(L, M), i, j, k, bin);
            EXPECT_TRUE(l.is_polynomial() && r.is_polynomial()) << L << " " << M << " " << i << j << k;
          }
    }
}

// Outside that domain some binomials have a negative top entry and are
// Laurent polynomials; the identities still hold there.
TEST(Bounded, LaurentCellsStillBalance) {
  auto [l, r] = bounded_goellnitz(BoundParams(1, 1), 2, 2, 0);
  EXPECT_EQ(l, r);
  int laurent = 0;
  GaussianBinomialCache bin;
  for (int L = 0; L <= 3; ++L)
    for (int M = 0; M <= 3; ++M)
      for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 3; ++j)
          for (int k = 0; k <= 3; ++k) {
            auto [lhs, rhs] = bounded_goellnitz(BoundParams(L, M), i, j, k, bin);
            EXPECT_EQ(lhs, rhs);
            laurent += lhs.is_polynomial() ? 0 : 1;
          }
  EXPECT_GT(laurent, 0);
}

TEST(Bounded, LimitRecoversUnboundedSeries) {
  const auto r = bounded_limit_check(30, 2, 25);
  EXPECT_TRUE(r.passed()) << r.to_text();
}

TEST(Product, Examples) {
  EXPECT_TRUE(full_product_check(0).passed());
  EXPECT_TRUE(full_product_check(20).passed());
}

TEST(Reports, DeterministicAcrossJobCounts) {
  const auto a = verify_key_identity({2, 2, 1, 1}, 20, 1);
  const auto b = verify_key_identity({2, 2, 1, 1}, 20, 3);
  EXPECT_EQ(a.to_text(), b.to_text());
  KeyIdentityOptions drop;
  drop.subtract_linear_secondary = false;
  const auto c = verify_key_identity({2, 2, 2, 2}, 20, 1, drop);
  const auto d = verify_key_identity({2, 2, 2, 2}, 20, 4, drop);
  EXPECT_FALSE(c.passed());
  EXPECT_EQ(c.to_text(), d.to_text());
  EXPECT_EQ(verify_bounded_goellnitz(3, 2, 1).to_text(), verify_bounded_goellnitz(3, 2, 3).to_text());
}
