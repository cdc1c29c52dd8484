#include <gtest/gtest.h>

#include "qfock/wick.hpp"

using namespace qfock;

namespace {

const std::vector<Scalar>& grid() {
  static const std::vector<Scalar> g = {Scalar(0), Scalar(1, 10), Scalar(-1, 10), Scalar(1, 7), Scalar(-1, 7),
                                        Scalar(2, 3)};
  return g;
}

}  // namespace

TEST(WickExpand, ShuffleCountsAndInversions) {
  const auto terms = wick_expand(Word::parse("01"));
  ASSERT_EQ(terms.size(), 4u);
  int total_inv = 0;
  for (const auto& t : terms) {
    total_inv += t.inversions;
    EXPECT_EQ(t.creation.length() + t.annihilation.length(), 2);
    if (t.creation == Word::parse("1") && t.annihilation == Word::parse("0")) EXPECT_EQ(t.inversions, 1);
    if (t.creation == Word::parse("0") && t.annihilation == Word::parse("1")) EXPECT_EQ(t.inversions, 0);
  }
  EXPECT_EQ(total_inv, 1);
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(wick_expand(Word::repeat(0, n)).size(), 1u << n);
}

TEST(WickExpand, InversionPolynomialIsBinomialSum) {
  // Σ over (n-i, i) shuffles of q^{inv} is binom(n, i) at q = 1
  const auto terms = wick_expand(Word::parse("01011"));
  std::vector<long> per_i(6, 0);
  for (const auto& t : terms) per_i[static_cast<std::size_t>(t.annihilation.length())] += 1;
  EXPECT_EQ(per_i, (std::vector<long>{1, 5, 10, 10, 5, 1}));
}

TEST(WickOperator, SquareOfSemicircular) {
  for (const auto& q : grid()) {
    const SpaceConfig cfg{2, 5, q};
    const auto s = semicircular(Side::left, 0, cfg);
    const GradedOperator rhs = s * s - GradedOperator::identity(cfg);
    EXPECT_TRUE(wick_operator(Word::parse("00"), cfg).equal_on(rhs, 3)) << q;
    const auto s1 = semicircular(Side::left, 1, cfg);
    // a(e_1) e_0 = 0, so s(e_1 e_0) = s(e_1) s(e_0)
    EXPECT_TRUE(wick_operator(Word::parse("10"), cfg).equal_on(s1 * s, 3));
  }
}

TEST(WickOperator, VacuumAndRecursion) {
  for (const auto& q : grid()) {
    const SpaceConfig cfg{2, 5, q};
    for (int n = 0; n <= 4; ++n) {
      for (const auto& w : all_words(n, 2)) {
        EXPECT_TRUE(wick_vacuum_check(w, cfg).passed());
        if (n <= 3) {
          EXPECT_TRUE(verify_wick_recursion(w, cfg).passed()) << w.str();
          EXPECT_TRUE(verify_wick_right_commutation(w, 1, cfg).passed()) << w.str();
        }
      }
    }
  }
}

TEST(WickOperator, RecursionOfSums) {
  for (const auto& q : grid()) {
    const SpaceConfig cfg{2, 5, q};
    FockVector x(Word::parse("01"), Scalar(3));
    x.add(Word::parse("1"), Scalar(-1, 2));
    x.add(Word{}, Scalar(2));
    const GradedOperator lhs = Scalar(3) * wick_operator(Word::parse("01"), cfg) -
                               Scalar(1, 2) * wick_operator(Word::parse("1"), cfg) +
                               Scalar(2) * GradedOperator::identity(cfg);
    EXPECT_TRUE(lhs.equal_on(s_recursive(x, cfg), 3));
  }
}

TEST(NormalOrdering, Expansions) {
  for (const auto& q : grid()) {
    for (int m = 0; m <= 3; ++m) {
      for (int n = 0; n <= 3; ++n) {
        const SpaceConfig cfg{2, m + n + 2, q};
        EXPECT_TRUE(verify_xy_expansion(m, n, cfg).passed()) << m << n;
        EXPECT_TRUE(verify_xz_expansion(m, n, cfg).passed()) << m << n;
      }
    }
    EXPECT_TRUE(verify_wzw_relations(SpaceConfig{2, 5, q}).passed());
  }
}

TEST(NormalOrdering, WrongCoefficientWouldBeSeen) {
  // Dropping the W term turns XZ = ZX + W into a false identity.
  const SpaceConfig cfg{2, 4, Scalar(1, 10)};
  const auto x = annihilation(Side::left, kE, cfg);
  const auto z = creation(Side::right, kE, cfg);
  EXPECT_FALSE((x * z).equal_on(z * x, 3));
}

TEST(NormalOrdering, WindowTooSmallIsSkipped) {
  const SpaceConfig cfg{2, 2, Scalar(0)};
  const Report r = verify_wick_right_commutation(Word::parse("000"), 0, SpaceConfig{2, 3, Scalar(0)});
  EXPECT_EQ(r.status, Status::skipped);
  EXPECT_TRUE(verify_wick_recursion(Word::parse("00"), cfg).passed());
}
