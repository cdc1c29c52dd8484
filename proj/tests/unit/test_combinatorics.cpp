#include <gtest/gtest.h>

#include <array>
#include <cmath>

#include "oracles.hpp"
#include "qfock/errors.hpp"
#include "qfock/product_constant.hpp"
#include "qfock/q_combinatorics.hpp"
#include "qfock/qpolynomial.hpp"
#include "qfock/scalar.hpp"

using namespace qfock;

TEST(Scalar, ParsesAndPrintsCanonically) {
  EXPECT_EQ(Scalar::parse("2/4").str(), "1/2");
  EXPECT_EQ(Scalar::parse("-3/7").str(), "-3/7");
  EXPECT_EQ(Scalar::parse("5").str(), "5/1");
  EXPECT_EQ(Scalar::parse("0").str(), "0/1");
  EXPECT_THROW(Scalar::parse("1/0"), DomainError);
  EXPECT_THROW(Scalar::parse("abc"), DomainError);
  EXPECT_THROW(Scalar::parse("1.5"), DomainError);
}

TEST(Scalar, Powers) {
  EXPECT_EQ(scalar_pow_q(Scalar(0), 0), Scalar(1));
  EXPECT_EQ(scalar_pow_q(Scalar(0), 3), Scalar(0));
  EXPECT_THROW(scalar_pow_q(Scalar(0), -1), DomainError);
  EXPECT_EQ(scalar_pow_q(Scalar(-1, 2), 3), Scalar(-1, 8));
  EXPECT_EQ(scalar_pow_q(Scalar(1, 3), -2), Scalar(9));
  EXPECT_THROW(Scalar(1) / Scalar(0), DomainError);
}

TEST(Scalar, UnitInterval) {
  EXPECT_TRUE(inside_unit_interval(Scalar(-99, 100)));
  EXPECT_FALSE(inside_unit_interval(Scalar(1)));
  EXPECT_FALSE(inside_unit_interval(Scalar(-1)));
}

TEST(QPolynomial, ArithmeticAndTrim) {
  const QPolynomial a{1, 1};
  const QPolynomial b{1, -1};
  EXPECT_EQ(a * b, (QPolynomial{1, 0, -1}));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ((a - a).degree(), -1);
  EXPECT_EQ(a.shifted(2), (QPolynomial{0, 0, 1, 1}));
  EXPECT_EQ(QPolynomial::from_json(a.to_json()), a);
  EXPECT_EQ(QPolynomial().to_json(), "[]");
  EXPECT_EQ((QPolynomial{1, 2, 1}).eval(Scalar(1, 2)), Scalar(9, 4));
}

TEST(QCombinatorics, SmallValues) {
  EXPECT_TRUE(q_int(0).is_zero());
  EXPECT_EQ(q_int(3), (QPolynomial{1, 1, 1}));
  EXPECT_EQ(q_factorial(0), QPolynomial::constant(1));
  EXPECT_EQ(q_factorial(3), (QPolynomial{1, 2, 2, 1}));
  EXPECT_EQ(q_binomial(4, 2), (QPolynomial{1, 1, 2, 1, 1}));
  EXPECT_TRUE(q_binomial(3, 4).is_zero());
  EXPECT_TRUE(q_binomial(3, -1).is_zero());
  EXPECT_EQ(q_falling_factorial(5, 0), QPolynomial::constant(1));
  EXPECT_TRUE(q_falling_factorial(2, 3).is_zero());
  EXPECT_EQ(q_falling_factorial(4, 2), q_int(4) * q_int(3));
  EXPECT_THROW(q_int(-1), DomainError);
  EXPECT_THROW(q_factorial(-2), DomainError);
}

TEST(QCombinatorics, BinomialMatchesSubsetInversionCount) {
  for (int n = 0; n <= 12; ++n) {
    for (int m = 0; m <= n; ++m) EXPECT_EQ(q_binomial(n, m), oracle::binomial(n, m)) << n << "," << m;
  }
}

TEST(QCombinatorics, TableMatchesClosedForm) {
  const QBinomialTable t(10);
  for (int n = 0; n <= 10; ++n) {
    for (int m = -1; m <= n + 1; ++m) EXPECT_EQ(t.at(n, m), q_binomial(n, m));
  }
  EXPECT_THROW((void)t.at(11, 0), DomainError);
}

TEST(QCombinatorics, AtOneGivesOrdinaryBinomials) {
  for (int n = 0; n <= 12; ++n) {
    long c = 1;
    for (int m = 0; m <= n; ++m) {
      EXPECT_EQ(q_binomial(n, m).eval(Scalar(1)), Scalar(c));
      c = c * (n - m) / (m + 1);
    }
  }
}

TEST(QCombinatorics, Inversions) {
  const std::array<int, 3> id{1, 2, 3};
  const std::array<int, 3> rev{3, 2, 1};
  const std::array<int, 3> bad{1, 1, 3};
  EXPECT_EQ(inversions(id), 0);
  EXPECT_EQ(inversions(rev), 3);
  EXPECT_THROW(inversions(bad), DomainError);
}

TEST(QCombinatorics, LatticePaths) {
  for (int h = 0; h <= 6; ++h) {
    for (int v = 0; v <= 6; ++v) EXPECT_EQ(lattice_path_sum(h, v), q_binomial(h + v, v));
  }
}

TEST(QCombinatorics, IdentityReportsPass) {
  EXPECT_TRUE(verify_pascal(12).passed());
  EXPECT_TRUE(verify_path_identity_range(8).passed());
  EXPECT_TRUE(verify_binomial_table(12).passed());
  EXPECT_THROW(verify_path_identity(2, 2, 5), DomainError);
}

TEST(QCombinatorics, BrokenTableIsCaught) {
  QBinomialTable t(13);
  t.override_entry(6, 3, q_binomial(6, 3) + QPolynomial::constant(1));
  const Report r = verify_pascal(12, &t);
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(r.counterexamples.empty());
}

TEST(QCombinatorics, BinomialBoundOnGrid) {
  for (const char* q : {"0", "1/20", "-1/20", "1/10", "-1/10", "1/7", "-1/7"}) {
    EXPECT_TRUE(verify_binomial_bound(12, Scalar::parse(q)).passed()) << q;
  }
}

namespace {

double slow_product(bool kind_c, double q) {
  double p = 1.0;
  for (int i = 1; i <= 5000; ++i) {
    p *= kind_c ? 1.0 / (1.0 - std::pow(q, i)) : 1.0 + std::pow(std::abs(q), i);
  }
  return p;
}

}  // namespace

TEST(ProductConstant, AgreesWithLongProduct) {
  for (const char* s : {"0", "1/10", "-1/10", "1/7", "-1/7", "1/2", "-9/10"}) {
    const Scalar q = Scalar::parse(s);
    const auto c = product_constant(ProductKind::C, q);
    const auto d = product_constant(ProductKind::D, q);
    EXPECT_NEAR(c.value, slow_product(true, q.to_double()), 1e-10 * c.value) << s;
    EXPECT_NEAR(d.value, slow_product(false, q.to_double()), 1e-10 * d.value) << s;
    EXPECT_LE(c.tail_bound, 1e-12);
  }
  EXPECT_DOUBLE_EQ(constant_c(Scalar(0)), 1.0);
  EXPECT_THROW(product_constant(ProductKind::C, Scalar(1)), DivergenceError);
  EXPECT_THROW(product_constant(ProductKind::D, Scalar(1, 2), 0.0), DomainError);
}
