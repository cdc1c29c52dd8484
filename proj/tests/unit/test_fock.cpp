#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qfock/errors.hpp"
#include "qfock/exact_linalg.hpp"
#include "qfock/fock_checks.hpp"
#include "qfock/graded_operator.hpp"
#include "qfock/inner_product.hpp"
#include "qfock/q_combinatorics.hpp"

using namespace qfock;

namespace {

const std::vector<Scalar>& grid() {
  static const std::vector<Scalar> g = {Scalar(0),      Scalar(1, 20), Scalar(-1, 20), Scalar(1, 10),
                                        Scalar(-1, 10), Scalar(1, 7),  Scalar(-1, 7),  Scalar(1, 2)};
  return g;
}

SpaceConfig config(int dim, int L, const Scalar& q) { return SpaceConfig{dim, L, q}; }

}  // namespace

TEST(Word, IndexRoundTrip) {
  for (int n = 0; n <= 4; ++n) {
    const auto words = all_words(n, 3);
    ASSERT_EQ(words.size(), static_cast<std::size_t>(std::pow(3, n)));
    for (std::size_t i = 0; i < words.size(); ++i) {
      EXPECT_EQ(words[i].index(3), i);
      EXPECT_EQ(Word::from_index(i, n, 3), words[i]);
    }
  }
  EXPECT_EQ(Word::parse("011").index(2), 3u);  // first letter most significant
  EXPECT_EQ(Word::parse("1").padded(2, 1).str(), "0010");
  EXPECT_THROW(Word::parse("0x"), DomainError);
  EXPECT_LT(Word::parse("11"), Word::parse("000"));
}

TEST(SpaceConfig, Validation) {
  EXPECT_THROW(config(2, 4, Scalar(1)).validate(), ConfigError);
  EXPECT_THROW(config(0, 4, Scalar(0)).validate(), ConfigError);
  EXPECT_THROW(config(2, -1, Scalar(0)).validate(), ConfigError);
  EXPECT_NO_THROW(config(2, 4, Scalar(-9, 10)).validate());
  EXPECT_EQ(config(2, 3, Scalar(0)).total_dimension(), 15u);
}

TEST(FockVector, CancellationAndJson) {
  FockVector v(Word::parse("01"), Scalar(2));
  v.add(Word::parse("01"), Scalar(-2));
  EXPECT_TRUE(v.is_zero());
  FockVector w = FockVector::vacuum() + FockVector(Word::parse("10"), Scalar(1, 3));
  EXPECT_EQ(FockVector::from_json(w.to_json()), w);
  EXPECT_EQ(w.max_degree(), 2);
  EXPECT_EQ(w.component(0), FockVector::vacuum());
  EXPECT_TRUE(w.component(2).is_homogeneous(2));
}

TEST(InnerProduct, SmallGramEntries) {
  const Scalar q(1, 3);
  const SpaceConfig cfg = config(2, 3, q);
  EXPECT_EQ(q_inner_direct(FockVector(Word::parse("00")), FockVector(Word::parse("00")), cfg), Scalar(4, 3));
  EXPECT_EQ(q_inner_direct(FockVector(Word::parse("01")), FockVector(Word::parse("10")), cfg), q);
  EXPECT_EQ(q_inner_direct(FockVector(Word::parse("01")), FockVector(Word::parse("01")), cfg), Scalar(1));
  EXPECT_EQ(q_inner_direct(FockVector(Word::parse("0")), FockVector(Word::parse("01")), cfg), Scalar(0));
  EXPECT_EQ(q_inner_direct(FockVector::vacuum(), FockVector::vacuum(), cfg), Scalar(1));
}

TEST(InnerProduct, RoutesAgreeWithBruteForce) {
  std::mt19937_64 rng(7);
  for (const auto& q : grid()) {
    const SpaceConfig cfg = config(3, 5, q);
    const FockSpace space(cfg);
    for (int trial = 0; trial < 25; ++trial) {
      const FockVector u = oracle::random_vector(rng, 3, 5, 5);
      const FockVector v = oracle::random_vector(rng, 3, 5, 5);
      const Scalar want = oracle::inner(u, v, q);
      EXPECT_EQ(q_inner_direct(u, v, cfg), want);
      EXPECT_EQ(q_inner_recursive(u, v, cfg), want);
      EXPECT_EQ(space.inner(u, v), want);
      EXPECT_EQ(space.inner(u, v), space.inner(v, u));
    }
  }
}

TEST(InnerProduct, DirectRouteHasACap) {
  const SpaceConfig cfg = config(1, 10, Scalar(0));
  const FockVector v(Word::repeat(0, kPermutationSumCap + 1));
  EXPECT_THROW(q_inner_direct(v, v, cfg), CapabilityError);
  EXPECT_EQ(q_inner_recursive(v, v, cfg), Scalar(1));
}

TEST(InnerProduct, FreeCaseIsEuclidean) {
  const FockSpace space(config(2, 5, Scalar(0)));
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(*space.gram(n), RationalMatrix::identity(space.config().block_size(n)));
}

TEST(Operators, AnnihilationMatchesOracle) {
  std::mt19937_64 rng(11);
  for (const auto& q : grid()) {
    const SpaceConfig cfg = config(2, 5, q);
    for (int trial = 0; trial < 10; ++trial) {
      const FockVector v = oracle::random_vector(rng, 2, 5, 6);
      for (Letter i = 0; i < 2; ++i) {
        const FockVector left = oracle::annihilate(false, i, v, q);
        const FockVector right = oracle::annihilate(true, i, v, q);
        EXPECT_EQ(annihilation(Side::left, i, cfg).apply(v), left);
        EXPECT_EQ(annihilation(Side::right, i, cfg).apply(v), right);
        EXPECT_EQ(apply_annihilation(Side::left, i, v, q), left);
        EXPECT_EQ(apply_annihilation(Side::right, i, v, q), right);
      }
    }
  }
}

TEST(Operators, CreationTruncatesAtTop) {
  const SpaceConfig cfg = config(2, 2, Scalar(1, 5));
  const auto c = creation(Side::right, 1, cfg);
  EXPECT_EQ(c.apply(FockVector(Word::parse("0"))), FockVector(Word::parse("01")));
  EXPECT_TRUE(c.apply(FockVector(Word::parse("00"))).is_zero());
  EXPECT_THROW(c.apply(FockVector(Word::parse("000"))), CapacityError);
  EXPECT_EQ(w_operator(cfg).apply(FockVector(Word::parse("01"))), FockVector(Word::parse("01"), Scalar(1, 25)));
}

TEST(Operators, AdjointPairingOnRandomVectors) {
  // <c(e_i) u, v> = <u, a(e_i) v> by the brute-force inner product
  std::mt19937_64 rng(5);
  for (const auto& q : grid()) {
    const SpaceConfig cfg = config(2, 5, q);
    for (int trial = 0; trial < 10; ++trial) {
      const FockVector u = oracle::random_vector(rng, 2, 4, 4);
      const FockVector v = oracle::random_vector(rng, 2, 5, 4);
      for (Letter i = 0; i < 2; ++i) {
        EXPECT_EQ(oracle::inner(apply_creation(Side::left, i, u), v, q),
                  oracle::inner(u, oracle::annihilate(false, i, v, q), q));
        EXPECT_EQ(oracle::inner(apply_creation(Side::right, i, u), v, q),
                  oracle::inner(u, oracle::annihilate(true, i, v, q), q));
      }
    }
  }
}

TEST(Operators, PowerIsRepeatedProduct) {
  const SpaceConfig cfg = config(2, 5, Scalar(-1, 3));
  const auto s = semicircular(Side::left, 0, cfg);
  EXPECT_TRUE(s.power(3).equal_on(s * s * s, 5));
  EXPECT_TRUE(s.power(0).equal_on(GradedOperator::identity(cfg), 5));
  EXPECT_EQ(annihilation(Side::left, 0, cfg).degree_shift(), -1);
  EXPECT_FALSE(s.degree_shift().has_value());
}

TEST(FockChecks, AllPassOnGrid) {
  for (const auto& q : grid()) {
    const SpaceConfig cfg = config(2, 5, q);
    const FockSpace space(cfg);
    EXPECT_TRUE(verify_q_commutation(Side::left, cfg).passed());
    EXPECT_TRUE(verify_q_commutation(Side::right, cfg).passed());
    EXPECT_TRUE(verify_left_right_commute(cfg).passed());
    EXPECT_TRUE(verify_power_norms(space).passed());
    EXPECT_TRUE(verify_gram_positive(space, 5).passed());
    EXPECT_TRUE(verify_inner_oracles(space, 4).passed());
    EXPECT_TRUE(verify_adjoints(space).passed());
  }
}

TEST(FockChecks, WrongAdjointIsCaught) {
  const SpaceConfig cfg = config(2, 4, Scalar(1, 10));
  const FockSpace space(cfg);
  // a_r is not the adjoint of c
  const Report r = adjoint_check(creation(Side::left, 0, cfg), annihilation(Side::right, 0, cfg), space);
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(r.counterexamples.empty());
}

TEST(FockChecks, NormOfPowers) {
  for (const auto& q : grid()) {
    const FockSpace space(config(1, 7, q));
    for (int n = 0; n <= 7; ++n) {
      EXPECT_EQ(space.norm_sq(FockVector(Word::repeat(0, n))), q_factorial(n).eval(q));
    }
  }
}

TEST(ExactLinalg, KernelRankSolve) {
  RationalMatrix m(2, 3);
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(0, 2) = 3;
  m(1, 0) = 2;
  m(1, 1) = 4;
  m(1, 2) = 7;
  EXPECT_EQ(rank(m), 2u);
  const auto k = kernel(m);
  ASSERT_EQ(k.size(), 1u);
  for (std::size_t i = 0; i < 2; ++i) {
    Scalar acc(0);
    for (std::size_t j = 0; j < 3; ++j) acc += m(i, j) * k[0][j];
    EXPECT_TRUE(acc.is_zero());
  }
  RationalMatrix a(2, 2);
  a(0, 0) = 2;
  a(0, 1) = 1;
  a(1, 0) = 1;
  a(1, 1) = 3;
  const auto x = solve(a, {Scalar(3), Scalar(5)});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0], Scalar(4, 5));
  EXPECT_EQ((*x)[1], Scalar(7, 5));
  RationalMatrix sing(2, 2);
  sing(0, 0) = 1;
  sing(0, 1) = 1;
  sing(1, 0) = 1;
  sing(1, 1) = 1;
  EXPECT_FALSE(solve(sing, {Scalar(1), Scalar(0)}).has_value());
  const auto p = primitive_integer({Scalar(-1, 2), Scalar(1, 3), Scalar(0)});
  EXPECT_EQ(p[0], Scalar(3));
  EXPECT_EQ(p[1], Scalar(-2));
}

TEST(ExactLinalg, RandomKernelsAnnihilate) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t rows = 1 + rng() % 5;
    const std::size_t cols = 1 + rng() % 6;
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = Scalar(static_cast<long>(rng() % 5) - 2);
    }
    const auto k = kernel(m);
    EXPECT_EQ(k.size() + rank(m), cols);
    for (const auto& v : k) {
      for (std::size_t i = 0; i < rows; ++i) {
        Scalar acc(0);
        for (std::size_t j = 0; j < cols; ++j) acc += m(i, j) * v[j];
        EXPECT_TRUE(acc.is_zero());
      }
    }
  }
}
