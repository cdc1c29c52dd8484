#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include <Eigen/Dense>

#include "oracles.hpp"
#include "qfock/catalog.hpp"
#include "qfock/errors.hpp"
#include "qfock/graded_operator.hpp"
#include "qfock/q_combinatorics.hpp"
#include "qfock/riesz.hpp"
#include "qfock/tk_basis.hpp"
#include "qfock/tk_cache.hpp"
#include "qfock/xi.hpp"

using namespace qfock;

namespace {

std::shared_ptr<const RadulescuCatalog> catalog_at(const Scalar& q, int L, int dim = 2) {
  return RadulescuCatalog::build(std::make_shared<const FockSpace>(SpaceConfig{dim, L, q}));
}

const std::vector<Scalar>& grid() {
  static const std::vector<Scalar> g = {Scalar(0), Scalar(1, 20), Scalar(-1, 20), Scalar(1, 10), Scalar(-1, 10),
                                        Scalar(1, 7), Scalar(-1, 7)};
  return g;
}

CoefficientMap nonzero(const CoefficientMap& m) {
  CoefficientMap out;
  for (const auto& [k, c] : m) {
    if (!c.is_zero()) out.emplace(k, c);
  }
  return out;
}

// dim of the joint kernel of a(e) and a_r(e) on degree k, by float SVD
std::size_t float_kernel_dim(int k, const Scalar& q, int dim) {
  const SpaceConfig cfg{dim, k, q};
  const auto a = annihilation(Side::left, kE, cfg);
  const auto ar = annihilation(Side::right, kE, cfg);
  const auto rows = static_cast<Eigen::Index>(k == 0 ? 0 : cfg.block_size(k - 1));
  const auto cols = static_cast<Eigen::Index>(cfg.block_size(k));
  if (rows == 0) return static_cast<std::size_t>(cols);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2 * rows, cols);
  for (int side = 0; side < 2; ++side) {
    const SparseBlock* b = (side == 0 ? a : ar).block(-1, k);
    for (std::uint64_t c = 0; c < b->cols(); ++c) {
      for (const auto& e : b->column(c)) m(side * rows + e.row, static_cast<Eigen::Index>(c)) = e.value.to_double();
    }
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  lu.setThreshold(1e-9);
  return static_cast<std::size_t>(cols - lu.rank());
}

}  // namespace

TEST(Tk, DimensionsForTwoLetters) {
  const std::vector<std::size_t> want = {1, 1, 1, 2, 4, 8, 16, 32, 64};
  const auto cat = catalog_at(Scalar(1, 10), 8);
  for (int k = 0; k <= 8; ++k) EXPECT_EQ(cat->tk(k).size(), want[static_cast<std::size_t>(k)]) << k;
}

TEST(Tk, DimensionsAgreeWithFloatRank) {
  for (const auto& q : grid()) {
    for (int dim = 2; dim <= 3; ++dim) {
      const FockSpace space(SpaceConfig{dim, dim == 2 ? 6 : 4, q});
      for (int k = 0; k <= space.max_degree(); ++k) {
        const TkBasis b = compute_tk(k, space);
        EXPECT_EQ(b.size(), float_kernel_dim(k, q, dim)) << q << " d=" << dim << " k=" << k;
        EXPECT_TRUE(verify_tk(b, space).passed());
      }
    }
  }
}

TEST(Tk, GeneratorsAreOrthogonalAndKilled) {
  const FockSpace space(SpaceConfig{2, 6, Scalar(-1, 7)});
  const TkBasis b = compute_tk(6, space);
  for (std::size_t i = 0; i < b.size(); ++i) {
    EXPECT_TRUE(apply_annihilation(Side::left, kE, b.generators[i], space.q()).is_zero());
    EXPECT_TRUE(apply_annihilation(Side::right, kE, b.generators[i], space.q()).is_zero());
    for (std::size_t j = 0; j < b.size(); ++j) {
      const Scalar ip = space.inner(b.generators[i], b.generators[j]);
      if (i == j) {
        EXPECT_EQ(ip, b.norm_sq[i]);
      } else {
        EXPECT_TRUE(ip.is_zero());
      }
    }
  }
}

TEST(Catalog, ExpansionExamples) {
  const auto cat = catalog_at(Scalar(1, 10), 5);
  const Word ef = Word::parse("01");
  const Word fe = Word::parse("10");
  EXPECT_EQ(nonzero(cat->expand(FockVector(ef))), (CoefficientMap{{CatalogKey{1, 0, 1, 0}, Scalar(1)}}));
  EXPECT_EQ(nonzero(cat->expand(FockVector(Word::repeat(0, 3)))), (CoefficientMap{{CatalogKey{0, 0, 3, 0}, Scalar(1)}}));
  EXPECT_EQ(nonzero(cat->expand(FockVector(ef) + FockVector(fe))),
            (CoefficientMap{{CatalogKey{1, 0, 0, 1}, Scalar(1)}, {CatalogKey{1, 0, 1, 0}, Scalar(1)}}));
  EXPECT_THROW(cat->expand(FockVector(Word::repeat(1, 6))), CapacityError);
}

TEST(Catalog, ExpandAgreesWithEliminationAndReassembles) {
  std::mt19937_64 rng(17);
  for (const auto& q : grid()) {
    const auto cat = catalog_at(q, 5);
    for (int trial = 0; trial < 6; ++trial) {
      const FockVector x = oracle::random_vector(rng, 2, 5, 6);
      const CoefficientMap c = cat->expand(x);
      EXPECT_EQ(nonzero(c), nonzero(expand_by_elimination(*cat, x)));
      EXPECT_EQ(cat->assemble(c), x);
    }
  }
}

TEST(Catalog, CompleteAtEveryDegree) {
  for (const auto& q : {Scalar(0), Scalar(1, 10), Scalar(-1, 7)}) {
    const auto cat = catalog_at(q, 8);
    for (int n = 0; n <= 8; ++n) EXPECT_EQ(catalog_rank(*cat, n), std::size_t{1} << n);
  }
  const auto three = catalog_at(Scalar(1, 20), 4, 3);
  for (int n = 0; n <= 4; ++n) EXPECT_EQ(catalog_rank(*three, n), three->config().block_size(n));
}

TEST(Xi, ClosedFormAgreesWithBruteForce) {
  for (const auto& q : grid()) {
    const auto cat = catalog_at(q, 5);
    for (int k = 1; k <= 3; ++k) {
      for (const auto& g : cat->tk(k).generators) {
        const Scalar n0 = oracle::inner(g, g, q);
        for (int r = 0; r + k <= 5; ++r) {
          for (int s = 0; r + s + k <= 5; ++s) {
            for (int r2 = 0; r2 <= r + s; ++r2) {
              const int s2 = r + s - r2;
              const Scalar want = oracle::inner(g.padded(r, s), g.padded(r2, s2), q);
              EXPECT_EQ(xi_inner_closed_form(n0, k, r, s, r2, s2, q), want) << q << k << r << s << r2;
            }
          }
        }
      }
    }
    EXPECT_TRUE(verify_closed_form(*cat, 3, 5).passed());
  }
}

TEST(Xi, ZeroAcrossDegrees) {
  EXPECT_TRUE(xi_inner_closed_form(Scalar(1), 1, 1, 1, 1, 0, Scalar(1, 3)).is_zero());
}

TEST(Xi, AnnihilatorFormulas) {
  for (const auto& q : grid()) {
    const SpaceConfig cfg{2, 6, q};
    const FockSpace space(cfg);
    for (int k = 1; k <= 3; ++k) {
      const TkBasis b = compute_tk(k, space);
      for (const auto& g : b.generators) {
        for (int r = 0; r + k <= 6; ++r) {
          for (int s = 0; r + s + k <= 6; ++s) {
            EXPECT_TRUE(verify_annihilator_action(g, k, r, s, cfg).passed());
            EXPECT_TRUE(verify_annihilator_power(g, k, r, s, 2, cfg).passed());
          }
        }
      }
    }
  }
}

TEST(Xi, MakeXiRespectsTruncation) {
  const SpaceConfig cfg{2, 4, Scalar(1, 10)};
  const FockVector f(Word::parse("1"));
  const XiVector x = make_xi(f, 1, 2, 1, cfg);
  EXPECT_EQ(x.vector, FockVector(Word::parse("0010")));
  EXPECT_EQ(x.norm_sq, xi_inner_closed_form(Scalar(1), 1, 2, 1, 2, 1, cfg.q));
  EXPECT_EQ(x.norm_sq, oracle::inner(x.vector, x.vector, cfg.q));
  EXPECT_TRUE(make_xi(f, 1, -1, 0, cfg).vector.is_zero());
  EXPECT_THROW(make_xi(f, 1, 3, 1, cfg), CapacityError);
}

TEST(Xi, OrthogonalityAndInclusion) {
  for (const auto& q : grid()) {
    const auto cat = catalog_at(q, 6);
    EXPECT_TRUE(verify_orthogonality(*cat, 6).passed());
    EXPECT_TRUE(verify_inclusion_relations(*cat, 2).passed());
  }
}

TEST(Estimates, ConstantValues) {
  const EstimateConstants pos = estimate_constants(Scalar(1, 10));
  EXPECT_DOUBLE_EQ(pos.f, 1.0);
  EXPECT_NEAR(pos.e, 1.0 / pos.c_abs, 1e-15);
  const EstimateConstants neg = estimate_constants(Scalar(-1, 10));
  EXPECT_NEAR(neg.f, 2.17, 0.01);
  EXPECT_NEAR(neg.e, 0.58, 0.01);
  EXPECT_NEAR(estimate_constants(Scalar(-1, 7)).e, 0.26, 0.01);
  EXPECT_LT(estimate_constants(Scalar(-1, 3)).e, 0.0);
}

TEST(Estimates, WindowChecks) {
  for (const char* s : {"1/10", "-1/10", "1/20", "-1/20", "1/8"}) {
    const auto cat = catalog_at(Scalar::parse(s), 8);
    const Report norms = verify_norm_corollary(*cat, 8);
    const Report inner = verify_inner_estimates(*cat, 8);
    EXPECT_TRUE(norms.passed() && norms.status != Status::inapplicable) << s;
    EXPECT_TRUE(inner.passed() && inner.status != Status::inapplicable) << s;
  }
  const auto outside = catalog_at(Scalar(1, 2), 4);
  EXPECT_EQ(verify_norm_corollary(*outside, 4).status, Status::inapplicable);
  EXPECT_TRUE(in_norm_window(Scalar(-1, 8)));
  EXPECT_FALSE(in_norm_window(Scalar(-1, 7)));
  EXPECT_FALSE(in_norm_window(Scalar(1, 4)));
}

TEST(Riesz, FreeCaseIsOrthonormal) {
  const auto cat = catalog_at(Scalar(0), 8);
  for (int n = 1; n <= 8; ++n) {
    const RieszReport r = riesz_analysis(n, *cat);
    EXPECT_LE(r.identity_deviation, 1e-12);
    EXPECT_TRUE(r.complete());
    EXPECT_EQ(r.vectors, (std::size_t{1} << n) - 1);
  }
}

TEST(Riesz, PositiveLowerBounds) {
  for (const auto& q : grid()) {
    const auto cat = catalog_at(q, 8);
    for (int n = 1; n <= 8; ++n) {
      const RieszReport r = riesz_analysis(n, *cat);
      EXPECT_GT(r.empirical_lower, 0.0) << q << " " << n;
      EXPECT_GE(r.empirical_upper, r.empirical_lower);
    }
    const RieszConstants c = empirical_riesz_constants(*cat);
    EXPECT_GT(c.a, 0.0);
    EXPECT_LE(c.a, 1.0);
    EXPECT_GE(c.b, 1.0);
  }
}

TEST(Riesz, EAlpha) {
  const Eigen::MatrixXd m = ealpha_matrix(0.5, 3);
  EXPECT_DOUBLE_EQ(m(0, 0), 0.0);
  EXPECT_DOUBLE_EQ(m(0, 2), -0.25);
  EXPECT_DOUBLE_EQ(m(2, 0), -0.25);
  for (double a : {0.1, -0.1, 1.0 / 9, -1.0 / 9, 1.0 / 3, -1.0 / 3}) {
    for (int n : {1, 2, 10, 60}) EXPECT_TRUE(ealpha_norm(a, n).holds);
  }
}

class CacheTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("qfock_cache_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::remove_all(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::filesystem::path dir_;
};

TEST_F(CacheTest, WarmReloadRepair) {
  const TkCache cache(dir_);
  const FockSpace space(SpaceConfig{2, 4, Scalar(-1, 10)});
  for (int k = 0; k <= 4; ++k) EXPECT_EQ(cache.get(k, space).origin, CacheOrigin::computed);
  std::size_t files = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir_)) files += e.path().extension() == ".json";
  EXPECT_EQ(files, 5u);
  for (int k = 0; k <= 4; ++k) {
    const CachedBasis hit = cache.get(k, space);
    EXPECT_EQ(hit.origin, CacheOrigin::loaded);
    const TkBasis fresh = compute_tk(k, space);
    EXPECT_EQ(hit.basis.generators, fresh.generators);
    EXPECT_EQ(hit.basis.norm_sq, fresh.norm_sq);
  }
  const auto path = cache.entry_path(space.config(), 3);
  EXPECT_EQ(path.filename().string(), "tk_d2_qm1_10_k3.json");
  {
    std::ofstream f(path, std::ios::trunc);
    f << "{\"broken\": ";
  }
  EXPECT_EQ(cache.get(3, space).origin, CacheOrigin::repaired);
  EXPECT_EQ(cache.get(3, space).origin, CacheOrigin::loaded);
}

TEST_F(CacheTest, TamperedChecksumIsRejected) {
  const FockSpace space(SpaceConfig{2, 4, Scalar(1, 10)});
  Json j = tk_to_json(compute_tk(3, space), space.config());
  EXPECT_NO_THROW(tk_from_json(j, space.config(), 3));
  j["generators"][0] = Json::object({{"111", "5/1"}});
  EXPECT_THROW(tk_from_json(j, space.config(), 3), CacheError);
  EXPECT_THROW(tk_from_json(j, space.config(), 2), CacheError);
}

TEST_F(CacheTest, CatalogThroughCacheMatches) {
  const TkCache cache(dir_);
  auto space = std::make_shared<const FockSpace>(SpaceConfig{2, 5, Scalar(1, 7)});
  const auto a = RadulescuCatalog::build(space, &cache);
  const auto b = RadulescuCatalog::build(space, &cache);
  for (int n = 0; n <= 5; ++n) {
    ASSERT_EQ(a->entries(n).size(), b->entries(n).size());
    for (std::size_t i = 0; i < a->entries(n).size(); ++i) EXPECT_EQ(a->entries(n)[i].vector, b->entries(n)[i].vector);
  }
}
