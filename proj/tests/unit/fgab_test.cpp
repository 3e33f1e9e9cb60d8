#include <gtest/gtest.h>

#include "abelcat/abcat.hpp"
#include "abelcat/fgab.hpp"
#include "abelcat/genprop.hpp"
#include "abelcat/oracle.hpp"
#include "abelcat/vecfp.hpp"
#include "builders.hpp"
#include "contract_suite.hpp"

namespace {

using namespace abelcat;
using fgab::FgGroup;
using fgab::GroupHom;
using test_support::factors_of;
using test_support::grp;
using test_support::hom;
using test_support::mat;

using Factors = std::vector<long long>;

FgGroup normalized(std::initializer_list<long long> xs) {
  std::vector<intlin::BigInt> v(xs.begin(), xs.end());
  return fgab::normalize_object(v);
}

TEST(FgGroup, NormalizeExamples) {
  EXPECT_EQ(factors_of(normalized({4, 2})), (Factors{2, 4}));
  EXPECT_EQ(factors_of(normalized({2, 3})), (Factors{6}));
  EXPECT_EQ(factors_of(normalized({1, 5})), (Factors{5}));
  EXPECT_TRUE(normalized({}).is_zero());
  EXPECT_EQ(factors_of(normalized({0, 6, 4})), (Factors{2, 12, 0}));
}

TEST(FgGroup, NormalizationCarriesInverseIsomorphisms) {
  const std::vector<intlin::BigInt> input{6, 4, 0, 9};
  const auto n = fgab::normalize_with_iso(input);
  EXPECT_EQ(factors_of(n.group), (Factors{6, 36, 0}));
  // Going out to the presentation and back is the identity on the
  // canonical group.
  const auto there = n.to_canonical * n.from_canonical;
  for (std::size_t j = 0; j < there.rows(); ++j)
    for (std::size_t i = 0; i < there.cols(); ++i)
      EXPECT_EQ(intlin::floor_mod(there(j, i) - (i == j ? 1 : 0), n.group.invariant_factors()[j]), 0);
}

TEST(FgGroup, CanonicalFormIsEnforced) {
  EXPECT_THROW(grp({4, 2}), InputError);
  EXPECT_THROW(grp({1}), InputError);
  EXPECT_THROW(grp({0, 2}), InputError);
  EXPECT_THROW(grp({-2}), InputError);
  EXPECT_NO_THROW(grp({2, 4, 0, 0}));
  EXPECT_EQ(grp({2, 6}).order(), intlin::BigInt(12));
  EXPECT_FALSE(grp({2, 0}).order().has_value());
}

TEST(MakeHom, CongruenceViolationNamesTheEntry) {
  try {
    hom(grp({2}), grp({4}), {{1}});
    FAIL() << "expected NotAHomomorphism";
  } catch (const fgab::NotAHomomorphism& e) {
    EXPECT_EQ(e.row(), 0u);
    EXPECT_EQ(e.col(), 0u);
    EXPECT_NE(std::string(e.what()).find("(0,0)"), std::string::npos);
  }
}

TEST(MakeHom, ValidMatricesAreReduced) {
  EXPECT_EQ(hom(grp({2}), grp({4}), {{2}}).matrix(), mat({{2}}));
  EXPECT_EQ(hom(grp({2}), grp({4}), {{-2}}).matrix(), mat({{2}}));
  EXPECT_EQ(hom(grp({0}), grp({5}), {{13}}).matrix(), mat({{3}}));
  EXPECT_NO_THROW(hom(grp({0}), grp({3, 0}), {{7}, {-4}}));
  EXPECT_THROW(hom(grp({2}), grp({0}), {{1}}), fgab::NotAHomomorphism);
  EXPECT_THROW(fgab::make_hom(grp({2}), grp({4}), mat({{1, 1}})), InputError);
}

TEST(Kernel, Examples) {
  const auto k = fgab::kernel(hom(grp({4}), grp({2}), {{1}}));
  EXPECT_EQ(factors_of(k.object), (Factors{2}));
  EXPECT_EQ(k.inclusion.matrix(), mat({{2}}));

  EXPECT_TRUE(fgab::kernel(fgab::identity(grp({6}))).object.is_zero());

  const auto z = fgab::kernel(fgab::zero_hom(grp({4}), grp({2})));
  EXPECT_EQ(factors_of(z.object), (Factors{4}));
  EXPECT_EQ(z.inclusion, fgab::identity(grp({4})));
}

TEST(Kernel, FreeAndTorsionMixed) {
  // Z ⊕ Z → Z, (a, b) ↦ 2a − 4b: kernel ≅ Z.
  const auto k = fgab::kernel(hom(grp({0, 0}), grp({0}), {{2, -4}}));
  EXPECT_EQ(factors_of(k.object), (Factors{0}));
  // Z → Z/6 reduction: kernel 6Z ≅ Z.
  const auto r = fgab::kernel(hom(grp({0}), grp({6}), {{1}}));
  EXPECT_EQ(factors_of(r.object), (Factors{0}));
  EXPECT_EQ(r.inclusion.matrix(), mat({{6}}));
}

TEST(Cokernel, Examples) {
  const auto c = fgab::cokernel(hom(grp({0}), grp({0}), {{2}}));
  EXPECT_EQ(factors_of(c.object), (Factors{2}));

  EXPECT_TRUE(fgab::cokernel(hom(grp({4}), grp({2}), {{1}})).object.is_zero());

  const auto z = fgab::cokernel(fgab::zero_hom(grp({2}), grp({3, 0})));
  EXPECT_EQ(z.object, grp({3, 0}));
  EXPECT_EQ(z.projection, fgab::identity(grp({3, 0})));
}

TEST(FactorThroughKernel, Examples) {
  const auto f = hom(grp({4}), grp({2}), {{1}});
  const auto g = hom(grp({2}), grp({4}), {{2}});
  const auto h = fgab::factor_through_kernel(f, g);
  EXPECT_EQ(h, fgab::identity(grp({2})));

  const auto zero = fgab::zero_hom(grp({3, 0}), grp({4}));
  EXPECT_EQ(fgab::factor_through_kernel(f, zero), fgab::zero_hom(grp({3, 0}), grp({2})));

  const auto k = fgab::kernel(f);
  EXPECT_EQ(fgab::factor_through_kernel(f, k.inclusion), fgab::identity(k.object));

  EXPECT_THROW(fgab::factor_through_kernel(f, fgab::identity(grp({4}))), PreconditionError);
}

TEST(FactorThroughCokernel, Examples) {
  const auto f = hom(grp({0}), grp({0}), {{2}});
  const auto c = fgab::cokernel(f);
  EXPECT_EQ(fgab::factor_through_cokernel(f, c.projection), fgab::identity(c.object));
  EXPECT_EQ(fgab::factor_through_cokernel(f, fgab::zero_hom(grp({0}), grp({5}))),
            fgab::zero_hom(c.object, grp({5})));
  const auto reduction = hom(grp({0}), grp({2}), {{1}});
  EXPECT_EQ(fgab::factor_through_cokernel(f, reduction), fgab::identity(grp({2})));
  EXPECT_THROW(fgab::factor_through_cokernel(f, fgab::identity(grp({0}))), PreconditionError);
}

TEST(DirectSum, CoprimeFactorsMerge) {
  const auto s = fgab::direct_sum(grp({2}), grp({3}));
  EXPECT_EQ(factors_of(s.sum_object), (Factors{6}));
  // Element counts: the injections hit 2 and 3 elements of a 6-element group.
  const oracle::HomTable ia(s.inj_a), ib(s.inj_b);
  EXPECT_EQ(ia.image().size(), 2u);
  EXPECT_EQ(ib.image().size(), 3u);
  EXPECT_EQ(fgab::compose(s.proj_a, s.inj_a), fgab::identity(grp({2})));
  EXPECT_EQ(fgab::compose(s.proj_b, s.inj_b), fgab::identity(grp({3})));
  EXPECT_EQ(fgab::compose(s.proj_a, s.inj_b), fgab::zero_hom(grp({3}), grp({2})));
}

TEST(DirectSum, WithZeroAndAlreadyCanonical) {
  const auto s = fgab::direct_sum(grp({4, 0}), FgGroup{});
  EXPECT_EQ(s.sum_object, grp({4, 0}));
  EXPECT_EQ(s.inj_a, fgab::identity(grp({4, 0})));
  EXPECT_EQ(factors_of(fgab::direct_sum(grp({2}), grp({2})).sum_object), (Factors{2, 2}));
}

TEST(GroupHom, HomSetOperations) {
  const auto a = grp({4});
  const auto b = grp({2, 4});
  const auto f = hom(a, b, {{1}, {1}});
  const auto g = hom(a, b, {{0}, {3}});
  EXPECT_EQ(fgab::add(f, g).matrix(), mat({{1}, {0}}));
  EXPECT_EQ(fgab::negate(f).matrix(), mat({{1}, {3}}));
  EXPECT_THROW(fgab::compose(f, f), InputError);
  EXPECT_THROW(fgab::add(f, fgab::identity(a)), InputError);
}

TEST(FgAbContract, RandomMorphismsPassTheSuite) {
  genprop::GenConfig cfg;
  cfg.max_order = 0;
  genprop::Rng rng(31);
  test_support::ContractSuite suite(fgab::FgAb{}, test_support::fgab_draws(cfg, rng), 3);
  for (int i = 0; i < 150; ++i) {
    const auto a = genprop::random_object(cfg, rng);
    const auto b = genprop::random_object(cfg, rng);
    for (const auto& failure : suite.run(genprop::random_hom(a, b, rng))) ADD_FAILURE() << failure;
  }
}

TEST(FgAbContract, OppositeInstancePassesTheSuite) {
  genprop::GenConfig cfg;
  genprop::Rng rng(32);
  const auto op = opposite_instance(fgab::FgAb{});
  test_support::ContractSuite suite(op, test_support::opposite_draws(test_support::fgab_draws(cfg, rng)), 2);
  for (int i = 0; i < 80; ++i) {
    const auto a = genprop::random_object(cfg, rng);
    const auto b = genprop::random_object(cfg, rng);
    for (const auto& failure : suite.run(genprop::random_hom(a, b, rng))) ADD_FAILURE() << failure;
  }
}

TEST(FgAbOracle, KernelAndCokernelMatchEnumeration) {
  genprop::GenConfig cfg;
  cfg.factor_pool = {2, 3, 4, 8, 9};
  genprop::Rng rng(33);
  for (int i = 0; i < 200; ++i) {
    const auto f = genprop::random_hom(genprop::random_object(cfg, rng), genprop::random_object(cfg, rng), rng);
    const oracle::HomTable table(f);
    const auto k = fgab::kernel(f);
    const auto c = fgab::cokernel(f);
    const auto kernel_factors = oracle::subgroup_invariants(table.src(), table.kernel());
    const auto cokernel_factors = oracle::quotient_invariants(table.dst(), table.image());
    EXPECT_EQ(factors_of(k.object), Factors(kernel_factors.begin(), kernel_factors.end())) << fgab::describe(f);
    EXPECT_EQ(factors_of(c.object), Factors(cokernel_factors.begin(), cokernel_factors.end())) << fgab::describe(f);
    // The inclusion's image is exactly the kernel's element set.
    EXPECT_EQ(oracle::HomTable(k.inclusion).image(), table.kernel());
    EXPECT_EQ(oracle::HomTable(c.projection).kernel(), table.image());
  }
}

// On exponent-p groups the integer matrix of a homomorphism is its matrix
// over F_p, so both instances must give the same answers.
TEST(FgAbVersusVecFp, ElementaryAbelianAgreement) {
  genprop::Rng rng(34);
  for (const vecfp::Scalar p : {2u, 3u}) {
    for (int i = 0; i < 150; ++i) {
      const std::size_t n = rng.below(4), m = rng.below(4);
      std::vector<intlin::BigInt> pf(n, p), qf(m, p);
      const auto a = FgGroup::from_canonical(pf);
      const auto b = FgGroup::from_canonical(qf);
      vecfp::FpMatrix entries(m, n);
      intlin::IntMatrix ints(m, n);
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < n; ++c) {
          entries(r, c) = rng.below(p);
          ints(r, c) = entries(r, c);
        }
      const auto f = fgab::make_hom(a, b, ints);
      const auto v = vecfp::make_map(vecfp::make_space(p, n), vecfp::make_space(p, m), entries);
      const fgab::FgAb ab;
      const vecfp::FpVect vect(p);
      EXPECT_EQ(is_monic(ab, f), is_monic(vect, v));
      EXPECT_EQ(is_epic(ab, f), is_epic(vect, v));
      EXPECT_EQ(fgab::kernel(f).object.rank(), vecfp::fp_kernel(v).object.dim);
      EXPECT_EQ(fgab::cokernel(f).object.rank(), vecfp::fp_cokernel(v).object.dim);
    }
  }
}

}  // namespace
