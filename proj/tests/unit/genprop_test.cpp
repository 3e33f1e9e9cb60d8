#include <gtest/gtest.h>

#include <set>

#include "abelcat/abcat.hpp"
#include "abelcat/genprop.hpp"
#include "abelcat/oracle.hpp"
#include "builders.hpp"

namespace {

using namespace abelcat;
using fgab::FgGroup;
using fgab::GroupHom;
using test_support::factors_of;
using test_support::grp;
using test_support::hom;

const fgab::FgAb ab;

std::string ladder_key(const SesLadder<GroupHom>& l) {
  std::string s;
  for (const auto* m : {&l.f, &l.g, &l.f_prime, &l.g_prime, &l.alpha, &l.beta, &l.gamma}) s += fgab::describe(*m) + ";";
  return s;
}

TEST(Rng, SameSeedSameStream) {
  genprop::Rng a(7), b(7), c(8);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next();
    EXPECT_EQ(x, b.next());
    differs |= x != c.next();
  }
  EXPECT_TRUE(differs);
}

TEST(Rng, BoundedDrawsStayInRange) {
  genprop::Rng rng(9);
  std::set<std::int64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    EXPECT_LT(rng.below(7), 7u);
    const auto y = rng.between(-3, 3);
    EXPECT_GE(y, -3);
    EXPECT_LE(y, 3);
    seen.insert(y);
  }
  EXPECT_EQ(seen.size(), 7u);
  EXPECT_FALSE(rng.chance(0.0));
  EXPECT_TRUE(rng.chance(1.0));
}

TEST(RandomObject, SeedDeterminism) {
  genprop::GenConfig cfg;
  genprop::Rng a(11), b(11);
  for (int i = 0; i < 50; ++i) EXPECT_EQ(genprop::random_object(cfg, a), genprop::random_object(cfg, b));
}

TEST(RandomObject, PoolClosure) {
  genprop::GenConfig cfg;
  cfg.factor_pool = {2, 4};
  genprop::Rng rng(12);
  const std::set<std::vector<long long>> allowed{{}, {2}, {4}, {2, 2}, {2, 4}, {4, 4}};
  std::set<std::vector<long long>> seen;
  for (int i = 0; i < 500; ++i) {
    const auto g = factors_of(genprop::random_object(cfg, rng));
    EXPECT_TRUE(allowed.count(g)) << g.size();
    seen.insert(g);
  }
  EXPECT_EQ(seen, allowed);
}

TEST(RandomObject, DrawsAreCanonicalAndBounded) {
  genprop::GenConfig cfg;
  cfg.max_rank = 3;
  genprop::Rng rng(13);
  for (int i = 0; i < 1000; ++i) {
    const auto g = genprop::random_object(cfg, rng);
    EXPECT_LE(g.rank(), 3u);
    EXPECT_NO_THROW(FgGroup::from_canonical(g.invariant_factors()));
    if (g.is_finite()) {
      EXPECT_LE(*g.order(), 64);
    }
  }
}

TEST(RandomHom, ValidAndZeroIntoZero) {
  genprop::GenConfig cfg;
  genprop::Rng rng(14);
  for (int i = 0; i < 300; ++i) {
    const auto a = genprop::random_object(cfg, rng);
    const auto b = genprop::random_object(cfg, rng);
    const auto f = genprop::random_hom(a, b, rng);
    EXPECT_NO_THROW(fgab::make_hom(a, b, f.matrix()));
    EXPECT_EQ(genprop::random_hom(a, FgGroup{}, rng), fgab::zero_hom(a, FgGroup{}));
  }
}

TEST(RandomMonic, IntoSplitTargets) {
  genprop::GenConfig cfg;
  genprop::Rng rng(15);
  for (int i = 0; i < 200; ++i) {
    const auto a = genprop::random_object(cfg, rng);
    const auto b = fgab::direct_sum(a, genprop::random_object(cfg, rng)).sum_object;
    EXPECT_TRUE(classify_morphism(ab, genprop::random_monic(a, b, rng)).monic);
    EXPECT_TRUE(classify_morphism(ab, genprop::random_epic(b, a, rng)).epic);
  }
  EXPECT_THROW(genprop::random_monic(grp({4}), grp({2}), rng), PreconditionError);
}

TEST(RandomEpic, FourOntoTwoHasOddEntry) {
  genprop::Rng rng(16);
  for (int i = 0; i < 20; ++i) {
    const auto f = genprop::random_epic(grp({4}), grp({2}), rng);
    EXPECT_EQ(f.matrix()(0, 0) % 2, 1);
    EXPECT_TRUE(oracle::HomTable(f).surjective());
  }
}

TEST(RandomAutomorphism, IsInvertible) {
  genprop::GenConfig cfg;
  genprop::Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    const auto a = genprop::random_object(cfg, rng);
    EXPECT_TRUE(classify_morphism(ab, genprop::random_automorphism(a, rng)).iso);
  }
}

TEST(SplitComplement, Examples) {
  EXPECT_EQ(genprop::split_complement(grp({2, 4}), grp({4})), grp({2}));
  EXPECT_EQ(genprop::split_complement(grp({6, 0}), grp({3})), grp({2, 0}));
  EXPECT_FALSE(genprop::split_complement(grp({4}), grp({2})));
  EXPECT_FALSE(genprop::split_complement(grp({2}), grp({0})));
}

TEST(RandomSes, EveryOutputIsShortExact) {
  genprop::GenConfig cfg;
  genprop::Rng rng(18);
  for (int i = 0; i < 300; ++i) {
    const auto s = genprop::random_ses(cfg, rng);
    EXPECT_TRUE(is_short_exact(ab, s.f, s.g).exact);
  }
}

TEST(RandomSes, ZeroMiddleGivesTheZeroSequence) {
  genprop::GenConfig cfg;
  cfg.factor_pool = {};
  genprop::Rng rng(19);
  const auto s = genprop::random_ses(cfg, rng);
  EXPECT_TRUE(s.f.src().is_zero() && s.f.dst().is_zero() && s.g.dst().is_zero());
}

bool splits(const GroupHom& g) {
  // Enumerate every homomorphism C → B and look for a section of g.
  const oracle::ElementTable b(g.src());
  const auto& d = g.dst().invariant_factors();
  if (d.size() != 1) return true;
  for (std::size_t x = 0; x < b.size(); ++x) {
    const auto e = b.element(x);
    intlin::IntMatrix m(e.size(), 1);
    for (std::size_t k = 0; k < e.size(); ++k) m(k, 0) = e[k];
    try {
      const auto s = fgab::make_hom(g.dst(), g.src(), m);
      if (fgab::compose(g, s) == fgab::identity(g.dst())) return true;
    } catch (const fgab::NotAHomomorphism&) {
    }
  }
  return false;
}

TEST(RandomSes, ReachesANonSplitSequence) {
  genprop::GenConfig cfg;
  cfg.factor_pool = {2, 4, 8, 0};
  cfg.scheme = genprop::Scheme::EpiKernelTopSplitBottom;
  genprop::Rng rng(20);
  bool found = false;
  for (int i = 0; i < 1000 && !found; ++i) {
    const auto l = genprop::gen_ladder(cfg, ShortFiveMode::Monic, rng);
    if (l.f.src() == grp({2}) && l.f.dst() == grp({4}) && l.g.dst() == grp({2})) {
      EXPECT_FALSE(splits(l.g));
      found = true;
    }
  }
  EXPECT_TRUE(found);
}

TEST(GenLadder, EverySchemeAndModeSatisfiesTheHypotheses) {
  for (auto scheme : {genprop::Scheme::SplitSplit, genprop::Scheme::EpiKernelTopSplitBottom,
                      genprop::Scheme::Conjugated}) {
    for (auto mode : {ShortFiveMode::Monic, ShortFiveMode::Epic, ShortFiveMode::Iso}) {
      genprop::GenConfig cfg;
      cfg.scheme = scheme;
      genprop::Rng rng(21);
      for (int i = 0; i < 25; ++i) {
        const auto l = genprop::gen_ladder(cfg, mode, rng);
        const auto r = verify_short_five(ab, l, mode);
        EXPECT_TRUE(r.hypotheses_passed()) << to_string(scheme) << "/" << to_string(mode) << ": " << r.culprit();
        EXPECT_TRUE(check_commutes(ladder_diagram(ab, l)).passed());
      }
    }
  }
}

TEST(GenLadder, SameSeedSameLadders) {
  genprop::GenConfig cfg;
  cfg.scheme = genprop::Scheme::Conjugated;
  genprop::Rng a(22), b(22);
  for (int i = 0; i < 20; ++i)
    EXPECT_EQ(ladder_key(genprop::gen_ladder(cfg, ShortFiveMode::Epic, a)),
              ladder_key(genprop::gen_ladder(cfg, ShortFiveMode::Epic, b)));
}

TEST(GenLadder, PerturbationExercisesFailingHypotheses) {
  genprop::GenConfig cfg;
  cfg.perturb_probability = 0.5;
  genprop::Rng rng(23);
  int failing = 0;
  for (int i = 0; i < 100; ++i)
    failing += !verify_short_five(ab, genprop::gen_ladder(cfg, ShortFiveMode::Iso, rng), ShortFiveMode::Iso)
                    .hypotheses_passed();
  EXPECT_GT(failing, 0);
}

TEST(SplitLadder, IdentitiesGiveAnIsoMiddle) {
  const auto a = grp({3}), c = grp({2, 0});
  const auto l = genprop::split_ladder(fgab::identity(a), fgab::identity(c), fgab::zero_hom(c, a));
  EXPECT_TRUE(classify_morphism(ab, l.beta).iso);
  EXPECT_TRUE(verify_short_five(ab, l, ShortFiveMode::Iso).passed());
}

// The epi-kernel construction β = ι_{A′}∘β₁ + ι_{C′}∘γ∘g, α = β₁∘f, done by
// hand on the 0 → Z/2 → Z/4 → Z/2 → 0 top row.
TEST(SplitLadder, EpiKernelConstructionOnTheNonsplitRow) {
  const auto f = hom(grp({2}), grp({4}), {{2}});
  const auto g = hom(grp({4}), grp({2}), {{1}});
  const auto beta1 = fgab::identity(grp({4}));
  const auto gamma = fgab::identity(grp({2}));
  const auto s = fgab::direct_sum(grp({4}), grp({2}));
  const SesLadder<GroupHom> l{f,
                              g,
                              s.inj_a,
                              s.proj_b,
                              fgab::compose(beta1, f),
                              fgab::add(fgab::compose(s.inj_a, beta1), fgab::compose(s.inj_b, fgab::compose(gamma, g))),
                              gamma};
  EXPECT_EQ(l.alpha.matrix(), test_support::mat({{2}}));
  const auto r = verify_short_five(ab, l, ShortFiveMode::Monic);
  EXPECT_TRUE(r.passed()) << r.culprit();
  EXPECT_TRUE(oracle::HomTable(l.beta).injective());
  EXPECT_TRUE(short_five_trace(ab, l).passed());
}

TEST(GenNineGrid, HypothesesHoldAndSeedsRepeat) {
  genprop::GenConfig cfg;
  genprop::Rng rng(24), again(24);
  for (int i = 0; i < 20; ++i) {
    const auto grid = genprop::gen_nine_grid(cfg, rng);
    const auto copy = genprop::gen_nine_grid(cfg, again);
    EXPECT_EQ(grid.beta[1], copy.beta[1]);
    EXPECT_TRUE(verify_nine_lemma(ab, grid, NineDirection::BottomFromTop).hypotheses_passed());
  }
}

TEST(GenNineGrid, RankZeroGivesTheZeroGrid) {
  genprop::GenConfig cfg;
  cfg.max_rank = 0;
  genprop::Rng rng(25);
  const auto grid = genprop::gen_nine_grid(cfg, rng);
  for (const auto& m : grid.f) EXPECT_TRUE(m.src().is_zero() && m.dst().is_zero());
  for (const auto& m : grid.g) EXPECT_TRUE(m.dst().is_zero());
}

TEST(Schemes, NamesRoundTrip) {
  for (auto s : {genprop::Scheme::SplitSplit, genprop::Scheme::EpiKernelTopSplitBottom, genprop::Scheme::Conjugated})
    EXPECT_EQ(genprop::parse_scheme(genprop::to_string(s)), s);
  EXPECT_THROW(genprop::parse_scheme("split"), InputError);
}

}  // namespace
