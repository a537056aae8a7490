#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.hpp"
#include "stochtop/betti.hpp"
#include "stochtop/constants.hpp"
#include "stochtop/error.hpp"
#include "stochtop/poisson_tree.hpp"
#include "stochtop/traversal.hpp"

using namespace stochtop;
using namespace stochtop::testing;

namespace {

double poisson_term(double lambda, int j) { return std::exp(-lambda + j * std::log(lambda) - std::lgamma(j + 1.0)); }

}  // namespace

TEST(SamplePt, ZeroRateGivesBareRoot) {
  const KRootedTree t = sample_pt(2, 0.0, 5, 1);
  EXPECT_EQ(t.node_count(), 1u);
  EXPECT_EQ(t.attachment_count(), 0u);
}

TEST(SamplePt, RootDegreeAndFaceCountMeans) {
  const std::size_t trials = 100000;
  const double c = 1.7;
  for (int k = 0; k <= 2; ++k) {
    Rng rng(derive_seed(5, {static_cast<std::uint64_t>(k)}));
    double deg = 0.0, fk = 0.0;
    for (std::size_t i = 0; i < trials; ++i) {
      const KRootedTree t = sample_pt(k, c, 1, rng);
      deg += static_cast<double>(t.degree(0));
      fk += static_cast<double>(t.f_k());
    }
    const double se = std::sqrt(c / static_cast<double>(trials));
    EXPECT_LE(std::abs(deg / trials - c), 3 * se);
    EXPECT_LE(std::abs(fk / trials - (1 + (k + 1) * c)), 3 * (k + 1) * se);
  }
}

TEST(SamplePt, GenerationsRespectDepth) {
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const KRootedTree t = sample_pt(1, 2.5, 3, rng);
    EXPECT_LE(t.depth(), 3);
    for (std::uint32_t v = 0; v < t.node_count(); ++v) {
      if (t.generation(v) == 3) {
        EXPECT_EQ(t.degree(v), 0u);
      }
    }
  }
}

TEST(ToComplex, Examples) {
  const RootedComplex bare = to_complex(KRootedTree(1));
  EXPECT_EQ(bare.complex.f_vector(), (std::vector<std::size_t>{2, 1}));
  KRootedTree one(0);
  one.attach_fresh(0);
  const RootedComplex edge = to_complex(one);
  EXPECT_EQ(edge.complex.f_vector(), (std::vector<std::size_t>{2, 1}));
  Rng rng(8);
  for (int i = 0; i < 100; ++i) {
    const RootedComplex x = to_complex(sample_pt(1, 1.5, 4, rng));
    EXPECT_TRUE(is_tree_neighborhood(bfs_traverse(x.complex, x.root)));
  }
}

TEST(ToComplex, TreesAreContractible) {
  Rng rng(9);
  for (int k = 0; k <= 2; ++k) {
    for (int i = 0; i < 30; ++i) {
      const SimplicialComplex x = to_complex(sample_pt(k, 1.3, 3, rng)).complex;
      for (long long b : betti_numbers(x)) EXPECT_EQ(b, 0);
    }
  }
}

TEST(Prune, Examples) {
  const KRootedTree bare(1);
  EXPECT_EQ(prune(bare).node_count(), 1u);

  KRootedTree one(1);
  one.attach_fresh(0);
  EXPECT_EQ(prune(one).node_count(), 1u);

  // k = 0 chain root - a - b: one round removes only the deepest attachment.
  KRootedTree chain(0);
  const std::uint32_t a = chain.attach_fresh(0);
  chain.attach_fresh(chain.child(a, 0));
  const KRootedTree pruned = prune(chain);
  EXPECT_EQ(pruned.attachment_count(), 1u);
  EXPECT_EQ(pruned.degree(0), 1u);
  EXPECT_EQ(prune(chain, 2).attachment_count(), 0u);
}

TEST(PruneProperty, MonotoneAndMatchesRecursion) {
  Rng rng(10);
  for (int k = 0; k <= 2; ++k) {
    for (int i = 0; i < 300; ++i) {
      const KRootedTree t = sample_pt(k, 1.8, 5, rng);
      KRootedTree cur = t;
      for (int r = 1; r <= 4; ++r) {
        const KRootedTree next = prune(cur);
        EXPECT_LE(next.f_k(), cur.f_k());
        EXPECT_EQ(next.degree(0), surviving_root_degree(t, r)) << "k " << k << " round " << r;
        EXPECT_EQ(prune(t, r).f_k(), next.f_k());
        cur = next;
      }
    }
  }
}

TEST(RootDegreeAfterPrunes, NoPruningIsPoisson) {
  const double c = 2.0;
  const DegreeHistogram h = root_degree_after_prunes(1, c, 0, 100000, 4);
  EXPECT_LE(tv_to_pmf(h, poisson_pmf(c)), 0.01);
}

TEST(RootDegreeAfterPrunes, OnePruneForGraphs) {
  const double lambda = 2.0 * (1.0 - std::exp(-2.0));
  EXPECT_NEAR(pruned_degree_parameter(0, 2.0, 1), lambda, 1e-15);
  const DegreeHistogram h = root_degree_after_prunes(0, 2.0, 1, 100000, 6);
  EXPECT_LE(tv_to_pmf(h, poisson_pmf(lambda)), 0.01);
}

TEST(RootDegreeAfterPrunes, ZeroRateAndDepthCheck) {
  const DegreeHistogram h = root_degree_after_prunes(1, 0.0, 2, 100, 1);
  ASSERT_EQ(h.size(), 1u);
  EXPECT_DOUBLE_EQ(h.at(0), 1.0);
  EXPECT_THROW(root_degree_after_prunes(1, 1.0, 2, 10, 1, 2), InvalidArgument);
}

TEST(PrunedDegreeParameter, UsesTIterates) {
  for (int k = 0; k <= 2; ++k) {
    for (double c : {0.5, 1.0, 2.0}) {
      EXPECT_DOUBLE_EQ(pruned_degree_parameter(k, c, 0), c);
      // t^{(l-1)} computed directly from the recursion.
      double t = 0.0;
      for (int l = 1; l <= 3; ++l) {
        t = std::exp(-c * std::pow(1.0 - t, k + 1));
        EXPECT_NEAR(pruned_degree_parameter(k, c, l), c * std::pow(1.0 - t, k + 1), 1e-14);
      }
    }
  }
}

TEST(Pmf, PoissonAndBinomial) {
  const std::vector<double> po = poisson_pmf(3.5);
  double s = 0.0;
  for (double v : po) s += v;
  EXPECT_NEAR(s, 1.0, 1e-14);
  for (int j = 0; j < 10; ++j) EXPECT_NEAR(po[j], poisson_term(3.5, j), 1e-15);
  const std::vector<double> bin = binomial_pmf(4, 0.25);
  const std::vector<double> expected{81.0 / 256, 108.0 / 256, 54.0 / 256, 12.0 / 256, 1.0 / 256};
  for (std::size_t j = 0; j < 5; ++j) EXPECT_NEAR(bin[j], expected[j], 1e-15);
}

TEST(PmfTv, Examples) {
  EXPECT_NEAR(pmf_tv(10, 0.0, 0.0), 0.0, 1e-15);
  const double e = std::exp(-0.3);
  const double exact = 0.5 * (std::abs(0.7 - e) + std::abs(0.3 - 0.3 * e) + (1 - e - 0.3 * e));
  EXPECT_NEAR(pmf_tv(1, 0.3, 0.3), exact, 1e-14);
  EXPECT_LE(pmf_tv(1, 0.3, 0.3), 0.3);
  EXPECT_LE(pmf_tv(1000, 0.002, 2.0), 0.002);
}

TEST(PmfTvProperty, BinomialPoissonBound) {
  Rng rng(77);
  for (int i = 0; i < 300; ++i) {
    const std::size_t m = 1 + rng.below(10000);
    const double p = 0.1 * rng.uniform();
    EXPECT_LE(pmf_tv(m, p, static_cast<double>(m) * p), p + 1e-12) << "m " << m << " p " << p;
  }
}

TEST(PtClassDistribution, RadiusOneIsTheRootDegreeLaw) {
  const double c = 1.5;
  const Histogram h = pt_class_distribution(1, c, 1, 100000, 12);
  const std::vector<double> po = poisson_pmf(c);
  std::vector<double> masses;
  for (const auto& [code, mass] : h) masses.push_back(mass);
  std::sort(masses.rbegin(), masses.rend());
  std::vector<double> expected(po.begin(), po.end());
  std::sort(expected.rbegin(), expected.rend());
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(masses[i], expected[i], 0.006);
}

TEST(PtRootedMeasure, MassAndFirstMoment) {
  const SpectralMeasure bare = pt_rooted_measure(1, 0.0, 4, 10, 1);
  EXPECT_NEAR(zero_mass(bare), 1.0, 1e-12);
  const double c = 1.2;
  const std::size_t samples = 4000;
  const SpectralMeasure mu = pt_rooted_measure(1, c, 3, samples, 2);
  EXPECT_NEAR(mu.total_mass(), 1.0, 1e-10);
  // (L e_root, e_root) is the root degree, Poisson(c) in mean.
  EXPECT_LE(std::abs(mu.moment(1) - c), 4 * std::sqrt(c / samples));
}
