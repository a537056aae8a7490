#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.hpp"
#include "stochtop/constants.hpp"
#include "stochtop/error.hpp"
#include "stochtop/rng.hpp"
#include "stochtop/sampler.hpp"

using namespace stochtop;
using namespace stochtop::testing;

namespace {

double choose(double n, double k) { return std::exp(std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1)); }

/// |mean - mu| within z standard errors of a sum of `trials` draws with variance var.
void expect_mean_near(double mean, double mu, double var, std::size_t trials, double z) {
  EXPECT_LE(std::abs(mean - mu), z * std::sqrt(var / static_cast<double>(trials)) + 1e-12)
      << "mean " << mean << " expected " << mu;
}

}  // namespace

TEST(Rng, DeriveSeedIsStableAndDistinct) {
  EXPECT_EQ(derive_seed(1, {0, 0, 0}), derive_seed(1, {0, 0, 0}));
  EXPECT_NE(derive_seed(1, {0, 0, 1}), derive_seed(1, {0, 1, 0}));
  EXPECT_NE(derive_seed(1, {0}), derive_seed(2, {0}));
  EXPECT_EQ(mix64(0), 0xe220a8397b1dcdafull);  // first SplitMix64 output for state 0
}

TEST(Rng, PoissonAndGeometricMeans) {
  Rng rng(7);
  const std::size_t trials = 200000;
  for (double lambda : {0.5, 2.0, 45.0}) {
    double s = 0.0;
    for (std::size_t i = 0; i < trials; ++i) s += rng.poisson(lambda);
    expect_mean_near(s / trials, lambda, lambda, trials, 4.0);
  }
  const double p = 0.1;
  double s = 0.0;
  for (std::size_t i = 0; i < trials; ++i) s += static_cast<double>(rng.geometric_failures(p));
  expect_mean_near(s / trials, (1 - p) / p, (1 - p) / (p * p), trials, 4.0);
}

TEST(MpSample, Examples) {
  EXPECT_EQ(mp_sample(5, {1.0, 1.0}, 1).f(1), 10u);
  const SimplicialComplex isolated = mp_sample(5, {1.0, 0.0}, 1);
  EXPECT_EQ(isolated.f(0), 5u);
  EXPECT_EQ(isolated.f(1), 0u);
  const std::size_t trials = 10000;
  double s = 0.0;
  for (std::size_t i = 0; i < trials; ++i) s += static_cast<double>(mp_sample(6, {1.0, 0.5}, derive_seed(3, {i})).f(1));
  expect_mean_near(s / trials, 7.5, 15 * 0.25, trials, 3.0);
}

TEST(MpSample, RejectsInvalidProbabilities) {
  EXPECT_THROW(mp_sample(5, {1.0, 1.5}, 1), InvalidArgument);
  EXPECT_THROW(mp_sample(5, {-0.1}, 1), InvalidArgument);
}

TEST(MpSample, CandidatesNeedTheirBoundary) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const SimplicialComplex x = mp_sample(9, {0.8, 0.5, 0.7, 0.9}, seed);
    for (int k = 1; k <= x.top_dimension(); ++k) {
      for (const Simplex& s : x.simplices(k)) {
        for (const Simplex& f : faces(s)) EXPECT_TRUE(x.contains(f));
      }
    }
  }
}

TEST(LmSample, Examples) {
  EXPECT_EQ(lm_sample(8, 2, 1.0, 1).f(2), 56u);
  const SimplicialComplex empty_top = lm_sample(8, 2, 0.0, 1);
  EXPECT_EQ(empty_top.f(2), 0u);
  EXPECT_EQ(empty_top.f(1), 28u);
  const std::size_t trials = 3000;
  const double p = 0.1, m = choose(30, 3);
  double s = 0.0;
  for (std::size_t i = 0; i < trials; ++i) s += static_cast<double>(lm_sample(30, 2, p, derive_seed(5, {i})).f(2));
  expect_mean_near(s / trials, m * p, m * p * (1 - p), trials, 3.0);
  EXPECT_THROW(lm_sample(3, 3, 0.5, 1), InvalidArgument);
}

TEST(LmSample, Reproducible) {
  EXPECT_EQ(lm_sample(40, 2, 0.05, 11), lm_sample(40, 2, 0.05, 11));
  EXPECT_NE(lm_sample(40, 2, 0.05, 11), lm_sample(40, 2, 0.05, 12));
}

TEST(CliqueSample, Examples) {
  EXPECT_EQ(clique_sample(6, 1, 1.0, 3, 1).f_vector(), (std::vector<std::size_t>{6, 15, 20, 15}));
  const std::size_t trials = 2000;
  double edges = 0.0, triangles = 0.0;
  for (std::size_t i = 0; i < trials; ++i) {
    const SimplicialComplex x = clique_sample(40, 1, 0.3, 2, derive_seed(9, {i}));
    edges += static_cast<double>(x.f(1));
    triangles += static_cast<double>(x.f(2));
  }
  expect_mean_near(edges / trials, choose(40, 2) * 0.3, choose(40, 2) * 0.21, trials, 3.0);
  // Triangle counts are positively correlated; bound the variance by the second moment.
  const double mu = choose(40, 3) * 0.027;
  expect_mean_near(triangles / trials, mu, mu * (1 + 3 * 37 * 0.3 * 0.3 * 0.3 * 10), trials, 3.0);
}

TEST(CliqueSample, HigherSimplicesAreCliques) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const SimplicialComplex x = clique_sample(25, 1, 0.4, 4, seed);
    // Independent flag check: every 4-set whose 6 edges exist is a 3-simplex.
    std::size_t cliques = 0;
    for (Vertex a = 0; a < 25; ++a)
      for (Vertex b = a + 1; b < 25; ++b)
        for (Vertex c = b + 1; c < 25; ++c)
          for (Vertex d = c + 1; d < 25; ++d) {
            const bool all = x.contains(Simplex{a, b}) && x.contains(Simplex{a, c}) && x.contains(Simplex{a, d}) &&
                             x.contains(Simplex{b, c}) && x.contains(Simplex{b, d}) && x.contains(Simplex{c, d});
            cliques += all ? 1 : 0;
            EXPECT_EQ(all, x.contains(Simplex{a, b, c, d}));
          }
    EXPECT_EQ(cliques, x.f(3));
  }
}

TEST(DeriveParams, LinialMeshulam) {
  const DerivedParams dp = derive_params(linial_params(2, 0.3));
  EXPECT_DOUBLE_EQ(dp.q_at(1), 1.0);
  EXPECT_DOUBLE_EQ(dp.r_at(1), 0.3);
  EXPECT_DOUBLE_EQ(dp.q_at(-1), 1.0);
}

TEST(DeriveParams, Clique) {
  const double p = 0.37;
  for (int d = 1; d <= 2; ++d) {
    const DerivedParams dp = derive_params(clique_params(d, p, 4));
    for (int k = d - 1; k <= 3; ++k) {
      EXPECT_NEAR(dp.q_at(k), std::pow(p, choose(k + 1, d + 1)), 1e-15);
      EXPECT_NEAR(dp.r_at(k), std::pow(p, choose(k + 1, d)), 1e-15);
    }
  }
  EXPECT_NEAR(derive_params(clique_params(1, p, 3)).s_at(1), p, 1e-15);
}

TEST(SubcomplexProb, Examples) {
  const double p = 0.2;
  const std::vector<double> params = clique_params(1, p, 2);
  EXPECT_DOUBLE_EQ(subcomplex_prob(make(3, {{0, 1}}), params), p);
  EXPECT_NEAR(subcomplex_prob(filled_triangle(), params), p * p * p, 1e-15);
  EXPECT_DOUBLE_EQ(subcomplex_prob(make(3, {}), params), 1.0);
}

TEST(RealizationProb, Examples) {
  const double q = 0.35, r = 0.6;
  EXPECT_NEAR(realization_prob(make(2, {{0}, {1}}), {1.0, q}), 1 - q, 1e-15);
  EXPECT_NEAR(realization_prob(make(2, {{0, 1}}), {1.0, q}), q, 1e-15);
  EXPECT_NEAR(realization_prob(hollow_triangle(), {1.0, 1.0, r}), 1 - r, 1e-15);
}

TEST(ScalingForC, Examples) {
  EXPECT_DOUBLE_EQ(scaling_for_c(ModelKind::Linial, 2, 1, 2.0, 100), 0.02);
  EXPECT_NEAR(scaling_for_c(ModelKind::Clique, 1, 1, 3.0, 300), std::sqrt(0.01), 1e-15);
  EXPECT_NEAR(scaling_for_c(ModelKind::Clique, 2, 2, 3.0, 300), std::pow(0.01, 1.0 / 3.0), 1e-15);
  EXPECT_THROW(scaling_for_c(ModelKind::Linial, 2, 1, 5.0, 3), InvalidArgument);
  for (int d = 1; d <= 3; ++d) {
    for (int k = d - 1; k <= 3; ++k) {
      const std::size_t n = 500;
      const double p = scaling_for_c(ModelKind::Clique, d, k, 1.7, n);
      EXPECT_NEAR(static_cast<double>(n) * derive_params(clique_params(d, p, k + 1)).r_at(k), 1.7, 1e-12);
    }
  }
}

TEST(SamplerProperty, QrsRelations) {
  Rng rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t len = 2 + rng.below(5);
    std::vector<double> p(len);
    for (double& v : p) v = 0.05 + 0.95 * rng.uniform();
    const DerivedParams dp = derive_params(p);
    const int top = static_cast<int>(len) - 2;
    for (int k = 0; k <= top; ++k) {
      EXPECT_NEAR(dp.q_at(k + 1), dp.q_at(k) * dp.r_at(k), 1e-12 * dp.q_at(k));
      for (int i = 0; i <= k; ++i) {
        const double lhs = (k + 1) * std::log(dp.q_at(i)), rhs = (i + 1) * std::log(dp.q_at(k));
        EXPECT_GE(lhs, rhs - 1e-9);
      }
      if (k >= 1) {
        const double s = dp.s_at(k);
        EXPECT_GE(std::log(dp.r_at(k)), std::log(dp.q_at(0)) + (k + 1) * std::log(s) - 1e-9);
        EXPECT_GE(std::log(dp.q_at(k)) + (k + 1) * std::log(s), (k + 1) * std::log(dp.r_at(k)) - 1e-9);
      }
    }
    for (std::size_t i = 1; i < dp.q.size(); ++i) EXPECT_LE(dp.q[i], dp.q[i - 1] + 1e-15);
    for (std::size_t i = 1; i < dp.r.size(); ++i) EXPECT_LE(dp.r[i], dp.r[i - 1] + 1e-15);
  }
}

TEST(SamplerProperty, SubcomplexFrequencyMatchesProbability) {
  const std::vector<double> p{0.9, 0.6, 0.7};
  const SimplicialComplex y = make(5, {{0, 1, 2}, {2, 3}});
  const std::size_t trials = 20000;
  std::size_t hits = 0;
  for (std::size_t i = 0; i < trials; ++i) hits += is_subcomplex(y, mp_sample(5, p, derive_seed(41, {i}))) ? 1 : 0;
  const double prob = subcomplex_prob(y, p);
  EXPECT_NEAR(prob, std::pow(0.9, 4) * std::pow(0.6, 4) * 0.7, 1e-15);
  expect_mean_near(static_cast<double>(hits) / trials, prob, prob * (1 - prob), trials, 4.0);
}

TEST(SamplerProperty, RealizationFrequencyMatchesProbability) {
  const std::vector<double> p{0.8, 0.5, 0.6};
  const SimplicialComplex y = make(3, {{0, 1}, {0, 2}, {1, 2}});
  const SimplicialComplex y2 = make(3, {{0, 1}, {2}});
  const std::size_t trials = 20000;
  std::size_t hits = 0, hits2 = 0;
  for (std::size_t i = 0; i < trials; ++i) {
    const SimplicialComplex x = mp_sample(3, p, derive_seed(43, {i}));
    hits += x == y ? 1 : 0;
    hits2 += x == y2 ? 1 : 0;
  }
  for (const auto& [count, target] : {std::pair{hits, realization_prob(y, p)}, std::pair{hits2, realization_prob(y2, p)}}) {
    expect_mean_near(static_cast<double>(count) / trials, target, target * (1 - target), trials, 4.0);
  }
  EXPECT_NEAR(realization_prob(y, p), std::pow(0.8, 3) * std::pow(0.5, 3) * 0.4, 1e-15);
}
