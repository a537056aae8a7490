#include <gtest/gtest.h>

#include <numeric>

#include "fixtures.hpp"
#include "stochtop/betti.hpp"
#include "stochtop/error.hpp"
#include "stochtop/rank.hpp"
#include "stochtop/sampler.hpp"

using namespace stochtop;
using namespace stochtop::testing;

namespace {

/// Plain dense Gaussian elimination over GF(p): an independent rank oracle.
std::size_t dense_rank(const SparseIntMatrix& m, std::uint64_t p) {
  std::vector<std::vector<std::uint64_t>> a(m.rows, std::vector<std::uint64_t>(m.cols, 0));
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t e = m.row_ptr[r]; e < m.row_ptr[r + 1]; ++e) {
      const std::int64_t v = m.val[e] % static_cast<std::int64_t>(p);
      a[r][m.col[e]] = static_cast<std::uint64_t>(v < 0 ? v + static_cast<std::int64_t>(p) : v);
    }
  }
  auto power = [p](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    for (b %= p; e; e >>= 1, b = b * b % p) {
      if (e & 1) r = r * b % p;
    }
    return r;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    std::size_t piv = rank;
    while (piv < m.rows && a[piv][c] == 0) ++piv;
    if (piv == m.rows) continue;
    std::swap(a[piv], a[rank]);
    const std::uint64_t inv = power(a[rank][c], p - 2);
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const std::uint64_t f = a[r][c] * inv % p;
      for (std::size_t j = c; j < m.cols; ++j) a[r][j] = (a[r][j] + (p - f) * a[rank][j]) % p;
    }
    ++rank;
  }
  return rank;
}

std::size_t union_find_components(const SimplicialComplex& x) {
  std::vector<std::size_t> parent(x.vertex_universe());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Simplex& e : x.simplices(1)) parent[find(e[0])] = find(e[1]);
  std::size_t count = 0;
  for (const Simplex& v : x.simplices(0)) count += find(v[0]) == v[0] ? 1 : 0;
  return count;
}

SparseIntMatrix from_dense(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols) {
  SparseIntMatrix m;
  m.cols = cols;
  for (const auto& row : rows) {
    std::vector<std::pair<std::uint32_t, std::int64_t>> entries;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] != 0) entries.emplace_back(static_cast<std::uint32_t>(j), row[j]);
    }
    m.add_row(entries);
  }
  return m;
}

}  // namespace

TEST(Coboundary, HollowTriangleDegreeZero) {
  const SparseIntMatrix d0 = coboundary_matrix(hollow_triangle(), 0);
  EXPECT_EQ(d0.rows, 3u);
  EXPECT_EQ(d0.cols, 3u);
  EXPECT_EQ(rank_mod_p(d0, kPrimaryPrime), 2u);
}

TEST(Coboundary, AugmentationColumn) {
  const SparseIntMatrix dm = coboundary_matrix(path3(), -1);
  EXPECT_EQ(dm.cols, 1u);
  EXPECT_EQ(dm.rows, 3u);
  for (std::int64_t v : dm.val) EXPECT_EQ(v, 1);
  EXPECT_EQ(rank_mod_p(dm, kPrimaryPrime), 1u);
}

TEST(Coboundary, FilledTriangleSigns) {
  const SparseIntMatrix d1 = coboundary_matrix(filled_triangle(), 1);
  ASSERT_EQ(d1.rows, 1u);
  ASSERT_EQ(d1.cols, 3u);
  // Row of {0,1,2}: columns {0,1}, {0,2}, {1,2} get (-1)^i for the omitted vertex i.
  std::vector<std::int64_t> row(3, 0);
  for (std::size_t e = d1.row_ptr[0]; e < d1.row_ptr[1]; ++e) row[d1.col[e]] = d1.val[e];
  EXPECT_EQ(row, (std::vector<std::int64_t>{1, -1, 1}));
  EXPECT_EQ(rank_mod_p(d1, kPrimaryPrime), 1u);
}

TEST(Coboundary, RowsHaveKPlusTwoEntries) {
  const SimplicialComplex x = lm_sample(12, 2, 0.4, 5);
  for (int k = 0; k <= 1; ++k) {
    const SparseIntMatrix d = coboundary_matrix(x, k);
    for (std::size_t r = 0; r < d.rows; ++r) EXPECT_EQ(d.row_ptr[r + 1] - d.row_ptr[r], static_cast<std::size_t>(k + 2));
  }
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank_mod_p(from_dense({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3), kPrimaryPrime), 3u);
  EXPECT_EQ(rank_mod_p(from_dense({{0, 0}, {0, 0}}, 2), kPrimaryPrime), 0u);
}

TEST(RankProperty, MatchesDenseOracleOnRandomMatrices) {
  Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng.below(30), cols = 1 + rng.below(30);
    const double density = 0.05 + 0.5 * rng.uniform();
    std::vector<std::vector<std::int64_t>> a(rows, std::vector<std::int64_t>(cols, 0));
    for (auto& row : a) {
      for (auto& v : row) {
        if (rng.bernoulli(density)) v = static_cast<std::int64_t>(rng.below(5)) - 2;
      }
    }
    // Duplicate some rows to force rank deficiency.
    if (rows > 2) a[rows - 1] = a[0];
    const SparseIntMatrix m = from_dense(a, cols);
    for (std::uint32_t p : {kPrimaryPrime, kVerifierPrime, 7u}) {
      EXPECT_EQ(rank_mod_p(m, p), dense_rank(m, p)) << "trial " << trial << " prime " << p;
    }
  }
}

TEST(RankProperty, DenseSwitchDoesNotChangeRank) {
  const SimplicialComplex x = lm_sample(25, 2, 0.25, 17);
  const SparseIntMatrix d = coboundary_matrix(x, 1);
  RankTuning sparse_only;
  sparse_only.dense_switch_density = 2.0;
  RankTuning eager;
  eager.dense_switch_density = 0.0;
  EXPECT_EQ(rank_mod_p(d, kPrimaryPrime, sparse_only), rank_mod_p(d, kPrimaryPrime, eager));
  EXPECT_EQ(rank_mod_p(d, kPrimaryPrime), dense_rank(d, kPrimaryPrime));
}

TEST(Betti, Examples) {
  EXPECT_EQ(betti_number(hollow_triangle(), 0), 0);
  EXPECT_EQ(betti_number(hollow_triangle(), 1), 1);
  EXPECT_EQ(betti_number(make(5, {{0}, {1}, {2}, {3}, {4}}), 0), 4);
  const SimplicialComplex s2 = tetra_boundary();
  EXPECT_EQ(betti_numbers(s2), (std::vector<long long>{0, 0, 1}));
}

TEST(Betti, RefusesInsufficientCap) {
  const SimplicialComplex capped = SimplicialComplex::from_simplices(3, {{0, 1}, {0, 2}, {1, 2}}, 1);
  EXPECT_THROW(betti_number(capped, 1), InvalidArgument);
  EXPECT_EQ(betti_number(capped, 0), 0);
}

TEST(CocycleDim, Examples) {
  EXPECT_EQ(cocycle_dim(hollow_triangle(), 1), 3u);
  EXPECT_EQ(cocycle_dim(filled_triangle(), 1), 2u);
  EXPECT_EQ(cocycle_dim(make(1, {{0}}), 0), 1u);
}

TEST(Morse, Examples) {
  EXPECT_EQ(morse_lower_bound(hollow_triangle(), 1), 0);
  EXPECT_EQ(morse_lower_bound(full_simplex(4), 1), -2);
}

TEST(BettiProperty, EulerPoincare) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const SimplicialComplex x = random_complex(10, 3, 12, seed);
    const std::vector<long long> b = betti_numbers(x);
    long long alt = 0;
    for (std::size_t k = 0; k < b.size(); ++k) alt += (k % 2 == 0 ? 1 : -1) * b[k];
    EXPECT_EQ(alt, reduced_euler_characteristic(x)) << "seed " << seed;
  }
}

TEST(BettiProperty, CoboundarySquaresToZero) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const SimplicialComplex x = random_complex(9, 3, 10, seed);
    for (int k = 0; k + 1 <= x.top_dimension(); ++k) EXPECT_TRUE(coboundary_squares_to_zero(x, k));
  }
  // Independent check: multiply d_1 d_0 explicitly for a sphere.
  const SimplicialComplex s2 = tetra_boundary();
  const SparseIntMatrix d0 = coboundary_matrix(s2, 0), d1 = coboundary_matrix(s2, 1);
  for (std::size_t r = 0; r < d1.rows; ++r) {
    std::vector<std::int64_t> acc(d0.cols, 0);
    for (std::size_t e = d1.row_ptr[r]; e < d1.row_ptr[r + 1]; ++e) {
      const std::size_t mid = d1.col[e];
      for (std::size_t f = d0.row_ptr[mid]; f < d0.row_ptr[mid + 1]; ++f) acc[d0.col[f]] += d1.val[e] * d0.val[f];
    }
    for (std::int64_t v : acc) EXPECT_EQ(v, 0);
  }
}

TEST(BettiProperty, TwoPrimeAgreement) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const SimplicialComplex x = lm_sample(30, 2, 2.0 / 30, seed);
    const SparseIntMatrix d = coboundary_matrix(x, 1);
    EXPECT_EQ(rank_mod_p(d, kPrimaryPrime), rank_mod_p(d, kVerifierPrime));
  }
}

TEST(BettiProperty, ReducedBettiZeroMatchesUnionFind) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const SimplicialComplex x = lm_sample(200, 1, 1.5 / 200, seed);
    EXPECT_EQ(betti_number(x, 0) + 1, static_cast<long long>(union_find_components(x)));
    EXPECT_EQ(connected_components(x), union_find_components(x));
  }
}

TEST(BettiProperty, MorseBoundBelowBetti) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const SimplicialComplex x = lm_sample(12, 2, 0.05 + 0.002 * static_cast<double>(seed), seed);
    EXPECT_LE(morse_lower_bound(x, 1), betti_number(x, 1));
  }
}

TEST(BettiProperty, CocycleDimensionIdentity) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const SimplicialComplex x = lm_sample(15, 2, 0.2, seed);
    // dim Z^1 = beta_1 + rank d_0 and rank d_0 = f_0 - 1 - beta_0.
    const long long rank_d0 = static_cast<long long>(x.f(0)) - 1 - betti_number(x, 0);
    EXPECT_EQ(static_cast<long long>(cocycle_dim(x, 1)), betti_number(x, 1) + rank_d0);
  }
}
