#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace stochtop {

/// Primary and verification primes for exact ranks (both of the form 2^31 - e).
inline constexpr std::uint32_t kPrimaryPrime = 2147483647u;   // 2^31 - 1
inline constexpr std::uint32_t kVerifierPrime = 2147483629u;  // 2^31 - 19

/// Integer sparse matrix in compressed-row form.
struct SparseIntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::size_t> row_ptr{0};
  std::vector<std::uint32_t> col;
  std::vector<std::int64_t> val;

  void add_row(const std::vector<std::pair<std::uint32_t, std::int64_t>>& entries);
  std::size_t nnz() const { return col.size(); }
};

/// Tuning knobs of the elimination; defaults are sensible for coboundary matrices.
struct RankTuning {
  /// Switch from sparse to dense elimination once the active part has this density.
  double dense_switch_density = 0.04;
  /// Never switch to dense while the active block is larger than this many entries.
  std::size_t max_dense_entries = std::size_t{1} << 28;
};

/// Statistics of the last elimination (for diagnostics and benchmarks).
struct RankStats {
  std::size_t peeled = 0;        ///< pivots found without any fill
  std::size_t sparse_pivots = 0;  ///< pivots of the Markowitz phase
  std::size_t dense_rows = 0;
  std::size_t dense_cols = 0;
  std::size_t dense_rank = 0;
};

/// Rank over GF(prime). Specialised fast paths exist for the two default
/// primes; any other prime below 2^31 uses generic reduction.
std::size_t rank_mod_p(const SparseIntMatrix& m, std::uint32_t prime, const RankTuning& tuning = {},
                       RankStats* stats = nullptr);

}  // namespace stochtop
