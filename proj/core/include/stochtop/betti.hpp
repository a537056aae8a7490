#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "stochtop/complex.hpp"
#include "stochtop/rank.hpp"

namespace stochtop {

/// Coboundary d_k : C^k -> C^{k+1} as a matrix with rows indexed by
/// (k+1)-simplices and columns by k-simplices (lexicographic order). The entry
/// for (sigma, sigma minus its i-th vertex) is (-1)^i. For k = -1 the single
/// column (the empty simplex) is all ones.
SparseIntMatrix coboundary_matrix(const SimplicialComplex& x, int k);

struct BettiOptions {
  /// Recompute every rank over the verification prime; disagreement is fatal.
  bool verify = true;
  RankTuning tuning{};
};

/// rank d_k (exact, two-prime checked when requested).
std::size_t coboundary_rank(const SimplicialComplex& x, int k, const BettiOptions& opts = {});

/// Reduced Betti number over the rationals: f_k - rank d_k - rank d_{k-1}.
/// Needs the complex to know dimension k+1.
long long betti_number(const SimplicialComplex& x, int k, const BettiOptions& opts = {});

/// beta_0 .. beta_{top} (each within the dimension cap).
std::vector<long long> betti_numbers(const SimplicialComplex& x, const BettiOptions& opts = {});

/// dim Z^k = f_k - rank d_k.
std::size_t cocycle_dim(const SimplicialComplex& x, int k, const BettiOptions& opts = {});

/// f_k - f_{k+1} - f_{k-1} (with f_{-1} = 1); never exceeds beta_k.
long long morse_lower_bound(const SimplicialComplex& x, int k);

/// Number of connected components of the 1-skeleton restricted to X's vertices.
std::size_t connected_components(const SimplicialComplex& x);

/// True when d_{k+1} d_k vanishes identically (checked over the integers).
bool coboundary_squares_to_zero(const SimplicialComplex& x, int k);

}  // namespace stochtop
