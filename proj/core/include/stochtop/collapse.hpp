#pragma once

#include <utility>
#include <vector>

#include "stochtop/complex.hpp"

namespace stochtop {

/// Pairs removed by collapse rounds: ((k+1)-simplex, its chosen free k-face).
struct CollapseTrace {
  std::vector<std::vector<std::pair<Simplex, Simplex>>> removed;  ///< one list per round
  std::size_t rounds() const { return removed.size(); }
};

/// True when tau has a unique maximal simplex strictly containing it.
bool is_free(const SimplicialComplex& x, SimplexView tau);

/// R_k: every maximal (k+1)-simplex with at least one free k-face is removed
/// together with its lexicographically smallest free k-face, all at once.
std::pair<SimplicialComplex, CollapseTrace> collapse_round(const SimplicialComplex& x, int k);

/// R_k^l (with the trace of every round).
std::pair<SimplicialComplex, CollapseTrace> collapse_rounds(const SimplicialComplex& x, int k, int l);

/// S_k^l: R_k^l(X) without its maximal k-simplices.
SimplicialComplex strip(const SimplicialComplex& x, int k, int l);

/// I_k: number of maximal k-simplices.
std::size_t maximal_k_count(const SimplicialComplex& x, int k);

/// D_k^{(l)}(X, tau) = 1{tau in S} (deg(S; tau)/(k+2) - 1) with S = S_k^l(X).
double d_functional(const SimplicialComplex& x, SimplexView tau, int l);
/// The same value for every k-simplex of X, in lexicographic order.
std::vector<double> d_functional_all(const SimplicialComplex& x, int k, int l);

/// f_k - f_{k+1} - f_{k-1} + sum_tau D_k^{(l)}(X, tau); a lower bound for beta_k.
long long betti_lower_bound(const SimplicialComplex& x, int k, int l);

}  // namespace stochtop
