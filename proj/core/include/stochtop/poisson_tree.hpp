#pragma once

#include <cstdint>
#include <vector>

#include "stochtop/ktree.hpp"
#include "stochtop/rng.hpp"
#include "stochtop/spectra.hpp"
#include "stochtop/traversal.hpp"

namespace stochtop {

/// k-rooted Poisson tree: every k-simplex of generation < depth receives an
/// independent Poisson(c) number of attachments; nodes are expanded in
/// breadth-first order, one Poisson draw each.
KRootedTree sample_pt(int k, double c, int depth, std::uint64_t seed);
KRootedTree sample_pt(int k, double c, int depth, Rng& rng);

/// One round of Q_k: every non-root k-simplex without attachments is free;
/// each attachment with a free child is removed, then the tree is restricted
/// to the component of the root. Vertex labels are kept.
KRootedTree prune(const KRootedTree& t);
KRootedTree prune(const KRootedTree& t, int rounds);

/// Root attachments surviving `rounds` prunes, by the recursion "an attachment
/// survives r rounds iff each of its children carries an attachment surviving
/// r - 1 rounds". Agrees with repeated prune() on any finite tree.
std::size_t surviving_root_degree(const KRootedTree& t, int rounds);

/// Extra generations sampled beyond l + 1 by root_degree_after_prunes.
constexpr int kPruneDepthMargin = 2;

/// Empirical law of deg(Q_k^l(PT_k(c)); root) over independent trees sampled to
/// `depth` generations (default l + 1 + margin). The pruning outcome at the
/// root depends on generations <= l + 1 only, so any depth >= l + 1 is exact;
/// smaller depths are rejected.
DegreeHistogram root_degree_after_prunes(int k, double c, int l, std::size_t trials, std::uint64_t seed,
                                         int depth = -1);

/// Poisson parameter c (1 - t^{(l-1)})^{k+1} of the pruned root degree.
double pruned_degree_parameter(int k, double c, int l);

/// Poisson(lambda) pmf on 0..K with K chosen so the tail beyond K is < 1e-16.
std::vector<double> poisson_pmf(double lambda);
/// Binomial(m, p) pmf on 0..m.
std::vector<double> binomial_pmf(std::size_t m, double p);
/// Exact total variation distance between Bin(m, p) and Poisson(lambda).
double pmf_tv(std::size_t m, double p, double lambda);
/// Total variation between an empirical degree law and a pmf on 0, 1, 2, ...
/// (pmf mass beyond the vector is treated as 1 - sum).
double tv_to_pmf(const DegreeHistogram& h, const std::vector<double>& pmf);

/// Law of the radius-l class of PT_k(c) estimated from `samples` trees.
Histogram pt_class_distribution(int k, double c, int l, std::size_t samples, std::uint64_t seed);

/// Mean rooted spectral measure of the up-Laplacian of PT_k(c) truncated at
/// `depth`. Small trees are solved exactly; large ones use `lanczos_steps`
/// steps of Lanczos quadrature.
SpectralMeasure pt_rooted_measure(int k, double c, int depth, std::size_t samples, std::uint64_t seed,
                                  int lanczos_steps = 300);

}  // namespace stochtop
