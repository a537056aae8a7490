#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stochtop/complex.hpp"

namespace stochtop {

/// Random complex families. `Multi` is the general multi-parameter model
/// X(n; p_0, ..., p_D): vertices are kept with probability p_0 and, level by
/// level, every i-simplex whose whole boundary is present is kept with
/// probability p_i. `Linial` (LM_d) has p_i = 1 below d, p_d = p and nothing
/// above. `Clique` (d) has p_i = 1 below d, p_d = p and p_i = 1 above d.
enum class ModelKind { Multi, Linial, Clique };

ModelKind parse_model_kind(const std::string& s);
std::string to_string(ModelKind kind);

/// Parameter vector (p_0, ..., p_cap) for the named families.
std::vector<double> linial_params(int d, double p);
std::vector<double> clique_params(int d, double p, int dim_cap);

/// Samples the multi-parameter model; the dimension cap is p.size() - 1.
/// One PRNG value is consumed per candidate simplex whose p_i lies strictly
/// between 0 and 1, in lexicographic candidate order.
SimplicialComplex mp_sample(std::size_t n, const std::vector<double>& p, std::uint64_t seed);

/// Linial-Meshulam complex with complete (d-1)-skeleton; cap d. Top-level
/// simplices are drawn by geometric skipping over the lexicographic list.
SimplicialComplex lm_sample(std::size_t n, int d, double p, std::uint64_t seed);

/// d-clique complex: complete (d-1)-skeleton, d-simplices kept with
/// probability p, every higher simplex whose boundary is present kept.
SimplicialComplex clique_sample(std::size_t n, int d, double p, int dim_cap, std::uint64_t seed);

/// Derived parameters; index helpers shift by one so that k = -1 is valid.
struct DerivedParams {
  std::vector<double> q;  ///< q_{-1}, ..., q_D
  std::vector<double> r;  ///< r_{-1}, ..., r_{D-1}
  std::vector<double> s;  ///< s_0, ..., s_{D-1}
  double q_at(int k) const { return q.at(static_cast<std::size_t>(k + 1)); }
  double r_at(int k) const { return r.at(static_cast<std::size_t>(k + 1)); }
  double s_at(int k) const { return s.at(static_cast<std::size_t>(k)); }
};

DerivedParams derive_params(const std::vector<double>& p);

/// Probability that a fixed complex Y is contained in X(n; p).
double subcomplex_prob(const SimplicialComplex& y, const std::vector<double>& p);
/// Probability that X(n; p) (capped at dimension p.size()-1) equals Y.
double realization_prob(const SimplicialComplex& y, const std::vector<double>& p);

/// Edge/top parameter making n * r_k = c for the named family.
double scaling_for_c(ModelKind kind, int d, int k, double c, std::size_t n);

/// Binomial coefficient as a double (exact for the sizes used here).
double binomial(long long n, long long k);

}  // namespace stochtop
