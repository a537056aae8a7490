#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "stochtop/complex.hpp"

namespace stochtop {

/// A finitely supported probability (or sub-probability) measure on the reals.
/// Atoms are strictly increasing; masses are positive.
class SpectralMeasure {
 public:
  SpectralMeasure() = default;
  /// Builds a measure from (point, mass) pairs; equal points are merged.
  static SpectralMeasure from_pairs(std::vector<std::pair<double, double>> pairs);

  const std::vector<double>& atoms() const { return atoms_; }
  const std::vector<double>& masses() const { return masses_; }
  std::size_t size() const { return atoms_.size(); }
  double total_mass() const;
  /// mu((-inf, x]).
  double cdf(double x) const;
  /// mu((-inf, x)).
  double cdf_below(double x) const;
  double moment(int m) const;

 private:
  std::vector<double> atoms_;
  std::vector<double> masses_;
};

/// Up-Laplacian d_k^T d_k on k-cochains (rows/cols: k-simplices in lexicographic order).
Eigen::SparseMatrix<double> up_laplacian(const SimplicialComplex& x, int k);
Eigen::MatrixXd up_laplacian_dense(const SimplicialComplex& x, int k);

/// Receives human-readable diagnostics (e.g. zero-count reconciliation); defaults to stderr.
void set_diagnostic_sink(std::function<void(const std::string&)> sink);
void emit_diagnostic(const std::string& message);

struct EsdOptions {
  std::size_t max_dense = 5000;  ///< largest f_k handled by the dense eigensolver
  double zero_tol = 1e-7;        ///< relative to max(1, max |L_ij|)
  bool verify_rank = true;
};

/// Empirical spectral distribution: mass 1/f_k at each eigenvalue of the
/// up-Laplacian. Eigenvalues within the zero tolerance are reconciled with the
/// exact cocycle dimension (the exact count wins; a mismatch is reported).
SpectralMeasure esd(const SimplicialComplex& x, int k, const EsdOptions& opts = {});

/// Rooted measure at the k-simplex tau: mass |psi_i(tau)|^2 at eigenvalue i.
SpectralMeasure rooted_spectral_measure(const SimplicialComplex& x, SimplexView tau,
                                        const EsdOptions& opts = {});

/// (L^m e_tau, e_tau).
double walk_moment(const SimplicialComplex& x, SimplexView tau, int m);
double measure_moment(const SpectralMeasure& mu, int m);

/// sup_x |F_1(x) - F_2(x)|.
double kolmogorov_distance(const SpectralMeasure& a, const SpectralMeasure& b);
/// Mass within |lambda| <= tol.
double zero_mass(const SpectralMeasure& mu, double tol = 1e-9);
/// Equal-weight average of measures.
SpectralMeasure mean_measure(const std::vector<SpectralMeasure>& ms);

/// Gauss quadrature measure of (L, e_root) after `steps` Lanczos steps with
/// full reorthogonalisation; exact once the Krylov space is exhausted.
SpectralMeasure lanczos_rooted_measure(const Eigen::SparseMatrix<double>& l, std::size_t root, int steps);

/// Counts of eigenvalues strictly below each x of a sparse symmetric matrix,
/// from the inertia of LDL^T factorisations of (A - x I) (Sylvester's law).
/// A minimum-degree elimination order is computed once; the sparse part is
/// eliminated with that order and the remaining dense core is factorised by
/// LAPACK's Bunch-Kaufman routine.
class InertiaCounter {
 public:
  explicit InertiaCounter(const Eigen::SparseMatrix<double>& a);
  ~InertiaCounter();
  InertiaCounter(const InertiaCounter&) = delete;
  InertiaCounter& operator=(const InertiaCounter&) = delete;

  std::size_t dimension() const;
  /// Number of eigenvalues < x. A singular shift is nudged upward by a tiny
  /// relative amount (the count is then for a point within 1e-12 of x).
  std::size_t count_below(double x);
  std::size_t nonzeros_in_factor() const;

 private:
  struct Impl;
  Impl* impl_;
};

/// Cumulative distribution evaluated on a fixed grid: value[i] = mu((-inf, grid[i])).
struct GridCdf {
  std::vector<double> grid;
  std::vector<double> value;
};

/// Grid CDF of the ESD of the k-th up-Laplacian, computed by inertia counts.
/// `exact_zero_count` (dim Z^k) replaces the count at grid points in (0, tol].
/// When `numeric_zero_count` is given it receives the inertia count at the
/// zero tolerance (a cross-check of the exact value).
GridCdf esd_grid_cdf(const SimplicialComplex& x, int k, const std::vector<double>& grid,
                     std::size_t exact_zero_count, std::size_t* numeric_zero_count = nullptr);
/// Grid CDF of an explicit measure.
GridCdf grid_cdf(const SpectralMeasure& mu, const std::vector<double>& grid);
/// max_i |a.value[i] - b.value[i]| (grids must agree).
double kolmogorov_distance(const GridCdf& a, const GridCdf& b);
GridCdf mean_grid_cdf(const std::vector<GridCdf>& cdfs);

/// Default evaluation grid on [0, upper]: a uniform grid of the given step,
/// offset from the integers, plus points just below and above each integer.
std::vector<double> default_spectral_grid(double upper, double step, double zero_tol);

}  // namespace stochtop
