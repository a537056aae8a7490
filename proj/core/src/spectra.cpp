#include "stochtop/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <mutex>

#include "stochtop/betti.hpp"
#include "stochtop/error.hpp"

namespace stochtop {
namespace {

std::mutex g_sink_mutex;
std::function<void(const std::string&)> g_sink;

double max_abs_entry(const Eigen::SparseMatrix<double>& l) {
  double m = 0.0;
  for (int j = 0; j < l.outerSize(); ++j) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(l, j); it; ++it) m = std::max(m, std::abs(it.value()));
  }
  return m;
}

std::size_t root_index(const SimplicialComplex& x, SimplexView tau) {
  auto idx = x.index_of(tau);
  if (!idx) throw InvalidArgument("root simplex is not in the complex");
  return *idx;
}

/// Snap the `exact` smallest eigenvalues to zero, reporting disagreement with
/// the numerical count within `tol`.
void reconcile_zeros(Eigen::VectorXd& evals, std::size_t exact, double tol, const char* what) {
  std::size_t numeric = 0;
  for (Eigen::Index i = 0; i < evals.size(); ++i) {
    if (std::abs(evals[i]) <= tol) ++numeric;
  }
  if (numeric != exact) {
    emit_diagnostic(std::string(what) + ": numerical zero count " + std::to_string(numeric) +
                    " differs from exact cocycle dimension " + std::to_string(exact) + "; using the exact count");
  }
  for (std::size_t i = 0; i < exact && static_cast<Eigen::Index>(i) < evals.size(); ++i) evals[static_cast<Eigen::Index>(i)] = 0.0;
  for (Eigen::Index i = static_cast<Eigen::Index>(exact); i < evals.size(); ++i) {
    if (evals[i] < 0.0) evals[i] = 0.0;  // rounding below an exact zero level
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// SpectralMeasure

SpectralMeasure SpectralMeasure::from_pairs(std::vector<std::pair<double, double>> pairs) {
  std::sort(pairs.begin(), pairs.end());
  SpectralMeasure mu;
  for (const auto& [x, m] : pairs) {
    if (!(m >= 0.0)) throw InvalidArgument("measure masses must be non-negative");
    if (m == 0.0) continue;
    if (!mu.atoms_.empty() && mu.atoms_.back() == x) {
      mu.masses_.back() += m;
    } else {
      mu.atoms_.push_back(x);
      mu.masses_.push_back(m);
    }
  }
  return mu;
}

double SpectralMeasure::total_mass() const {
  double s = 0.0;
  for (double m : masses_) s += m;
  return s;
}

double SpectralMeasure::cdf(double x) const {
  double s = 0.0;
  for (std::size_t i = 0; i < atoms_.size() && atoms_[i] <= x; ++i) s += masses_[i];
  return s;
}

double SpectralMeasure::cdf_below(double x) const {
  double s = 0.0;
  for (std::size_t i = 0; i < atoms_.size() && atoms_[i] < x; ++i) s += masses_[i];
  return s;
}

double SpectralMeasure::moment(int m) const {
  double s = 0.0;
  for (std::size_t i = 0; i < atoms_.size(); ++i) s += masses_[i] * std::pow(atoms_[i], m);
  return s;
}

// ---------------------------------------------------------------------------
// Laplacians

Eigen::SparseMatrix<double> up_laplacian(const SimplicialComplex& x, int k) {
  if (x.f(k) == 0) throw InvalidArgument("up-Laplacian of an empty level");
  const SparseIntMatrix d = coboundary_matrix(x, k);
  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(d.nnz());
  for (std::size_t r = 0; r < d.rows; ++r) {
    for (std::size_t t = d.row_ptr[r]; t < d.row_ptr[r + 1]; ++t) {
      trips.emplace_back(static_cast<int>(r), static_cast<int>(d.col[t]), static_cast<double>(d.val[t]));
    }
  }
  Eigen::SparseMatrix<double> b(static_cast<Eigen::Index>(d.rows), static_cast<Eigen::Index>(d.cols));
  b.setFromTriplets(trips.begin(), trips.end());
  Eigen::SparseMatrix<double> l = (b.transpose() * b).pruned();
  l.makeCompressed();
  return l;
}

Eigen::MatrixXd up_laplacian_dense(const SimplicialComplex& x, int k) {
  return Eigen::MatrixXd(up_laplacian(x, k));
}

void set_diagnostic_sink(std::function<void(const std::string&)> sink) {
  std::lock_guard<std::mutex> lock(g_sink_mutex);
  g_sink = std::move(sink);
}

void emit_diagnostic(const std::string& message) {
  std::lock_guard<std::mutex> lock(g_sink_mutex);
  if (g_sink) {
    g_sink(message);
  } else {
    std::cerr << "stochtop: " << message << '\n';
  }
}

SpectralMeasure esd(const SimplicialComplex& x, int k, const EsdOptions& opts) {
  const std::size_t f = x.f(k);
  if (!x.knows_dimension(k + 1)) throw InvalidArgument("ESD needs dimension k+1 within the cap");
  if (f == 0) return {};
  if (f > opts.max_dense) {
    throw InvalidArgument("f_k = " + std::to_string(f) + " exceeds the dense eigensolver limit " +
                          std::to_string(opts.max_dense) + "; use the grid CDF instead");
  }
  const Eigen::SparseMatrix<double> ls = up_laplacian(x, k);
  const double tol = opts.zero_tol * std::max(1.0, max_abs_entry(ls));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Eigen::MatrixXd(ls), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericError("symmetric eigensolver failed");
  Eigen::VectorXd ev = es.eigenvalues();
  BettiOptions bo;
  bo.verify = opts.verify_rank;
  reconcile_zeros(ev, cocycle_dim(x, k, bo), tol, "esd");
  std::vector<std::pair<double, double>> pairs;
  pairs.reserve(f);
  const double w = 1.0 / static_cast<double>(f);
  for (Eigen::Index i = 0; i < ev.size(); ++i) pairs.emplace_back(ev[i], w);
  return SpectralMeasure::from_pairs(std::move(pairs));
}

SpectralMeasure rooted_spectral_measure(const SimplicialComplex& x, SimplexView tau, const EsdOptions& opts) {
  const int k = static_cast<int>(tau.size()) - 1;
  const std::size_t root = root_index(x, tau);
  const std::size_t f = x.f(k);
  if (f > opts.max_dense) throw InvalidArgument("f_k exceeds the dense eigensolver limit");
  const Eigen::SparseMatrix<double> ls = up_laplacian(x, k);
  const double tol = opts.zero_tol * std::max(1.0, max_abs_entry(ls));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Eigen::MatrixXd(ls), Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success) throw NumericError("symmetric eigensolver failed");
  Eigen::VectorXd ev = es.eigenvalues();
  BettiOptions bo;
  bo.verify = opts.verify_rank;
  reconcile_zeros(ev, cocycle_dim(x, k, bo), tol, "rooted measure");
  std::vector<std::pair<double, double>> pairs;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    const double c = es.eigenvectors()(static_cast<Eigen::Index>(root), i);
    pairs.emplace_back(ev[i], c * c);
  }
  return SpectralMeasure::from_pairs(std::move(pairs));
}

double walk_moment(const SimplicialComplex& x, SimplexView tau, int m) {
  if (m < 0) throw InvalidArgument("moment order must be non-negative");
  const int k = static_cast<int>(tau.size()) - 1;
  const std::size_t root = root_index(x, tau);
  const Eigen::SparseMatrix<double> l = up_laplacian(x, k);
  Eigen::VectorXd v = Eigen::VectorXd::Zero(l.rows());
  v[static_cast<Eigen::Index>(root)] = 1.0;
  for (int i = 0; i < m; ++i) v = l * v;
  return v[static_cast<Eigen::Index>(root)];
}

double measure_moment(const SpectralMeasure& mu, int m) { return mu.moment(m); }

double kolmogorov_distance(const SpectralMeasure& a, const SpectralMeasure& b) {
  std::size_t i = 0, j = 0;
  double fa = 0.0, fb = 0.0, best = 0.0;
  while (i < a.size() || j < b.size()) {
    double x;
    if (j == b.size() || (i < a.size() && a.atoms()[i] <= b.atoms()[j])) {
      x = a.atoms()[i];
    } else {
      x = b.atoms()[j];
    }
    while (i < a.size() && a.atoms()[i] == x) fa += a.masses()[i++];
    while (j < b.size() && b.atoms()[j] == x) fb += b.masses()[j++];
    best = std::max(best, std::abs(fa - fb));
  }
  return best;
}

double zero_mass(const SpectralMeasure& mu, double tol) {
  double s = 0.0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (std::abs(mu.atoms()[i]) <= tol) s += mu.masses()[i];
  }
  return s;
}

SpectralMeasure mean_measure(const std::vector<SpectralMeasure>& ms) {
  if (ms.empty()) return {};
  std::vector<std::pair<double, double>> pairs;
  const double w = 1.0 / static_cast<double>(ms.size());
  for (const SpectralMeasure& m : ms) {
    for (std::size_t i = 0; i < m.size(); ++i) pairs.emplace_back(m.atoms()[i], m.masses()[i] * w);
  }
  return SpectralMeasure::from_pairs(std::move(pairs));
}

SpectralMeasure lanczos_rooted_measure(const Eigen::SparseMatrix<double>& l, std::size_t root, int steps) {
  const Eigen::Index n = l.rows();
  if (static_cast<Eigen::Index>(root) >= n) throw InvalidArgument("root index out of range");
  steps = std::max(1, std::min<int>(steps, static_cast<int>(n)));
  std::vector<Eigen::VectorXd> q;
  std::vector<double> alpha, beta;
  Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
  v[static_cast<Eigen::Index>(root)] = 1.0;
  q.push_back(v);
  const double scale = std::max(1.0, max_abs_entry(l));
  for (int j = 0; j < steps; ++j) {
    Eigen::VectorXd w = l * q[static_cast<std::size_t>(j)];
    alpha.push_back(w.dot(q[static_cast<std::size_t>(j)]));
    for (int pass = 0; pass < 2; ++pass) {  // full reorthogonalisation
      for (const Eigen::VectorXd& qi : q) w -= w.dot(qi) * qi;
    }
    const double b = w.norm();
    if (j + 1 == steps || b <= 1e-10 * scale) break;
    beta.push_back(b);
    q.push_back(w / b);
  }
  const Eigen::Index m = static_cast<Eigen::Index>(alpha.size());
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    t(i, i) = alpha[static_cast<std::size_t>(i)];
    if (i + 1 < m) t(i, i + 1) = t(i + 1, i) = beta[static_cast<std::size_t>(i)];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
  std::vector<std::pair<double, double>> pairs;
  for (Eigen::Index i = 0; i < m; ++i) {
    const double c = es.eigenvectors()(0, i);
    double lam = es.eigenvalues()[i];
    if (std::abs(lam) <= 1e-9 * scale) lam = 0.0;
    pairs.emplace_back(lam, c * c);
  }
  return SpectralMeasure::from_pairs(std::move(pairs));
}

// ---------------------------------------------------------------------------
// Grid CDFs

GridCdf esd_grid_cdf(const SimplicialComplex& x, int k, const std::vector<double>& grid,
                     std::size_t exact_zero_count, std::size_t* numeric_zero_count) {
  GridCdf out;
  out.grid = grid;
  const std::size_t f = x.f(k);
  if (f == 0) {
    out.value.assign(grid.size(), 0.0);
    return out;
  }
  const Eigen::SparseMatrix<double> l = up_laplacian(x, k);
  const double tol = 1e-7 * std::max(1.0, max_abs_entry(l));
  // Gershgorin: every eigenvalue is at most the largest absolute row sum.
  double spectral_bound = 0.0;
  {
    Eigen::VectorXd row_sum = Eigen::VectorXd::Zero(l.rows());
    for (Eigen::Index j = 0; j < l.outerSize(); ++j) {
      for (Eigen::SparseMatrix<double>::InnerIterator it(l, j); it; ++it) row_sum[it.row()] += std::abs(it.value());
    }
    spectral_bound = row_sum.maxCoeff();
  }
  InertiaCounter counter(l);
  const std::size_t numeric_zero = counter.count_below(tol);
  if (numeric_zero_count != nullptr) *numeric_zero_count = numeric_zero;
  if (numeric_zero != exact_zero_count) {
    emit_diagnostic("grid cdf: inertia zero count " + std::to_string(numeric_zero) +
                    " differs from exact cocycle dimension " + std::to_string(exact_zero_count) +
                    "; using the exact count");
  }
  for (double g : grid) {
    std::size_t c;
    if (g <= 0.0) {
      c = 0;  // positive semidefinite
    } else if (g <= tol) {
      c = exact_zero_count;
    } else if (g > spectral_bound) {
      c = f;
    } else {
      c = counter.count_below(g);
    }
    out.value.push_back(static_cast<double>(c) / static_cast<double>(f));
  }
  return out;
}

GridCdf grid_cdf(const SpectralMeasure& mu, const std::vector<double>& grid) {
  GridCdf out;
  out.grid = grid;
  for (double g : grid) out.value.push_back(mu.cdf_below(g));
  return out;
}

double kolmogorov_distance(const GridCdf& a, const GridCdf& b) {
  if (a.grid != b.grid) throw InvalidArgument("grid CDFs must share their grid");
  double best = 0.0;
  for (std::size_t i = 0; i < a.value.size(); ++i) best = std::max(best, std::abs(a.value[i] - b.value[i]));
  return best;
}

GridCdf mean_grid_cdf(const std::vector<GridCdf>& cdfs) {
  if (cdfs.empty()) return {};
  GridCdf out;
  out.grid = cdfs.front().grid;
  out.value.assign(out.grid.size(), 0.0);
  for (const GridCdf& c : cdfs) {
    if (c.grid != out.grid) throw InvalidArgument("grid CDFs must share their grid");
    for (std::size_t i = 0; i < c.value.size(); ++i) out.value[i] += c.value[i];
  }
  for (double& v : out.value) v /= static_cast<double>(cdfs.size());
  return out;
}

std::vector<double> default_spectral_grid(double upper, double step, double zero_tol) {
  if (!(upper > 0.0) || !(step > 0.0)) throw InvalidArgument("grid needs positive upper bound and step");
  std::vector<double> g;
  g.push_back(zero_tol);
  const double offset = 0.3819660112501051 * step;  // keeps uniform points off rational values
  for (double x = offset; x <= upper; x += step) g.push_back(x);
  for (int m = 1; m <= static_cast<int>(upper); ++m) {
    g.push_back(m - 1e-6);
    g.push_back(m + 1e-6);
  }
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  return g;
}

}  // namespace stochtop
