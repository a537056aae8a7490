#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "stochtop/config.hpp"
#include "stochtop/spectra.hpp"

namespace stochtop {

/// One (n, c) grid point of an experiment.
struct ReportRow {
  std::size_t n = 0;
  double c = 0.0;
  double param = 0.0;          ///< model parameter used (p for lm / clique)
  std::size_t trials = 0;      ///< kept trials
  std::size_t discarded = 0;   ///< trials with f_k = 0
  double mean = 0.0;
  double std = 0.0;
  double target = 0.0;
  double deviation = 0.0;      ///< |mean - target|
  double wall_seconds = 0.0;
  std::map<std::string, double> extra;
  /// Per-trial values of the kept trials, in trial order (e.g. "beta", "f_k").
  std::map<std::string, std::vector<double>> series;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<ReportRow> rows;
  std::map<std::string, double> summary;
  /// Mean grid CDFs per n (esd only), in n-list order.
  std::vector<GridCdf> mean_cdfs;
};

/// Worker count: STOCHTOP_THREADS if set, else cfg.threads, else the hardware concurrency.
std::size_t worker_count(const ExperimentConfig& cfg);

/// Runs fn(i) for i in [0, count) on `threads` workers. The first exception (by
/// index) is rethrown after all workers stop.
void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& fn);

/// Sample of the configured model at size n and model parameter `param`.
SimplicialComplex sample_model(const ExperimentConfig& cfg, std::size_t n, double param, std::uint64_t seed);
/// Per-level parameter vector of the configured model.
std::vector<double> model_params(const ExperimentConfig& cfg, std::size_t n, double param);

/// Mean of beta_k / (n^{k+1} q_k) against h_k(c)/(k+1)! (target h, n r_k = c) or
/// g_k(c)/(k+1)! (target g, n r_{k-1} = c).
ExperimentReport run_betti_lln(const ExperimentConfig& cfg);
/// Mean of f_k / (n^{k+1} q_k) against 1/(k+1)!.
ExperimentReport run_f_count(const ExperimentConfig& cfg);
/// Radius-l class TV against the sampled Poisson-tree law; root-degree TV against Poisson(c).
ExperimentReport run_local_weak(const ExperimentConfig& cfg);
/// Mean ESD grid CDFs per n, Kolmogorov distances between successive n, zero mass against h_k(c).
ExperimentReport run_esd(const ExperimentConfig& cfg);
/// Monte Carlo check of the spatial-independence identity and of homogeneity on small n.
ExperimentReport run_spatial_independence(const ExperimentConfig& cfg);
/// Dispatches on cfg.kind after validation.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

/// JSON with the configuration echo, rows and summary. Timing fields are
/// omitted when `include_timing` is false (for byte-for-byte comparisons).
std::string report_to_json(const ExperimentReport& report, bool include_timing = true);

/// CSV "c,value" of a named curve (see constants::curve).
std::string curves_csv(const std::string& which, int param, double c_lo, double c_hi, double step);

}  // namespace stochtop
