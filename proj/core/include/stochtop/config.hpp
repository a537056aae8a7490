#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "stochtop/sampler.hpp"

namespace stochtop {

enum class ExperimentKind { BettiLln, FCount, LocalWeak, Esd, SpatialIndependence };

ExperimentKind parse_experiment_kind(const std::string& s);
std::string to_string(ExperimentKind kind);

/// Experiment description. Text form: one `key = value` per line, `#` starts a
/// comment, lists are comma separated. Keys:
///   experiment   betti-lln | f-count | local-weak | esd | spatial-independence
///   model        lm | clique | mp
///   d, k         model dimension and homological degree
///   n            list of vertex counts
///   c            list of scaling constants (lm / clique)
///   p            explicit parameter list p_0, ..., p_D (mp)
///   dim_cap      clique dimension cap (default k + 1)
///   trials, seed
///   target       h | g (betti-lln: scale n r_k = c, or n r_{k-1} = c)
///   radius, pt_samples                      (local-weak)
///   grid_upper, grid_step, zero_margin      (esd)
///   pt_depth, pt_measure_samples            (esd: rooted measure of PT_k(c); 0 = off)
///   batches                                 (spatial-independence)
///   output       report path (JSON)
///   threads      worker count (STOCHTOP_THREADS overrides)
struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::BettiLln;
  ModelKind model = ModelKind::Linial;
  int d = 2;
  int k = 1;
  std::vector<std::size_t> n;
  std::vector<double> c;
  std::vector<double> p;
  int dim_cap = -1;
  std::size_t trials = 10;
  std::uint64_t seed = 1;
  std::string target = "h";
  int radius = 1;
  std::size_t pt_samples = 100000;
  double grid_upper = 10.0;
  double grid_step = 0.5;
  double zero_margin = 0.05;
  int pt_depth = 0;
  std::size_t pt_measure_samples = 200;
  std::size_t batches = 20;
  std::string output;
  std::size_t threads = 0;

  /// Effective clique cap.
  int clique_cap() const { return dim_cap >= 0 ? dim_cap : k + 1; }
};

/// Parses the text form; throws ParseError (with the line) on unknown keys or bad values.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig read_config_file(const std::string& path);
/// Checks ranges and cross-key consistency; throws InvalidArgument.
void validate(const ExperimentConfig& cfg);
/// Text form that parses back to the same configuration.
std::string format_config(const ExperimentConfig& cfg);

}  // namespace stochtop
