#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "stochtop/betti.hpp"
#include "stochtop/codec.hpp"
#include "stochtop/collapse.hpp"
#include "stochtop/constants.hpp"
#include "stochtop/error.hpp"
#include "stochtop/harness.hpp"
#include "stochtop/poisson_tree.hpp"
#include "stochtop/sampler.hpp"
#include "stochtop/spectra.hpp"
#include "stochtop/traversal.hpp"

namespace {

using namespace stochtop;

constexpr int kExitUsage = 1;
constexpr int kExitNumeric = 2;

/// Writes to `path`, or to stdout when the path is empty or "-".
void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot open " + path + " for writing");
  out << text;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// "a:b:step" -> (a, b, step).
std::tuple<double, double, double> parse_range(const std::string& s) {
  double a = 0, b = 0, step = 0;
  char c1 = 0, c2 = 0;
  std::istringstream in(s);
  if (!(in >> a >> c1 >> b >> c2 >> step) || c1 != ':' || c2 != ':' || !(in >> std::ws).eof()) {
    throw InvalidArgument("range must look like a:b:step");
  }
  return {a, b, step};
}

struct SampleArgs {
  std::string model = "lm";
  std::size_t n = 0;
  int d = 2;
  std::vector<double> c;
  std::vector<double> p;
  int dim_cap = -1;
  std::uint64_t seed = 1;
  std::string out;
};

SimplicialComplex run_sample(const SampleArgs& a) {
  const ModelKind kind = parse_model_kind(a.model);
  if (kind == ModelKind::Multi) {
    if (a.p.empty()) throw InvalidArgument("model mp needs --p");
    return mp_sample(a.n, a.p, a.seed);
  }
  double p = 0.0;
  if (a.p.size() == 1 && a.c.empty()) {
    p = a.p.front();
  } else if (a.c.size() == 1 && a.p.empty()) {
    p = scaling_for_c(kind, a.d, a.d - 1, a.c.front(), a.n);
  } else {
    throw InvalidArgument("give exactly one of --c or --p");
  }
  if (kind == ModelKind::Linial) return lm_sample(a.n, a.d, p, a.seed);
  return clique_sample(a.n, a.d, p, a.dim_cap >= 0 ? a.dim_cap : a.d + 1, a.seed);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random simplicial complexes: sampling, homology, spectra and limit experiments"};
  app.require_subcommand(1);

  SampleArgs sample;
  auto* sample_cmd = app.add_subcommand("sample", "Sample a random complex and write it in text form");
  sample_cmd->add_option("--model", sample.model, "lm | clique | mp")->capture_default_str();
  sample_cmd->add_option("--n", sample.n, "vertex count")->required();
  sample_cmd->add_option("--d", sample.d, "model dimension")->capture_default_str();
  sample_cmd->add_option("--c", sample.c, "scaling constant (n r_{d-1} = c)")->expected(1);
  sample_cmd->add_option("--p", sample.p, "edge/top parameter, or the full list for mp")->delimiter(',');
  sample_cmd->add_option("--dim-cap", sample.dim_cap, "clique dimension cap (default d + 1)");
  sample_cmd->add_option("--seed", sample.seed)->capture_default_str();
  sample_cmd->add_option("--out", sample.out, "output path (default stdout)");

  std::string input, out;
  int k = 1;
  auto* betti_cmd = app.add_subcommand("betti", "Reduced Betti number beta_k of a complex file");
  betti_cmd->add_option("--input", input)->required()->check(CLI::ExistingFile);
  betti_cmd->add_option("--k", k)->required();

  auto* esd_cmd = app.add_subcommand("esd", "Spectrum of the k-th up-Laplacian as CSV eigenvalue,mass");
  esd_cmd->add_option("--input", input)->required()->check(CLI::ExistingFile);
  esd_cmd->add_option("--k", k)->required();
  esd_cmd->add_option("--out", out);

  int radius = 1;
  auto* local_cmd = app.add_subcommand("local", "Radius-l class distribution as CSV class_code,mass");
  local_cmd->add_option("--input", input)->required()->check(CLI::ExistingFile);
  local_cmd->add_option("--k", k)->required();
  local_cmd->add_option("--radius", radius)->capture_default_str();
  local_cmd->add_option("--out", out);

  int rounds = 1;
  auto* collapse_cmd = app.add_subcommand("collapse", "Collapse rounds R_k and the Betti lower bound");
  collapse_cmd->add_option("--input", input)->required()->check(CLI::ExistingFile);
  collapse_cmd->add_option("--k", k)->required();
  collapse_cmd->add_option("--rounds", rounds)->capture_default_str();
  collapse_cmd->add_option("--out", out, "path for the collapsed complex");

  double c = 1.0;
  int depth = 3;
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  int prunes = -1;
  auto* pt_cmd = app.add_subcommand("pt", "Root-degree histogram of k-rooted Poisson trees as CSV");
  pt_cmd->add_option("--k", k)->required();
  pt_cmd->add_option("--c", c)->required();
  pt_cmd->add_option("--depth", depth)->capture_default_str();
  pt_cmd->add_option("--trials", trials)->capture_default_str();
  pt_cmd->add_option("--seed", seed)->capture_default_str();
  pt_cmd->add_option("--prunes", prunes, "apply l prune rounds first (needs depth >= l + 1)");

  std::string which;
  int d = 2, l = 1;
  std::string c_range;
  std::vector<double> alpha;
  auto* const_cmd = app.add_subcommand("constants", "Limiting constants as CSV");
  const_cmd->add_option("quantity", which, "h | g | t | cd | hl | psi | curve")->required();
  const_cmd->add_option("--k", k);
  const_cmd->add_option("--d", d);
  const_cmd->add_option("--c", c);
  const_cmd->add_option("--l", l);
  const_cmd->add_option("--alpha", alpha, "exponent vector (psi)")->delimiter(',');
  std::string curve_which = "h";
  const_cmd->add_option("--which", curve_which, "curve: h | g | scaled-clique");
  const_cmd->add_option("--c-range", c_range, "curve range a:b:step");

  auto* exp_cmd = app.add_subcommand("experiment", "Monte Carlo experiments");
  exp_cmd->require_subcommand(1);
  std::string config_path;
  bool no_timing = false;
  auto* run_cmd = exp_cmd->add_subcommand("run", "Run the experiment described by a config file");
  run_cmd->add_option("config", config_path)->required()->check(CLI::ExistingFile);
  run_cmd->add_option("--out", out, "report path (overrides the config's output key)");
  run_cmd->add_flag("--no-timing", no_timing, "omit wall-clock fields from the report");
  auto* curves_cmd = exp_cmd->add_subcommand("curves", "Limit curves as CSV c,value");
  curves_cmd->add_option("--which", curve_which, "h | g | scaled-clique")->capture_default_str();
  curves_cmd->add_option("--param", d, "d for h, k otherwise")->capture_default_str();
  curves_cmd->add_option("--c-range", c_range, "a:b:step")->required();
  curves_cmd->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*sample_cmd) {
      emit(sample.out, format_complex(run_sample(sample)));
    } else if (*betti_cmd) {
      const SimplicialComplex x = read_complex_file(input);
      std::cout << betti_number(x, k) << "\n";
    } else if (*esd_cmd) {
      const SpectralMeasure mu = esd(read_complex_file(input), k);
      std::string text = "eigenvalue,mass\n";
      for (std::size_t i = 0; i < mu.size(); ++i) text += fmt(mu.atoms()[i]) + "," + fmt(mu.masses()[i]) + "\n";
      emit(out, text);
    } else if (*local_cmd) {
      const Histogram hist = empirical_local_distribution(read_complex_file(input), k, radius);
      std::string text = "class_code,mass\n";
      for (const auto& [code, m] : hist) text += "\"" + code + "\"," + fmt(m) + "\n";
      emit(out, text);
    } else if (*collapse_cmd) {
      const SimplicialComplex x = read_complex_file(input);
      const auto [y, trace] = collapse_rounds(x, k, rounds);
      std::cout << "round,removed\n";
      for (std::size_t r = 0; r < trace.rounds(); ++r) std::cout << r + 1 << "," << trace.removed[r].size() << "\n";
      std::cout << "betti_lower_bound," << betti_lower_bound(x, k, rounds) << "\n";
      std::cout << "maximal_k," << maximal_k_count(y, k) << "\n";
      if (!out.empty()) emit(out, format_complex(y));
    } else if (*pt_cmd) {
      DegreeHistogram hist;
      if (prunes >= 0) {
        hist = root_degree_after_prunes(k, c, prunes, trials, seed, depth);
      } else {
        Rng rng(seed);
        for (std::size_t i = 0; i < trials; ++i) {
          const KRootedTree t = sample_pt(k, c, depth, rng);
          hist[t.degree(0)] += 1.0 / static_cast<double>(trials);
        }
      }
      std::cout << "degree,mass\n";
      for (const auto& [deg, m] : hist) std::cout << deg << "," << fmt(m) << "\n";
    } else if (*const_cmd) {
      if (which == "h") {
        std::cout << "k,c,h\n" << k << "," << fmt(c) << "," << fmt(h(k, c)) << "\n";
      } else if (which == "g") {
        std::cout << "k,c,g\n" << k << "," << fmt(c) << "," << fmt(g(k, c)) << "\n";
      } else if (which == "t") {
        std::cout << "d,c,t\n" << d << "," << fmt(c) << "," << fmt(t_fixed_point(d, c)) << "\n";
      } else if (which == "cd") {
        std::cout << "d,c_d\n" << d << "," << fmt(c_threshold(d)) << "\n";
      } else if (which == "hl") {
        std::cout << "k,c,l,h_l\n" << k << "," << fmt(c) << "," << l << "," << fmt(h_finite(k, c, l)) << "\n";
      } else if (which == "psi") {
        std::cout << "k,psi,tau\n" << k << "," << fmt(psi(alpha, k)) << "," << fmt(tau_exponent(alpha, k)) << "\n";
        if (const auto cd = critical_dim(alpha)) std::cout << "critical," << *cd << "\n";
      } else if (which == "curve") {
        const auto [a, b, step] = parse_range(c_range);
        std::cout << curves_csv(curve_which, curve_which == "h" ? d : k, a, b, step);
      } else {
        throw InvalidArgument("unknown constant '" + which + "'");
      }
    } else if (*run_cmd) {
      const ExperimentConfig cfg = read_config_file(config_path);
      const ExperimentReport report = run_experiment(cfg);
      emit(out.empty() ? cfg.output : out, report_to_json(report, !no_timing));
    } else if (*curves_cmd) {
      const auto [a, b, step] = parse_range(c_range);
      emit(out, curves_csv(curve_which, d, a, b, step));
    }
  } catch (const NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return 0;
}
