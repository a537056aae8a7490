#include "stochtop/harness.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <numeric>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "stochtop/betti.hpp"
#include "stochtop/constants.hpp"
#include "stochtop/error.hpp"
#include "stochtop/poisson_tree.hpp"
#include "stochtop/sampler.hpp"
#include "stochtop/traversal.hpp"

namespace stochtop {

using Json = nlohmann::ordered_json;

std::size_t worker_count(const ExperimentConfig& cfg) {
  if (const char* env = std::getenv("STOCHTOP_THREADS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != nullptr && *end == '\0' && v > 0) return v;
    throw InvalidArgument("STOCHTOP_THREADS must be a positive integer");
  }
  if (cfg.threads > 0) return cfg.threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& fn) {
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  threads = std::max<std::size_t>(1, std::min(threads, count));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::vector<double> model_params(const ExperimentConfig& cfg, std::size_t, double param) {
  switch (cfg.model) {
    case ModelKind::Linial: return linial_params(cfg.d, param);
    case ModelKind::Clique: return clique_params(cfg.d, param, cfg.clique_cap());
    case ModelKind::Multi: return cfg.p;
  }
  return {};
}

SimplicialComplex sample_model(const ExperimentConfig& cfg, std::size_t n, double param, std::uint64_t seed) {
  switch (cfg.model) {
    case ModelKind::Linial: return lm_sample(n, cfg.d, param, seed);
    case ModelKind::Clique: return clique_sample(n, cfg.d, param, cfg.clique_cap(), seed);
    case ModelKind::Multi: return mp_sample(n, cfg.p, seed);
  }
  throw InvalidArgument("unknown model");
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

/// A grid point: model parameter and the effective c.
struct GridPoint {
  std::size_t ni;
  std::size_t ci;
  std::size_t n;
  double c;
  double param;
};

/// Grid points with the parameter making n r_{scale_k} = c (or the explicit
/// parameter vector of the multi-parameter model, with c = n r_{scale_k}).
std::vector<GridPoint> grid_points(const ExperimentConfig& cfg, int scale_k, bool c_outer = false) {
  std::vector<GridPoint> out;
  const std::size_t nc = cfg.model == ModelKind::Multi ? 1 : cfg.c.size();
  auto point = [&](std::size_t ni, std::size_t ci) {
    const std::size_t n = cfg.n[ni];
    if (cfg.model == ModelKind::Multi) {
      const DerivedParams dp = derive_params(cfg.p);
      const double r = scale_k + 1 < static_cast<int>(dp.r.size()) ? dp.r_at(scale_k) : 0.0;
      out.push_back({ni, ci, n, static_cast<double>(n) * r, 0.0});
    } else {
      out.push_back({ni, ci, n, cfg.c[ci], scaling_for_c(cfg.model, cfg.d, scale_k, cfg.c[ci], n)});
    }
  };
  if (c_outer) {
    for (std::size_t ci = 0; ci < nc; ++ci) {
      for (std::size_t ni = 0; ni < cfg.n.size(); ++ni) point(ni, ci);
    }
  } else {
    for (std::size_t ni = 0; ni < cfg.n.size(); ++ni) {
      for (std::size_t ci = 0; ci < nc; ++ci) point(ni, ci);
    }
  }
  return out;
}

double normaliser(const ExperimentConfig& cfg, const GridPoint& g) {
  const DerivedParams dp = derive_params(model_params(cfg, g.n, g.param));
  const double qk = cfg.k + 1 < static_cast<int>(dp.q.size()) ? dp.q_at(cfg.k) : 0.0;
  return std::pow(static_cast<double>(g.n), cfg.k + 1) * qk;
}

void fill_stats(ReportRow& row, const std::vector<double>& values) {
  row.trials = values.size();
  if (values.empty()) {
    row.mean = row.std = std::nan("");
  } else {
    double s = 0.0;
    for (double v : values) s += v;  // trial order: deterministic summation
    row.mean = s / static_cast<double>(values.size());
    double ss = 0.0;
    for (double v : values) ss += (v - row.mean) * (v - row.mean);
    row.std = values.size() > 1 ? std::sqrt(ss / static_cast<double>(values.size() - 1)) : 0.0;
  }
  row.deviation = std::abs(row.mean - row.target);
}

struct TrialOutcome {
  bool discarded = false;
  std::map<std::string, double> values;
};

/// Runs the trials of one grid point in parallel and gathers kept values in trial order.
ReportRow run_point(const ExperimentConfig& cfg, const GridPoint& g,
                    const std::function<TrialOutcome(std::size_t trial, std::uint64_t seed)>& trial) {
  const auto t0 = Clock::now();
  std::vector<TrialOutcome> outcomes(cfg.trials);
  parallel_for(cfg.trials, worker_count(cfg),
               [&](std::size_t i) { outcomes[i] = trial(i, derive_seed(cfg.seed, {g.ni, g.ci, i})); });
  ReportRow row;
  row.n = g.n;
  row.c = g.c;
  row.param = g.param;
  for (const TrialOutcome& o : outcomes) {
    if (o.discarded) {
      ++row.discarded;
      continue;
    }
    for (const auto& [key, v] : o.values) row.series[key].push_back(v);
  }
  row.wall_seconds = seconds_since(t0);
  return row;
}

}  // namespace

ExperimentReport run_betti_lln(const ExperimentConfig& cfg) {
  validate(cfg);
  const bool corollary = cfg.target == "g";
  const int scale_k = corollary ? cfg.k - 1 : cfg.k;
  if (corollary && cfg.k < 1) throw InvalidArgument("target g needs k >= 1");
  ExperimentReport report;
  report.config = cfg;
  for (const GridPoint& g : grid_points(cfg, scale_k)) {
    const double norm = normaliser(cfg, g);
    ReportRow row = run_point(cfg, g, [&](std::size_t, std::uint64_t seed) {
      TrialOutcome o;
      const SimplicialComplex x = sample_model(cfg, g.n, g.param, seed);
      if (x.f(cfg.k) == 0) {
        o.discarded = true;
        return o;
      }
      const long long beta = betti_number(x, cfg.k);
      o.values["beta"] = static_cast<double>(beta);
      o.values["f_k"] = static_cast<double>(x.f(cfg.k));
      o.values["value"] = static_cast<double>(beta) / norm;
      return o;
    });
    row.target = (corollary ? stochtop::g(cfg.k, g.c) : h(cfg.k, g.c)) / factorial(cfg.k + 1);
    row.extra["normaliser"] = norm;
    fill_stats(row, row.series["value"]);
    report.rows.push_back(std::move(row));
  }
  return report;
}

ExperimentReport run_f_count(const ExperimentConfig& cfg) {
  validate(cfg);
  ExperimentReport report;
  report.config = cfg;
  for (const GridPoint& g : grid_points(cfg, cfg.k)) {
    const double norm = normaliser(cfg, g);
    ReportRow row = run_point(cfg, g, [&](std::size_t, std::uint64_t seed) {
      TrialOutcome o;
      const SimplicialComplex x = sample_model(cfg, g.n, g.param, seed);
      o.values["f_k"] = static_cast<double>(x.f(cfg.k));
      o.values["value"] = static_cast<double>(x.f(cfg.k)) / norm;
      return o;
    });
    row.target = 1.0 / factorial(cfg.k + 1);
    row.extra["normaliser"] = norm;
    fill_stats(row, row.series["value"]);
    report.rows.push_back(std::move(row));
  }
  return report;
}

ExperimentReport run_local_weak(const ExperimentConfig& cfg) {
  validate(cfg);
  ExperimentReport report;
  report.config = cfg;
  std::map<std::size_t, Histogram> pt_law;  // per c index
  for (const GridPoint& g : grid_points(cfg, cfg.k)) {
    auto it = pt_law.find(g.ci);
    if (it == pt_law.end()) {
      const std::uint64_t pt_seed = derive_seed(cfg.seed, {~std::uint64_t{0}, g.ci});
      it = pt_law.emplace(g.ci, pt_class_distribution(cfg.k, g.c, cfg.radius, cfg.pt_samples, pt_seed)).first;
    }
    const Histogram& law = it->second;
    const std::vector<double> po = poisson_pmf(g.c);
    ReportRow row = run_point(cfg, g, [&](std::size_t, std::uint64_t seed) {
      TrialOutcome o;
      const SimplicialComplex x = sample_model(cfg, g.n, g.param, seed);
      if (x.f(cfg.k) == 0) {
        o.discarded = true;
        return o;
      }
      o.values["class_tv"] = tv_distance(empirical_local_distribution(x, cfg.k, cfg.radius), law);
      o.values["degree_tv"] = tv_to_pmf(root_degree_histogram(x, cfg.k), po);
      o.values["f_k"] = static_cast<double>(x.f(cfg.k));
      return o;
    });
    row.target = 0.0;
    fill_stats(row, row.series["class_tv"]);
    const auto& deg = row.series["degree_tv"];
    if (!deg.empty()) {
      row.extra["degree_tv"] = std::accumulate(deg.begin(), deg.end(), 0.0) / static_cast<double>(deg.size());
    }
    if (cfg.model == ModelKind::Linial && cfg.k == cfg.d - 1 && g.n > static_cast<std::size_t>(cfg.d)) {
      row.extra["bin_po_tv"] = pmf_tv(g.n - static_cast<std::size_t>(cfg.d), g.param, g.c);
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

ExperimentReport run_esd(const ExperimentConfig& cfg) {
  validate(cfg);
  ExperimentReport report;
  report.config = cfg;
  const EsdOptions defaults;
  const std::vector<double> grid = default_spectral_grid(cfg.grid_upper, cfg.grid_step, defaults.zero_tol);
  std::map<std::size_t, GridCdf> pt_cdf;  // per c index
  GridCdf previous;
  std::size_t previous_ci = static_cast<std::size_t>(-1);
  for (const GridPoint& g : grid_points(cfg, cfg.k, true)) {
    const auto t0 = Clock::now();
    struct EsdTrial {
      bool discarded = false;
      GridCdf cdf;
      double zero_mass = 0.0;
      double zero_mismatch = 0.0;
      double trace_residual = 0.0;
    };
    std::vector<EsdTrial> trials(cfg.trials);
    parallel_for(cfg.trials, worker_count(cfg), [&](std::size_t i) {
      EsdTrial& t = trials[i];
      const SimplicialComplex x = sample_model(cfg, g.n, g.param, derive_seed(cfg.seed, {g.ni, g.ci, i}));
      const std::size_t f = x.f(cfg.k);
      if (f == 0) {
        t.discarded = true;
        return;
      }
      const std::size_t z = cocycle_dim(x, cfg.k);
      std::size_t numeric = 0;
      t.cdf = esd_grid_cdf(x, cfg.k, grid, z, &numeric);
      t.zero_mass = static_cast<double>(z) / static_cast<double>(f);
      t.zero_mismatch = numeric == z ? 0.0 : 1.0;
      const Eigen::SparseMatrix<double> l = up_laplacian(x, cfg.k);
      double trace = 0.0;
      for (Eigen::Index j = 0; j < l.outerSize(); ++j) trace += l.coeff(j, j);
      const double expected = static_cast<double>(cfg.k + 2) * static_cast<double>(x.f(cfg.k + 1));
      t.trace_residual = std::abs(trace - expected) / static_cast<double>(f);
    });
    ReportRow row;
    row.n = g.n;
    row.c = g.c;
    row.param = g.param;
    std::vector<GridCdf> kept;
    for (const EsdTrial& t : trials) {
      if (t.discarded) {
        ++row.discarded;
        continue;
      }
      kept.push_back(t.cdf);
      row.series["zero_mass"].push_back(t.zero_mass);
      row.series["zero_mismatch"].push_back(t.zero_mismatch);
      row.series["trace_residual"].push_back(t.trace_residual);
    }
    row.target = h(cfg.k, g.c);
    fill_stats(row, row.series["zero_mass"]);
    row.extra["zero_margin"] = cfg.zero_margin;
    row.extra["within_margin"] = row.mean <= row.target + cfg.zero_margin ? 1.0 : 0.0;
    double mismatches = 0.0;
    double max_trace = 0.0;
    for (double v : row.series["zero_mismatch"]) mismatches += v;
    for (double v : row.series["trace_residual"]) max_trace = std::max(max_trace, v);
    row.extra["zero_mismatches"] = mismatches;
    row.extra["max_trace_residual"] = max_trace;
    if (!kept.empty()) {
      GridCdf mean = mean_grid_cdf(kept);
      if (previous_ci == g.ci && !previous.grid.empty()) {
        const double ks = kolmogorov_distance(previous, mean);
        row.extra["ks_prev"] = ks;
        std::ostringstream key;
        key << "ks[c=" << g.c << ",n=" << g.n << "]";
        report.summary[key.str()] = ks;
      }
      if (cfg.pt_depth > 0) {
        auto it = pt_cdf.find(g.ci);
        if (it == pt_cdf.end()) {
          const std::uint64_t s = derive_seed(cfg.seed, {~std::uint64_t{0}, g.ci});
          const SpectralMeasure mu = pt_rooted_measure(cfg.k, g.c, cfg.pt_depth, cfg.pt_measure_samples, s);
          it = pt_cdf.emplace(g.ci, grid_cdf(mu, grid)).first;
        }
        row.extra["pt_ks"] = kolmogorov_distance(it->second, mean);
      }
      previous = mean;
      previous_ci = g.ci;
      report.mean_cdfs.push_back(std::move(mean));
    } else {
      previous = GridCdf{};
      previous_ci = g.ci;
    }
    row.wall_seconds = seconds_since(t0);
    report.rows.push_back(std::move(row));
  }
  return report;
}

namespace {

/// Closure of `s`, keeping faces of dimension <= top only.
SimplicialComplex truncated_closure(std::size_t n, const Simplex& s, int top) {
  std::vector<Simplex> faces_kept;
  const std::size_t m = s.size();
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    Simplex f;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (1u << i)) f.push_back(s[i]);
    }
    if (static_cast<int>(f.size()) - 1 <= top) faces_kept.push_back(std::move(f));
  }
  return SimplicialComplex::from_simplices(n, faces_kept);
}

double z_score(double freq, double prob, std::size_t trials) {
  const double var = prob * (1.0 - prob) / static_cast<double>(trials);
  if (var <= 0.0) return freq == prob ? 0.0 : std::numeric_limits<double>::infinity();
  return (freq - prob) / std::sqrt(var);
}

}  // namespace

ExperimentReport run_spatial_independence(const ExperimentConfig& cfg) {
  validate(cfg);
  ExperimentReport report;
  report.config = cfg;
  const double param = cfg.model == ModelKind::Multi ? 0.0 : cfg.p.front();
  double worst = 0.0;
  for (std::size_t ni = 0; ni < cfg.n.size(); ++ni) {
    const auto t0 = Clock::now();
    const std::size_t n = cfg.n[ni];
    const std::vector<double> p = model_params(cfg, n, param);
    const int top = static_cast<int>(p.size()) - 1;
    const SimplicialComplex y1 = truncated_closure(n, {0, 1, 2}, top);
    const SimplicialComplex y2 = truncated_closure(n, {1, 2, 3}, top);
    ComplexBuilder ub(n);
    ub.add_all(y1);
    ub.add_all(y2);
    const SimplicialComplex y_union = std::move(ub).build();
    const SimplicialComplex y_inter = truncated_closure(n, {1, 2}, top);
    const Vertex first = 0;
    const Vertex last = static_cast<Vertex>(n - 1);

    struct Hits {
      bool y1 = false, y2 = false, uni = false, inter = false;
      std::size_t deg_first = 0, deg_last = 0;
    };
    std::vector<Hits> hits(cfg.trials);
    parallel_for(cfg.trials, worker_count(cfg), [&](std::size_t i) {
      const SimplicialComplex x = sample_model(cfg, n, param, derive_seed(cfg.seed, {ni, 0, i}));
      Hits& h = hits[i];
      h.y1 = is_subcomplex(y1, x);
      h.y2 = is_subcomplex(y2, x);
      h.uni = is_subcomplex(y_union, x);
      h.inter = is_subcomplex(y_inter, x);
      // An absent vertex counts as degree zero.
      const auto vertex_degree = [&x](const Vertex& v) {
        const SimplexView s(&v, 1);
        return x.contains(s) ? degree(x, s) : std::size_t{0};
      };
      h.deg_first = vertex_degree(first);
      h.deg_last = vertex_degree(last);
    });

    const std::size_t trials = cfg.trials;
    auto freq = [&](auto member, std::size_t lo, std::size_t hi) {
      std::size_t c = 0;
      for (std::size_t i = lo; i < hi; ++i) c += (hits[i].*member) ? 1 : 0;
      return static_cast<double>(c) / static_cast<double>(hi - lo);
    };
    auto identity = [&](std::size_t lo, std::size_t hi) {
      return freq(&Hits::uni, lo, hi) * freq(&Hits::inter, lo, hi) -
             freq(&Hits::y1, lo, hi) * freq(&Hits::y2, lo, hi);
    };

    ReportRow row;
    row.n = n;
    row.param = param;
    row.trials = trials;
    // Batch means of the product identity P(Y1 u Y2) P(Y1 n Y2) - P(Y1) P(Y2).
    const std::size_t b = cfg.batches;
    std::vector<double> batch(b);
    for (std::size_t j = 0; j < b; ++j) {
      batch[j] = identity(j * trials / b, (j + 1) * trials / b);
    }
    row.series["identity_batches"] = batch;
    double bm = 0.0;
    for (double v : batch) bm += v;
    bm /= static_cast<double>(b);
    double bv = 0.0;
    for (double v : batch) bv += (v - bm) * (v - bm);
    const double sigma = std::sqrt(bv / static_cast<double>(b - 1) / static_cast<double>(b));
    row.mean = identity(0, trials);
    row.std = sigma;
    row.target = 0.0;
    row.deviation = std::abs(row.mean);
    const double identity_z = sigma > 0.0 ? row.deviation / sigma : (row.deviation == 0.0 ? 0.0 : INFINITY);
    row.extra["identity_z"] = identity_z;

    const double z1 = z_score(freq(&Hits::y1, 0, trials), subcomplex_prob(y1, p), trials);
    const double z2 = z_score(freq(&Hits::y2, 0, trials), subcomplex_prob(y2, p), trials);
    const double zu = z_score(freq(&Hits::uni, 0, trials), subcomplex_prob(y_union, p), trials);
    const double zi = z_score(freq(&Hits::inter, 0, trials), subcomplex_prob(y_inter, p), trials);
    row.extra["z_y1"] = z1;
    row.extra["z_y2"] = z2;
    row.extra["z_union"] = zu;
    row.extra["z_intersection"] = zi;

    // Homogeneity: the degree laws of vertex 0 and vertex n - 1 agree.
    DegreeHistogram h_first, h_last;
    double m_first = 0.0, m_last = 0.0;
    for (const Hits& h : hits) {
      h_first[h.deg_first] += 1.0 / static_cast<double>(trials);
      h_last[h.deg_last] += 1.0 / static_cast<double>(trials);
      m_first += static_cast<double>(h.deg_first);
      m_last += static_cast<double>(h.deg_last);
    }
    m_first /= static_cast<double>(trials);
    m_last /= static_cast<double>(trials);
    double v_first = 0.0, v_last = 0.0;
    for (const Hits& h : hits) {
      v_first += (static_cast<double>(h.deg_first) - m_first) * (static_cast<double>(h.deg_first) - m_first);
      v_last += (static_cast<double>(h.deg_last) - m_last) * (static_cast<double>(h.deg_last) - m_last);
    }
    const double se = std::sqrt((v_first + v_last) / static_cast<double>(trials - 1 > 0 ? trials - 1 : 1) /
                                static_cast<double>(trials));
    const double homogeneity_z = se > 0.0 ? std::abs(m_first - m_last) / se : (m_first == m_last ? 0.0 : INFINITY);
    row.extra["degree_tv"] = tv_distance(h_first, h_last);
    row.extra["homogeneity_z"] = homogeneity_z;

    for (double z : {identity_z, std::abs(z1), std::abs(z2), std::abs(zu), std::abs(zi), homogeneity_z}) {
      worst = std::max(worst, z);
    }
    row.wall_seconds = seconds_since(t0);
    report.rows.push_back(std::move(row));
  }
  report.summary["max_abs_z"] = worst;
  return report;
}

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  switch (cfg.kind) {
    case ExperimentKind::BettiLln: return run_betti_lln(cfg);
    case ExperimentKind::FCount: return run_f_count(cfg);
    case ExperimentKind::LocalWeak: return run_local_weak(cfg);
    case ExperimentKind::Esd: return run_esd(cfg);
    case ExperimentKind::SpatialIndependence: return run_spatial_independence(cfg);
  }
  throw InvalidArgument("unknown experiment kind");
}

namespace {

Json number(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

Json config_json(const ExperimentConfig& cfg) {
  Json j;
  j["experiment"] = to_string(cfg.kind);
  j["model"] = to_string(cfg.model);
  j["d"] = cfg.d;
  j["k"] = cfg.k;
  j["n"] = cfg.n;
  j["c"] = cfg.c;
  j["p"] = cfg.p;
  j["dim_cap"] = cfg.dim_cap;
  j["trials"] = cfg.trials;
  j["seed"] = cfg.seed;
  j["target"] = cfg.target;
  j["radius"] = cfg.radius;
  j["pt_samples"] = cfg.pt_samples;
  j["grid_upper"] = cfg.grid_upper;
  j["grid_step"] = cfg.grid_step;
  j["zero_margin"] = cfg.zero_margin;
  j["pt_depth"] = cfg.pt_depth;
  j["pt_measure_samples"] = cfg.pt_measure_samples;
  j["batches"] = cfg.batches;
  j["output"] = cfg.output;
  // The worker count never changes results, so it is left out of the report.
  ExperimentConfig echo = cfg;
  echo.threads = 0;
  j["text"] = format_config(echo);
  return j;
}

}  // namespace

std::string report_to_json(const ExperimentReport& report, bool include_timing) {
  Json root;
  root["config"] = config_json(report.config);
  Json rows = Json::array();
  for (const ReportRow& r : report.rows) {
    Json j;
    j["n"] = r.n;
    j["c"] = number(r.c);
    j["param"] = number(r.param);
    j["trials"] = r.trials;
    j["discarded"] = r.discarded;
    j["mean"] = number(r.mean);
    j["std"] = number(r.std);
    j["target"] = number(r.target);
    j["deviation"] = number(r.deviation);
    if (include_timing) j["wall_seconds"] = r.wall_seconds;
    Json extra = Json::object();
    for (const auto& [key, v] : r.extra) extra[key] = number(v);
    j["extra"] = extra;
    Json series = Json::object();
    for (const auto& [key, vs] : r.series) {
      Json a = Json::array();
      for (double v : vs) a.push_back(number(v));
      series[key] = a;
    }
    j["series"] = series;
    rows.push_back(std::move(j));
  }
  root["rows"] = rows;
  Json summary = Json::object();
  for (const auto& [key, v] : report.summary) summary[key] = number(v);
  root["summary"] = summary;
  if (!report.mean_cdfs.empty()) {
    Json cdfs = Json::array();
    for (const GridCdf& g : report.mean_cdfs) cdfs.push_back(Json{{"grid", g.grid}, {"value", g.value}});
    root["mean_cdfs"] = cdfs;
  }
  return root.dump(2) + "\n";
}

std::string curves_csv(const std::string& which, int param, double c_lo, double c_hi, double step) {
  std::string out = "c,value\n";
  char buf[64];
  for (const CurvePoint& pt : curve(which, param, c_lo, c_hi, step)) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", pt.c, pt.value);
    out += buf;
  }
  return out;
}

}  // namespace stochtop
