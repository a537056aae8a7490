#include "stochtop/poisson_tree.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "stochtop/constants.hpp"
#include "stochtop/error.hpp"

namespace stochtop {

KRootedTree sample_pt(int k, double c, int depth, Rng& rng) {
  if (!(c >= 0.0)) throw InvalidArgument("Poisson tree parameter must be non-negative");
  if (depth < 0) throw InvalidArgument("Poisson tree depth must be non-negative");
  KRootedTree t(k);
  // Nodes are appended generation by generation, so index order is breadth-first.
  for (std::uint32_t node = 0; node < t.node_count(); ++node) {
    if (t.generation(node) >= depth) break;
    const std::uint32_t m = rng.poisson(c);
    for (std::uint32_t j = 0; j < m; ++j) t.attach_fresh(node);
  }
  return t;
}

KRootedTree sample_pt(int k, double c, int depth, std::uint64_t seed) {
  Rng rng(seed);
  return sample_pt(k, c, depth, rng);
}

KRootedTree prune(const KRootedTree& t) {
  const std::size_t w = t.width();
  std::vector<char> removed(t.attachment_count(), 0);
  for (std::uint32_t a = 0; a < t.attachment_count(); ++a) {
    for (std::size_t j = 0; j < w; ++j) {
      if (t.degree(t.child(a, j)) == 0) {
        removed[a] = 1;
        break;
      }
    }
  }
  // Rebuild from the root through the surviving attachments (root component).
  const Simplex root = t.simplex(0);
  KRootedTree out(t.k(), root);
  std::deque<std::pair<std::uint32_t, std::uint32_t>> queue{{0u, 0u}};  // (old node, new node)
  while (!queue.empty()) {
    const auto [old_node, new_node] = queue.front();
    queue.pop_front();
    for (std::uint32_t a : t.attachments_of(old_node)) {
      if (removed[a]) continue;
      const std::uint32_t na = out.attach(new_node, t.attachment_vertex(a));
      for (std::size_t j = 0; j < w; ++j) queue.emplace_back(t.child(a, j), out.child(na, j));
    }
  }
  return out;
}

KRootedTree prune(const KRootedTree& t, int rounds) {
  if (rounds < 0) throw InvalidArgument("prune rounds must be non-negative");
  KRootedTree cur = t;
  for (int r = 0; r < rounds; ++r) {
    KRootedTree next = prune(cur);
    if (next.attachment_count() == cur.attachment_count()) break;  // fixed point
    cur = std::move(next);
  }
  return cur;
}

std::size_t surviving_root_degree(const KRootedTree& t, int rounds) {
  if (rounds < 0) throw InvalidArgument("prune rounds must be non-negative");
  const std::size_t w = t.width();
  const std::size_t na = t.attachment_count();
  std::vector<char> alive(na, 1), next(na, 0);
  std::vector<char> node_ok(t.node_count(), 0);
  for (int r = 1; r <= rounds; ++r) {
    std::fill(node_ok.begin(), node_ok.end(), 0);
    for (std::uint32_t a = 0; a < na; ++a) {
      if (alive[a]) node_ok[t.attachment_parent(a)] = 1;
    }
    for (std::uint32_t a = 0; a < na; ++a) {
      bool ok = alive[a] != 0;
      for (std::size_t j = 0; ok && j < w; ++j) ok = node_ok[t.child(a, j)] != 0;
      next[a] = ok ? 1 : 0;
    }
    alive.swap(next);
  }
  std::size_t count = 0;
  for (std::uint32_t a : t.attachments_of(0)) count += alive[a] ? 1 : 0;
  return count;
}

DegreeHistogram root_degree_after_prunes(int k, double c, int l, std::size_t trials, std::uint64_t seed,
                                         int depth) {
  if (l < 0) throw InvalidArgument("prune count must be non-negative");
  if (trials == 0) throw InvalidArgument("need at least one trial");
  if (depth < 0) depth = l + 1 + kPruneDepthMargin;
  if (depth < l + 1) {
    throw InvalidArgument("pruning " + std::to_string(l) + " times needs trees of depth >= " + std::to_string(l + 1));
  }
  std::map<std::size_t, std::size_t> counts;
  for (std::size_t i = 0; i < trials; ++i) {
    const KRootedTree t = sample_pt(k, c, depth, derive_seed(seed, {i}));
    ++counts[prune(t, l).degree(0)];
  }
  DegreeHistogram h;
  for (const auto& [d, n] : counts) h[d] = static_cast<double>(n) / static_cast<double>(trials);
  return h;
}

double pruned_degree_parameter(int k, double c, int l) {
  if (l < 0) throw InvalidArgument("prune count must be non-negative");
  // t_iterates(d, c, l - 1) holds t^{(-1)}, ..., t^{(l-1)}.
  const std::vector<double> t = t_iterates(k + 1, c, l - 1);
  return c * std::pow(1.0 - t.back(), k + 1);
}

std::vector<double> poisson_pmf(double lambda) {
  if (!(lambda >= 0.0)) throw InvalidArgument("Poisson parameter must be non-negative");
  if (lambda == 0.0) return {1.0};
  const auto upper = static_cast<std::size_t>(std::ceil(lambda + 20.0 * std::sqrt(lambda) + 40.0));
  std::vector<double> p(upper + 1);
  for (std::size_t j = 0; j <= upper; ++j) {
    const double jd = static_cast<double>(j);
    p[j] = std::exp(-lambda + jd * std::log(lambda) - std::lgamma(jd + 1.0));
  }
  return p;
}

std::vector<double> binomial_pmf(std::size_t m, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("binomial probability must lie in [0, 1]");
  std::vector<double> out(m + 1, 0.0);
  if (p == 0.0) {
    out[0] = 1.0;
    return out;
  }
  if (p == 1.0) {
    out[m] = 1.0;
    return out;
  }
  const double md = static_cast<double>(m);
  for (std::size_t j = 0; j <= m; ++j) {
    const double jd = static_cast<double>(j);
    const double lc = std::lgamma(md + 1.0) - std::lgamma(jd + 1.0) - std::lgamma(md - jd + 1.0);
    out[j] = std::exp(lc + jd * std::log(p) + (md - jd) * std::log1p(-p));
  }
  return out;
}

double pmf_tv(std::size_t m, double p, double lambda) {
  const std::vector<double> b = binomial_pmf(m, p);
  const std::vector<double> q = poisson_pmf(lambda);
  const std::size_t top = std::max(b.size(), q.size());
  double s = 0.0, qsum = 0.0;
  for (std::size_t j = 0; j < top; ++j) {
    const double bj = j < b.size() ? b[j] : 0.0;
    const double qj = j < q.size() ? q[j] : 0.0;
    qsum += qj;
    s += std::abs(bj - qj);
  }
  s += std::max(0.0, 1.0 - qsum);  // Poisson tail beyond the table (binomial has none there)
  return 0.5 * s;
}

double tv_to_pmf(const DegreeHistogram& h, const std::vector<double>& pmf) {
  double s = 0.0, covered = 0.0;
  for (std::size_t j = 0; j < pmf.size(); ++j) {
    auto it = h.find(j);
    s += std::abs((it == h.end() ? 0.0 : it->second) - pmf[j]);
    covered += pmf[j];
  }
  for (const auto& [d, mass] : h) {
    if (d >= pmf.size()) s += mass;
  }
  s += std::max(0.0, 1.0 - covered);
  return 0.5 * s;
}

Histogram pt_class_distribution(int k, double c, int l, std::size_t samples, std::uint64_t seed) {
  if (l < 0) throw InvalidArgument("radius must be non-negative");
  if (samples == 0) throw InvalidArgument("need at least one sample");
  std::map<std::string, std::size_t> counts;
  for (std::size_t i = 0; i < samples; ++i) {
    const KRootedTree t = sample_pt(k, c, l, derive_seed(seed, {i}));
    ++counts["T" + tree_code(t, l)];
  }
  Histogram h;
  for (const auto& [code, n] : counts) h[code] = static_cast<double>(n) / static_cast<double>(samples);
  return h;
}

SpectralMeasure pt_rooted_measure(int k, double c, int depth, std::size_t samples, std::uint64_t seed,
                                  int lanczos_steps) {
  if (samples == 0) throw InvalidArgument("need at least one sample");
  constexpr std::size_t kExactLimit = 600;
  std::vector<SpectralMeasure> ms;
  ms.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    const RootedComplex rc = to_complex(sample_pt(k, c, depth, derive_seed(seed, {i})));
    if (rc.complex.f(k) <= kExactLimit) {
      ms.push_back(rooted_spectral_measure(rc.complex, rc.root));
    } else {
      const std::size_t root = *rc.complex.level(k).find(rc.root);
      ms.push_back(lanczos_rooted_measure(up_laplacian(rc.complex, k), root, lanczos_steps));
    }
  }
  return mean_measure(ms);
}

}  // namespace stochtop
