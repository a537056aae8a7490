#include "stochtop/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "stochtop/error.hpp"
#include "stochtop/rng.hpp"

namespace stochtop {
namespace {

constexpr double kMaxEnumeration = 4.0e8;

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument(std::string(what) + " must lie in [0, 1]");
}

/// Accepts positions of a stream of Bernoulli(p) trials by geometric skipping;
/// consumes one PRNG value per accepted position.
class SkipSampler {
 public:
  SkipSampler(Rng& rng, double p) : rng_(rng), p_(p) {
    if (p_ > 0.0 && p_ < 1.0) gap_ = rng_.geometric_failures(p_);
  }
  /// Calls `accept(offset)` for accepted offsets in [0, length).
  template <class F>
  void block(std::uint64_t length, F&& accept) {
    if (p_ <= 0.0) return;
    if (p_ >= 1.0) {
      for (std::uint64_t i = 0; i < length; ++i) accept(i);
      return;
    }
    std::uint64_t pos = 0;
    while (gap_ < length - pos) {
      pos += gap_;
      accept(pos);
      ++pos;
      gap_ = rng_.geometric_failures(p_);
      if (pos >= length) return;
    }
    gap_ -= (length - pos);
  }

 private:
  Rng& rng_;
  double p_;
  std::uint64_t gap_ = 0;
};

/// All (size)-subsets of [n] in lexicographic order.
Level full_level(std::size_t n, int dim) {
  const std::size_t size = static_cast<std::size_t>(dim) + 1;
  if (binomial(static_cast<long long>(n), static_cast<long long>(size)) > kMaxEnumeration) {
    throw InvalidArgument("complete skeleton too large to enumerate");
  }
  Level lv(dim);
  if (size > n) return lv;
  lv.reserve(static_cast<std::size_t>(binomial(static_cast<long long>(n), static_cast<long long>(size))));
  Simplex s(size);
  std::iota(s.begin(), s.end(), 0u);
  while (true) {
    lv.push_back(s);
    std::size_t pos = size;
    while (pos > 0 && s[pos - 1] == n - size + pos - 1) --pos;
    if (pos == 0) break;
    ++s[pos - 1];
    for (std::size_t i = pos; i < size; ++i) s[i] = s[i - 1] + 1;
  }
  return lv;
}

/// Candidates of dimension dim(lower)+1 whose whole boundary lies in `lower`,
/// visited in lexicographic order. Uses the prefix join: the two facets that
/// omit one of the last two vertices share the same prefix.
template <class F>
void for_each_candidate(const Level& lower, std::size_t n, F&& visit) {
  const int i = lower.dim() + 1;
  const std::size_t w = lower.width();
  Simplex cand(w + 1);
  Simplex facet(w);
  if (lower.dim() < 0) return;
  std::size_t start = 0;
  const std::size_t total = lower.size();
  (void)n;
  while (start < total) {
    // Group of simplices sharing the first w-1 vertices.
    std::size_t end = start + 1;
    while (end < total &&
           std::equal(lower[start].begin(), lower[start].end() - 1, lower[end].begin())) {
      ++end;
    }
    SimplexView head = lower[start];
    std::copy(head.begin(), head.end() - 1, cand.begin());
    for (std::size_t a = start; a < end; ++a) {
      cand[w - 1] = lower[a][w - 1];
      for (std::size_t b = a + 1; b < end; ++b) {
        cand[w] = lower[b][w - 1];
        bool ok = true;
        // Facets omitting a prefix vertex j < w-1 still need checking.
        for (std::size_t j = 0; j + 1 < w && ok; ++j) {
          std::size_t t = 0;
          for (std::size_t u = 0; u <= w; ++u) {
            if (u != j) facet[t++] = cand[u];
          }
          ok = lower.find(facet).has_value();
        }
        if (ok) visit(SimplexView(cand));
      }
    }
    start = end;
  }
  (void)i;
}

/// Top level of LM / clique models: (d)-subsets drawn with probability p by
/// skipping over blocks "prefix + v" with prefix a (d-1)-subset.
Level skip_top_level(const Level& prefixes, std::size_t n, double p, Rng& rng) {
  const int d = prefixes.dim() + 1;
  Level lv(d);
  SkipSampler sk(rng, p);
  Simplex s(static_cast<std::size_t>(d) + 1);
  for (std::size_t a = 0; a < prefixes.size(); ++a) {
    SimplexView pre = prefixes[a];
    const Vertex first = pre.back() + 1;
    if (first >= n) continue;
    std::copy(pre.begin(), pre.end(), s.begin());
    sk.block(n - first, [&](std::uint64_t off) {
      s[static_cast<std::size_t>(d)] = first + static_cast<Vertex>(off);
      lv.push_back(s);
    });
  }
  return lv;
}

Level all_vertices(std::size_t n) {
  std::vector<Vertex> v(n);
  std::iota(v.begin(), v.end(), 0u);
  return Level(0, std::move(v));
}

/// Clique complex of a graph (vertices [0,n), edges lexicographic) up to dim_cap,
/// enumerated along a degeneracy ordering.
std::vector<Level> clique_levels(std::size_t n, const Level& edges, int dim_cap) {
  std::vector<Level> levels;
  levels.push_back(all_vertices(n));
  if (dim_cap < 1) return levels;
  levels.push_back(edges);
  if (dim_cap < 2) return levels;

  std::vector<std::vector<Vertex>> adj(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    adj[edges[i][0]].push_back(edges[i][1]);
    adj[edges[i][1]].push_back(edges[i][0]);
  }
  // Degeneracy ordering (repeatedly remove a minimum-degree vertex).
  std::vector<std::size_t> deg(n);
  std::size_t maxdeg = 0;
  for (std::size_t v = 0; v < n; ++v) {
    deg[v] = adj[v].size();
    maxdeg = std::max(maxdeg, deg[v]);
  }
  std::vector<std::vector<Vertex>> buckets(maxdeg + 1);
  for (std::size_t v = 0; v < n; ++v) buckets[deg[v]].push_back(static_cast<Vertex>(v));
  std::vector<std::uint32_t> rank(n, 0);
  std::vector<char> removed(n, 0);
  std::size_t next_rank = 0, cur = 0;
  while (next_rank < n) {
    cur = cur > 0 ? cur - 1 : 0;
    while (buckets[cur].empty()) ++cur;
    const Vertex v = buckets[cur].back();
    buckets[cur].pop_back();
    if (removed[v] || deg[v] != cur) continue;  // stale bucket entry
    removed[v] = 1;
    rank[v] = static_cast<std::uint32_t>(next_rank++);
    for (Vertex w : adj[v]) {
      if (!removed[w]) {
        --deg[w];
        buckets[deg[w]].push_back(w);
      }
    }
  }
  // Orient from lower to higher rank; out-lists sorted by rank.
  std::vector<std::vector<Vertex>> out(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (Vertex w : adj[v]) {
      if (rank[w] > rank[v]) out[v].push_back(w);
    }
    std::sort(out[v].begin(), out[v].end(), [&](Vertex a, Vertex b) { return rank[a] < rank[b]; });
  }
  for (int dim = 2; dim <= dim_cap; ++dim) levels.emplace_back(dim);

  std::vector<Vertex> stack;
  Simplex sorted;
  const auto by_rank = [&](Vertex a, Vertex b) { return rank[a] < rank[b]; };
  // Depth-first extension; `cand` holds common out-neighbours sorted by rank.
  auto extend = [&](auto&& self, const std::vector<Vertex>& cand) -> void {
    const int dim = static_cast<int>(stack.size());  // dimension of clique after adding one vertex
    if (dim > dim_cap) return;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      const Vertex w = cand[i];
      stack.push_back(w);
      if (dim >= 2) {
        sorted.assign(stack.begin(), stack.end());
        std::sort(sorted.begin(), sorted.end());
        levels[dim].push_back(sorted);
      }
      if (dim < dim_cap) {
        std::vector<Vertex> next;
        std::set_intersection(cand.begin() + static_cast<std::ptrdiff_t>(i) + 1, cand.end(), out[w].begin(),
                              out[w].end(), std::back_inserter(next), by_rank);
        if (!next.empty()) self(self, next);
      }
      stack.pop_back();
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    stack.assign(1, static_cast<Vertex>(v));
    extend(extend, out[v]);
  }
  for (int dim = 2; dim <= dim_cap; ++dim) levels[dim].normalize();
  return levels;
}

}  // namespace

ModelKind parse_model_kind(const std::string& s) {
  if (s == "lm" || s == "linial") return ModelKind::Linial;
  if (s == "clique") return ModelKind::Clique;
  if (s == "mp" || s == "multi") return ModelKind::Multi;
  throw InvalidArgument("unknown model '" + s + "' (expected lm, clique or mp)");
}

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::Linial: return "lm";
    case ModelKind::Clique: return "clique";
    case ModelKind::Multi: return "mp";
  }
  return "?";
}

double binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (long long i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r < 9.0e15 ? std::round(r) : r;
}

std::vector<double> linial_params(int d, double p) {
  if (d < 0) throw InvalidArgument("dimension must be non-negative");
  check_probability(p, "p");
  std::vector<double> out(static_cast<std::size_t>(d) + 1, 1.0);
  out[static_cast<std::size_t>(d)] = p;
  return out;
}

std::vector<double> clique_params(int d, double p, int dim_cap) {
  if (d < 0 || dim_cap < d) throw InvalidArgument("clique model needs 0 <= d <= dim_cap");
  check_probability(p, "p");
  std::vector<double> out(static_cast<std::size_t>(dim_cap) + 1, 1.0);
  out[static_cast<std::size_t>(d)] = p;
  return out;
}

SimplicialComplex mp_sample(std::size_t n, const std::vector<double>& p, std::uint64_t seed) {
  if (p.empty()) throw InvalidArgument("parameter vector must be non-empty");
  for (double x : p) check_probability(x, "every p_i");
  Rng rng(seed);
  const int cap = static_cast<int>(p.size()) - 1;
  std::vector<Level> levels;
  Level v0(0);
  for (std::size_t v = 0; v < n; ++v) {
    const double p0 = p[0];
    const bool keep = p0 >= 1.0 ? true : (p0 <= 0.0 ? false : rng.bernoulli(p0));
    if (keep) {
      const Vertex s[1] = {static_cast<Vertex>(v)};
      v0.push_back(s);
    }
  }
  levels.push_back(std::move(v0));
  for (int i = 1; i <= cap; ++i) {
    const double pi = p[static_cast<std::size_t>(i)];
    Level lv(i);
    if (pi > 0.0) {
      for_each_candidate(levels.back(), n, [&](SimplexView c) {
        const bool keep = pi >= 1.0 ? true : rng.bernoulli(pi);
        if (keep) lv.push_back(c);
      });
    }
    if (lv.empty()) break;
    levels.push_back(std::move(lv));
  }
  return SimplicialComplex(n, std::move(levels), cap, false);
}

SimplicialComplex lm_sample(std::size_t n, int d, double p, std::uint64_t seed) {
  if (d < 1 || static_cast<std::size_t>(d) >= n) throw InvalidArgument("Linial-Meshulam model needs 1 <= d < n");
  check_probability(p, "p");
  Rng rng(seed);
  std::vector<Level> levels;
  levels.push_back(all_vertices(n));
  for (int i = 1; i < d; ++i) levels.push_back(full_level(n, i));
  levels.push_back(skip_top_level(levels.back(), n, p, rng));
  return SimplicialComplex(n, std::move(levels), d, false);
}

SimplicialComplex clique_sample(std::size_t n, int d, double p, int dim_cap, std::uint64_t seed) {
  if (d < 1 || static_cast<std::size_t>(d) >= n || dim_cap < d) {
    throw InvalidArgument("clique model needs 1 <= d < n and d <= dim_cap");
  }
  check_probability(p, "p");
  Rng rng(seed);
  std::vector<Level> levels;
  if (d == 1) {
    Level edges = skip_top_level(all_vertices(n), n, p, rng);
    levels = clique_levels(n, edges, dim_cap);
    return SimplicialComplex(n, std::move(levels), dim_cap, false);
  }
  levels.push_back(all_vertices(n));
  for (int i = 1; i < d; ++i) levels.push_back(full_level(n, i));
  levels.push_back(skip_top_level(levels.back(), n, p, rng));
  for (int i = d + 1; i <= dim_cap; ++i) {
    Level lv(i);
    for_each_candidate(levels.back(), n, [&](SimplexView c) { lv.push_back(c); });
    if (lv.empty()) break;
    levels.push_back(std::move(lv));
  }
  return SimplicialComplex(n, std::move(levels), dim_cap, false);
}

DerivedParams derive_params(const std::vector<double>& p) {
  if (p.empty()) throw InvalidArgument("parameter vector must be non-empty");
  for (double x : p) check_probability(x, "every p_i");
  const int D = static_cast<int>(p.size()) - 1;
  // prod_i p_i^{e_i} with the convention 0^0 = 1, evaluated in log space.
  auto product = [&](auto exponent, int upto) {
    double log_sum = 0.0;
    for (int i = 0; i <= upto; ++i) {
      const double e = exponent(i);
      if (e == 0.0) continue;
      const double pi = p[static_cast<std::size_t>(i)];
      if (pi == 0.0) return 0.0;
      log_sum += e * std::log(pi);
    }
    return std::exp(log_sum);
  };
  DerivedParams out;
  out.q.push_back(1.0);
  for (int k = 0; k <= D; ++k) out.q.push_back(product([&](int i) { return binomial(k + 1, i + 1); }, k));
  out.r.push_back(p[0]);
  for (int k = 0; k <= D - 1; ++k) out.r.push_back(product([&](int i) { return binomial(k + 1, i); }, k + 1));
  for (int k = 0; k <= D - 1; ++k) {
    const double prev = out.r_at(k - 1);
    out.s.push_back(prev == 0.0 ? 0.0 : out.r_at(k) / prev);
  }
  return out;
}

double subcomplex_prob(const SimplicialComplex& y, const std::vector<double>& p) {
  const int D = static_cast<int>(p.size()) - 1;
  if (y.top_dimension() > D) return 0.0;
  double log_sum = 0.0;
  for (int i = 0; i <= y.top_dimension(); ++i) {
    const double fi = static_cast<double>(y.f(i));
    if (fi == 0.0) continue;
    const double pi = p[static_cast<std::size_t>(i)];
    if (pi == 0.0) return 0.0;
    log_sum += fi * std::log(pi);
  }
  return std::exp(log_sum);
}

double realization_prob(const SimplicialComplex& y, const std::vector<double>& p) {
  const int D = static_cast<int>(p.size()) - 1;
  if (y.top_dimension() > D) return 0.0;
  double log_sum = 0.0;
  for (int i = 0; i <= D; ++i) {
    const double pi = p[static_cast<std::size_t>(i)];
    const double fi = static_cast<double>(y.f(i));
    const double ei = static_cast<double>(external_simplices(y, i).size());
    if (fi > 0.0) {
      if (pi == 0.0) return 0.0;
      log_sum += fi * std::log(pi);
    }
    if (ei > 0.0) {
      if (pi == 1.0) return 0.0;
      log_sum += ei * std::log1p(-pi);
    }
  }
  return std::exp(log_sum);
}

double scaling_for_c(ModelKind kind, int d, int k, double c, std::size_t n) {
  if (!(c >= 0.0) || n == 0) throw InvalidArgument("scaling needs c >= 0 and n >= 1");
  double p = 0.0;
  switch (kind) {
    case ModelKind::Linial:
      if (k != d - 1) throw InvalidArgument("Linial-Meshulam scaling n*r_k = c needs k = d - 1");
      p = c / static_cast<double>(n);
      break;
    case ModelKind::Clique: {
      if (k < d - 1) throw InvalidArgument("clique scaling n*r_k = c needs k >= d - 1");
      const double e = binomial(k + 1, d);
      p = std::pow(c / static_cast<double>(n), 1.0 / e);
      break;
    }
    case ModelKind::Multi:
      throw InvalidArgument("no canonical scaling for the general multi-parameter model");
  }
  if (p > 1.0) throw InvalidArgument("requested c needs p > 1 at this n");
  return p;
}

}  // namespace stochtop
