#include "stochtop/collapse.hpp"

#include <algorithm>

#include "stochtop/error.hpp"

namespace stochtop {

namespace {

void check_k(const SimplicialComplex& x, int k) {
  if (k < 0) throw InvalidArgument("collapse dimension must be non-negative");
  if (!x.knows_dimension(k + 1)) throw InvalidArgument("collapse needs dimension k+1 within the cap");
}

/// Marks the j-simplices with no coface. Maximality is judged within the
/// dimension cap: a capped complex is taken as the complex it represents.
std::vector<char> maximal_mask(const SimplicialComplex& x, int j) {
  std::vector<char> maximal(x.f(j), 1);
  if (x.f(j + 1) == 0) return maximal;
  for (std::uint32_t f : facet_indices(x, j)) maximal[f] = 0;
  return maximal;
}

/// X with the listed simplices of dimensions k and k+1 removed.
SimplicialComplex remove_simplices(const SimplicialComplex& x, int k, const std::vector<char>& drop_k,
                                   const std::vector<char>& drop_k1) {
  std::vector<Level> levels;
  for (int d = 0; d <= x.top_dimension(); ++d) {
    const Level& lv = x.level(d);
    const std::vector<char>* drop = d == k ? &drop_k : (d == k + 1 ? &drop_k1 : nullptr);
    if (drop == nullptr) {
      levels.push_back(lv);
      continue;
    }
    Level out(d);
    for (std::size_t i = 0; i < lv.size(); ++i) {
      if (!(*drop)[i]) out.push_back(lv[i]);
    }
    levels.push_back(std::move(out));
  }
  return SimplicialComplex(x.vertex_universe(), std::move(levels), x.dim_cap(), false);
}

}  // namespace

bool is_free(const SimplicialComplex& x, SimplexView tau) {
  const int k = static_cast<int>(tau.size()) - 1;
  if (!x.contains(tau)) throw InvalidArgument("simplex is not in the complex");
  // A simplex is maximal iff it has no coface one dimension up.
  std::size_t maximal = 0;
  for (int d = k + 1; d <= x.top_dimension(); ++d) {
    const Level& lv = x.level(d);
    const Level& up = x.level(d + 1);
    for (std::size_t i = 0; i < lv.size(); ++i) {
      SimplexView s = lv[i];
      if (!std::includes(s.begin(), s.end(), tau.begin(), tau.end())) continue;
      bool is_max = true;
      for (std::size_t j = 0; j < up.size() && is_max; ++j) {
        SimplexView u = up[j];
        if (std::includes(u.begin(), u.end(), s.begin(), s.end())) is_max = false;
      }
      if (is_max && ++maximal > 1) return false;
    }
  }
  return maximal == 1;
}

std::pair<SimplicialComplex, CollapseTrace> collapse_round(const SimplicialComplex& x, int k) {
  check_k(x, k);
  CollapseTrace trace;
  trace.removed.emplace_back();
  const std::size_t nk = x.f(k);
  const std::size_t nk1 = x.f(k + 1);
  if (nk1 == 0) return {x, trace};
  const std::vector<char> maximal = maximal_mask(x, k + 1);
  const std::vector<std::uint32_t> fi = facet_indices(x, k);
  const std::size_t w = static_cast<std::size_t>(k) + 2;
  std::vector<std::uint32_t> deg(nk, 0);
  for (std::uint32_t f : fi) ++deg[f];
  // A k-simplex is free exactly when it lies in one (k+1)-simplex and that one is maximal.
  std::vector<char> drop_k(nk, 0), drop_k1(nk1, 0);
  for (std::size_t s = 0; s < nk1; ++s) {
    if (!maximal[s]) continue;
    std::uint32_t chosen = 0;
    bool found = false;
    for (std::size_t j = 0; j < w; ++j) {
      const std::uint32_t f = fi[s * w + j];
      // Level order is lexicographic, so the smallest index is the lex-least face.
      if (deg[f] == 1 && (!found || f < chosen)) {
        chosen = f;
        found = true;
      }
    }
    if (!found) continue;
    drop_k1[s] = 1;
    drop_k[chosen] = 1;
    SimplexView sv = x.level(k + 1)[s];
    SimplexView tv = x.level(k)[chosen];
    trace.removed.back().emplace_back(Simplex(sv.begin(), sv.end()), Simplex(tv.begin(), tv.end()));
  }
  return {remove_simplices(x, k, drop_k, drop_k1), std::move(trace)};
}

std::pair<SimplicialComplex, CollapseTrace> collapse_rounds(const SimplicialComplex& x, int k, int l) {
  if (l < 0) throw InvalidArgument("collapse rounds must be non-negative");
  check_k(x, k);
  SimplicialComplex cur = x;
  CollapseTrace trace;
  for (int r = 0; r < l; ++r) {
    auto [next, t] = collapse_round(cur, k);
    trace.removed.push_back(std::move(t.removed.front()));
    cur = std::move(next);
  }
  return {std::move(cur), std::move(trace)};
}

SimplicialComplex strip(const SimplicialComplex& x, int k, int l) {
  SimplicialComplex r = collapse_rounds(x, k, l).first;
  const std::vector<char> maximal = maximal_mask(r, k);
  return remove_simplices(r, k, maximal, std::vector<char>(r.f(k + 1), 0));
}

std::size_t maximal_k_count(const SimplicialComplex& x, int k) {
  if (k < 0) throw InvalidArgument("dimension must be non-negative");
  const std::vector<char> maximal = maximal_mask(x, k);
  return static_cast<std::size_t>(std::count(maximal.begin(), maximal.end(), 1));
}

std::vector<double> d_functional_all(const SimplicialComplex& x, int k, int l) {
  const SimplicialComplex s = strip(x, k, l);
  std::vector<std::uint32_t> deg(s.f(k), 0);
  if (s.f(k + 1) > 0) {
    for (std::uint32_t f : facet_indices(s, k)) ++deg[f];
  }
  std::vector<double> out;
  out.reserve(x.f(k));
  const Level& lk = x.level(k);
  for (std::size_t i = 0; i < lk.size(); ++i) {
    auto pos = s.level(k).find(lk[i]);
    out.push_back(pos ? static_cast<double>(deg[*pos]) / (k + 2) - 1.0 : 0.0);
  }
  return out;
}

double d_functional(const SimplicialComplex& x, SimplexView tau, int l) {
  const int k = static_cast<int>(tau.size()) - 1;
  if (!x.contains(tau)) throw InvalidArgument("simplex is not in the complex");
  const SimplicialComplex s = strip(x, k, l);
  if (!s.contains(tau)) return 0.0;
  return static_cast<double>(degree(s, tau)) / (k + 2) - 1.0;
}

long long betti_lower_bound(const SimplicialComplex& x, int k, int l) {
  const SimplicialComplex s = strip(x, k, l);
  // sum over tau in S of deg/(k+2) - 1 equals f_{k+1}(S) - f_k(S) by double counting.
  return static_cast<long long>(x.f(k)) - static_cast<long long>(x.f(k + 1)) - static_cast<long long>(x.f(k - 1)) +
         static_cast<long long>(s.f(k + 1)) - static_cast<long long>(s.f(k));
}

}  // namespace stochtop
