#include "stochtop/betti.hpp"

#include <map>
#include <numeric>
#include <string>

#include "stochtop/error.hpp"

namespace stochtop {
namespace {

void require_dimension(const SimplicialComplex& x, int k) {
  if (!x.knows_dimension(k)) {
    throw InvalidArgument("dimension " + std::to_string(k) + " exceeds the complex's dimension cap " +
                          std::to_string(x.dim_cap()));
  }
}

}  // namespace

SparseIntMatrix coboundary_matrix(const SimplicialComplex& x, int k) {
  if (k < -1) throw InvalidArgument("coboundary degree must be >= -1");
  require_dimension(x, k + 1);
  SparseIntMatrix m;
  m.cols = x.f(k);
  const std::size_t rows = x.f(k + 1);
  const std::size_t w = static_cast<std::size_t>(k) + 2;
  m.rows = rows;
  m.row_ptr.resize(rows + 1);
  m.col.resize(rows * w);
  m.val.resize(rows * w);
  const std::vector<std::uint32_t> fi = facet_indices(x, k);
  for (std::size_t r = 0; r < rows; ++r) {
    m.row_ptr[r + 1] = (r + 1) * w;
    for (std::size_t j = 0; j < w; ++j) {
      m.col[r * w + j] = fi[r * w + j];
      m.val[r * w + j] = (j % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

std::size_t connected_components(const SimplicialComplex& x) {
  const Level& v = x.level(0);
  const Level& e = x.level(1);
  std::vector<std::uint32_t> parent(v.size());
  std::iota(parent.begin(), parent.end(), 0u);
  auto root = [&](std::uint32_t a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  };
  std::size_t comps = v.size();
  const bool dense_ids = v.size() == x.vertex_universe();
  for (std::size_t i = 0; i < e.size(); ++i) {
    std::uint32_t a, b;
    if (dense_ids) {
      a = e[i][0];
      b = e[i][1];
    } else {
      a = static_cast<std::uint32_t>(*v.find(e[i].subspan(0, 1)));
      b = static_cast<std::uint32_t>(*v.find(e[i].subspan(1, 1)));
    }
    a = root(a);
    b = root(b);
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  }
  return comps;
}

std::size_t coboundary_rank(const SimplicialComplex& x, int k, const BettiOptions& opts) {
  require_dimension(x, k + 1);
  if (k < -1) return 0;
  if (k == -1) return x.f(0) > 0 ? 1 : 0;
  if (k == 0) return x.f(0) - connected_components(x);  // union-find fast path
  const SparseIntMatrix m = coboundary_matrix(x, k);
  const std::size_t r = rank_mod_p(m, kPrimaryPrime, opts.tuning);
  if (opts.verify) {
    const std::size_t r2 = rank_mod_p(m, kVerifierPrime, opts.tuning);
    if (r != r2) {
      throw NumericError("rank of d_" + std::to_string(k) + " disagrees between primes: " + std::to_string(r) +
                         " vs " + std::to_string(r2));
    }
  }
  return r;
}

long long betti_number(const SimplicialComplex& x, int k, const BettiOptions& opts) {
  if (k < 0) throw InvalidArgument("Betti index must be non-negative");
  require_dimension(x, k + 1);
  const long long fk = static_cast<long long>(x.f(k));
  if (fk == 0) return 0;
  return fk - static_cast<long long>(coboundary_rank(x, k, opts)) -
         static_cast<long long>(coboundary_rank(x, k - 1, opts));
}

std::vector<long long> betti_numbers(const SimplicialComplex& x, const BettiOptions& opts) {
  std::vector<long long> out;
  std::size_t prev_rank = coboundary_rank(x, -1, opts);
  for (int k = 0; k <= x.top_dimension() && x.knows_dimension(k + 1); ++k) {
    const std::size_t r = coboundary_rank(x, k, opts);
    out.push_back(static_cast<long long>(x.f(k)) - static_cast<long long>(r) - static_cast<long long>(prev_rank));
    prev_rank = r;
  }
  return out;
}

std::size_t cocycle_dim(const SimplicialComplex& x, int k, const BettiOptions& opts) {
  require_dimension(x, k + 1);
  return x.f(k) - coboundary_rank(x, k, opts);
}

long long morse_lower_bound(const SimplicialComplex& x, int k) {
  require_dimension(x, k + 1);
  return static_cast<long long>(x.f(k)) - static_cast<long long>(x.f(k + 1)) - static_cast<long long>(x.f(k - 1));
}

bool coboundary_squares_to_zero(const SimplicialComplex& x, int k) {
  require_dimension(x, k + 2);
  const SparseIntMatrix a = coboundary_matrix(x, k);      // f_{k+1} x f_k
  const SparseIntMatrix b = coboundary_matrix(x, k + 1);  // f_{k+2} x f_{k+1}
  for (std::size_t r = 0; r < b.rows; ++r) {
    std::map<std::uint32_t, std::int64_t> acc;
    for (std::size_t t = b.row_ptr[r]; t < b.row_ptr[r + 1]; ++t) {
      const std::uint32_t mid = b.col[t];
      for (std::size_t u = a.row_ptr[mid]; u < a.row_ptr[mid + 1]; ++u) acc[a.col[u]] += b.val[t] * a.val[u];
    }
    for (const auto& kv : acc) {
      if (kv.second != 0) return false;
    }
  }
  return true;
}

}  // namespace stochtop
