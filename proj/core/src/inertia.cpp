#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>

#include "stochtop/error.hpp"
#include "stochtop/spectra.hpp"

extern "C" {
// LAPACK Bunch-Kaufman factorisation of a symmetric indefinite matrix.
void dsytrf_(const char* uplo, const int* n, double* a, const int* lda, int* ipiv, double* work, const int* lwork,
             int* info);
}

namespace stochtop {

// Symmetric elimination with a fixed minimum-degree ordering for the sparse,
// tree-like part; the remaining core is assembled densely and factorised by
// LAPACK's blocked Bunch-Kaufman routine. Negative pivots give the inertia.
struct InertiaCounter::Impl {
  static constexpr std::size_t kDegreeCap = 400;
  static constexpr std::size_t kMaxCore = 12000;

  std::size_t n = 0;
  std::vector<double> diag0;                      // A_vv
  std::vector<std::uint32_t> order;               // eliminated nodes, in order
  std::vector<std::int32_t> core_index;           // -1 for eliminated nodes
  std::vector<std::uint32_t> core_nodes;
  std::vector<std::vector<std::uint32_t>> later;  // pattern to not-yet-eliminated nodes (sorted by id)
  std::vector<std::vector<double>> later0;        // initial values aligned with `later`
  std::vector<std::uint32_t> rank_of;             // elimination rank (core nodes after all eliminated)
  struct CoreEntry {
    std::size_t pos;
    double value;
  };
  std::vector<CoreEntry> core0;  // original couplings between two core nodes
  std::size_t factor_nnz = 0;
  double scale = 1.0;

  // Per-count scratch.
  std::vector<double> diag;
  std::vector<std::vector<double>> vals;
  std::vector<double> dense;
};

InertiaCounter::InertiaCounter(const Eigen::SparseMatrix<double>& a) : impl_(new Impl) {
  if (a.rows() != a.cols()) throw InvalidArgument("inertia needs a square matrix");
  Impl& m = *impl_;
  m.n = static_cast<std::size_t>(a.rows());
  const std::size_t n = m.n;
  m.diag0.assign(n, 0.0);
  std::vector<std::vector<std::pair<std::uint32_t, double>>> adj(n);
  for (Eigen::Index j = 0; j < a.outerSize(); ++j) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(a, j); it; ++it) {
      const auto r = static_cast<std::uint32_t>(it.row());
      const auto c = static_cast<std::uint32_t>(it.col());
      m.scale = std::max(m.scale, std::abs(it.value()));
      if (r == c) {
        m.diag0[r] += it.value();
      } else {
        adj[r].emplace_back(c, it.value());
      }
    }
  }
  // Symbolic minimum-degree elimination on the pattern.
  std::vector<std::vector<std::uint32_t>> pat(n);
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(adj[v].begin(), adj[v].end());
    for (const auto& e : adj[v]) pat[v].push_back(e.first);
  }
  std::vector<char> gone(n, 0);
  using Item = std::pair<std::size_t, std::uint32_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  for (std::size_t v = 0; v < n; ++v) pq.emplace(pat[v].size(), static_cast<std::uint32_t>(v));
  m.later.resize(n);
  std::vector<std::uint32_t> merged;
  while (!pq.empty()) {
    const auto [d, v] = pq.top();
    pq.pop();
    if (gone[v] || d != pat[v].size()) continue;
    if (d > Impl::kDegreeCap) break;
    gone[v] = 1;
    m.order.push_back(v);
    m.later[v] = pat[v];
    m.factor_nnz += pat[v].size();
    const std::vector<std::uint32_t>& nb = m.later[v];
    for (std::uint32_t u : nb) {
      merged.clear();
      std::set_union(pat[u].begin(), pat[u].end(), nb.begin(), nb.end(), std::back_inserter(merged));
      pat[u].clear();
      for (std::uint32_t w : merged) {
        if (w != u && w != v) pat[u].push_back(w);
      }
      pq.emplace(pat[u].size(), u);
    }
    std::vector<std::uint32_t>().swap(pat[v]);
  }
  m.core_index.assign(n, -1);
  for (std::size_t v = 0; v < n; ++v) {
    if (!gone[v]) {
      m.core_index[v] = static_cast<std::int32_t>(m.core_nodes.size());
      m.core_nodes.push_back(static_cast<std::uint32_t>(v));
    }
  }
  if (m.core_nodes.size() > Impl::kMaxCore) {
    throw NumericError("inertia: dense core of size " + std::to_string(m.core_nodes.size()) + " exceeds the limit");
  }
  m.factor_nnz += m.core_nodes.size() * (m.core_nodes.size() + 1) / 2;
  m.rank_of.assign(n, 0);
  for (std::size_t i = 0; i < m.order.size(); ++i) m.rank_of[m.order[i]] = static_cast<std::uint32_t>(i);
  for (std::uint32_t v : m.core_nodes) m.rank_of[v] = static_cast<std::uint32_t>(n);
  // Initial values aligned with the eliminated nodes' final patterns. An
  // original entry (u, w) is stored at the node eliminated first.
  m.later0.resize(n);
  for (std::uint32_t v : m.order) m.later0[v].assign(m.later[v].size(), 0.0);
  for (std::size_t u = 0; u < n; ++u) {
    for (const auto& [w, val] : adj[u]) {
      if (w < u) continue;  // each pair once
      std::uint32_t first = static_cast<std::uint32_t>(u), second = w;
      if (m.rank_of[second] < m.rank_of[first]) std::swap(first, second);
      if (m.core_index[first] >= 0) {
        const auto ci = static_cast<std::size_t>(std::min(m.core_index[first], m.core_index[second]));
        const auto cj = static_cast<std::size_t>(std::max(m.core_index[first], m.core_index[second]));
        m.core0.push_back({ci * m.core_nodes.size() + cj, val});
        continue;
      }
      const auto& lv = m.later[first];
      auto it = std::lower_bound(lv.begin(), lv.end(), second);
      m.later0[first][static_cast<std::size_t>(it - lv.begin())] += val;
    }
  }
  m.vals.resize(n);
}

InertiaCounter::~InertiaCounter() { delete impl_; }

std::size_t InertiaCounter::dimension() const { return impl_->n; }

std::size_t InertiaCounter::nonzeros_in_factor() const { return impl_->factor_nnz; }

std::size_t InertiaCounter::count_below(double x) {
  Impl& m = *impl_;
  const std::size_t s = m.core_nodes.size();
  double shift = x;
  for (int attempt = 0; attempt < 8; ++attempt, shift += (std::abs(x) + 1.0) * 1e-12 * (1 << attempt)) {
    m.diag.resize(m.n);
    for (std::size_t v = 0; v < m.n; ++v) m.diag[v] = m.diag0[v] - shift;
    for (std::uint32_t v : m.order) m.vals[v] = m.later0[v];
    m.dense.assign(s * s, 0.0);
    for (const auto& e : m.core0) m.dense[e.pos] += e.value;
    std::size_t negative = 0;
    bool ok = true;
    const double tiny = 1e-13 * m.scale;
    for (std::uint32_t v : m.order) {
      const double d = m.diag[v];
      if (!(std::abs(d) > tiny)) {
        ok = false;
        break;
      }
      if (d < 0.0) ++negative;
      const auto& nb = m.later[v];
      const auto& nv = m.vals[v];
      for (std::size_t i = 0; i < nb.size(); ++i) {
        const std::uint32_t a = nb[i];
        const double la = nv[i] / d;
        if (la == 0.0) continue;
        m.diag[a] -= la * nv[i];
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
          const std::uint32_t b = nb[j];
          const double upd = la * nv[j];
          std::uint32_t first = a, second = b;
          if (m.rank_of[second] < m.rank_of[first]) std::swap(first, second);
          const std::int32_t cf = m.core_index[first];
          if (cf >= 0) {
            const std::int32_t cs = m.core_index[second];
            m.dense[static_cast<std::size_t>(std::min(cf, cs)) * s + static_cast<std::size_t>(std::max(cf, cs))] -= upd;
          } else {
            const auto& lf = m.later[first];
            auto it = std::lower_bound(lf.begin(), lf.end(), second);
            m.vals[first][static_cast<std::size_t>(it - lf.begin())] -= upd;
          }
        }
      }
    }
    if (!ok) continue;
    if (s == 0) return negative;
    // Assemble the dense core (column-major, lower triangle used by LAPACK:
    // entry (i, j) with i >= j lives at i + j * s; we stored (min, max) at
    // min * s + max, which is exactly that slot).
    for (std::size_t i = 0; i < s; ++i) m.dense[i * s + i] += m.diag[m.core_nodes[i]];
    const int ns = static_cast<int>(s);
    std::vector<int> ipiv(s);
    int info = 0, lwork = -1;
    double wq = 0.0;
    dsytrf_("L", &ns, m.dense.data(), &ns, ipiv.data(), &wq, &lwork, &info);
    lwork = std::max(1, static_cast<int>(wq));
    std::vector<double> work(static_cast<std::size_t>(lwork));
    dsytrf_("L", &ns, m.dense.data(), &ns, ipiv.data(), work.data(), &lwork, &info);
    if (info < 0) throw NumericError("inertia: dsytrf rejected its arguments");
    if (info > 0) continue;  // exactly singular block: nudge the shift
    for (std::size_t i = 0; i < s;) {
      const double a11 = m.dense[i * s + i];
      if (ipiv[i] > 0) {
        if (!(std::abs(a11) > tiny)) {
          ok = false;
          break;
        }
        if (a11 < 0.0) ++negative;
        ++i;
      } else {
        // 2x2 block [[a11, a21], [a21, a22]].
        const double a21 = m.dense[i * s + i + 1];
        const double a22 = m.dense[(i + 1) * s + i + 1];
        const double det = a11 * a22 - a21 * a21;
        if (det < 0.0) {
          ++negative;
        } else if (a11 + a22 < 0.0) {
          negative += 2;
        }
        i += 2;
      }
    }
    if (ok) return negative;
  }
  throw NumericError("inertia: singular shifted factorisation at x = " + std::to_string(x));
}

}  // namespace stochtop
