#include "stochtop/complex.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "stochtop/error.hpp"

namespace stochtop {

int lex_compare(SimplexView a, SimplexView b) {
  const std::size_t m = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  if (a.size() == b.size()) return 0;
  return a.size() < b.size() ? -1 : 1;
}

bool is_strictly_increasing(SimplexView s) {
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i - 1] >= s[i]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Level

Level::Level(int dim, std::vector<Vertex> flat) : dim_(dim), data_(std::move(flat)) {
  if (dim_ < 0) throw InvalidArgument("level dimension must be non-negative");
  if (data_.size() % width() != 0) throw InvalidArgument("flat level size is not a multiple of the simplex width");
}

std::optional<std::size_t> Level::find(SimplexView s) const {
  if (s.size() != width()) return std::nullopt;
  std::size_t lo = 0, hi = size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    const int c = lex_compare((*this)[mid], s);
    if (c == 0) return mid;
    if (c < 0) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return std::nullopt;
}

bool Level::is_sorted_unique() const {
  for (std::size_t i = 1; i < size(); ++i) {
    if (lex_compare((*this)[i - 1], (*this)[i]) >= 0) return false;
  }
  return true;
}

void Level::normalize() {
  if (is_sorted_unique()) return;
  const std::size_t count = size();
  const std::size_t w = width();
  std::vector<std::uint32_t> order(count);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return lex_compare((*this)[a], (*this)[b]) < 0;
  });
  std::vector<Vertex> out;
  out.reserve(data_.size());
  for (std::size_t i = 0; i < count; ++i) {
    SimplexView s = (*this)[order[i]];
    if (!out.empty() && lex_compare(SimplexView(out.data() + out.size() - w, w), s) == 0) continue;
    out.insert(out.end(), s.begin(), s.end());
  }
  data_ = std::move(out);
}

// ---------------------------------------------------------------------------
// SimplicialComplex

const Level SimplicialComplex::kEmptyLevel{};

SimplicialComplex::SimplicialComplex(std::size_t n, std::vector<Level> levels, int dim_cap,
                                     bool check_closure)
    : n_(n), dim_cap_(dim_cap), levels_(std::move(levels)) {
  if (dim_cap_ < 0) throw InvalidArgument("dimension cap must be non-negative");
  while (!levels_.empty() && levels_.back().empty()) levels_.pop_back();
  if (!levels_.empty() && static_cast<int>(levels_.size()) - 1 > dim_cap_) {
    throw InvalidArgument("complex has simplices above its dimension cap");
  }
  for (std::size_t k = 0; k < levels_.size(); ++k) {
    Level& lv = levels_[k];
    if (lv.empty()) {
      lv = Level(static_cast<int>(k));
      continue;
    }
    if (lv.dim() != static_cast<int>(k)) throw InvalidArgument("level stored at the wrong dimension");
    lv.normalize();
    for (std::size_t i = 0; i < lv.size(); ++i) {
      SimplexView s = lv[i];
      if (!is_strictly_increasing(s)) throw InvalidArgument("simplex vertices must be strictly increasing");
      if (s.back() >= n_) throw InvalidArgument("vertex id out of range");
    }
  }
  if (check_closure) {
    for (std::size_t k = 1; k < levels_.size(); ++k) {
      const Level& lv = levels_[k];
      Simplex facet(k);
      for (std::size_t i = 0; i < lv.size(); ++i) {
        SimplexView s = lv[i];
        for (std::size_t j = 0; j <= k; ++j) {
          std::size_t t = 0;
          for (std::size_t u = 0; u <= k; ++u) {
            if (u != j) facet[t++] = s[u];
          }
          if (!levels_[k - 1].find(facet)) throw InvalidArgument("collection is not closed under faces");
        }
      }
    }
  }
}

SimplicialComplex SimplicialComplex::from_simplices(std::size_t n, const std::vector<Simplex>& simplices,
                                                    int dim_cap) {
  ComplexBuilder b(n);
  for (const Simplex& s : simplices) b.add(s);
  return std::move(b).build(dim_cap);
}

int SimplicialComplex::top_dimension() const { return static_cast<int>(levels_.size()) - 1; }

std::size_t SimplicialComplex::f(int k) const {
  if (k == -1) return 1;
  if (k < -1 || k >= static_cast<int>(levels_.size())) return 0;
  return levels_[k].size();
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> out;
  for (const Level& lv : levels_) out.push_back(lv.size());
  return out;
}

const Level& SimplicialComplex::level(int k) const {
  if (k < 0 || k >= static_cast<int>(levels_.size())) return kEmptyLevel;
  return levels_[k];
}

std::vector<Simplex> SimplicialComplex::simplices(int k) const {
  const Level& lv = level(k);
  std::vector<Simplex> out;
  out.reserve(lv.size());
  for (std::size_t i = 0; i < lv.size(); ++i) out.emplace_back(lv[i].begin(), lv[i].end());
  return out;
}

std::optional<std::size_t> SimplicialComplex::index_of(SimplexView s) const {
  if (s.empty()) return std::nullopt;
  return level(static_cast<int>(s.size()) - 1).find(s);
}

bool SimplicialComplex::contains(SimplexView s) const {
  if (s.empty()) return true;
  return index_of(s).has_value();
}

bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.n_ != b.n_ || a.levels_.size() != b.levels_.size()) return false;
  for (std::size_t k = 0; k < a.levels_.size(); ++k) {
    if (a.levels_[k].flat() != b.levels_[k].flat()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// ComplexBuilder

void ComplexBuilder::add(SimplexView s) {
  if (s.empty()) return;
  if (!is_strictly_increasing(s)) throw InvalidArgument("simplex vertices must be strictly increasing");
  if (s.back() >= n_) throw InvalidArgument("vertex id out of range");
  const std::size_t k = s.size() - 1;
  while (levels_.size() <= k) levels_.emplace_back(static_cast<int>(levels_.size()));
  levels_[k].push_back(s);
}

void ComplexBuilder::add_all(const SimplicialComplex& x) {
  for (int k = 0; k <= x.top_dimension(); ++k) {
    const Level& lv = x.level(k);
    for (std::size_t i = 0; i < lv.size(); ++i) add(lv[i]);
  }
}

SimplicialComplex ComplexBuilder::build(int dim_cap) && {
  // Close downwards: facets of level k feed level k-1.
  for (std::size_t k = levels_.size(); k-- > 1;) {
    levels_[k].normalize();
    const Level& lv = levels_[k];
    Simplex facet(k);
    for (std::size_t i = 0; i < lv.size(); ++i) {
      SimplexView s = lv[i];
      for (std::size_t j = 0; j <= k; ++j) {
        std::size_t t = 0;
        for (std::size_t u = 0; u <= k; ++u) {
          if (u != j) facet[t++] = s[u];
        }
        levels_[k - 1].push_back(facet);
      }
    }
  }
  if (!levels_.empty()) levels_[0].normalize();
  return SimplicialComplex(n_, std::move(levels_), dim_cap, false);
}

// ---------------------------------------------------------------------------
// Operations

std::vector<Simplex> faces(SimplexView sigma) {
  const std::size_t m = sigma.size();
  if (m > 24) throw InvalidArgument("simplex too large to enumerate its faces");
  std::vector<Simplex> out;
  for (std::size_t size = 1; size <= m; ++size) {
    // Enumerate subsets of the given size in lexicographic order.
    std::vector<std::size_t> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      Simplex f(size);
      for (std::size_t i = 0; i < size; ++i) f[i] = sigma[idx[i]];
      out.push_back(std::move(f));
      std::size_t pos = size;
      while (pos > 0 && idx[pos - 1] == m - size + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < size; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return out;
}

SimplicialComplex close_and_insert(const SimplicialComplex& x, SimplexView sigma) {
  if (!is_strictly_increasing(sigma)) throw InvalidArgument("simplex vertices must be strictly increasing");
  if (!sigma.empty() && sigma.back() >= x.vertex_universe()) throw InvalidArgument("vertex id out of range");
  if (static_cast<int>(sigma.size()) - 1 > x.dim_cap()) throw InvalidArgument("simplex exceeds the dimension cap");
  ComplexBuilder b(x.vertex_universe());
  b.add_all(x);
  b.add(sigma);
  return std::move(b).build(x.dim_cap());
}

std::size_t degree(const SimplicialComplex& x, SimplexView tau) {
  const int k = static_cast<int>(tau.size()) - 1;
  if (!x.knows_dimension(k + 1)) throw InvalidArgument("degree needs dimension k+1 within the cap");
  if (!x.contains(tau)) throw InvalidArgument("degree of a simplex not in the complex");
  const Level& up = x.level(k + 1);
  std::size_t count = 0;
  Simplex sigma(tau.size() + 1);
  const Vertex n = static_cast<Vertex>(x.vertex_universe());
  for (Vertex v = 0; v < n; ++v) {
    if (std::binary_search(tau.begin(), tau.end(), v)) continue;
    std::size_t t = 0;
    bool placed = false;
    for (Vertex u : tau) {
      if (!placed && v < u) {
        sigma[t++] = v;
        placed = true;
      }
      sigma[t++] = u;
    }
    if (!placed) sigma[t++] = v;
    if (up.find(sigma)) ++count;
  }
  return count;
}

std::vector<Simplex> external_simplices(const SimplicialComplex& y, int i) {
  std::vector<Simplex> out;
  const Vertex n = static_cast<Vertex>(y.vertex_universe());
  if (i < 0) return out;
  if (i == 0) {
    for (Vertex v = 0; v < n; ++v) {
      const Vertex s[1] = {v};
      if (!y.contains(s)) out.push_back({v});
    }
    return out;
  }
  // Candidates: extend an (i-1)-simplex by a larger vertex; every i-simplex
  // with full boundary in Y arises exactly once this way.
  const Level& lower = y.level(i - 1);
  Simplex cand(static_cast<std::size_t>(i) + 1);
  Simplex facet(static_cast<std::size_t>(i));
  for (std::size_t a = 0; a < lower.size(); ++a) {
    SimplexView base = lower[a];
    std::copy(base.begin(), base.end(), cand.begin());
    for (Vertex v = base.back() + 1; v < n; ++v) {
      cand[i] = v;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {  // facet omitting j (facet omitting v is `base`)
        std::size_t t = 0;
        for (int u = 0; u <= i; ++u) {
          if (u != j) facet[t++] = cand[u];
        }
        ok = lower.find(facet).has_value();
      }
      if (ok && !y.contains(cand)) out.push_back(cand);
    }
  }
  return out;
}

long long reduced_euler_characteristic(const SimplicialComplex& x) {
  long long chi = -1;
  for (int k = 0; k <= x.top_dimension(); ++k) {
    const long long fk = static_cast<long long>(x.f(k));
    chi += (k % 2 == 0) ? fk : -fk;
  }
  return chi;
}

bool is_subcomplex(const SimplicialComplex& a, const SimplicialComplex& b) {
  for (int k = 0; k <= a.top_dimension(); ++k) {
    const Level& lv = a.level(k);
    for (std::size_t i = 0; i < lv.size(); ++i) {
      if (!b.contains(lv[i])) return false;
    }
  }
  return true;
}

std::vector<Simplex> maximal_simplices(const SimplicialComplex& x) {
  std::vector<Simplex> out;
  for (int k = 0; k <= x.top_dimension(); ++k) {
    const Level& lv = x.level(k);
    if (k == x.top_dimension()) {
      for (std::size_t i = 0; i < lv.size(); ++i) out.emplace_back(lv[i].begin(), lv[i].end());
      continue;
    }
    CofaceTable cof(x, k);
    for (std::size_t i = 0; i < lv.size(); ++i) {
      if (cof.degree(i) == 0) out.emplace_back(lv[i].begin(), lv[i].end());
    }
  }
  return out;
}

std::vector<std::uint32_t> facet_indices(const SimplicialComplex& x, int k) {
  const Level& up = x.level(k + 1);
  const Level& lo = x.level(k);
  const std::size_t w = static_cast<std::size_t>(k) + 2;
  std::vector<std::uint32_t> out(up.size() * w);
  if (k == -1) {
    // Every vertex has the empty simplex as its single facet.
    std::fill(out.begin(), out.end(), 0u);
    return out;
  }
  Simplex facet(w - 1);
  for (std::size_t i = 0; i < up.size(); ++i) {
    SimplexView s = up[i];
    for (std::size_t j = 0; j < w; ++j) {
      std::size_t t = 0;
      for (std::size_t u = 0; u < w; ++u) {
        if (u != j) facet[t++] = s[u];
      }
      auto pos = lo.find(facet);
      if (!pos) throw InvalidArgument("complex is not closed under faces");
      out[i * w + j] = static_cast<std::uint32_t>(*pos);
    }
  }
  return out;
}

CofaceTable::CofaceTable(const SimplicialComplex& x, int k) : k_(k) {
  if (!x.knows_dimension(k + 1)) throw InvalidArgument("coface table needs dimension k+1 within the cap");
  const std::size_t nk = x.f(k);
  const std::size_t w = static_cast<std::size_t>(k) + 2;
  std::vector<std::uint32_t> fi = facet_indices(x, k);
  offsets_.assign(nk + 1, 0);
  for (std::uint32_t f : fi) ++offsets_[f + 1];
  for (std::size_t i = 0; i < nk; ++i) offsets_[i + 1] += offsets_[i];
  cols_.resize(fi.size());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  const std::size_t nup = fi.size() / w;
  for (std::size_t i = 0; i < nup; ++i) {
    for (std::size_t j = 0; j < w; ++j) cols_[cursor[fi[i * w + j]]++] = static_cast<std::uint32_t>(i);
  }
}

}  // namespace stochtop
