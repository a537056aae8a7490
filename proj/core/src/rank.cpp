#include "stochtop/rank.hpp"

#include <algorithm>
#include <memory>

#include "stochtop/error.hpp"

namespace stochtop {

void SparseIntMatrix::add_row(const std::vector<std::pair<std::uint32_t, std::int64_t>>& entries) {
  for (const auto& [c, v] : entries) {
    if (c >= cols) throw InvalidArgument("column index out of range");
    col.push_back(c);
    val.push_back(v);
  }
  row_ptr.push_back(col.size());
  ++rows;
}

namespace {

/// GF(P) for P = 2^31 - e with small e: reduction by two folding steps.
template <std::uint32_t P>
struct PseudoMersenneField {
  static constexpr std::uint64_t kMask = (std::uint64_t{1} << 31) - 1;
  static constexpr std::uint64_t kE = (std::uint64_t{1} << 31) - P;
  std::uint32_t prime() const { return P; }
  static std::uint32_t reduce(std::uint64_t x) {
    x = (x & kMask) + (x >> 31) * kE;
    x = (x & kMask) + (x >> 31) * kE;
    return static_cast<std::uint32_t>(x >= P ? x - P : x);
  }
};

struct GenericField {
  std::uint32_t p;
  std::uint32_t prime() const { return p; }
  std::uint32_t reduce(std::uint64_t x) const { return static_cast<std::uint32_t>(x % p); }
};

template <class F>
std::uint32_t mul(const F& f, std::uint32_t a, std::uint32_t b) {
  return f.reduce(static_cast<std::uint64_t>(a) * b);
}

template <class F>
std::uint32_t inverse(const F& f, std::uint32_t a) {
  std::uint32_t result = 1, base = a;
  std::uint32_t e = f.prime() - 2;
  while (e) {
    if (e & 1u) result = mul(f, result, base);
    base = mul(f, base, base);
    e >>= 1;
  }
  return result;
}

struct Entry {
  std::uint32_t col;
  std::uint32_t val;
};
using Row = std::vector<Entry>;

template <class F>
class Eliminator {
 public:
  Eliminator(const F& f, const SparseIntMatrix& m, const RankTuning& tuning)
      : f_(f), tuning_(tuning), rows_(m.rows), alive_(m.rows, 1), colcnt_(m.cols, 0), colrows_(m.cols) {
    const std::int64_t p = f.prime();
    for (std::size_t r = 0; r < m.rows; ++r) {
      Row& row = rows_[r];
      for (std::size_t t = m.row_ptr[r]; t < m.row_ptr[r + 1]; ++t) {
        std::int64_t v = m.val[t] % p;
        if (v < 0) v += p;
        row.push_back({m.col[t], static_cast<std::uint32_t>(v)});
      }
      std::sort(row.begin(), row.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
      // Merge duplicates and drop zeros.
      std::size_t w = 0;
      for (std::size_t i = 0; i < row.size();) {
        std::uint64_t acc = 0;
        const std::uint32_t c = row[i].col;
        while (i < row.size() && row[i].col == c) acc += row[i++].val;
        const std::uint32_t v = static_cast<std::uint32_t>(acc % static_cast<std::uint64_t>(p));
        if (v != 0) row[w++] = {c, v};
      }
      row.resize(w);
      if (row.empty()) {
        alive_[r] = 0;
        continue;
      }
      ++active_rows_;
      active_nnz_ += row.size();
      for (const Entry& e : row) {
        colrows_[e.col].push_back(static_cast<std::uint32_t>(r));
        ++colcnt_[e.col];
      }
      if (row.size() == 1) row_one_.push_back(static_cast<std::uint32_t>(r));
    }
    for (std::size_t c = 0; c < m.cols; ++c) {
      if (colcnt_[c] == 0) continue;
      ++active_cols_;
      push_bucket(static_cast<std::uint32_t>(c));
      if (colcnt_[c] == 1) col_one_.push_back(static_cast<std::uint32_t>(c));
    }
  }

  std::size_t run(RankStats* stats) {
    while (active_rows_ > 0 && active_cols_ > 0) {
      if (!col_one_.empty()) {
        const std::uint32_t c = col_one_.back();
        col_one_.pop_back();
        if (colcnt_[c] != 1) continue;
        const auto holders = rows_of(c);
        pivot(holders.front(), c, holders);
        ++peeled_;
        continue;
      }
      if (!row_one_.empty()) {
        const std::uint32_t r = row_one_.back();
        row_one_.pop_back();
        if (!alive_[r] || rows_[r].size() != 1) continue;
        const std::uint32_t c = rows_[r][0].col;
        pivot(r, c, rows_of(c));
        ++peeled_;
        continue;
      }
      const double area = static_cast<double>(active_rows_) * static_cast<double>(active_cols_);
      if (area <= static_cast<double>(tuning_.max_dense_entries) &&
          (static_cast<double>(active_nnz_) >= tuning_.dense_switch_density * area || area <= 4096.0)) {
        break;
      }
      const std::uint32_t c = pick_column();
      const auto holders = rows_of(c);
      std::uint32_t best = holders.front();
      for (std::uint32_t r : holders) {
        if (rows_[r].size() < rows_[best].size()) best = r;
      }
      pivot(best, c, holders);
      ++sparse_pivots_;
    }
    const std::size_t sparse_rank = rank_;
    const std::size_t dense = dense_phase(stats);
    if (stats) {
      stats->peeled = peeled_;
      stats->sparse_pivots = sparse_pivots_;
    }
    return sparse_rank + dense;
  }

 private:
  void push_bucket(std::uint32_t c) {
    const std::uint32_t cnt = colcnt_[c];
    if (cnt == 0) return;
    if (buckets_.size() <= cnt) buckets_.resize(cnt + 1);
    buckets_[cnt].push_back(c);
    if (cnt < min_bucket_) min_bucket_ = cnt;
  }

  void dec(std::uint32_t c) {
    if (--colcnt_[c] == 0) {
      --active_cols_;
      return;
    }
    if (colcnt_[c] == 1) col_one_.push_back(c);
    push_bucket(c);
  }

  void inc(std::uint32_t c, std::uint32_t r) {
    if (colcnt_[c]++ == 0) ++active_cols_;
    colrows_[c].push_back(r);
    push_bucket(c);
  }

  static const Entry* find(const Row& row, std::uint32_t c) {
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::uint32_t x) { return e.col < x; });
    return (it != row.end() && it->col == c) ? &*it : nullptr;
  }

  /// Alive rows holding column c (compacts the lazy list as a side effect).
  std::vector<std::uint32_t> rows_of(std::uint32_t c) {
    std::vector<std::uint32_t>& list = colrows_[c];
    std::size_t w = 0;
    for (std::uint32_t r : list) {
      if (alive_[r] && find(rows_[r], c)) list[w++] = r;
    }
    list.resize(w);
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    return list;
  }

  std::uint32_t pick_column() {
    while (true) {
      if (min_bucket_ >= buckets_.size()) throw NumericError("rank elimination lost track of active columns");
      auto& b = buckets_[min_bucket_];
      while (!b.empty()) {
        const std::uint32_t c = b.back();
        if (colcnt_[c] == min_bucket_) return c;
        b.pop_back();
      }
      ++min_bucket_;
    }
  }

  void remove_row(std::uint32_t r) {
    alive_[r] = 0;
    --active_rows_;
    active_nnz_ -= rows_[r].size();
    for (const Entry& e : rows_[r]) dec(e.col);
    Row().swap(rows_[r]);
  }

  void pivot(std::uint32_t r, std::uint32_t c, const std::vector<std::uint32_t>& holders) {
    const Row& prow = rows_[r];
    const Entry* pe = find(prow, c);
    const std::uint32_t pinv = inverse(f_, pe->val);
    const std::uint32_t p = f_.prime();
    for (std::uint32_t t : holders) {
      if (t == r) continue;
      Row& trow = rows_[t];
      const Entry* te = find(trow, c);
      // new_t = t - (t_c / r_c) * r
      const std::uint32_t factor = p - mul(f_, te->val, pinv);
      Row merged;
      merged.reserve(trow.size() + prow.size());
      std::size_t i = 0, j = 0;
      const std::size_t old_size = trow.size();
      while (i < trow.size() || j < prow.size()) {
        if (j == prow.size() || (i < trow.size() && trow[i].col < prow[j].col)) {
          merged.push_back(trow[i++]);
        } else if (i == trow.size() || prow[j].col < trow[i].col) {
          const std::uint32_t v = mul(f_, factor, prow[j].val);
          merged.push_back({prow[j].col, v});
          inc(prow[j].col, t);
          ++j;
        } else {
          const std::uint32_t v = f_.reduce(static_cast<std::uint64_t>(trow[i].val) +
                                            static_cast<std::uint64_t>(factor) * prow[j].val);
          if (v != 0) {
            merged.push_back({trow[i].col, v});
          } else {
            dec(trow[i].col);
          }
          ++i;
          ++j;
        }
      }
      active_nnz_ = active_nnz_ - old_size + merged.size();
      trow.swap(merged);
      if (trow.empty()) {
        alive_[t] = 0;
        --active_rows_;
      } else if (trow.size() == 1) {
        row_one_.push_back(t);
      }
    }
    ++rank_;
    remove_row(r);
    std::vector<std::uint32_t>().swap(colrows_[c]);
  }

  std::size_t dense_phase(RankStats* stats) {
    if (active_rows_ == 0 || active_cols_ == 0) {
      if (stats) *stats = RankStats{};
      return 0;
    }
    std::vector<std::uint32_t> colmap(colcnt_.size(), UINT32_MAX);
    std::size_t ncols = 0;
    for (std::size_t c = 0; c < colcnt_.size(); ++c) {
      if (colcnt_[c] > 0) colmap[c] = static_cast<std::uint32_t>(ncols++);
    }
    std::vector<std::uint32_t> live;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (alive_[r]) live.push_back(static_cast<std::uint32_t>(r));
    }
    const std::size_t nrows = live.size();
    if (static_cast<double>(nrows) * static_cast<double>(ncols) > static_cast<double>(tuning_.max_dense_entries)) {
      throw NumericError("dense remainder of the rank computation exceeds the memory budget");
    }
    const std::size_t stride = (ncols + 15) & ~std::size_t{15};
    std::unique_ptr<std::uint32_t[]> storage(new std::uint32_t[nrows * stride]());
    std::vector<std::uint32_t*> row(nrows);
    for (std::size_t i = 0; i < nrows; ++i) {
      row[i] = storage.get() + i * stride;
      for (const Entry& e : rows_[live[i]]) row[i][colmap[e.col]] = e.val;
      Row().swap(rows_[live[i]]);
    }
    const std::size_t r = dense_rank(row, ncols);
    if (stats) {
      stats->dense_rows = nrows;
      stats->dense_cols = ncols;
      stats->dense_rank = r;
    }
    return r;
  }

  std::size_t dense_rank(std::vector<std::uint32_t*>& row, std::size_t ncols) {
    const std::size_t nrows = row.size();
    const std::uint32_t p = f_.prime();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < ncols && rank < nrows; ++c) {
      std::size_t piv = rank;
      while (piv < nrows && row[piv][c] == 0) ++piv;
      if (piv == nrows) continue;
      std::swap(row[piv], row[rank]);
      std::uint32_t* pr = row[rank];
      const std::uint32_t inv = inverse(f_, pr[c]);
      for (std::size_t j = c; j < ncols; ++j) pr[j] = mul(f_, pr[j], inv);
      for (std::size_t t = rank + 1; t < nrows; ++t) {
        std::uint32_t* tr = row[t];
        const std::uint32_t x = tr[c];
        if (x == 0) continue;
        const std::uint64_t factor = p - x;
        for (std::size_t j = c; j < ncols; ++j) {
          tr[j] = f_.reduce(static_cast<std::uint64_t>(tr[j]) + factor * pr[j]);
        }
      }
      ++rank;
    }
    return rank;
  }

  F f_;
  RankTuning tuning_;
  std::vector<Row> rows_;
  std::vector<char> alive_;
  std::vector<std::uint32_t> colcnt_;
  std::vector<std::vector<std::uint32_t>> colrows_;
  std::vector<std::vector<std::uint32_t>> buckets_;
  std::size_t min_bucket_ = SIZE_MAX;
  std::vector<std::uint32_t> col_one_, row_one_;
  std::size_t active_rows_ = 0, active_cols_ = 0, active_nnz_ = 0;
  std::size_t rank_ = 0, peeled_ = 0, sparse_pivots_ = 0;
};

template <class F>
std::size_t run_rank(const F& f, const SparseIntMatrix& m, const RankTuning& tuning, RankStats* stats) {
  Eliminator<F> e(f, m, tuning);
  return e.run(stats);
}

}  // namespace

std::size_t rank_mod_p(const SparseIntMatrix& m, std::uint32_t prime, const RankTuning& tuning, RankStats* stats) {
  if (prime < 3 || prime >= (1u << 31)) throw InvalidArgument("prime must be odd and below 2^31");
  if (m.row_ptr.size() != m.rows + 1) throw InvalidArgument("malformed sparse matrix");
  switch (prime) {
    case kPrimaryPrime: return run_rank(PseudoMersenneField<kPrimaryPrime>{}, m, tuning, stats);
    case kVerifierPrime: return run_rank(PseudoMersenneField<kVerifierPrime>{}, m, tuning, stats);
    default: return run_rank(GenericField{prime}, m, tuning, stats);
  }
}

}  // namespace stochtop
