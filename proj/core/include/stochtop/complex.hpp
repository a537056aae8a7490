#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace stochtop {

using Vertex = std::uint32_t;
/// A simplex is a strictly increasing list of vertex ids; dimension = size - 1.
using Simplex = std::vector<Vertex>;
using SimplexView = std::span<const Vertex>;

/// Lexicographic three-way comparison of two vertex lists.
int lex_compare(SimplexView a, SimplexView b);

/// Returns true when the vertex ids are strictly increasing.
bool is_strictly_increasing(SimplexView s);

/// All simplices of one dimension, stored flat and in lexicographic order.
class Level {
 public:
  Level() = default;
  explicit Level(int dim) : dim_(dim) {}
  Level(int dim, std::vector<Vertex> flat);

  int dim() const { return dim_; }
  std::size_t width() const { return static_cast<std::size_t>(dim_ + 1); }
  std::size_t size() const { return dim_ < 0 ? 0 : data_.size() / width(); }
  bool empty() const { return size() == 0; }
  SimplexView operator[](std::size_t i) const { return {data_.data() + i * width(), width()}; }
  const std::vector<Vertex>& flat() const { return data_; }

  /// Binary search; returns the position of `s` if present.
  std::optional<std::size_t> find(SimplexView s) const;

  /// Appends a simplex; callers must keep the lexicographic order.
  void push_back(SimplexView s) { data_.insert(data_.end(), s.begin(), s.end()); }
  void reserve(std::size_t count) { data_.reserve(count * width()); }

  /// Sorts and removes duplicates.
  void normalize();
  bool is_sorted_unique() const;

 private:
  int dim_ = -1;
  std::vector<Vertex> data_;
};

/// A finite abstract simplicial complex on the vertex universe [0, n).
///
/// The complex may carry a dimension cap: only simplices of dimension <= cap
/// are represented and quantities needing higher dimensions are refused.
/// Instances are immutable; builders and operations return new complexes.
class SimplicialComplex {
 public:
  static constexpr int kNoCap = std::numeric_limits<int>::max();

  SimplicialComplex() = default;
  /// Takes ownership of per-dimension levels (index = dimension). Levels are
  /// normalized; when `check_closure` is set the face-closure is verified.
  SimplicialComplex(std::size_t n, std::vector<Level> levels, int dim_cap = kNoCap,
                    bool check_closure = true);

  /// Face closure of the given simplices.
  static SimplicialComplex from_simplices(std::size_t n, const std::vector<Simplex>& simplices,
                                          int dim_cap = kNoCap);

  std::size_t vertex_universe() const { return n_; }
  int dim_cap() const { return dim_cap_; }
  bool has_cap() const { return dim_cap_ != kNoCap; }
  /// True when all simplices of dimension <= k are represented.
  bool knows_dimension(int k) const { return k <= dim_cap_; }
  /// Largest dimension with at least one simplex; -1 for the void complex.
  int top_dimension() const;

  /// Number of k-simplices; f(-1) = 1 (the empty simplex), 0 beyond the data.
  std::size_t f(int k) const;
  /// (f_0, ..., f_dim).
  std::vector<std::size_t> f_vector() const;

  const Level& level(int k) const;
  std::size_t level_count() const { return levels_.size(); }
  SimplexView simplex(int k, std::size_t i) const { return level(k)[i]; }
  std::vector<Simplex> simplices(int k) const;

  std::optional<std::size_t> index_of(SimplexView s) const;
  bool contains(SimplexView s) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b);

 private:
  std::size_t n_ = 0;
  int dim_cap_ = kNoCap;
  std::vector<Level> levels_;
  static const Level kEmptyLevel;
};

/// A complex together with a distinguished k-simplex (the root).
struct RootedComplex {
  SimplicialComplex complex;
  Simplex root;
  int k() const { return static_cast<int>(root.size()) - 1; }
};

/// Accumulates simplices and produces their face closure.
class ComplexBuilder {
 public:
  explicit ComplexBuilder(std::size_t n) : n_(n) {}
  /// Adds a simplex (validated: strictly increasing, ids < n).
  void add(SimplexView s);
  /// Adds every simplex of an existing complex.
  void add_all(const SimplicialComplex& x);
  SimplicialComplex build(int dim_cap = SimplicialComplex::kNoCap) &&;

 private:
  std::size_t n_;
  std::vector<Level> levels_;
};

// ---------------------------------------------------------------------------
// Core operations

/// K(sigma): all non-empty faces of sigma, ordered by dimension then lexicographically.
std::vector<Simplex> faces(SimplexView sigma);

/// X together with the closure of sigma.
SimplicialComplex close_and_insert(const SimplicialComplex& x, SimplexView sigma);

/// Number of (k+1)-simplices of X containing the k-simplex tau.
std::size_t degree(const SimplicialComplex& x, SimplexView tau);

/// i-simplices of the full simplex on [n] that are not in Y but whose whole
/// boundary is in Y (for i = 0: vertices < n missing from Y).
std::vector<Simplex> external_simplices(const SimplicialComplex& y, int i);

/// sum_{k >= -1} (-1)^k f_k.
long long reduced_euler_characteristic(const SimplicialComplex& x);

/// True when every simplex of `a` is a simplex of `b`.
bool is_subcomplex(const SimplicialComplex& a, const SimplicialComplex& b);

/// Maximal simplices (no proper coface), in dimension-then-lex order.
std::vector<Simplex> maximal_simplices(const SimplicialComplex& x);

/// Incidence from k-simplices to the (k+1)-simplices containing them (CSR).
class CofaceTable {
 public:
  CofaceTable() = default;
  CofaceTable(const SimplicialComplex& x, int k);
  int k() const { return k_; }
  std::span<const std::uint32_t> of(std::size_t k_index) const {
    return {cols_.data() + offsets_[k_index], offsets_[k_index + 1] - offsets_[k_index]};
  }
  std::size_t degree(std::size_t k_index) const { return offsets_[k_index + 1] - offsets_[k_index]; }

 private:
  int k_ = 0;
  std::vector<std::size_t> offsets_;
  std::vector<std::uint32_t> cols_;
};

/// For every (k+1)-simplex, the indices of its k+2 facets: facet j omits vertex j.
std::vector<std::uint32_t> facet_indices(const SimplicialComplex& x, int k);

}  // namespace stochtop
