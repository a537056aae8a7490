#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "stochtop/complex.hpp"
#include "stochtop/ktree.hpp"

namespace stochtop {

constexpr int kUnboundedLayer = std::numeric_limits<int>::max();

/// Outcome of the breadth-first traversal from a root k-simplex.
struct TraversalRecord {
  int k = 0;
  Simplex root;
  std::vector<std::size_t> m;      ///< m_i: (k+1)-simplices attached at step i
  std::vector<std::size_t> c;      ///< c_i: cross (k+1)-simplices seen at step i
  std::vector<Simplex> tau_order;  ///< tau_1, ..., tau_I
  std::vector<int> layer;          ///< distance of tau_i from the root
  KRootedTree tree{0};             ///< the explored (k+1)-tree T_I
  std::size_t stop_index = 0;      ///< I
  bool truncated = false;          ///< stopped because the next tau exceeded max_layer
  bool higher_cofaces = false;     ///< some processed tau_i lies in a (k+2)-simplex
};

/// True when the explored neighbourhood is a k-rooted tree: every c_i is zero
/// and no processed tau_i lies in a simplex of dimension above k+1. For a
/// record truncated at max_layer this describes the ball of radius max_layer+1.
bool is_tree_neighborhood(const TraversalRecord& r);

/// Shared read-only index over a complex for repeated traversals from many
/// roots. The complex must outlive the explorer. Concurrent calls are safe.
class LocalExplorer {
 public:
  LocalExplorer(const SimplicialComplex& x, int k);
  ~LocalExplorer();
  LocalExplorer(const LocalExplorer&) = delete;
  LocalExplorer& operator=(const LocalExplorer&) = delete;

  const SimplicialComplex& complex() const { return x_; }
  int k() const { return k_; }

  /// Processes k-simplices in breadth-first order while their layer is <= max_layer.
  TraversalRecord traverse(SimplexView tau, int max_layer = kUnboundedLayer) const;
  /// The ball (X, tau)_l; l = kUnboundedLayer gives X(tau).
  RootedComplex ball(SimplexView tau, int l) const;

 private:
  struct Tables;
  const SimplicialComplex& x_;
  int k_;
  std::unique_ptr<Tables> tables_;
};

TraversalRecord bfs_traverse(const SimplicialComplex& x, SimplexView tau, int max_layer = kUnboundedLayer);

/// (X, tau)_l: X_0 = K(tau); X_l adds the closure of every simplex containing a
/// k-simplex of X_{l-1}.
RootedComplex ball(const SimplicialComplex& x, SimplexView tau, int l);

/// Isomorphism class of a rooted complex truncated to radius l.
struct NeighborhoodClass {
  std::string code;     ///< "T..." for trees, "G..." for labelled canonical forms, "U..." when uncoded
  bool is_tree = false;
  bool coded = true;    ///< false for the uncoded bucket (code is a structural hash only)
};

/// Largest non-tree ball (in vertices) that receives an exact canonical form.
constexpr std::size_t kCanonicalVertexCap = 12;

/// Canonical class of (X, tau)_l. Equal codes mean root-preserving isomorphic
/// balls whenever `coded` is set.
NeighborhoodClass canonical_code(const RootedComplex& rooted, int l);
NeighborhoodClass canonical_code(const LocalExplorer& ex, SimplexView tau, int l);

/// Exact root-preserving isomorphism test of X(tau) for both rooted complexes.
bool rooted_isomorphic(const RootedComplex& a, const RootedComplex& b);

/// 2^-L with L the largest radius at which the balls are isomorphic (0 when they agree at every radius).
double local_distance(const RootedComplex& a, const RootedComplex& b);

/// Normalised histogram keyed by class code (or by degree).
using Histogram = std::map<std::string, double>;
using DegreeHistogram = std::map<std::size_t, double>;

/// lambda_k(X) truncated at radius l: class counts over F_k(X) divided by f_k.
Histogram empirical_local_distribution(const SimplicialComplex& x, int k, int l);

/// Law of deg(X; tau) over tau in F_k(X).
DegreeHistogram root_degree_histogram(const SimplicialComplex& x, int k);

/// Half the L1 distance, taken over the union of supports.
template <class Key>
double tv_distance(const std::map<Key, double>& a, const std::map<Key, double>& b) {
  double s = 0.0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      s += std::abs(ia->second);
      ++ia;
    } else if (ia == a.end() || ib->first < ia->first) {
      s += std::abs(ib->second);
      ++ib;
    } else {
      s += std::abs(ia->second - ib->second);
      ++ia;
      ++ib;
    }
  }
  return 0.5 * s;
}

}  // namespace stochtop
