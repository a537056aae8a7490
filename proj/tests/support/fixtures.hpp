#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "stochtop/complex.hpp"
#include "stochtop/rng.hpp"

namespace stochtop::testing {

inline SimplicialComplex make(std::size_t n, const std::vector<Simplex>& simplices) {
  return SimplicialComplex::from_simplices(n, simplices);
}

/// Boundary of the triangle on {0, 1, 2}.
inline SimplicialComplex hollow_triangle() { return make(3, {{0, 1}, {0, 2}, {1, 2}}); }
/// The triangle {0, 1, 2} with its interior.
inline SimplicialComplex filled_triangle() { return make(3, {{0, 1, 2}}); }
/// Boundary of the tetrahedron on {0, 1, 2, 3} (a 2-sphere).
inline SimplicialComplex tetra_boundary() { return make(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}); }
/// The full simplex on n vertices.
inline SimplicialComplex full_simplex(std::size_t n) {
  Simplex s(n);
  std::iota(s.begin(), s.end(), Vertex{0});
  return make(n, {s});
}
/// Path 0 - 1 - 2.
inline SimplicialComplex path3() { return make(3, {{0, 1}, {1, 2}}); }

/// Closure of random simplices on n vertices with dimensions up to top.
inline SimplicialComplex random_complex(std::size_t n, int top, std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Simplex> simplices;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t size = 1 + rng.below(static_cast<std::uint64_t>(top) + 1);
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), Vertex{0});
    for (std::size_t j = 0; j < size; ++j) std::swap(all[j], all[j + rng.below(n - j)]);
    Simplex s(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(size));
    std::sort(s.begin(), s.end());
    simplices.push_back(std::move(s));
  }
  return make(n, simplices);
}

}  // namespace stochtop::testing
