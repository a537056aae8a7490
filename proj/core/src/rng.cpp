#include "stochtop/rng.hpp"

#include <cmath>
#include <limits>

#include "stochtop/error.hpp"

namespace stochtop {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> indices) {
  std::uint64_t h = mix64(master);
  for (std::uint64_t i : indices) h = mix64(h ^ mix64(i + 0x632be59bd9b4e019ULL));
  return h;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("below(0)");
  // Rejection sampling keeps the result exactly uniform.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

std::uint64_t Rng::geometric_failures(double p) {
  if (!(p > 0.0) || p > 1.0) throw InvalidArgument("geometric parameter must lie in (0, 1]");
  const double u = uniform_open0();
  if (p == 1.0) return 0;
  const double g = std::floor(std::log(u) / std::log1p(-p));
  if (g >= 1.8e19) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(g);
}

std::uint32_t Rng::poisson(double lambda) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw InvalidArgument("Poisson mean must be finite and non-negative");
  if (lambda == 0.0) return 0;
  if (lambda > 30.0) {
    // Sum of independent Poisson pieces of mean <= 30 (exact in law).
    const int pieces = static_cast<int>(std::ceil(lambda / 30.0));
    std::uint32_t total = 0;
    for (int i = 0; i < pieces; ++i) total += poisson(lambda / pieces);
    return total;
  }
  const double u = uniform();
  double p = std::exp(-lambda);
  double cdf = p;
  std::uint32_t k = 0;
  while (u >= cdf) {
    ++k;
    p *= lambda / k;
    const double next = cdf + p;
    if (next == cdf) break;  // numerical tail exhausted
    cdf = next;
  }
  return k;
}

}  // namespace stochtop
