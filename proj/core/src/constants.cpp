#include "stochtop/constants.hpp"

#include <cmath>
#include <limits>

#include "stochtop/error.hpp"
#include "stochtop/sampler.hpp"

namespace stochtop {
namespace {

void check_d_c(int d, double c) {
  if (d < 1) throw InvalidArgument("exponent d must be at least 1");
  if (!(c >= 0.0) || !std::isfinite(c)) throw InvalidArgument("c must be finite and non-negative");
}

double fixed_point_map(int d, double c, double t) { return std::exp(-c * std::pow(1.0 - t, d)); }

}  // namespace

double factorial(int k) {
  double r = 1.0;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

double t_fixed_point(int d, double c, const FixedPointOptions& opts) {
  check_d_c(d, c);
  double t = 0.0;
  for (std::size_t it = 0; it < opts.max_iterations; ++it) {
    const double next = fixed_point_map(d, c, t);
    // Monotone iteration: next >= t; stop once the residual at `next` is small.
    if (std::abs(next - fixed_point_map(d, c, next)) <= opts.tol) return next;
    if (next == t) break;
    t = next;
  }
  const double res = std::abs(t - fixed_point_map(d, c, t));
  if (res <= opts.tol) return t;
  throw NumericError("fixed-point iteration for t did not reach residual " + std::to_string(opts.tol) +
                     " (d=" + std::to_string(d) + ", c=" + std::to_string(c) + ")");
}

std::vector<double> t_iterates(int d, double c, int l) {
  check_d_c(d, c);
  if (l < -1) throw InvalidArgument("iterate index must be >= -1");
  std::vector<double> out;
  out.push_back(0.0);
  for (int j = 0; j <= l; ++j) out.push_back(fixed_point_map(d, c, out.back()));
  return out;
}

double c_threshold(int d) {
  if (d < 1) throw InvalidArgument("threshold dimension must be at least 1");
  if (d == 1) return 1.0;
  auto f = [d](double x) { return (d + 1) * (1.0 - x) + (1.0 + d * x) * std::log(x); };
  const double lo = 1e-9, hi = 1.0 - 1e-9;
  const int points = 10000;
  double a = lo, fa = f(lo);
  bool found = false;
  double b = hi;
  for (int i = 1; i < points; ++i) {
    const double x = lo + (hi - lo) * i / (points - 1);
    const double fx = f(x);
    if ((fa < 0.0) != (fx < 0.0) || fx == 0.0) {
      b = x;
      found = true;
      break;
    }
    a = x;
    fa = fx;
  }
  if (!found) throw NumericError("no interior root found for the threshold equation");
  for (int it = 0; it < 200; ++it) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if (std::abs(fm) <= 1e-12 && b - a < 1e-15) {
      a = b = m;
      break;
    }
    if ((fm < 0.0) == (fa < 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
    if (b - a <= 4 * std::numeric_limits<double>::epsilon() * b) break;
  }
  const double x = 0.5 * (a + b);
  if (std::abs(f(x)) > 1e-12) throw NumericError("threshold root residual exceeds 1e-12");
  return -std::log(x) / std::pow(1.0 - x, d);
}

std::pair<double, double> h_branches(int k, double c) {
  if (k < 0) throw InvalidArgument("h needs k >= 0");
  const int d = k + 1;
  const double t = t_fixed_point(d, c);
  const double b1 = 1.0 - c / (k + 2);
  const double b2 = t + c * t * std::pow(1.0 - t, k + 1) - c / (k + 2) * (1.0 - std::pow(1.0 - t, k + 2));
  return {b1, b2};
}

double h(int k, double c) {
  const auto [b1, b2] = h_branches(k, c);
  return std::max(b1, b2);
}

double g(int k, double c) {
  if (k < 1) throw InvalidArgument("g needs k >= 1");
  if (!(c > 0.0)) throw InvalidArgument("g needs c > 0");
  return (k + 1) / c * (h(k - 1, c) - (1.0 - c / (k + 1)));
}

double g_closed_form(int k, double c) {
  if (k < 1) throw InvalidArgument("g needs k >= 1");
  if (!(c > 0.0)) throw InvalidArgument("g needs c > 0");
  const double t = t_fixed_point(k, c);
  const double v = std::pow(1.0 - t, k + 1) - (k + 1) / c * (1.0 - t) + (k + 1) * t * std::pow(1.0 - t, k);
  return std::max(0.0, v);
}

double h_finite(int k, double c, int l) {
  if (k < 0 || l < 1) throw InvalidArgument("h_finite needs k >= 0 and l >= 1");
  const std::vector<double> t = t_iterates(k + 1, c, l);  // t[i] = t^{(i-1)}
  const double tl = t[static_cast<std::size_t>(l) + 1];
  const double tl1 = t[static_cast<std::size_t>(l)];
  const double tl2 = t[static_cast<std::size_t>(l) - 1];
  const double b1 = 1.0 - c / (k + 2);
  const double b2 = tl1 + c * tl1 * std::pow(1.0 - tl2, k + 1) -
                    c / (k + 2) * (1.0 - std::pow(1.0 - tl1, k + 1) * (1.0 - tl));
  return std::max(b1, b2);
}

double h0_series(double c) {
  if (!(c > 0.0)) throw InvalidArgument("series needs c > 0");
  const double lx = std::log(c) - c;
  double sum = 0.0;
  for (long long s = 1; s < 100000000; ++s) {
    const double sd = static_cast<double>(s);
    const double log_term = (sd - 2.0) * std::log(sd) - std::lgamma(sd + 1.0) + sd * lx;
    const double term = std::exp(log_term);
    sum += term;
    if (s > 10 && term < 1e-18 * sum) break;
  }
  return sum / c;
}

double psi(const std::vector<double>& alpha, int k) {
  double s = 0.0;
  for (int i = 0; i <= k && i < static_cast<int>(alpha.size()); ++i) s += binomial(k, i) * alpha[i];
  return s;
}

double tau_exponent(const std::vector<double>& alpha, int k) {
  double s = 0.0;
  for (int i = 0; i <= k && i < static_cast<int>(alpha.size()); ++i) s += binomial(k + 1, i + 1) * alpha[i];
  return k + 1 - s;
}

std::optional<int> critical_dim(const std::vector<double>& alpha) {
  for (int k = 0; k < 256; ++k) {
    if (psi(alpha, k) < 1.0 && psi(alpha, k + 1) > 1.0) return k;
  }
  return std::nullopt;
}

double exponent_gap(const std::vector<double>& alpha) {
  const auto k = critical_dim(alpha);
  if (!k) throw InvalidArgument("alpha lies on a hyperplane psi_k = 1 or outside every region");
  return std::min(1.0 - psi(alpha, *k), psi(alpha, *k + 1) - 1.0);
}

std::vector<CurvePoint> curve(const std::string& which, int param, double c_lo, double c_hi, double step) {
  if (!(step > 0.0) || c_hi < c_lo) throw InvalidArgument("curve range must satisfy lo <= hi and step > 0");
  std::vector<CurvePoint> out;
  for (long long i = 0;; ++i) {
    const double c = c_lo + static_cast<double>(i) * step;
    if (c > c_hi + 1e-12 * std::max(1.0, std::abs(c_hi))) break;
    double v;
    if (which == "h") {
      v = h(param - 1, c) / factorial(param);
    } else if (which == "g") {
      v = g(param, c) / factorial(param + 1);
    } else if (which == "scaled-clique") {
      v = std::pow(c, param / 2.0) * h(param, c) / factorial(param + 1);
    } else {
      throw InvalidArgument("unknown curve '" + which + "' (expected h, g or scaled-clique)");
    }
    out.push_back({c, v});
  }
  return out;
}

}  // namespace stochtop
