#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace stochtop {

struct FixedPointOptions {
  double tol = 1e-14;                 ///< residual |t - exp(-c (1-t)^d)|
  std::size_t max_iterations = 200000000;
};

/// Smallest root in [0, 1] of t = exp(-c (1 - t)^d), by monotone iteration from 0.
double t_fixed_point(int d, double c, const FixedPointOptions& opts = {});

/// Finite iterates t^{(-1)} = 0, t^{(j+1)} = exp(-c (1 - t^{(j)})^d) for
/// j = -1 .. l - 1; element i of the result is t^{(i-1)} (so size l + 2).
std::vector<double> t_iterates(int d, double c, int l);

/// Threshold c_d: c_1 = 1; for d >= 2, c_d = -log x_d / (1 - x_d)^d with x_d the
/// smallest root in (0,1) of (d+1)(1-x) + (1+dx) log x = 0.
double c_threshold(int d);

/// h_k(c) = max{1 - c/(k+2), t + c t (1-t)^{k+1} - c/(k+2) (1 - (1-t)^{k+2})}
/// with t = t_{k+1,c}; the limit of beta_k / (f_k) along n r_k = c.
double h(int k, double c);
/// The two branches of h (first: 1 - c/(k+2), second: the fixed-point branch).
std::pair<double, double> h_branches(int k, double c);

/// g_k(c) = (k+1)/c * (h_{k-1}(c) - (1 - c/(k+1))) for k >= 1.
double g(int k, double c);
/// Closed form max{0, (1-t)^{k+1} - (k+1)/c (1-t) + (k+1) t (1-t)^k}, t = t_{k,c}.
double g_closed_form(int k, double c);

/// Finite-radius bound h_k^{(l)}(c), l >= 1.
double h_finite(int k, double c, int l);

/// (1/c) sum_{s>=1} s^{s-2}/s! (c e^{-c})^s: the component density of G(n, c/n).
double h0_series(double c);

/// psi_k(alpha) = sum_{i<=k} C(k,i) alpha_i (missing alpha_i are 0).
double psi(const std::vector<double>& alpha, int k);
/// tau_k(alpha) = k + 1 - sum_{i<=k} C(k+1,i+1) alpha_i.
double tau_exponent(const std::vector<double>& alpha, int k);
/// The k with psi_k < 1 < psi_{k+1}, if any (searched up to k = 256).
std::optional<int> critical_dim(const std::vector<double>& alpha);
/// e(alpha) = min{1 - psi_k, psi_{k+1} - 1} for the critical k.
double exponent_gap(const std::vector<double>& alpha);

/// Curves: "h" -> h_{d-1}(c)/d!, "g" -> g_k(c)/(k+1)!, "scaled-clique" ->
/// c^{k/2} h_k(c)/(k+1)!. `param` is d for "h" and k otherwise.
struct CurvePoint {
  double c;
  double value;
};
std::vector<CurvePoint> curve(const std::string& which, int param, double c_lo, double c_hi, double step);

double factorial(int k);

}  // namespace stochtop
