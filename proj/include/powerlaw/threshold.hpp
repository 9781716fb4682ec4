#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "powerlaw/bisect.hpp"
#include "powerlaw/closed_forms.hpp"
#include "powerlaw/params.hpp"

namespace powerlaw {

/// phi_n(g) = -((n+1)(2n-2+2^{g/2}) / (2n^2))^{1/g}. Unimodal for n >= 2 with
/// limit -sqrt(2) as g -> infinity; identically -sqrt(2) for n = 1.
inline double phi(int n, double gamma) {
  if (n < 1) throw std::invalid_argument("phi: n must be >= 1");
  if (!(gamma > 0.0)) throw std::domain_error("phi: gamma must be > 0");
  const double dn = n;
  // log of 2n-2+2^{g/2} split so large gamma cannot overflow;
  // exp2(-g/2) underflows harmlessly to the asymptote.
  const double log_sum =
      0.5 * gamma * std::log(2.0) + std::log1p((2.0 * dn - 2.0) * std::exp2(-0.5 * gamma));
  const double log_base = std::log((dn + 1.0) / (2.0 * dn * dn)) + log_sum;
  return -std::exp(log_base / gamma);
}

/// The Euler-Lagrange-based unimodal function underlying the earlier
/// threshold bound:
///   f_1(t) = (2^{-1} - 2^{-t})/t,
///   f_n(t) = (n - (2n/(n+1))^{t/2} - n ((n-1)/(n+1))^{t/2})/t  for n >= 2.
inline double f_lower(int n, double t) {
  if (n < 1) throw std::invalid_argument("f_lower: n must be >= 1");
  if (!(t > 0.0)) throw std::domain_error("f_lower: t must be > 0");
  if (n == 1) return (0.5 - std::exp2(-t)) / t;
  const double dn = n;
  return (dn - std::pow(2.0 * dn / (dn + 1.0), 0.5 * t) -
          dn * std::pow((dn - 1.0) / (dn + 1.0), 0.5 * t)) /
         t;
}

namespace detail {
// g_n(t) = -(Bt - C) log(Bt - C) + Bt log t with B = 2n^2/(n+1), C = 2n-2.
// Positive at the left edge t = 1 + (n-1)/(2n^2), concave, and -> -infinity;
// its unique zero locates the maximum of phi_n.
inline double phi_aux_g(int n, double t) {
  const double dn = n;
  const double B = 2.0 * dn * dn / (dn + 1.0);
  const double C = 2.0 * dn - 2.0;
  const double u = B * t - C;
  return -u * std::log(u) + B * t * std::log(t);
}

inline double phi_aux_g_prime(int n, double t) {
  const double dn = n;
  const double B = 2.0 * dn * dn / (dn + 1.0);
  const double C = 2.0 * dn - 2.0;
  return B * std::log(t / (B * t - C));
}
}  // namespace detail

/// Root t0 of g_n on (1 + (n-1)/(2n^2), infinity).
inline double phi_aux_root(int n) {
  if (n < 2) throw std::invalid_argument("phi_aux_root: n must be >= 2");
  const double dn = n;
  const double left = 1.0 + (dn - 1.0) / (2.0 * dn * dn);
  double hi = left + 1.0;
  int doublings = 0;
  while (detail::phi_aux_g(n, hi) >= 0.0) {
    hi = left + 2.0 * (hi - left);
    if (++doublings > 100) throw std::runtime_error("phi_aux_root: bracket expansion failed");
  }
  auto res = bisect([n](double t) { return detail::phi_aux_g(n, t); }, left, hi, 1e-14);
  // One Newton polish; g_n is smooth with a nonzero slope at its root.
  const double step = detail::phi_aux_g(n, res.x) / detail::phi_aux_g_prime(n, res.x);
  return res.x - step;
}

/// Location of the unique maximum of phi_n: 2 log2((2n^2/(n+1)) t0 - (2n-2)).
inline double phi_argmax(int n) {
  const double dn = n;
  const double t0 = phi_aux_root(n);
  return 2.0 * std::log2(2.0 * dn * dn / (dn + 1.0) * t0 - (2.0 * dn - 2.0));
}

enum class ThresholdMethod { PhiBased, FBased };

/// A computed threshold lower bound alpha_star(beta) with root diagnostics.
struct ThresholdResult {
  int n = 0;
  double beta = 0.0;
  double alpha_star = 0.0;
  ThresholdMethod method = ThresholdMethod::PhiBased;
  std::pair<double, double> bracket = {0.0, 0.0};
  double residual = 0.0;
  bool degenerate = false;
};

namespace detail {
// Largest x with u(x) = u(beta) for a unimodal u peaking at `peak` and
// decreasing towards `limit` beyond it. Degenerate (x = beta) when beta sits
// at or past the peak, or when u(beta) is already within 1e-12 of the limit.
template <class U>
ThresholdResult largest_preimage(U&& u, double peak, double limit, int n, double beta,
                                 ThresholdMethod method) {
  ThresholdResult out;
  out.n = n;
  out.beta = beta;
  out.method = method;
  const double target = u(beta);
  if (beta >= peak || u(peak) <= target) {
    out.alpha_star = beta;
    out.bracket = {beta, beta};
    out.degenerate = true;
    return out;
  }
  if (std::isfinite(limit) && target <= limit + 1e-12) {
    out.alpha_star = beta;
    out.bracket = {beta, beta};
    out.degenerate = true;
    return out;
  }
  double hi = peak + 1.0;
  int doublings = 0;
  while (u(hi) >= target) {
    hi = peak + 2.0 * (hi - peak);
    if (++doublings > 60)
      throw std::runtime_error("threshold: bracket expansion failed after 60 doublings");
  }
  auto res = bisect([&](double x) { return u(x) - target; }, peak, hi, 1e-13);
  out.alpha_star = res.x;
  out.bracket = {peak, hi};
  out.residual = std::abs(res.fx);
  return out;
}

// Peak of f_n by ternary search, after a grid certificate that the sampled
// difference signs change exactly once; the bisection below is only valid
// for a unimodal profile, so a failed certificate aborts loudly.
inline double f_lower_argmax(int n) {
  const double lo = (n == 1) ? 1.0 : 2.0;
  const double hi = (n == 1) ? 64.0 : 4.0;
  int sign_changes = 0;
  double prev_diff = 0.0;
  bool have_prev = false;
  for (double t = 0.5; t < 20.0; t += 1e-2) {
    const double diff = f_lower(n, t + 1e-2) - f_lower(n, t);
    if (have_prev && prev_diff > 0.0 && diff < 0.0) ++sign_changes;
    if (have_prev && prev_diff < 0.0 && diff > 0.0)
      throw std::runtime_error("f_lower: unimodality certificate failed (spurious minimum)");
    prev_diff = diff;
    have_prev = true;
  }
  if (sign_changes != 1)
    throw std::runtime_error("f_lower: unimodality certificate failed");
  double a = lo, b = hi;
  for (int it = 0; it < 500 && (b - a) > 1e-12; ++it) {
    const double m1 = a + (b - a) / 3.0;
    const double m2 = b - (b - a) / 3.0;
    if (f_lower(n, m1) < f_lower(n, m2))
      a = m1;
    else
      b = m2;
  }
  return 0.5 * (a + b);
}
}  // namespace detail

/// Simplex-transition threshold lower bound from the cross-polytope
/// competitor: the largest alpha with phi_n(alpha) = phi_n(beta). For n = 1
/// phi is constant and the bound degenerates to beta.
inline ThresholdResult threshold_from_phi(int n, double beta) {
  if (n < 1) throw std::invalid_argument("threshold_from_phi: n must be >= 1");
  if (!(beta >= 2.0)) throw std::invalid_argument("threshold_from_phi: beta must be >= 2");
  if (n == 1) {
    ThresholdResult out;
    out.n = n;
    out.beta = beta;
    out.alpha_star = beta;
    out.bracket = {beta, beta};
    out.degenerate = true;
    return out;
  }
  const double peak = phi_argmax(n);
  return detail::largest_preimage([n](double g) { return phi(n, g); }, peak, -std::sqrt(2.0), n,
                                  beta, ThresholdMethod::PhiBased);
}

/// The earlier Euler-Lagrange-based threshold lower bound: the largest
/// alpha >= 2 with f_n(alpha) = f_n(beta).
inline ThresholdResult threshold_from_f(int n, double beta) {
  if (n < 1) throw std::invalid_argument("threshold_from_f: n must be >= 1");
  if (!(beta >= 2.0)) throw std::invalid_argument("threshold_from_f: beta must be >= 2");
  const double peak = detail::f_lower_argmax(n);
  const double limit = (n == 1) ? 0.0 : -std::numeric_limits<double>::infinity();
  return detail::largest_preimage([n](double t) { return f_lower(n, t); }, peak, limit, n, beta,
                                  ThresholdMethod::FBased);
}

enum class Competition { SimplexBeaten, SimplexAtLeastTied };

/// Checks the sign relation between phi_n(alpha) - phi_n(beta) and the energy
/// gap (optimal cross-polytope) - (unit simplex): they must have opposite
/// sign or both vanish within 1e-12. Violations throw, which makes every
/// call a live test of the relation.
inline Competition simplex_vs_cross_polytope(const Params& p) {
  p.validate();
  if (!(p.beta > 0.0)) throw std::domain_error("simplex_vs_cross_polytope: requires beta > 0");
  const double dphi = phi(p.n, p.alpha) - phi(p.n, p.beta);
  const double denergy = optimal_cross_polytope_energy(p) - simplex_energy(p);
  const bool both_zero = std::abs(dphi) <= 1e-12 && std::abs(denergy) <= 1e-12;
  if (!both_zero && !(dphi * denergy < 0.0))
    throw std::logic_error("simplex_vs_cross_polytope: sign relation violated");
  return (denergy < -1e-12) ? Competition::SimplexBeaten : Competition::SimplexAtLeastTied;
}

struct ThresholdRow {
  double beta = 0.0;
  double alpha_star_phi = 0.0;
  double alpha_star_f = 0.0;
  double delta = 0.0;
};

/// Side-by-side values of both threshold bounds over a beta grid.
inline std::vector<ThresholdRow> threshold_comparison(int n, const std::vector<double>& betas) {
  if (n < 2) throw std::invalid_argument("threshold_comparison: n must be >= 2");
  std::vector<ThresholdRow> rows;
  rows.reserve(betas.size());
  for (double b : betas) {
    if (!(b >= 2.0)) throw std::invalid_argument("threshold_comparison: grid values must be >= 2");
    ThresholdRow row;
    row.beta = b;
    row.alpha_star_phi = threshold_from_phi(n, b).alpha_star;
    row.alpha_star_f = threshold_from_f(n, b).alpha_star;
    row.delta = row.alpha_star_phi - row.alpha_star_f;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace powerlaw
