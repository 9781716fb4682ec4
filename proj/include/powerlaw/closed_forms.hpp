#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "powerlaw/measure.hpp"
#include "powerlaw/params.hpp"
#include "powerlaw/special_functions.hpp"

namespace powerlaw {

/// Centred regular unit n-simplex: n+1 points at mutual distance 1 with
/// uniform weights, centroid at the origin, |x_i| = sqrt(n/(2n+2)).
///
/// Construction: the points e_i/sqrt(2) in R^{n+1} are at mutual distance 1;
/// expressing them in the Helmert basis of the hyperplane orthogonal to
/// (1,...,1) centres them and drops to R^n.
inline DiscreteMeasure simplex_measure(int n) {
  if (n < 1) throw std::invalid_argument("simplex_measure: n must be >= 1");
  std::vector<double> coords(static_cast<std::size_t>(n + 1) * n, 0.0);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int i = 0; i <= n; ++i) {
    for (int k = 1; k <= n; ++k) {
      double v = 0.0;
      if (i < k)
        v = 1.0 / std::sqrt(static_cast<double>(k) * (k + 1));
      else if (i == k)
        v = -static_cast<double>(k) / std::sqrt(static_cast<double>(k) * (k + 1));
      coords[static_cast<std::size_t>(i) * n + (k - 1)] = inv_sqrt2 * v;
    }
  }
  return DiscreteMeasure::uniform(n, std::move(coords));
}

/// Energy of the unit simplex: (1/2) n/(n+1) (1/alpha - 1/beta).
inline double simplex_energy(const Params& p) {
  p.validate();
  const double n = p.n;
  return 0.5 * n / (n + 1.0) * (1.0 / p.alpha - 1.0 / p.beta);
}

/// Cross-polytope measure of radius r: the 2n points +-r e_i, uniform weights.
inline DiscreteMeasure cross_polytope_measure(int n, double r) {
  if (n < 1) throw std::invalid_argument("cross_polytope_measure: n must be >= 1");
  if (!(r > 0.0)) throw std::invalid_argument("cross_polytope_measure: radius must be > 0");
  std::vector<double> coords(static_cast<std::size_t>(2 * n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    coords[static_cast<std::size_t>(2 * i) * n + i] = r;
    coords[static_cast<std::size_t>(2 * i + 1) * n + i] = -r;
  }
  return DiscreteMeasure::uniform(n, std::move(coords));
}

/// Closed-form cross-polytope energy
///   (1/4n) [ ((2n-2) 2^{a/2} + 2^a) r^a/a - ((2n-2) 2^{b/2} + 2^b) r^b/b ].
/// Two distance classes: antipodal pairs at 2r, orthogonal pairs at sqrt(2) r.
inline double cross_polytope_energy(const Params& p, double r) {
  p.validate();
  if (!(r > 0.0)) throw std::invalid_argument("cross_polytope_energy: radius must be > 0");
  if (!(p.beta > 0.0)) throw std::domain_error("cross_polytope_energy: requires beta > 0");
  const double n = p.n, a = p.alpha, b = p.beta;
  const double ca = (2.0 * n - 2.0) * std::exp2(0.5 * a) + std::exp2(a);
  const double cb = (2.0 * n - 2.0) * std::exp2(0.5 * b) + std::exp2(b);
  return (ca * std::pow(r, a) / a - cb * std::pow(r, b) / b) / (4.0 * n);
}

/// Radius minimizing the cross-polytope energy:
///   r* = 2^{-1/2} ((2n-2+2^{b/2}) / (2n-2+2^{a/2}))^{1/(a-b)}.
/// Evaluated in log space so nearly-equal exponents stay finite.
inline double optimal_cross_polytope_radius(const Params& p) {
  p.validate();
  if (!(p.beta > 0.0)) throw std::domain_error("optimal_cross_polytope_radius: requires beta > 0");
  const double n = p.n;
  const double la = std::log(2.0 * n - 2.0 + std::exp2(0.5 * p.alpha));
  const double lb = std::log(2.0 * n - 2.0 + std::exp2(0.5 * p.beta));
  return std::exp(-0.5 * std::log(2.0) + (lb - la) / (p.alpha - p.beta));
}

/// inf_r of the cross-polytope energy:
///   (1/4n) (2n-2+2^{b/2})^{a/(a-b)} / (2n-2+2^{a/2})^{b/(a-b)} (1/a - 1/b).
inline double optimal_cross_polytope_energy(const Params& p) {
  p.validate();
  if (!(p.beta > 0.0)) throw std::domain_error("optimal_cross_polytope_energy: requires beta > 0");
  const double n = p.n, a = p.alpha, b = p.beta;
  const double la = std::log(2.0 * n - 2.0 + std::exp2(0.5 * a));
  const double lb = std::log(2.0 * n - 2.0 + std::exp2(0.5 * b));
  return std::exp((a * lb - b * la) / (a - b)) * (1.0 / a - 1.0 / b) / (4.0 * n);
}

/// Mean of |u - v|^gamma over independent uniform points on the unit sphere
/// in R^n:  2^{n-2+gamma} Gamma(n/2) Gamma((n-1+gamma)/2) /
///          (sqrt(pi) Gamma((2n-2+gamma)/2)).
/// The scaling identity E_shell(r) = (c_a r^a/a - c_b r^b/b)/2 hangs off this.
inline double sphere_mean_power_distance(double gamma, int n) {
  if (n < 2) throw std::domain_error("sphere_mean_power_distance: requires n >= 2");
  if (!(gamma > -(n - 1.0)))
    throw std::domain_error("sphere_mean_power_distance: gamma must exceed -(n-1)");
  const double d = n;
  return std::exp((d - 2.0 + gamma) * std::log(2.0) - 0.5 * std::log(3.14159265358979323846) +
                  log_gamma(0.5 * d) + log_gamma(0.5 * (d - 1.0 + gamma)) -
                  log_gamma(0.5 * (2.0 * d - 2.0 + gamma)));
}

/// Radius of the energy-minimizing spherical shell. Stationarity of
/// r -> (c_alpha r^alpha/alpha - c_beta r^beta/beta)/2 gives
/// r^(alpha-beta) = c_beta/c_alpha, i.e.
///   R = (1/2) (Gamma((n+b-1)/2) Gamma((2n+a-2)/2) /
///             (Gamma((n+a-1)/2) Gamma((2n+b-2)/2)))^{1/(a-b)}.
inline double shell_radius(double alpha, double beta, int n) {
  if (n < 2) throw std::domain_error("shell_radius: requires n >= 2");
  if (!(alpha >= 2.0 && alpha <= 4.0))
    throw std::domain_error("shell_radius: requires alpha in [2, 4]");
  const double d = n;
  const double beta_floor = (-10.0 + 3.0 * alpha + 7.0 * d - alpha * d - d * d) / (d + alpha - 3.0);
  if (!(beta <= 2.0 && beta >= beta_floor && beta < alpha))
    throw std::domain_error("shell_radius: beta outside the shell-minimizer range");
  const double log_ratio = log_gamma(0.5 * (d + beta - 1.0)) + log_gamma(0.5 * (2.0 * d + alpha - 2.0)) -
                           log_gamma(0.5 * (d + alpha - 1.0)) - log_gamma(0.5 * (2.0 * d + beta - 2.0));
  return 0.5 * std::exp(log_ratio / (alpha - beta));
}

/// Minimal energy over all probability measures at beta = 2, n >= 2,
/// alpha in (2, 4) -- attained by a spherical shell:
///   -(2^{n-3}/sqrt(pi)) (Gamma(n/2) Gamma((n+a-1)/2) / Gamma((2n+a-2)/2))
///     (1/2 - 1/a) (Gamma((n+1)/2) Gamma((2n+a-2)/2) /
///                  (Gamma((n+a-1)/2) Gamma(n)))^{a/(a-2)}.
inline double shell_min_energy_beta2(double alpha, int n) {
  if (n < 2) throw std::domain_error("shell_min_energy_beta2: requires n >= 2");
  if (!(alpha > 2.0 && alpha < 4.0))
    throw std::domain_error("shell_min_energy_beta2: requires alpha in (2, 4)");
  const double d = n;
  const double log_pref = (d - 3.0) * std::log(2.0) - 0.5 * std::log(3.14159265358979323846) +
                          log_gamma(0.5 * d) + log_gamma(0.5 * (d + alpha - 1.0)) -
                          log_gamma(0.5 * (2.0 * d + alpha - 2.0));
  const double log_ratio = log_gamma(0.5 * (d + 1.0)) + log_gamma(0.5 * (2.0 * d + alpha - 2.0)) -
                           log_gamma(0.5 * (d + alpha - 1.0)) - log_gamma(d);
  return -std::exp(log_pref + (alpha / (alpha - 2.0)) * log_ratio) * (0.5 - 1.0 / alpha);
}

}  // namespace powerlaw
