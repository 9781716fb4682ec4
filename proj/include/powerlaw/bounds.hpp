#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "powerlaw/bisect.hpp"
#include "powerlaw/closed_forms.hpp"
#include "powerlaw/params.hpp"

namespace powerlaw {

enum class BoundMethod { LinearInterp, StrongConcaveInterp, TwoStep };

inline const char* method_name(BoundMethod m) {
  switch (m) {
    case BoundMethod::LinearInterp: return "LinearInterp";
    case BoundMethod::StrongConcaveInterp: return "StrongConcaveInterp";
    case BoundMethod::TwoStep: return "TwoStep";
  }
  return "?";
}

/// A beta value where the exact minimal energy is known, with provenance.
struct Anchor {
  double beta = 0.0;
  double energy = 0.0;
  std::string source;
};

/// Lower bound on the minimal energy E_alpha(beta) plus how it was obtained.
struct BoundReport {
  double alpha = 0.0;
  double beta = 0.0;
  int n = 0;
  double lower_bound = 0.0;
  BoundMethod method = BoundMethod::LinearInterp;
  std::vector<Anchor> anchors;
  // Intermediate beta1' chosen by the two-step search; NaN otherwise.
  double intermediate_beta = std::numeric_limits<double>::quiet_NaN();
};

namespace detail {
inline void check_interp_order(double alpha, double beta0, double beta1, double beta) {
  if (!(beta0 > 0.0 && beta0 < beta1 && beta1 <= alpha))
    throw std::invalid_argument("interpolation bound: need 0 < beta0 < beta1 <= alpha");
  if (!(beta >= beta0 && beta <= beta1))
    throw std::invalid_argument("interpolation bound: beta must lie in [beta0, beta1]");
}
}  // namespace detail

/// Concave interpolation: E(beta_t) >= (1-t) E(beta0) + t E(beta1) with
/// t = (beta - beta0)/(beta1 - beta0).
inline BoundReport linear_interpolation_bound(double alpha, double beta0, double E0, double beta1,
                                              double E1, double beta, int n,
                                              const std::string& source0 = "anchor",
                                              const std::string& source1 = "anchor") {
  detail::check_interp_order(alpha, beta0, beta1, beta);
  const double t = (beta - beta0) / (beta1 - beta0);
  BoundReport rep;
  rep.alpha = alpha;
  rep.beta = beta;
  rep.n = n;
  rep.method = BoundMethod::LinearInterp;
  rep.lower_bound = (1.0 - t) * E0 + t * E1;
  rep.anchors = {{beta0, E0, source0}, {beta1, E1, source1}};
  return rep;
}

/// Magnitude c of the uniform second-derivative bound d^2 E/dbeta^2 <= -c on
/// [beta0, beta1]:  c = (1/(2 beta1^2)) (n/(n+1)) (1/beta1 - 1/alpha) >= 0.
inline double strong_concavity_parameter(double alpha, double beta1, int n) {
  if (!(beta1 > 0.0 && beta1 <= alpha))
    throw std::invalid_argument("strong_concavity_parameter: need 0 < beta1 <= alpha");
  const double dn = n;
  return (1.0 / (2.0 * beta1 * beta1)) * (dn / (dn + 1.0)) * (1.0 / beta1 - 1.0 / alpha);
}

/// Strong concave interpolation: the linear bound plus
/// t(1-t) (c/2) (beta1 - beta0)^2, which strictly dominates it when c > 0.
inline BoundReport strong_interpolation_bound(double alpha, double beta0, double E0, double beta1,
                                              double E1, double beta, int n,
                                              const std::string& source0 = "anchor",
                                              const std::string& source1 = "anchor") {
  BoundReport rep = linear_interpolation_bound(alpha, beta0, E0, beta1, E1, beta, n, source0, source1);
  const double t = (beta - beta0) / (beta1 - beta0);
  const double c = strong_concavity_parameter(alpha, beta1, n);
  rep.method = BoundMethod::StrongConcaveInterp;
  rep.lower_bound += t * (1.0 - t) * 0.5 * c * (beta1 - beta0) * (beta1 - beta0);
  return rep;
}

/// Two-step bound for the case beta1 = alpha, where the strong term vanishes:
/// pick beta1' in (beta, alpha), bound E(beta1') from below using anchors
/// (beta0, alpha), then bound E(beta) using anchors (beta0, beta1'). Scans
/// beta1' over an interior grid and keeps the best result.
inline BoundReport two_step_bound(double alpha, double beta0, double E0, double beta, int n,
                                  int grid_size, const std::string& source0 = "anchor") {
  if (grid_size < 2) throw std::invalid_argument("two_step_bound: grid_size must be >= 2");
  if (!(beta0 < beta && beta < alpha))
    throw std::invalid_argument("two_step_bound: need beta0 < beta < alpha");
  BoundReport best;
  best.lower_bound = -std::numeric_limits<double>::infinity();
  for (int i = 1; i < grid_size; ++i) {
    const double b1p = beta + i * (alpha - beta) / grid_size;
    const double e1 = strong_interpolation_bound(alpha, beta0, E0, alpha, 0.0, b1p, n).lower_bound;
    BoundReport rep = strong_interpolation_bound(alpha, beta0, E0, b1p, e1, beta, n, source0,
                                                 "interpolated estimate");
    if (rep.lower_bound > best.lower_bound) {
      best = rep;
      best.intermediate_beta = b1p;
    }
  }
  best.method = BoundMethod::TwoStep;
  return best;
}

/// The beta where the unit simplex is the known minimizer for this alpha:
/// the smallest solution of c^alpha/alpha = c^beta/beta with c = 3/2 (n = 1)
/// or c = sqrt(2) (n >= 2). Defined for alpha strictly between 1/log(c) and
/// 3 (n = 1) or 4 (n >= 2).
inline double simplex_anchor_beta(double alpha, int n) {
  if (n < 1) throw std::invalid_argument("simplex_anchor_beta: n must be >= 1");
  const double logc = (n == 1) ? std::log(1.5) : 0.5 * std::log(2.0);
  const double valley = 1.0 / logc;          // unique extremum of c^g / g
  const double upper = (n == 1) ? 3.0 : 4.0;
  if (!(alpha > valley && alpha < upper))
    throw std::domain_error("simplex_anchor_beta: alpha outside the covered range");
  const auto h = [logc](double g) { return std::exp(g * logc) / g; };
  const double target = h(alpha);
  if (alpha - valley < 1e-12 || target <= h(valley)) return alpha;  // double root
  // h decreases on (0, valley]; walk left until it exceeds the target.
  double lo = 0.5 * valley;
  while (h(lo) <= target) lo *= 0.5;
  const auto res = bisect([&](double g) { return h(g) - target; }, lo, valley, 1e-13);
  return res.x;
}

/// Exact minimal energy when the parameters hit a known case:
/// beta = alpha (zero), beta = 2 with n >= 2 and alpha in (2,4) (shell), or
/// beta = beta1(alpha) (unit simplex). Anchor matching uses a 1e-9 absolute
/// tolerance on beta. Returns nothing when the minimum is not known.
inline std::optional<Anchor> known_min_energy_at(double alpha, double beta, int n) {
  constexpr double tol = 1e-9;
  if (std::abs(beta - alpha) <= tol) return Anchor{alpha, 0.0, "zero at beta = alpha"};
  if (n >= 2 && std::abs(beta - 2.0) <= tol && alpha > 2.0 && alpha < 4.0)
    return Anchor{2.0, shell_min_energy_beta2(alpha, n), "spherical shell at beta = 2"};
  try {
    const double b1 = simplex_anchor_beta(alpha, n);
    if (std::abs(beta - b1) <= tol)
      return Anchor{b1, simplex_energy({alpha, b1, n}), "unit simplex at beta1(alpha)"};
  } catch (const std::domain_error&) {
  }
  return std::nullopt;
}

namespace detail {
inline std::vector<Anchor> available_anchors(double alpha, int n) {
  std::vector<Anchor> anchors;
  if (n >= 2 && alpha > 2.0 && alpha < 4.0)
    anchors.push_back({2.0, shell_min_energy_beta2(alpha, n), "spherical shell at beta = 2"});
  try {
    const double b1 = simplex_anchor_beta(alpha, n);
    anchors.push_back({b1, simplex_energy({alpha, b1, n}), "unit simplex at beta1(alpha)"});
  } catch (const std::domain_error&) {
  }
  anchors.push_back({alpha, 0.0, "zero at beta = alpha"});
  return anchors;
}
}  // namespace detail

/// Every bound obtainable from the known anchors at this (alpha, beta, n):
/// linear and strong interpolation over each valid anchor pair, plus the
/// two-step refinement from each anchor below beta.
inline std::vector<BoundReport> all_lower_bounds(double alpha, double beta, int n,
                                                 int grid_size = 64) {
  if (!(beta >= 2.0 && beta <= alpha))
    throw unsupported_range("bounds cover beta in [2, alpha] only");
  const auto anchors = detail::available_anchors(alpha, n);
  std::vector<BoundReport> reports;
  for (const Anchor& a : anchors) {
    if (std::abs(beta - a.beta) <= 1e-9) {
      BoundReport rep;
      rep.alpha = alpha;
      rep.beta = beta;
      rep.n = n;
      rep.method = BoundMethod::LinearInterp;
      rep.lower_bound = a.energy;
      rep.anchors = {a};
      return {rep};  // exact value; interpolation adds nothing
    }
  }
  for (const Anchor& lo : anchors) {
    if (!(lo.beta < beta)) continue;
    for (const Anchor& hi : anchors) {
      if (!(hi.beta > beta)) continue;
      reports.push_back(linear_interpolation_bound(alpha, lo.beta, lo.energy, hi.beta, hi.energy,
                                                   beta, n, lo.source, hi.source));
      reports.push_back(strong_interpolation_bound(alpha, lo.beta, lo.energy, hi.beta, hi.energy,
                                                   beta, n, lo.source, hi.source));
    }
    reports.push_back(two_step_bound(alpha, lo.beta, lo.energy, beta, n, grid_size, lo.source));
  }
  if (reports.empty())
    throw unsupported_range("no known anchors for this (alpha, beta, n)");
  return reports;
}

/// The best (largest) lower bound over all anchor pairs and methods.
inline BoundReport best_lower_bound(double alpha, double beta, int n, int grid_size = 64) {
  const auto reports = all_lower_bounds(alpha, beta, n, grid_size);
  const BoundReport* best = &reports.front();
  for (const auto& r : reports)
    if (r.lower_bound > best->lower_bound) best = &r;
  return *best;
}

}  // namespace powerlaw
