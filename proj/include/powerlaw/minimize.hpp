#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "powerlaw/bounds.hpp"
#include "powerlaw/cluster.hpp"
#include "powerlaw/energy.hpp"
#include "powerlaw/measure.hpp"
#include "powerlaw/params.hpp"
#include "powerlaw/rng.hpp"

namespace powerlaw {

/// Gradient of the pairwise energy in the positions:
///   dE/dx_i = sum_{j != i} w_i w_j (r^{alpha-2} - r^{beta-2}) (x_i - x_j),
/// with coincident pairs contributing zero. Needs beta > 1 so the pair force
/// extends continuously through r = 0.
inline std::vector<double> energy_gradient(const Params& p, const DiscreteMeasure& mu) {
  mu.validate();
  if (!(p.beta > 1.0)) throw std::domain_error("energy_gradient: requires beta > 1");
  const int k = mu.size(), dim = mu.dim;
  std::vector<double> grad(static_cast<std::size_t>(k) * dim, 0.0);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      double r2 = 0.0;
      for (int d = 0; d < dim; ++d) {
        const double diff = mu.coords[static_cast<std::size_t>(i) * dim + d] -
                            mu.coords[static_cast<std::size_t>(j) * dim + d];
        r2 += diff * diff;
      }
      if (r2 == 0.0) continue;
      const double lr2 = std::log(r2);
      const double coef = mu.weights[i] * mu.weights[j] *
                          (std::exp(0.5 * (p.alpha - 2.0) * lr2) - std::exp(0.5 * (p.beta - 2.0) * lr2));
      for (int d = 0; d < dim; ++d) {
        const double t = coef * (mu.coords[static_cast<std::size_t>(i) * dim + d] -
                                 mu.coords[static_cast<std::size_t>(j) * dim + d]);
        grad[static_cast<std::size_t>(i) * dim + d] += t;
        grad[static_cast<std::size_t>(j) * dim + d] -= t;
      }
    }
  }
  return grad;
}

struct MinimizeConfig {
  Params params;
  int k = 1;
  int restarts = 8;
  int max_iters = 5000;
  double step_init = 0.1;
  double grad_tol = 1e-10;
  std::uint64_t seed = 0;
  bool optimize_weights = false;
  double cluster_eps = 0.0;  // <= 0 means the default 1e-3 * diameter_bound(beta)

  void validate() const {
    params.validate();
    if (!(params.beta > 1.0)) throw std::invalid_argument("minimize: requires beta > 1");
    if (k < 1) throw std::invalid_argument("minimize: k must be >= 1");
    if (restarts < 1) throw std::invalid_argument("minimize: restarts must be >= 1");
    if (max_iters < 0) throw std::invalid_argument("minimize: max_iters must be >= 0");
    if (!(step_init > 0.0)) throw std::invalid_argument("minimize: step_init must be > 0");
    if (!(grad_tol > 0.0)) throw std::invalid_argument("minimize: grad_tol must be > 0");
  }

  double effective_cluster_eps() const {
    return cluster_eps > 0.0 ? cluster_eps : 1e-3 * diameter_bound(params.beta);
  }
};

struct MinimizeResult {
  DiscreteMeasure measure;
  double energy = 0.0;
  double initial_energy = 0.0;
  double grad_norm = 0.0;
  int iterations = 0;
  int restart_index = 0;
  ClusterSummary clusters;
  // Soft check: global minimizers have support diameter <= e^{1/beta}; a
  // converged run sitting beyond that (plus slack) is flagged, not rejected.
  bool diameter_warning = false;
};

namespace detail {

// Flat-buffer energy/gradient used inside the descent loop. Same math as the
// oracle in energy.hpp, arranged to cost one log and two exp per pair.
inline double flat_energy(const Params& p, const std::vector<double>& x,
                          const std::vector<double>& w, int dim) {
  const int k = static_cast<int>(w.size());
  double e = 0.0;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      double r2 = 0.0;
      for (int d = 0; d < dim; ++d) {
        const double diff = x[static_cast<std::size_t>(i) * dim + d] -
                            x[static_cast<std::size_t>(j) * dim + d];
        r2 += diff * diff;
      }
      if (r2 == 0.0) continue;
      const double lr2 = std::log(r2);
      e += w[i] * w[j] *
           (std::exp(0.5 * p.alpha * lr2) / p.alpha - std::exp(0.5 * p.beta * lr2) / p.beta);
    }
  }
  return e;
}

inline void flat_gradient(const Params& p, const std::vector<double>& x,
                          const std::vector<double>& w, int dim, std::vector<double>& grad) {
  const int k = static_cast<int>(w.size());
  grad.assign(x.size(), 0.0);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      double r2 = 0.0;
      for (int d = 0; d < dim; ++d) {
        const double diff = x[static_cast<std::size_t>(i) * dim + d] -
                            x[static_cast<std::size_t>(j) * dim + d];
        r2 += diff * diff;
      }
      if (r2 == 0.0) continue;
      const double lr2 = std::log(r2);
      const double coef =
          w[i] * w[j] *
          (std::exp(0.5 * (p.alpha - 2.0) * lr2) - std::exp(0.5 * (p.beta - 2.0) * lr2));
      for (int d = 0; d < dim; ++d) {
        const double t = coef * (x[static_cast<std::size_t>(i) * dim + d] -
                                 x[static_cast<std::size_t>(j) * dim + d]);
        grad[static_cast<std::size_t>(i) * dim + d] += t;
        grad[static_cast<std::size_t>(j) * dim + d] -= t;
      }
    }
  }
}

// Pair potential felt by each point: V_i = sum_j w_j W(r_ij).
inline void point_potentials(const Params& p, const std::vector<double>& x,
                             const std::vector<double>& w, int dim, std::vector<double>& pot) {
  const int k = static_cast<int>(w.size());
  pot.assign(w.size(), 0.0);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      double r2 = 0.0;
      for (int d = 0; d < dim; ++d) {
        const double diff = x[static_cast<std::size_t>(i) * dim + d] -
                            x[static_cast<std::size_t>(j) * dim + d];
        r2 += diff * diff;
      }
      if (r2 == 0.0) continue;
      const double lr2 = std::log(r2);
      const double wval =
          std::exp(0.5 * p.alpha * lr2) / p.alpha - std::exp(0.5 * p.beta * lr2) / p.beta;
      pot[i] += w[j] * wval;
      pot[j] += w[i] * wval;
    }
  }
}

struct DescentOutcome {
  std::vector<double> x;
  std::vector<double> w;
  double energy = 0.0;
  double initial_energy = 0.0;
  double grad_norm = 0.0;
  int iterations = 0;
};

inline DescentOutcome descend(const MinimizeConfig& cfg, std::uint64_t seed) {
  const Params& p = cfg.params;
  const int dim = p.n;
  SplitMix64 rng(seed);
  DescentOutcome out;
  out.x.reserve(static_cast<std::size_t>(cfg.k) * dim);
  const double radius = diameter_bound(p.beta);
  for (int i = 0; i < cfg.k; ++i) sample_in_ball(rng, dim, radius, out.x);
  out.w.assign(cfg.k, 1.0 / cfg.k);

  double energy_now = flat_energy(p, out.x, out.w, dim);
  out.initial_energy = energy_now;
  double step = cfg.step_init;
  double weight_step = 1.0;
  std::vector<double> grad, trial(out.x.size()), pot, trial_w(out.w.size());
  int iter = 0;
  double grad_norm = 0.0;
  while (iter < cfg.max_iters) {
    flat_gradient(p, out.x, out.w, dim, grad);
    grad_norm = 0.0;
    for (double g : grad) grad_norm += g * g;
    grad_norm = std::sqrt(grad_norm);
    if (grad_norm <= cfg.grad_tol) break;
    // Backtracking: halve until the energy decreases, then open back up.
    double s = step;
    bool accepted = false;
    while (s >= 1e-18) {
      for (std::size_t m = 0; m < out.x.size(); ++m) trial[m] = out.x[m] - s * grad[m];
      const double trial_energy = flat_energy(p, trial, out.w, dim);
      if (trial_energy < energy_now) {
        out.x.swap(trial);
        energy_now = trial_energy;
        step = 1.5 * s;
        accepted = true;
        break;
      }
      s *= 0.5;
    }
    ++iter;
    if (!accepted) break;  // step underflow: no further descent possible

    if (cfg.optimize_weights && cfg.k > 1) {
      point_potentials(p, out.x, out.w, dim, pot);
      double pot_min = pot[0];
      for (double v : pot) pot_min = std::min(pot_min, v);
      double eta = weight_step;
      while (eta >= 1e-18) {
        double total = 0.0;
        for (int i = 0; i < cfg.k; ++i) {
          trial_w[i] = out.w[i] * std::exp(-eta * (pot[i] - pot_min));
          total += trial_w[i];
        }
        for (int i = 0; i < cfg.k; ++i) trial_w[i] /= total;
        const double trial_energy = flat_energy(p, out.x, trial_w, dim);
        if (trial_energy < energy_now) {
          out.w.swap(trial_w);
          energy_now = trial_energy;
          weight_step = 1.5 * eta;
          break;
        }
        eta *= 0.5;
      }
    }
  }
  if (iter == cfg.max_iters) {  // norm above is one accepted step stale
    flat_gradient(p, out.x, out.w, dim, grad);
    grad_norm = 0.0;
    for (double g : grad) grad_norm += g * g;
    grad_norm = std::sqrt(grad_norm);
  }
  out.energy = energy_now;
  out.grad_norm = grad_norm;
  out.iterations = iter;
  return out;
}

}  // namespace detail

/// Multi-restart gradient descent over k-point configurations. Restarts are
/// independent streams derived from the master seed; the lowest energy wins,
/// with ties resolved toward the lowest restart index, so the result is a
/// deterministic function of the config.
inline MinimizeResult minimize(const MinimizeConfig& cfg) {
  cfg.validate();
  detail::DescentOutcome best;
  int best_restart = -1;
  for (int r = 0; r < cfg.restarts; ++r) {
    auto outcome = detail::descend(cfg, stream_seed(cfg.seed, static_cast<std::uint64_t>(r)));
    if (best_restart < 0 || outcome.energy < best.energy) {
      best = std::move(outcome);
      best_restart = r;
    }
  }
  MinimizeResult result;
  result.measure.dim = cfg.params.n;
  result.measure.coords = std::move(best.x);
  result.measure.weights = std::move(best.w);
  result.energy = energy(cfg.params, result.measure);  // oracle-evaluated
  result.initial_energy = best.initial_energy;
  result.grad_norm = best.grad_norm;
  result.iterations = best.iterations;
  result.restart_index = best_restart;
  result.clusters = cluster_support(result.measure, cfg.effective_cluster_eps());
  result.diameter_warning =
      support_diameter(result.measure) > diameter_bound(cfg.params.beta) + 0.05;
  return result;
}

/// Support-size search: doubles k from 2(n+1) until the minimal energy stops
/// improving by more than improve_tol, never exceeding k_cap. Restart budget
/// shrinks (floor 4) as k doubles to keep runs desk-scale.
struct AdaptiveMinimizeResult {
  MinimizeResult result;
  int k_used = 0;
};

inline AdaptiveMinimizeResult adaptive_minimize(const MinimizeConfig& base, int k_cap = 512,
                                                double improve_tol = 1e-8) {
  MinimizeConfig cfg = base;
  cfg.k = 2 * (base.params.n + 1);
  AdaptiveMinimizeResult out;
  double prev_energy = std::numeric_limits<double>::infinity();
  int level = 0;
  while (true) {
    cfg.restarts = std::max(4, base.restarts >> level);
    MinimizeResult res = minimize(cfg);
    if (out.k_used == 0 || res.energy < out.result.energy) {
      out.result = std::move(res);
      out.k_used = cfg.k;
    }
    const double gained = prev_energy - out.result.energy;
    prev_energy = std::min(prev_energy, out.result.energy);
    if (level > 0 && gained <= improve_tol) break;
    if (2 * cfg.k > k_cap) break;
    cfg.k *= 2;
    ++level;
  }
  return out;
}

struct ShellDiagnostics {
  std::vector<double> centroid;
  double radial_mean = 0.0;
  double radial_std = 0.0;
};

/// Mass-weighted centroid plus mean/std of the radial distances about it.
inline ShellDiagnostics shell_diagnostics(const DiscreteMeasure& mu) {
  mu.validate();
  ShellDiagnostics diag;
  diag.centroid.assign(mu.dim, 0.0);
  const int k = mu.size();
  for (int i = 0; i < k; ++i)
    for (int d = 0; d < mu.dim; ++d)
      diag.centroid[d] += mu.weights[i] * mu.coords[static_cast<std::size_t>(i) * mu.dim + d];
  std::vector<double> radii(k);
  double mean = 0.0;
  for (int i = 0; i < k; ++i) {
    radii[i] = distance(mu.point(i), {diag.centroid.data(), diag.centroid.size()});
    mean += mu.weights[i] * radii[i];
  }
  double var = 0.0;  // two-pass form: exact zero spread stays zero
  for (int i = 0; i < k; ++i) var += mu.weights[i] * (radii[i] - mean) * (radii[i] - mean);
  diag.radial_mean = mean;
  diag.radial_std = std::sqrt(var);
  return diag;
}

struct SimplexDiagnostics {
  int cluster_count = 0;
  double max_unit_distance_deviation = 0.0;
};

/// Clusters the configuration and reports how far the representative pairwise
/// distances sit from 1.
inline SimplexDiagnostics simplex_diagnostics(const DiscreteMeasure& mu, double eps) {
  const ClusterSummary cl = cluster_support(mu, eps);
  SimplexDiagnostics diag;
  diag.cluster_count = cl.count;
  for (int a = 0; a < cl.count; ++a)
    for (int b = a + 1; b < cl.count; ++b)
      diag.max_unit_distance_deviation =
          std::max(diag.max_unit_distance_deviation,
                   std::abs(distance(cl.representative(a), cl.representative(b)) - 1.0));
  return diag;
}

struct SweepRow {
  double beta = 0.0;
  int k_used = 0;
  int cluster_count = 0;
  double energy = 0.0;
  double lower_bound = std::numeric_limits<double>::quiet_NaN();
  double radial_std = 0.0;
};

/// For each beta, estimates the minimizer with adaptive k and reports the
/// support-size estimate next to the best known lower bound.
inline std::vector<SweepRow> cardinality_sweep(double alpha, int n,
                                               const std::vector<double>& betas,
                                               const MinimizeConfig& base, int k_cap = 512) {
  const double alpha_hi = (n == 1) ? 3.0 : 4.0;
  if (!(alpha > 2.0 && alpha < alpha_hi))
    throw std::invalid_argument("cardinality_sweep: alpha outside the cascade range");
  std::vector<SweepRow> rows;
  for (double beta : betas) {
    if (!(beta > 2.0 && beta < alpha))
      throw std::invalid_argument("cardinality_sweep: betas must lie in (2, alpha)");
    MinimizeConfig cfg = base;
    cfg.params = Params{alpha, beta, n};
    auto adaptive = adaptive_minimize(cfg, k_cap);
    SweepRow row;
    row.beta = beta;
    row.k_used = adaptive.k_used;
    row.cluster_count = adaptive.result.clusters.count;
    row.energy = adaptive.result.energy;
    try {
      row.lower_bound = best_lower_bound(alpha, beta, n).lower_bound;
    } catch (const unsupported_range&) {
    }
    row.radial_std = shell_diagnostics(adaptive.result.measure).radial_std;
    rows.push_back(row);
  }
  return rows;
}

struct ConcavityReport {
  std::array<double, 3> betas{};
  std::array<double, 3> energies{};
  std::array<int, 3> k_used{};
  double midpoint_slack = 0.0;       // E(b2) - (E(b1) + E(b3))/2, expected >= -tol
  double monotone_step_low = 0.0;    // E(b2) - E(b1), expected >= -tol
  double monotone_step_high = 0.0;   // E(b3) - E(b2), expected >= -tol
  double strong_midpoint_gain = 0.0; // (c/16)(b3 - b1)^2 from the concavity parameter
};

/// Estimates the minimal energy at three beta values and reports the
/// midpoint-concavity slack and monotonicity gaps.
inline ConcavityReport concavity_probe(double alpha, int n, const std::array<double, 3>& betas,
                                       const MinimizeConfig& base, int k_cap = 512) {
  if (!(betas[0] > 0.0 && betas[0] <= betas[1] && betas[1] <= betas[2] && betas[2] <= alpha))
    throw std::invalid_argument("concavity_probe: need 0 < b1 <= b2 <= b3 <= alpha");
  if (std::abs(betas[1] - 0.5 * (betas[0] + betas[2])) > 1e-9)
    throw std::invalid_argument("concavity_probe: middle beta must be the midpoint");
  ConcavityReport rep;
  rep.betas = betas;
  for (int i = 0; i < 3; ++i) {
    MinimizeConfig cfg = base;
    cfg.params = Params{alpha, betas[i], n};
    auto adaptive = adaptive_minimize(cfg, k_cap);
    rep.energies[i] = adaptive.result.energy;
    rep.k_used[i] = adaptive.k_used;
  }
  rep.midpoint_slack = rep.energies[1] - 0.5 * (rep.energies[0] + rep.energies[2]);
  rep.monotone_step_low = rep.energies[1] - rep.energies[0];
  rep.monotone_step_high = rep.energies[2] - rep.energies[1];
  const double c = strong_concavity_parameter(alpha, betas[2], n);
  rep.strong_midpoint_gain = c / 16.0 * (betas[2] - betas[0]) * (betas[2] - betas[0]);
  return rep;
}

}  // namespace powerlaw
