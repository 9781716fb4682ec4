#pragma once

#include "powerlaw/kernel.hpp"
#include "powerlaw/measure.hpp"
#include "powerlaw/params.hpp"

namespace powerlaw {

/// Pairwise interaction energy
///   E[mu] = 1/2 sum_i sum_j w_i w_j W(|x_i - x_j|)
/// over all ordered pairs including i = j. This is the brute-force oracle
/// every closed form in this library must match. O(k^2), no acceleration.
inline double energy(const Params& p, const DiscreteMeasure& mu) {
  mu.validate();
  const int k = mu.size();
  double diag_w2 = 0.0;
  for (int i = 0; i < k; ++i) diag_w2 += mu.weights[i] * mu.weights[i];
  // The diagonal evaluates the kernel at r = 0, which rejects beta <= 0.
  double total = 0.5 * diag_w2 * kernel(p, 0.0);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      total += mu.weights[i] * mu.weights[j] * kernel(p, distance(mu.point(i), mu.point(j)));
  return total;
}

/// Second beta-derivative of the energy: same double sum with kernel_d2beta.
/// Non-positive for every valid input.
inline double energy_d2beta(const Params& p, const DiscreteMeasure& mu) {
  mu.validate();
  if (p.beta <= 0.0) throw std::domain_error("energy_d2beta: requires beta > 0");
  const int k = mu.size();
  double total = 0.0;  // diagonal terms vanish by the r = 0 convention
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      total += mu.weights[i] * mu.weights[j] * kernel_d2beta(p, distance(mu.point(i), mu.point(j)));
  return total;
}

}  // namespace powerlaw
