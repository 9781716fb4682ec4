#pragma once

#include <cmath>
#include <vector>

#include "powerlaw/measure.hpp"
#include "powerlaw/params.hpp"
#include "powerlaw/rng.hpp"

namespace testutil {

inline bool rel_close(double a, double b, double tol) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) <= tol * scale;
}

inline powerlaw::DiscreteMeasure random_measure(powerlaw::SplitMix64& rng, int dim, int k,
                                                double box = 1.5, bool uniform_weights = false) {
  std::vector<double> coords;
  coords.reserve(static_cast<std::size_t>(k) * dim);
  for (int i = 0; i < k * dim; ++i) coords.push_back(box * (2.0 * rng.uniform01() - 1.0));
  powerlaw::DiscreteMeasure mu = powerlaw::DiscreteMeasure::uniform(dim, std::move(coords));
  if (!uniform_weights) {
    double total = 0.0;
    for (int i = 0; i < k; ++i) {
      mu.weights[i] = 0.05 + rng.uniform01();
      total += mu.weights[i];
    }
    for (int i = 0; i < k; ++i) mu.weights[i] /= total;
    // Renormalize residual onto the last weight so the sum is exact.
    double s = 0.0;
    for (int i = 0; i + 1 < k; ++i) s += mu.weights[i];
    mu.weights[k - 1] = 1.0 - s;
  }
  return mu;
}

/// Mean of |u-v|^gamma over the unit sphere in R^n by composite Simpson
/// quadrature of the polar-angle integral; independent of the Gamma-function
/// route used by the library.
inline double sphere_mean_power_distance_quadrature(double gamma, int n, int panels = 1 << 16) {
  // c = (Gamma(n/2) / (sqrt(pi) Gamma((n-1)/2))) *
  //     Int_0^pi (2 sin(t/2))^gamma sin^{n-2}(t) dt
  const double pi = 3.14159265358979323846;
  const auto integrand = [&](double t) {
    const double chord = 2.0 * std::sin(0.5 * t);
    double s = std::pow(chord, gamma);
    if (n > 2) s *= std::pow(std::sin(t), n - 2);
    return s;
  };
  const double h = pi / panels;
  double sum = integrand(0.0) + integrand(pi);
  for (int i = 1; i < panels; ++i) sum += (i % 2 ? 4.0 : 2.0) * integrand(i * h);
  const double integral = sum * h / 3.0;
  const double lg_ratio = std::lgamma(0.5 * n) - 0.5 * std::log(pi) - std::lgamma(0.5 * (n - 1));
  return std::exp(lg_ratio) * integral;
}

}  // namespace testutil
