#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace powerlaw {

/// Weighted point configuration in R^n. Coordinates are stored flat,
/// row-major (point i occupies coords[i*dim .. i*dim+dim)).
struct DiscreteMeasure {
  int dim = 0;
  std::vector<double> coords;
  std::vector<double> weights;

  int size() const { return static_cast<int>(weights.size()); }

  std::span<const double> point(int i) const {
    return {coords.data() + static_cast<std::size_t>(i) * dim, static_cast<std::size_t>(dim)};
  }
  std::span<double> point(int i) {
    return {coords.data() + static_cast<std::size_t>(i) * dim, static_cast<std::size_t>(dim)};
  }

  /// Build a uniformly weighted measure from flat coordinates.
  static DiscreteMeasure uniform(int dim, std::vector<double> flat_coords) {
    DiscreteMeasure mu;
    mu.dim = dim;
    mu.coords = std::move(flat_coords);
    const auto k = mu.coords.size() / static_cast<std::size_t>(dim);
    mu.weights.assign(k, 1.0 / static_cast<double>(k));
    return mu;
  }

  // Invariants: k >= 1, coords shaped k*dim, non-negative weights summing to 1
  // within 1e-12 absolute.
  void validate() const {
    if (dim < 1) throw std::invalid_argument("measure: dimension must be >= 1");
    if (weights.empty()) throw std::invalid_argument("measure: needs at least one point");
    if (coords.size() != weights.size() * static_cast<std::size_t>(dim))
      throw std::invalid_argument("measure: coordinate count does not match k * n");
    double s = 0.0;
    for (double w : weights) {
      if (w < 0.0) throw std::invalid_argument("measure: weights must be non-negative");
      s += w;
    }
    if (std::abs(s - 1.0) > 1e-12)
      throw std::invalid_argument("measure: weights sum to 1 violated");
  }
};

inline double distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t d = 0; d < a.size(); ++d) {
    const double diff = a[d] - b[d];
    s += diff * diff;
  }
  return std::sqrt(s);
}

inline double support_diameter(const DiscreteMeasure& mu) {
  double diam = 0.0;
  for (int i = 0; i < mu.size(); ++i)
    for (int j = i + 1; j < mu.size(); ++j)
      diam = std::max(diam, distance(mu.point(i), mu.point(j)));
  return diam;
}

}  // namespace powerlaw
