#pragma once

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "powerlaw/measure.hpp"

namespace powerlaw {

/// Support estimate of a configuration: connected components under
/// single-linkage at distance eps, with mass-weighted centroids.
struct ClusterSummary {
  int dim = 0;
  int count = 0;
  std::vector<double> representatives;  // flat, count * dim
  std::vector<double> masses;
  double max_intra_radius = 0.0;

  std::span<const double> representative(int c) const {
    return {representatives.data() + static_cast<std::size_t>(c) * dim,
            static_cast<std::size_t>(dim)};
  }
};

/// Single-linkage clustering: points i, j are connected when
/// |x_i - x_j| <= eps; components become clusters.
inline ClusterSummary cluster_support(const DiscreteMeasure& mu, double eps) {
  mu.validate();
  if (!(eps > 0.0)) throw std::invalid_argument("cluster_support: eps must be > 0");
  const int k = mu.size();
  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<int> rank_(k, 0);
  const auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  const auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  };
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (distance(mu.point(i), mu.point(j)) <= eps) unite(i, j);

  std::vector<int> root_to_cluster(k, -1);
  ClusterSummary out;
  out.dim = mu.dim;
  for (int i = 0; i < k; ++i) {
    const int r = find(i);
    if (root_to_cluster[r] < 0) {
      root_to_cluster[r] = out.count++;
      out.masses.push_back(0.0);
      out.representatives.insert(out.representatives.end(), mu.dim, 0.0);
    }
    const int c = root_to_cluster[r];
    out.masses[c] += mu.weights[i];
    for (int d = 0; d < mu.dim; ++d)
      out.representatives[static_cast<std::size_t>(c) * mu.dim + d] +=
          mu.weights[i] * mu.coords[static_cast<std::size_t>(i) * mu.dim + d];
  }
  for (int c = 0; c < out.count; ++c) {
    const double m = out.masses[c];
    if (m > 0.0)
      for (int d = 0; d < mu.dim; ++d)
        out.representatives[static_cast<std::size_t>(c) * mu.dim + d] /= m;
  }
  for (int i = 0; i < k; ++i) {
    const int c = root_to_cluster[find(i)];
    const double r = distance(mu.point(i), out.representative(c));
    if (r > out.max_intra_radius) out.max_intra_radius = r;
  }
  return out;
}

}  // namespace powerlaw
