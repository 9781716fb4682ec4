#pragma once

#include <cmath>
#include <stdexcept>

#include "powerlaw/params.hpp"

namespace powerlaw {

/// W(r) = r^alpha/alpha - r^beta/beta. Zero-distance convention: W(0) = 0 for
/// beta > 0; for beta <= 0 the kernel is only defined at r > 0.
inline double kernel(const Params& p, double r) {
  if (r < 0.0) throw std::domain_error("kernel: distance must be non-negative");
  if (r == 0.0) {
    if (p.beta <= 0.0) throw std::domain_error("kernel: r = 0 requires beta > 0");
    return 0.0;
  }
  return std::pow(r, p.alpha) / p.alpha - std::pow(r, p.beta) / p.beta;
}

/// d/dbeta of -r^beta/beta (the kernel's only beta-dependent part):
/// r^beta (1 - log r^beta) / beta^2, extended by 0 at r = 0.
inline double kernel_dbeta(const Params& p, double r) {
  if (p.beta <= 0.0) throw std::domain_error("kernel_dbeta: requires beta > 0");
  if (r < 0.0) throw std::domain_error("kernel_dbeta: distance must be non-negative");
  if (r == 0.0) return 0.0;
  const double lrb = p.beta * std::log(r);
  return std::exp(lrb) * (1.0 - lrb) / (p.beta * p.beta);
}

/// d^2/dbeta^2 of -r^beta/beta: -r^beta ((log r^beta)^2 - 2 log r^beta + 2) / beta^3,
/// extended by 0 at r = 0. Always <= 0 since s^2 - 2s + 2 >= 1.
inline double kernel_d2beta(const Params& p, double r) {
  if (p.beta <= 0.0) throw std::domain_error("kernel_d2beta: requires beta > 0");
  if (r < 0.0) throw std::domain_error("kernel_d2beta: distance must be non-negative");
  if (r == 0.0) return 0.0;
  const double lrb = p.beta * std::log(r);
  return -std::exp(lrb) * (lrb * lrb - 2.0 * lrb + 2.0) / (p.beta * p.beta * p.beta);
}

/// Every global minimizer has support of diameter at most e^{1/beta}.
inline double diameter_bound(double beta) {
  if (beta <= 0.0) throw std::domain_error("diameter_bound: requires beta > 0");
  return std::exp(1.0 / beta);
}

}  // namespace powerlaw
