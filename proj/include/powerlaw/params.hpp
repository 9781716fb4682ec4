#pragma once

#include <stdexcept>
#include <string>

namespace powerlaw {

/// Kernel/energy parameters: exponents alpha > beta > -n and ambient dimension n.
struct Params {
  double alpha = 0.0;
  double beta = 0.0;
  int n = 0;

  void validate() const {
    if (n < 1) throw std::invalid_argument("Params: dimension n must be >= 1");
    if (!(alpha > beta)) throw std::invalid_argument("Params: alpha must exceed beta");
    if (!(beta > -static_cast<double>(n)))
      throw std::invalid_argument("Params: beta must exceed -n (integrability)");
  }
};

/// Thrown when a requested (alpha, beta, n) lies outside the range where any
/// exact anchor energy or closed form is available.
struct unsupported_range : std::runtime_error {
  explicit unsupported_range(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace powerlaw
