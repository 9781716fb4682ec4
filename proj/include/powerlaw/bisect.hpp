#pragma once

#include <cmath>
#include <stdexcept>

namespace powerlaw {

struct BisectResult {
  double x = 0.0;
  double fx = 0.0;
  int iterations = 0;
};

/// Bisection for f(x) = 0 on [lo, hi]. Requires f(lo) and f(hi) of opposite
/// sign (an endpoint that is exactly zero is returned directly).
template <class F>
BisectResult bisect(F&& f, double lo, double hi, double xtol = 1e-13, int max_iter = 200) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return {lo, 0.0, 0};
  if (fhi == 0.0) return {hi, 0.0, 0};
  if ((flo > 0.0) == (fhi > 0.0))
    throw std::runtime_error("bisect: root not bracketed");
  int it = 0;
  double mid = 0.5 * (lo + hi), fmid = 0.0;
  while (it < max_iter && (hi - lo) > xtol) {
    mid = 0.5 * (lo + hi);
    fmid = f(mid);
    if (fmid == 0.0) return {mid, 0.0, it};
    if ((fmid > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
      fhi = fmid;
    }
    ++it;
  }
  mid = 0.5 * (lo + hi);
  return {mid, f(mid), it};
}

}  // namespace powerlaw
