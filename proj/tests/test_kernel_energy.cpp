#include <catch2/catch.hpp>

#include <cmath>

#include "powerlaw/energy.hpp"
#include "powerlaw/kernel.hpp"
#include "test_helpers.hpp"

using namespace powerlaw;
using testutil::rel_close;

TEST_CASE("kernel values") {
  const Params p{4.0, 2.0, 2};
  CHECK(kernel(p, 0.0) == 0.0);
  CHECK(kernel(p, 1.0) == Approx(-0.25).margin(1e-15));
  CHECK(kernel(p, 2.0) == Approx(2.0).margin(1e-12));
  CHECK_THROWS_AS(kernel(p, -1.0), std::domain_error);
  CHECK_THROWS_AS(kernel(Params{1.0, -0.5, 2}, 0.0), std::domain_error);
  // beta <= 0 is allowed at positive distance
  CHECK(std::isfinite(kernel(Params{1.0, -0.5, 2}, 0.7)));
}

TEST_CASE("kernel beta-derivatives") {
  const Params p{4.0, 2.0, 2};
  CHECK(kernel_dbeta(p, 0.0) == 0.0);
  CHECK(kernel_dbeta(p, 1.0) == Approx(0.25).margin(1e-15));
  CHECK(kernel_dbeta(p, std::exp(0.5)) == Approx(0.0).margin(1e-15));

  CHECK(kernel_d2beta(p, 1.0) == Approx(-0.25).margin(1e-15));
  CHECK(kernel_d2beta(p, 0.0) == 0.0);
  const Params p1{4.0, 1.0, 2};
  CHECK(kernel_d2beta(p1, std::exp(1.0)) == Approx(-std::exp(1.0)).epsilon(1e-13));

  CHECK_THROWS_AS(kernel_dbeta(Params{1.0, -0.5, 2}, 1.0), std::domain_error);
  CHECK_THROWS_AS(kernel_d2beta(Params{1.0, -0.5, 2}, 1.0), std::domain_error);
}

TEST_CASE("diameter bound") {
  CHECK(diameter_bound(1.0) == Approx(std::exp(1.0)).epsilon(1e-15));
  CHECK(diameter_bound(2.0) == Approx(std::exp(0.5)).epsilon(1e-15));
  CHECK(diameter_bound(64.0) < diameter_bound(32.0));
  CHECK(diameter_bound(1e6) == Approx(1.0).epsilon(1e-5));
  CHECK_THROWS_AS(diameter_bound(0.0), std::domain_error);
}

TEST_CASE("energy oracle on tiny configurations") {
  const Params p{4.0, 2.0, 1};
  DiscreteMeasure one = DiscreteMeasure::uniform(1, {0.3});
  CHECK(energy(p, one) == 0.0);

  DiscreteMeasure two = DiscreteMeasure::uniform(1, {0.0, 1.0});
  // 4-term double sum: two cross terms at distance 1, two self terms
  CHECK(energy(p, two) == Approx(0.25 * (1.0 / 4.0 - 1.0 / 2.0)).epsilon(1e-15));

  // beta <= 0 is rejected because the diagonal hits r = 0
  CHECK_THROWS_AS(energy(Params{1.0, -0.5, 1}, two), std::domain_error);
}

TEST_CASE("energy d2beta on tiny configurations") {
  const Params p{4.0, 2.0, 1};
  DiscreteMeasure one = DiscreteMeasure::uniform(1, {0.3});
  CHECK(energy_d2beta(p, one) == 0.0);
  DiscreteMeasure two = DiscreteMeasure::uniform(1, {0.0, 1.0});
  CHECK(energy_d2beta(p, two) == Approx(-1.0 / 16.0).epsilon(1e-15));
}

TEST_CASE("oracle symmetry under permutation and isometry") {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng.next() % 3);
    const int k = 2 + static_cast<int>(rng.next() % 6);
    const Params p{3.0 + 2.0 * rng.uniform01(), 1.1 + rng.uniform01(), n};
    auto mu = testutil::random_measure(rng, n, k);
    const double base = energy(p, mu);

    // reverse the (point, weight) pairs
    DiscreteMeasure rev;
    rev.dim = n;
    for (int i = k - 1; i >= 0; --i) {
      for (int d = 0; d < n; ++d) rev.coords.push_back(mu.coords[i * n + d]);
      rev.weights.push_back(mu.weights[i]);
    }
    CHECK(rel_close(energy(p, rev), base, 1e-12));

    // translate
    DiscreteMeasure shifted = mu;
    for (int i = 0; i < k; ++i)
      for (int d = 0; d < n; ++d) shifted.coords[i * n + d] += 0.25 * (d + 1);
    CHECK(rel_close(energy(p, shifted), base, 1e-12));

    // rotate the first two coordinates (orthogonal map)
    DiscreteMeasure rotated = mu;
    const double c = std::cos(0.7), s = std::sin(0.7);
    for (int i = 0; i < k; ++i) {
      const double x = mu.coords[i * n + 0], y = mu.coords[i * n + 1];
      rotated.coords[i * n + 0] = c * x - s * y;
      rotated.coords[i * n + 1] = s * x + c * y;
    }
    CHECK(rel_close(energy(p, rotated), base, 1e-12));
  }
}

TEST_CASE("scaling covariance") {
  SplitMix64 rng(77);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 1 + static_cast<int>(rng.next() % 3);
    const int k = 2 + static_cast<int>(rng.next() % 5);
    const Params p{4.5, 2.2, n};
    auto mu = testutil::random_measure(rng, n, k);
    const double s = 0.3 + 2.0 * rng.uniform01();

    DiscreteMeasure scaled = mu;
    for (auto& c : scaled.coords) c *= s;

    double expected = 0.0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        const double r = distance(mu.point(i), mu.point(j));
        expected += mu.weights[i] * mu.weights[j] *
                    (std::pow(s * r, p.alpha) / p.alpha - std::pow(s * r, p.beta) / p.beta);
      }
    CHECK(rel_close(energy(p, scaled), expected, 1e-12));
  }
}

TEST_CASE("d2beta matches a central second difference in beta") {
  SplitMix64 rng(31415);
  const double h = 1e-4;
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng.next() % 4);
    const int k = 2 + static_cast<int>(rng.next() % 6);
    const double beta = 1.5 + 1.5 * rng.uniform01();
    const double alpha = beta + 0.5 + 3.0 * rng.uniform01();
    auto mu = testutil::random_measure(rng, n, k);
    const Params p{alpha, beta, n};
    const double analytic = energy_d2beta(p, mu);
    const double fd = (energy(Params{alpha, beta + h, n}, mu) - 2.0 * energy(p, mu) +
                       energy(Params{alpha, beta - h, n}, mu)) /
                      (h * h);
    CHECK(rel_close(analytic, fd, 1e-6));
  }
}

TEST_CASE("d2beta is non-positive and obeys the differential inequality") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng.next() % 5);
    const int k = 1 + static_cast<int>(rng.next() % 8);
    const double beta = 0.3 + 3.0 * rng.uniform01();
    const double alpha = beta + 0.2 + 4.0 * rng.uniform01();
    auto mu = testutil::random_measure(rng, n, k);
    const Params p{alpha, beta, n};
    const double d2 = energy_d2beta(p, mu);
    CHECK(d2 <= 0.0);
    // d^2 E / d beta^2 <= E / beta^2
    const double rhs = energy(p, mu) / (beta * beta);
    CHECK(d2 <= rhs + 1e-12 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("measure validation names the violated invariant") {
  DiscreteMeasure bad;
  bad.dim = 2;
  bad.coords = {0.0, 0.0, 1.0, 0.0};
  bad.weights = {0.6, 0.6};
  CHECK_THROWS_WITH(bad.validate(), Catch::Contains("weights sum"));

  DiscreteMeasure empty;
  empty.dim = 2;
  CHECK_THROWS_AS(empty.validate(), std::invalid_argument);
}
