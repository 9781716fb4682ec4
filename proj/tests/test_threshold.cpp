#include <catch2/catch.hpp>

#include <cmath>

#include "powerlaw/threshold.hpp"
#include "test_helpers.hpp"

using namespace powerlaw;

TEST_CASE("phi basics") {
  // phi_1 is identically -sqrt(2)
  for (double g : {0.3, 1.0, 2.0, 7.0, 40.0})
    CHECK(phi(1, g) == Approx(-std::sqrt(2.0)).epsilon(1e-14));
  CHECK(phi(2, 2.0) == Approx(-std::sqrt(1.5)).epsilon(1e-14));
  // large-gamma limit is -sqrt(2) in every dimension; the gap decays like
  // log(2n^2/(n+1))/gamma, so the 1e-3 window opens near gamma ~ 5e3
  for (int n = 2; n <= 6; ++n) {
    CHECK(phi(n, 5000.0) == Approx(-std::sqrt(2.0)).margin(1e-3));
    CHECK(std::abs(phi(n, 400.0) + std::sqrt(2.0)) < std::abs(phi(n, 200.0) + std::sqrt(2.0)));
    CHECK(std::abs(phi(n, 200.0) + std::sqrt(2.0)) < 2e-2);
    // asymptotic form: phi_n(g) ~ -sqrt(2) ((n+1)/(2n^2))^{1/g}
    const double asym = -std::sqrt(2.0) * std::exp(std::log((n + 1.0) / (2.0 * n * n)) / 200.0);
    CHECK(phi(n, 200.0) == Approx(asym).epsilon(1e-12));
  }
  for (int n = 1; n <= 6; ++n)
    for (double g = 0.2; g < 12.0; g += 0.37) CHECK(phi(n, g) < 0.0);
  CHECK_THROWS_AS(phi(2, 0.0), std::domain_error);
}

TEST_CASE("f_lower basics") {
  CHECK(f_lower(1, 1.0) == Approx(0.0).margin(1e-15));
  CHECK(f_lower(2, 2.0) == Approx(0.0).margin(1e-14));
  CHECK(f_lower(2, 4.0) == Approx(0.0).margin(1e-14));
  const double expected =
      (2.0 - std::pow(4.0 / 3.0, 1.5) - 2.0 * std::pow(1.0 / 3.0, 1.5)) / 3.0;
  CHECK(f_lower(2, 3.0) == Approx(expected).epsilon(1e-14));
  CHECK_THROWS_AS(f_lower(2, 0.0), std::domain_error);
}

TEST_CASE("auxiliary root and argmax of phi") {
  SECTION("left-edge value of the root function") {
    // g_2 at the left edge 1 + 1/8 equals (2n-1) log(1 + 1/8)
    CHECK(detail::phi_aux_g(2, 1.125) == Approx(3.0 * std::log(1.125)).epsilon(1e-13));
  }
  SECTION("frozen regression values for n = 2") {
    CHECK(phi_aux_root(2) == Approx(1.74642850308747).epsilon(1e-10));
    CHECK(phi_argmax(2) == Approx(2.81975139042860).epsilon(1e-10));
  }
  for (int n = 2; n <= 6; ++n) {
    const double t0 = phi_aux_root(n);
    CHECK(std::abs(detail::phi_aux_g(n, t0)) < 1e-12);
    // concavity at the root: g'' = -BC / (t(Bt - C)) < 0
    const double B = 2.0 * n * n / (n + 1.0);
    const double C = 2.0 * n - 2.0;
    CHECK(-B * C / (t0 * (B * t0 - C)) < 0.0);
  }
  SECTION("argmax against an independent grid scan") {
    for (int n = 2; n <= 6; ++n) {
      const double g0 = phi_argmax(n);
      double best_g = 0.01, best_val = -1e300;
      for (double g = 0.01; g <= 50.0; g += 1e-4) {
        const double v = phi(n, g);
        if (v > best_val) {
          best_val = v;
          best_g = g;
        }
      }
      CHECK(std::abs(g0 - best_g) < 1e-3);
    }
  }
  SECTION("derivative changes sign across the argmax") {
    for (int n = 2; n <= 4; ++n) {
      const double g0 = phi_argmax(n);
      const double h = 1e-6;
      const double left = (phi(n, g0 - 0.1 + h) - phi(n, g0 - 0.1 - h)) / (2.0 * h);
      const double right = (phi(n, g0 + 0.1 + h) - phi(n, g0 + 0.1 - h)) / (2.0 * h);
      CHECK(left > 0.0);
      CHECK(right < 0.0);
    }
    CHECK(phi_argmax(2) > 2.0);
  }
  CHECK_THROWS_AS(phi_aux_root(1), std::invalid_argument);
}

TEST_CASE("phi unimodality certificate") {
  for (int n = 2; n <= 6; ++n) {
    const double g0 = phi_argmax(n);
    const double h = 1e-2;
    for (double g = 0.1; g + h < 4.0 * g0; g += h) {
      const double diff = phi(n, g + h) - phi(n, g);
      if (g + h < g0 - h)
        CHECK(diff > 0.0);
      else if (g > g0 + h)
        CHECK(diff < 0.0);
    }
  }
}

TEST_CASE("threshold from phi") {
  SECTION("reproduces the n = 2, beta = 2.5 value") {
    const auto res = threshold_from_phi(2, 2.5);
    CHECK(res.alpha_star == Approx(3.18).margin(0.01));
    // frozen high-precision regression value
    CHECK(res.alpha_star == Approx(3.18255832278174).epsilon(1e-10));
    CHECK(res.residual < 1e-10);
    CHECK_FALSE(res.degenerate);
  }
  SECTION("exactly 4 at beta = 2 for every dimension") {
    // phi_n(2) = -sqrt((n+1)/n) = phi_n(4) by direct algebra
    for (int n = 2; n <= 6; ++n) {
      const auto res = threshold_from_phi(n, 2.0);
      CHECK(res.alpha_star == Approx(4.0).margin(1e-9));
      CHECK(res.alpha_star >= 2.0);
    }
  }
  SECTION("degenerates at and beyond the argmax") {
    const double g0 = phi_argmax(2);
    CHECK(threshold_from_phi(2, g0).alpha_star == Approx(g0).epsilon(1e-12));
    CHECK(threshold_from_phi(2, g0).degenerate);
    CHECK(threshold_from_phi(2, 3.5).alpha_star == 3.5);
  }
  SECTION("n = 1 degenerates because phi_1 is constant") {
    const auto res = threshold_from_phi(1, 2.5);
    CHECK(res.alpha_star == 2.5);
    CHECK(res.degenerate);
  }
  CHECK_THROWS_AS(threshold_from_phi(2, 1.5), std::invalid_argument);
}

TEST_CASE("threshold from f") {
  SECTION("reproduces the n = 2, beta = 2.5 value") {
    const auto res = threshold_from_f(2, 2.5);
    CHECK(res.alpha_star == Approx(3.07).margin(0.01));
    // frozen high-precision regression value
    CHECK(res.alpha_star == Approx(3.06817752782930).epsilon(1e-10));
    CHECK(res.residual < 1e-10);
  }
  SECTION("exactly 4 at beta = 2 for every dimension") {
    for (int n = 2; n <= 6; ++n)
      CHECK(threshold_from_f(n, 2.0).alpha_star == Approx(4.0).margin(1e-9));
  }
  SECTION("degenerate at the argmax and for n = 1 past its peak") {
    const double peak = detail::f_lower_argmax(2);
    CHECK(threshold_from_f(2, peak).alpha_star == Approx(peak).epsilon(1e-12));
    // f_1 peaks below 2.5, so the 1-D bound at beta = 2.5 degenerates
    const auto res1 = threshold_from_f(1, 2.5);
    CHECK(res1.alpha_star == 2.5);
    CHECK(res1.degenerate);
    // but not at beta = 2.0, where 2^{-1} - 2^{-t} = t/8 pins the root at 3
    const auto res2 = threshold_from_f(1, 2.0);
    CHECK_FALSE(res2.degenerate);
    CHECK(res2.alpha_star == Approx(3.0).margin(1e-9));
  }
}

TEST_CASE("threshold residual invariant") {
  for (double beta = 2.0; beta <= 2.8; beta += 0.1) {
    const auto star = threshold_from_phi(2, beta);
    if (!star.degenerate)
      CHECK(std::abs(phi(2, star.alpha_star) - phi(2, beta)) < 1e-10);
    const auto fres = threshold_from_f(2, beta);
    if (!fres.degenerate)
      CHECK(std::abs(f_lower(2, fres.alpha_star) - f_lower(2, beta)) < 1e-10);
  }
}

TEST_CASE("sign relation between phi and the energy gap") {
  SECTION("one dimension ties exactly") {
    SplitMix64 rng(8);
    for (int trial = 0; trial < 50; ++trial) {
      const double beta = 0.5 + 5.0 * rng.uniform01();
      const double alpha = beta + 0.1 + 5.0 * rng.uniform01();
      const Params p{alpha, beta, 1};
      CHECK(simplex_vs_cross_polytope(p) == Competition::SimplexAtLeastTied);
      CHECK(std::abs(phi(1, alpha) - phi(1, beta)) <= 1e-12);
      CHECK(std::abs(optimal_cross_polytope_energy(p) - simplex_energy(p)) <= 1e-12);
    }
  }
  SECTION("known sides of the n = 2 threshold at beta = 2.5") {
    CHECK(simplex_vs_cross_polytope(Params{3.0, 2.5, 2}) == Competition::SimplexBeaten);
    CHECK(simplex_vs_cross_polytope(Params{3.5, 2.5, 2}) == Competition::SimplexAtLeastTied);
  }
  SECTION("alpha below the phi threshold implies the simplex is beaten") {
    for (double beta : {2.0, 2.2, 2.5}) {
      const auto star = threshold_from_phi(2, beta);
      for (double frac : {0.15, 0.5, 0.85}) {
        const double alpha = beta + frac * (star.alpha_star - beta);
        if (alpha <= beta + 1e-6) continue;
        CHECK(simplex_vs_cross_polytope(Params{alpha, beta, 2}) == Competition::SimplexBeaten);
      }
    }
  }
  SECTION("random sample has no violations") {
    SplitMix64 rng(123456);
    for (int trial = 0; trial < 10000; ++trial) {
      const int n = 1 + static_cast<int>(rng.next() % 5);
      const double beta = 1e-3 + (8.0 - 2e-3) * rng.uniform01();
      const double alpha = beta + 1e-6 + (12.0 - beta - 1e-6) * rng.uniform01();
      CHECK_NOTHROW(simplex_vs_cross_polytope(Params{alpha, beta, n}));
    }
  }
}

TEST_CASE("threshold comparison table") {
  SECTION("single reference row") {
    const auto rows = threshold_comparison(2, {2.5});
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].alpha_star_phi == Approx(3.18).margin(0.01));
    CHECK(rows[0].alpha_star_f == Approx(3.07).margin(0.01));
    CHECK(rows[0].delta == Approx(0.11).margin(0.02));
  }
  SECTION("phi-based bound dominates wherever it is non-degenerate") {
    std::vector<double> grid;
    for (int i = 0; i <= 200; ++i) grid.push_back(2.0 + 0.01 * i);
    const auto rows = threshold_comparison(2, grid);
    REQUIRE(rows.size() == 201);
    for (const auto& row : rows) {
      if (row.alpha_star_phi > row.beta + 1e-9)
        CHECK(row.alpha_star_phi >= row.alpha_star_f - 1e-9);
      if (row.alpha_star_phi == row.beta && row.alpha_star_f == row.beta)
        CHECK(row.delta == 0.0);
    }
  }
  CHECK_THROWS_AS(threshold_comparison(1, {2.5}), std::invalid_argument);
}
