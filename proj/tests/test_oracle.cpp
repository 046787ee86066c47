#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sextic/oracle.hpp"

using namespace sextic;

namespace {

Potential harmonic() {
  Potential v;
  v.v2 = 1.0;
  return v;
}

}  // namespace

TEST_CASE("grid validation") {
  CHECK_NOTHROW(oracle::RadialGrid{1e-4, 5.0, 1e-3}.validate());
  CHECK_THROWS_AS((oracle::RadialGrid{0.0, 5.0, 1e-3}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((oracle::RadialGrid{2.0, 1.0, 1e-3}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((oracle::RadialGrid{1e-4, 1.0, 0.1}.validate()), std::invalid_argument);
  CHECK(oracle::RadialGrid{0.0001, 1.0001, 0.01}.size() == 101);
}

TEST_CASE("odd harmonic levels") {
  const Potential v = harmonic();
  const oracle::RadialGrid grid{1e-4, 8.0, 2e-3};
  int k = 0;
  for (double e : {3.0, 7.0, 11.0}) {
    CAPTURE(e);
    const double got = oracle::shoot_eigenvalue(v, {}, {e - 1.0, e + 1.0}, grid, {1.0}, 1e-12);
    CHECK(std::abs(got - e) <= 1e-6);
    CHECK(oracle::numerov_integrate(v, {}, got, grid, {1.0}).node_count == k);
    ++k;
  }
}

TEST_CASE("fourth-order convergence") {
  const Potential v = harmonic();
  double prev = 0.0;
  for (double h : {0.032, 0.016, 0.008}) {
    const double err = std::abs(oracle::shoot_eigenvalue(v, {}, {2.0, 4.0}, {1e-4, 8.0, h}, {1.0}, 1e-14) - 3.0);
    if (prev > 0.0) {
      CHECK(prev / err >= 12.0);
      CHECK(prev / err <= 20.0);
    }
    prev = err;
  }
}

TEST_CASE("mismatch and tail") {
  const Potential v = harmonic();
  const oracle::RadialGrid grid{1e-4, 6.0, 1e-3};
  const auto below = oracle::numerov_integrate(v, {}, 2.9, grid, {1.0});
  const auto above = oracle::numerov_integrate(v, {}, 3.1, grid, {1.0});
  CHECK(below.mismatch * above.mismatch < 0.0);
  CHECK(below.r.size() == grid.size());
  CHECK(below.psi[0] == doctest::Approx(1e-4).epsilon(1e-6));
  CHECK(below.log_deriv_at_rmax > 0.0);
}

TEST_CASE("rescaling keeps large tails finite") {
  Potential v;
  v.v6 = 1.0;
  const auto res = oracle::numerov_integrate(v, {}, 0.0, {1e-4, 12.0, 1e-3}, {1.0});
  CHECK(res.log_scale > 0.0);
  for (double x : res.psi) CHECK(std::isfinite(x));
}

TEST_CASE("shooting without a sign change") {
  CHECK_THROWS_AS(oracle::shoot_eigenvalue(harmonic(), {}, {3.5, 4.5}, {1e-4, 8.0, 2e-3}, {1.0}),
                  oracle::NoSignChangeError);
}

TEST_CASE("residual of the harmonic ground state") {
  const Potential v = harmonic();
  const Sampler psi = [](double r) { return r * std::exp(-r * r / 2.0); };
  const oracle::RadialGrid grid{0.05, 5.0, 1e-2};
  CHECK(oracle::ode_residual(psi, v, {}, 3.0, grid) <= 1e-8);
  CHECK(oracle::ode_residual(psi, v, {}, 3.1, grid) > 1e-3);
}

TEST_CASE("regular power and decay radius") {
  Potential v;
  v.v_m2 = 3.75;
  CHECK(oracle::regular_power(v, {}) == doctest::Approx(2.5));
  v.v_m2 = -1.0;
  CHECK_THROWS_AS(oracle::regular_power(v, {}), std::domain_error);
  const double r = oracle::decay_radius(harmonic(), {}, 3.0);
  CHECK(r > std::sqrt(3.0));
  CHECK(r < 10.0);
}
