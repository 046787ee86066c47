#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "sextic/oracle.hpp"
#include "sextic/qes.hpp"

using namespace sextic;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

int sign_changes(const std::vector<double>& poly) {
  int count = 0;
  double prev = 0.0;
  for (double x = 1e-3; x < 40.0; x += 1e-3) {
    double v = 0.0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) v = v * x + *it;
    if (prev != 0.0 && (v < 0.0) != (prev < 0.0)) ++count;
    prev = v;
  }
  return count;
}

}  // namespace

TEST_CASE("potential coefficients") {
  CHECK(qes_potential({1.0, 0.0, 0.75, 0}).v_m2 == doctest::Approx(0.0).scale(1.0));
  const Potential v = qes_potential({1.0, 0.0, 1.0, 0});
  CHECK(v.v2 == doctest::Approx(-6.0));
  CHECK(v.v4 == 0.0);
  CHECK(v.v6 == doctest::Approx(1.0));
  CHECK(v.v0 == 0.0);
  const Potential g = qes_potential({0.7, -0.4, 1.3, 2});
  CHECK(g.v4 == doctest::Approx(2.0 * 0.7 * -0.4));
  CHECK(g.v2 == doctest::Approx(0.16 - 4.0 * 0.7 * (1.3 + 2.5)));
  for (int N = 0; N <= 6; ++N)
    CHECK(qes_potential({1.0, 0.2, N / 2.0 + 1.0, 1}).v_m2 == doctest::Approx(hierarchy_v_m2(N)).epsilon(1e-14));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(QesParams({0.0, 0.0, 1.0, 0}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(QesParams({1.0, 0.0, 0.2, 0}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(QesParams({1.0, 0.0, 1.0, -1}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(qes_wavefunction({1.0, 0.0, 1.0, 1}, 2), std::out_of_range);
}

TEST_CASE("dictionary to the Heun parameters") {
  const QesParams p{1.3, 0.4, 1.5, 2};
  CHECK(qes_to_heun(p, {1, -1, 1}).gamma == doctest::Approx(2.0 * p.s));
  for (int N = 0; N <= 5; ++N)
    CHECK(qes_to_heun({1.0, 0.3, N / 2.0 + 1.0, 1}, {-1, -1, 1}).gamma == doctest::Approx(-N).epsilon(1e-14));
  for (int M = 0; M <= 6; ++M) {
    const HeunParameters h = qes_to_heun({0.9, -0.6, 1.2, M}, {1, -1, 1});
    CHECK(std::abs(h.alpha / h.epsilon + M) <= 1e-12);
  }
  for (int sg : {-1, 1})
    for (int se : {-1, 1})
      for (double E : {-1.7, 0.0, 2.3}) {
        const BranchChoice signs{sg, se, 1};
        const HeunParameters d = qes_to_heun(p, signs, E);
        const HeunParameters m = map_potential(qes_potential(p), E, PhysicalConstants{}, signs).params;
        CHECK(rel(d.gamma, m.gamma) <= 1e-12);
        CHECK(rel(d.delta, m.delta) <= 1e-12);
        CHECK(rel(d.epsilon, m.epsilon) <= 1e-12);
        CHECK(rel(d.alpha, m.alpha) <= 1e-12);
        CHECK(rel(d.q, m.q) <= 1e-12);
      }
}

TEST_CASE("lowest QES level") {
  for (double b : {-0.8, 0.0, 0.5})
    for (double s : {0.5, 1.0, 2.25}) {
      const QesSolution sol = qes_spectrum({1.1, b, s, 0});
      REQUIRE(sol.energies.size() == 1);
      CHECK(sol.energies[0] == doctest::Approx(4.0 * s * b).scale(1.0).epsilon(1e-12));
    }
}

TEST_CASE("M = 1 energies are Heun termination roots") {
  for (const QesParams p : {QesParams{1.3, 0.4, 1.5, 1}, QesParams{0.6, -1.1, 0.8, 1}}) {
    const HeunParameters h = qes_to_heun(p, {1, -1, 1});
    const auto roots = polynomial_roots(q_polynomial_nu0_zero(1, h.gamma, h.delta, h.epsilon));
    std::vector<double> from_heun;
    for (const auto& r : roots) from_heun.push_back(-h.gamma * h.delta / 2.0 - r.real());
    std::sort(from_heun.begin(), from_heun.end());
    const QesSolution sol = qes_spectrum(p);
    REQUIRE(sol.energies.size() == 2);
    for (int k = 0; k < 2; ++k) CHECK(rel(sol.energies[k], from_heun[k]) <= 1e-9);
  }
}

TEST_CASE("spectrum agrees with a general eigensolver") {
  for (int M = 0; M <= 12; ++M) {
    const QesParams p{0.8, 0.3, 1.25, M};
    const auto rows = qes_matrix(p);
    Eigen::MatrixXd A(M + 1, M + 1);
    for (int i = 0; i <= M; ++i)
      for (int j = 0; j <= M; ++j) A(i, j) = rows[i][j];
    const Eigen::VectorXcd ev = A.eigenvalues();
    std::vector<double> want;
    for (int i = 0; i <= M; ++i) {
      CHECK(std::abs(ev[i].imag()) <= 1e-12 * std::max(1.0, std::abs(ev[i])));
      want.push_back(ev[i].real());
    }
    std::sort(want.begin(), want.end());
    const QesSolution sol = qes_spectrum(p);
    REQUIRE(sol.energies.size() == static_cast<std::size_t>(M + 1));
    CHECK(std::is_sorted(sol.energies.begin(), sol.energies.end()));
    for (int i = 0; i <= M; ++i) CHECK(rel(sol.energies[i], want[i]) <= 1e-9);
  }
}

TEST_CASE("wavefunctions") {
  const oracle::RadialGrid grid{0.1, 3.0, 1e-2};
  const QesParams p0{1.0, 0.5, 1.0, 0};
  const Sampler psi0 = qes_wavefunction(p0, 0);
  for (double r : {0.3, 1.1, 2.0})
    CHECK(psi0(r) == doctest::Approx(std::pow(r, 1.5) * std::exp(-std::pow(r, 4) / 4.0 - 0.25 * r * r)));
  const double slope = std::log(psi0(1e-2) / psi0(1e-4)) / std::log(100.0);
  CHECK(slope == doctest::Approx(1.5).epsilon(1e-3));

  for (const QesParams p : {QesParams{1.0, 0.5, 1.0, 1}, QesParams{0.7, -0.3, 1.5, 3}}) {
    const QesSolution sol = qes_spectrum(p);
    const Potential pot = qes_potential(p);
    for (int k = 0; k <= p.M; ++k) {
      CAPTURE(k);
      const Sampler psi = qes_wavefunction(p, k);
      CHECK(oracle::ode_residual(psi, pot, PhysicalConstants{}, sol.energies[k], grid) <= 1e-6);
      CHECK(sign_changes(sol.poly_coeffs[k]) == k);
      CHECK(sol.poly_coeffs[k][0] == doctest::Approx(1.0));
      const oracle::RadialGrid ng{1e-4, oracle::decay_radius(pot, PhysicalConstants{}, sol.energies[k]), 1e-3};
      const auto nr = oracle::numerov_integrate(pot, PhysicalConstants{}, sol.energies[k], ng, {2.0 * p.s - 0.5});
      CHECK(nr.node_count == k);
    }
  }
}
