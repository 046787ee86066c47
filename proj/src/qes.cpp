#include "sextic/qes.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

namespace sextic {

namespace {

double origin_power(const QesParams& p) { return 2.0 * p.s - 0.5; }

double diag(const QesParams& p, int k) { return p.b * (4.0 * k + 2.0 * origin_power(p) + 1.0); }
double upper(const QesParams& p, int k) { return -(k + 1.0) * (4.0 * k + 4.0 * origin_power(p) + 2.0); }
double lower(const QesParams& p, int k) { return -4.0 * p.a * (p.M - k + 1.0); }

std::vector<double> poly_for_energy(const QesParams& p, double e) {
  std::vector<double> c(p.M + 1, 0.0);
  c[0] = 1.0;
  for (int k = 0; k < p.M; ++k) {
    double rhs = (e - diag(p, k)) * c[k];
    if (k >= 1) rhs -= lower(p, k) * c[k - 1];
    c[k + 1] = rhs / upper(p, k);
  }
  return c;
}

}  // namespace

void QesParams::validate() const {
  if (!(a > 0.0)) throw std::invalid_argument("QES parameter a must be positive");
  if (!(s > 0.25)) throw std::invalid_argument("QES parameter s must exceed 1/4");
  if (M < 0) throw std::invalid_argument("QES parameter M must be non-negative");
}

Potential qes_potential(const QesParams& p) {
  p.validate();
  Potential v;
  v.v_m2 = (2.0 * p.s - 0.5) * (2.0 * p.s - 1.5);
  v.v2 = p.b * p.b - 4.0 * p.a * (p.s + p.M + 0.5);
  v.v4 = 2.0 * p.a * p.b;
  v.v6 = p.a * p.a;
  return v;
}

HeunParameters qes_to_heun(const QesParams& p, const BranchChoice& signs, double energy) {
  p.validate();
  signs.validate();
  const double pg = signs.sign_gamma;
  const double pe = signs.sign_epsilon;
  HeunParameters hp;
  hp.gamma = 1.0 + pg * std::abs(2.0 * p.s - 1.0);
  hp.epsilon = 16.0 * p.a * pe;
  hp.delta = 4.0 * p.b * pe;
  hp.alpha = 16.0 * p.a * (p.s + p.M + 0.5 + pe + pe * pg * std::abs(p.s - 0.5));
  hp.q = -2.0 * p.b * pe * (1.0 + pg * std::abs(2.0 * p.s - 1.0)) - energy;
  return hp;
}

std::vector<std::vector<double>> qes_matrix(const QesParams& p) {
  p.validate();
  const int n = p.M + 1;
  std::vector<std::vector<double>> A(n, std::vector<double>(n, 0.0));
  for (int k = 0; k < n; ++k) {
    A[k][k] = diag(p, k);
    if (k + 1 < n) A[k][k + 1] = upper(p, k);
    if (k >= 1) A[k][k - 1] = lower(p, k);
  }
  return A;
}

QesSolution qes_spectrum(const QesParams& p) {
  p.validate();
  const int n = p.M + 1;
  QesSolution out;
  if (n == 1) {
    out.energies = {diag(p, 0)};
  } else {
    Eigen::VectorXd d(n), off(n - 1);
    for (int k = 0; k < n; ++k) d[k] = diag(p, k);
    for (int k = 0; k + 1 < n; ++k) off[k] = -std::sqrt(upper(p, k) * lower(p, k + 1));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(d, off, Eigen::EigenvaluesOnly);
    out.energies.assign(es.eigenvalues().data(), es.eigenvalues().data() + n);
  }
  for (double e : out.energies) out.poly_coeffs.push_back(poly_for_energy(p, e));
  return out;
}

Sampler qes_wavefunction(const QesParams& p, int which) {
  const QesSolution sol = qes_spectrum(p);
  if (which < 0 || which > p.M) throw std::out_of_range("qes_wavefunction: state index out of range");
  const std::vector<double> c = sol.poly_coeffs[which];
  const double pw = origin_power(p);
  const double a = p.a;
  const double b = p.b;
  return [c, pw, a, b](double r) {
    const double x = r * r;
    double poly = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) poly = poly * x + *it;
    return std::pow(r, pw) * std::exp(-a * x * x / 4.0 - b * x / 2.0) * poly;
  };
}

}  // namespace sextic
