#include "sextic/heun.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <string>

#include "sextic/specfun.hpp"

namespace sextic {

namespace {

// Continuant of a tridiagonal system: D_{-1} = 1, D_0 = diag(0),
// D_k = diag(k) D_{k-1} - off(k) D_{k-2}.
template <typename Elem, typename Diag, typename Off>
Elem continuant(int N, const Elem& one, Diag diag, Off off) {
  Elem prev = one;
  Elem cur = diag(0);
  for (int k = 1; k <= N; ++k) {
    Elem next = diag(k) * cur - off(k) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

void require_negative_epsilon(double epsilon) {
  if (!(epsilon < 0.0))
    throw ParameterError("expansion requires epsilon < 0, got " + std::to_string(epsilon));
}

void check_sign(int s, const char* name) {
  if (s != 1 && s != -1) throw std::invalid_argument(std::string(name) + " must be +1 or -1");
}

double binomial_real(double nu, int k) {
  double b = 1.0;
  for (int j = 0; j < k; ++j) b *= (nu - j) / (j + 1);
  return b;
}

}  // namespace

void PhysicalConstants::validate() const {
  if (!(hbar > 0.0) || !(mass > 0.0)) throw std::invalid_argument("hbar and mass must be positive");
}

double Potential::operator()(double r) const {
  const double r2 = r * r;
  return v_m2 / r2 + v0 + r2 * (v2 + r2 * (v4 + r2 * v6));
}

void BranchChoice::validate() const {
  check_sign(sign_gamma, "sign_gamma");
  check_sign(sign_epsilon, "sign_epsilon");
  check_sign(sign_s0, "sign_s0");
}

PrefactorExponents prefactor_exponents(const HeunParameters& hp) {
  return {(2.0 * hp.gamma - 1.0) / 4.0, hp.delta / 2.0, hp.epsilon / 4.0};
}

HeunMapping map_potential(const Potential& pot, double energy, const PhysicalConstants& consts,
                          const BranchChoice& branch) {
  consts.validate();
  branch.validate();
  if (pot.v6 == 0.0) throw ParameterError("map_potential: v6 must be nonzero");
  const double k = consts.kappa();
  const double disc = 1.0 + 4.0 * k * pot.v_m2;
  if (disc < 0.0) throw ParameterError("map_potential: 1 + 8m v_m2 / hbar^2 is negative");
  if (k * pot.v6 < 0.0) throw ParameterError("map_potential: v6 < 0 gives a complex epsilon");
  HeunParameters hp;
  hp.gamma = 1.0 + branch.sign_gamma * 0.5 * std::sqrt(disc);
  hp.epsilon = branch.sign_epsilon * 16.0 * std::sqrt(k * pot.v6);
  hp.delta = 32.0 * k * pot.v4 / hp.epsilon;
  hp.alpha = -4.0 * k * pot.v2 + hp.delta * hp.delta / 4.0 + (hp.gamma + 1.0) * hp.epsilon / 2.0;
  hp.q = -hp.gamma * hp.delta / 2.0 - k * (energy - pot.v0);
  return {hp, prefactor_exponents(hp)};
}

AffineMap q_of_energy(const Potential& pot, const PhysicalConstants& consts, double gamma, double delta) {
  const double k = consts.kappa();
  return {-k, -gamma * delta / 2.0 + k * pot.v0};
}

double hierarchy_v_m2(int N, const PhysicalConstants& consts) {
  return (2.0 * N + 1.0) * (2.0 * N + 3.0) / (4.0 * consts.kappa());
}

RecurrenceCoeffs recurrence_coeffs(const HeunParameters& hp, ExpansionVariant variant, int n, int sign_s0) {
  require_negative_epsilon(hp.epsilon);
  check_sign(sign_s0, "sign_s0");
  if (n < 0) throw std::invalid_argument("recurrence_coeffs: n must be non-negative");
  const double c = std::sqrt(2.0 / -hp.epsilon);
  const double root = std::sqrt(-2.0 * hp.epsilon);
  const double e = hp.epsilon;
  RecurrenceCoeffs rc;
  if (variant == ExpansionVariant::nu0_full) {
    rc.R = c * n * (-hp.alpha + (hp.gamma + n) * e);
    rc.Q = -sign_s0 * (hp.q + (hp.gamma + n) * hp.delta);
    rc.P = (hp.gamma + n) * e / root;
  } else {
    rc.R = c * n * (hp.alpha + (n - hp.gamma) * e);
    rc.Q = -sign_s0 * (hp.q + hp.delta * (hp.alpha / e + n));
    rc.P = (hp.alpha + n * e) / root;
  }
  return rc;
}

Polynomial<double> q_polynomial(int N, double delta, double epsilon, double alpha) {
  if (N < 0) throw std::invalid_argument("q_polynomial: N must be non-negative");
  require_negative_epsilon(epsilon);
  using P = Polynomial<double>;
  return continuant<P>(
      N, P{1.0}, [&](int k) { return P{(k - N) * delta, 1.0}; },
      [&](int k) { return P::constant(static_cast<double>(k) * (N + 1 - k) * (-alpha + (k - N) * epsilon)); });
}

Polynomial<double> q_polynomial_nu0_zero(int M, double gamma, double delta, double epsilon) {
  if (M < 0) throw std::invalid_argument("q_polynomial_nu0_zero: M must be non-negative");
  require_negative_epsilon(epsilon);
  using P = Polynomial<double>;
  return continuant<P>(
      M, P{1.0}, [&](int k) { return P{(k - M) * delta, 1.0}; },
      [&](int k) { return P::constant(-static_cast<double>(k) * (k - gamma - M) * (k - 1 - M) * epsilon); });
}

ExactPoly exact_q_polynomial(int N) {
  if (N < 0) throw std::invalid_argument("exact_q_polynomial: N must be non-negative");
  const ExactPoly q = ExactPoly::var(ExactPoly::q);
  const ExactPoly d = ExactPoly::var(ExactPoly::delta);
  const ExactPoly e = ExactPoly::var(ExactPoly::epsilon);
  const ExactPoly a = ExactPoly::var(ExactPoly::alpha);
  return continuant<ExactPoly>(
      N, ExactPoly(1), [&](int k) { return q + ExactPoly(k - N) * d; },
      [&](int k) { return ExactPoly(static_cast<long>(k) * (N + 1 - k)) * (ExactPoly(k - N) * e - a); });
}

std::vector<std::complex<double>> polynomial_roots(const Polynomial<double>& p) {
  const int n = p.degree();
  if (n < 1) return {};
  const double lead = p[n];
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -p[i] / lead;
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
  const Polynomial<double> dp = p.derivative();
  std::vector<std::complex<double>> roots;
  for (int i = 0; i < n; ++i) {
    std::complex<double> z = es.eigenvalues()[i];
    for (int it = 0; it < 3; ++it) {
      const std::complex<double> f = p(z);
      const std::complex<double> df = dp(z);
      if (df == 0.0) break;
      const std::complex<double> next = z - f / df;
      if (std::abs(p(next)) >= std::abs(f)) break;
      z = next;
    }
    roots.push_back(z);
  }
  return roots;
}

namespace {

double coefficient_scale(const Polynomial<double>& p, double x) {
  double s = 0.0;
  double xp = 1.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    s += std::abs(p[k]) * xp;
    xp *= std::abs(x);
  }
  return s;
}

HermiteExpansion run_recurrence(const HeunParameters& hp, int N, int sign_s0, ExpansionVariant variant) {
  HermiteExpansion ex;
  ex.n_max = N;
  ex.params = hp;
  ex.variant = variant;
  ex.xi_scale = sign_s0 * std::sqrt(-hp.epsilon / 2.0);
  ex.xi_shift = hp.delta / hp.epsilon;
  ex.nu0 = variant == ExpansionVariant::nu0_full ? hp.gamma - hp.alpha / hp.epsilon : 0.0;
  std::vector<double> c(N + 3, 0.0);
  c[0] = 1.0;
  for (int n = 1; n <= N + 2; ++n) {
    const RecurrenceCoeffs rn = recurrence_coeffs(hp, variant, n, sign_s0);
    const RecurrenceCoeffs r1 = recurrence_coeffs(hp, variant, n - 1, sign_s0);
    double rhs = r1.Q * c[n - 1];
    if (n >= 2) rhs += recurrence_coeffs(hp, variant, n - 2, sign_s0).P * c[n - 2];
    if (n <= N && rn.R == 0.0)
      throw DegeneratePivotError("expansion: vanishing pivot R_" + std::to_string(n));
    if (rn.R == 0.0) {
      c[n] = 0.0;
      continue;
    }
    c[n] = -rhs / rn.R;
    if (n <= N && std::abs(rn.R) <= 1e-14 * std::abs(rhs))
      throw DegeneratePivotError("expansion: near-vanishing pivot R_" + std::to_string(n));
  }
  ex.coeffs.assign(c.begin(), c.begin() + N + 1);
  ex.tail = {c[N + 1], c[N + 2]};
  double cmax = 0.0;
  for (double v : ex.coeffs) cmax = std::max(cmax, std::abs(v));
  if (std::abs(ex.tail[0]) > 1e-8 * cmax || std::abs(ex.tail[1]) > 1e-8 * cmax)
    throw NonRootError("expansion: recurrence does not terminate (|c_{N+1}| = " +
                       std::to_string(std::abs(ex.tail[0])) + ")");
  return ex;
}

}  // namespace

HermiteExpansion expansion_coefficients(const HeunParameters& hp, int N, int sign_s0) {
  require_negative_epsilon(hp.epsilon);
  check_sign(sign_s0, "sign_s0");
  if (N < 0) throw std::invalid_argument("expansion_coefficients: N must be non-negative");
  if (std::abs(hp.gamma + N) > 1e-12 * std::max(1.0, static_cast<double>(N)))
    throw ParameterError("expansion_coefficients: gamma must equal -N");
  HeunParameters h = hp;
  h.gamma = -N;
  const Polynomial<double> qp = q_polynomial(N, h.delta, h.epsilon, h.alpha);
  if (std::abs(qp(h.q)) > 1e-9 * coefficient_scale(qp, h.q))
    throw NonRootError("expansion_coefficients: q is not a root of the termination polynomial");
  return run_recurrence(h, N, sign_s0, ExpansionVariant::nu0_full);
}

HermiteExpansion polynomial_expansion(const HeunParameters& hp, int M, int sign_s0) {
  require_negative_epsilon(hp.epsilon);
  check_sign(sign_s0, "sign_s0");
  if (M < 0) throw std::invalid_argument("polynomial_expansion: M must be non-negative");
  if (std::abs(hp.alpha / hp.epsilon + M) > 1e-12 * std::max(1.0, static_cast<double>(M)))
    throw ParameterError("polynomial_expansion: alpha / epsilon must equal -M");
  HeunParameters h = hp;
  h.alpha = -M * h.epsilon;
  const Polynomial<double> qp = q_polynomial_nu0_zero(M, h.gamma, h.delta, h.epsilon);
  if (std::abs(qp(h.q)) > 1e-9 * coefficient_scale(qp, h.q))
    throw NonRootError("polynomial_expansion: q is not a root of the termination polynomial");
  return run_recurrence(h, M, sign_s0, ExpansionVariant::nu0_zero);
}

double HermiteExpansion::evaluate(double z) const {
  const double x = xi(z);
  double acc = 0.0;
  for (int n = 0; n <= n_max; ++n) acc += coeffs[n] * specfun::hermite_nu(nu0 + n, x);
  return acc;
}

double ContiguousSolution::evaluate(double z) const {
  const auto [h0, h1] = specfun::hermite_nu_pair(index, xi(z));
  return p0(z) * h0 + p1(z) * h1;
}

namespace {

// Weights A_k, B_k in H_{mu-k} = A_k H_mu + B_k H_{mu-1} as polynomials in xi.
// With scaled = true the factors 1 / (2(mu-j)) are left out (division-free form).
void contiguous_weights(int N, double mu, bool scaled, std::vector<Polynomial<double>>& A,
                        std::vector<Polynomial<double>>& B) {
  using P = Polynomial<double>;
  A = {P{1.0}, P{}};
  B = {P{}, P{1.0}};
  const P two_xi{0.0, 2.0};
  for (int k = 1; k < N; ++k) {
    if (scaled) {
      const double f = (k == 1) ? 1.0 : 2.0 * (mu - k + 1);
      A.push_back(two_xi * A[k] - A[k - 1] * f);
      B.push_back(two_xi * B[k] - B[k - 1] * f);
    } else {
      const double den = 2.0 * (mu - k);
      if (den == 0.0) throw DegeneratePivotError("reduce_to_contiguous: integer index in the reduction window");
      A.push_back((two_xi * A[k] - A[k - 1]) * (1.0 / den));
      B.push_back((two_xi * B[k] - B[k - 1]) * (1.0 / den));
    }
  }
}

}  // namespace

ContiguousSolution reduce_to_contiguous(const HermiteExpansion& exp) {
  if (exp.variant != ExpansionVariant::nu0_full)
    throw std::invalid_argument("reduce_to_contiguous: requires the terminated nu0 = gamma - alpha/eps branch");
  const int N = exp.n_max;
  const double mu = exp.nu0 + N;
  std::vector<Polynomial<double>> A, B;
  contiguous_weights(N, mu, false, A, B);
  Polynomial<double> p0, p1;
  for (int n = 0; n <= N; ++n) {
    p0 += A[N - n] * exp.coeffs[n];
    p1 += B[N - n] * exp.coeffs[n];
  }
  const double s = exp.xi_scale;
  const double t = exp.xi_scale * exp.xi_shift;
  return {p0.compose_affine(s, t), p1.compose_affine(s, t), mu, exp.xi_shift, exp.xi_scale};
}

ContiguousSolution contiguous_solution(const HeunParameters& hp, int N, int sign_s0) {
  require_negative_epsilon(hp.epsilon);
  check_sign(sign_s0, "sign_s0");
  const double s0 = sign_s0 * std::sqrt(-hp.epsilon / 2.0);
  const double e = hp.epsilon;
  const double g = -N;
  const double mu = -hp.alpha / e;
  auto R = [&](int n) { return n * (-hp.alpha + (g + n) * e) / s0; };
  auto Q = [&](int n) { return -(hp.q + (g + n) * hp.delta); };
  auto P = [&](int n) { return (g + n) * e / (2.0 * s0); };
  std::vector<double> d(N + 1);
  d[0] = 1.0;
  if (N >= 1) d[1] = -Q(0);
  for (int n = 2; n <= N; ++n) d[n] = -(Q(n - 1) * d[n - 1] + P(n - 2) * R(n - 1) * d[n - 2]);

  std::vector<Polynomial<double>> A, B;
  contiguous_weights(N, mu, true, A, B);
  Polynomial<double> p0, p1;
  for (int n = 0; n <= N; ++n) {
    double G = 1.0;
    if (n < N) {
      G = mu / std::exp2(N - n - 1);
      for (int j = n + 1; j <= N; ++j) G *= j * e / s0;
    }
    p0 += A[N - n] * (d[n] * G);
    p1 += B[N - n] * (d[n] * G);
  }
  if (N >= 1) {
    p0 *= -s0;
    p1 *= -s0;
  }
  const double shift = hp.delta / e;
  return {p0.compose_affine(s0, s0 * shift), p1.compose_affine(s0, s0 * shift), mu, shift, s0};
}

PrefixSeries u_power_series_prefix(const HermiteExpansion& exp, int K) {
  if (K < 0) throw std::invalid_argument("u_power_series_prefix: K must be non-negative");
  PrefixSeries out;
  const double y0 = exp.xi_scale * exp.xi_shift;
  for (int k = 0; k <= K; ++k) {
    const double f = std::pow(2.0 * exp.xi_scale, k);
    double acc = 0.0;
    double mag = 0.0;
    for (int n = 0; n <= exp.n_max; ++n) {
      const double nu = exp.nu0 + n;
      const double b = binomial_real(nu, k);
      if (b == 0.0) continue;
      const double term = f * exp.coeffs[n] * b * specfun::hermite_nu(nu - k, y0);
      acc += term;
      mag += std::abs(term);
    }
    out.coeffs.push_back(acc);
    out.scale.push_back(mag);
  }
  return out;
}

}  // namespace sextic

namespace sextic {

PrefixSeries contiguous_power_series(const ContiguousSolution& c, int K) {
  if (K < 0) throw std::invalid_argument("contiguous_power_series: K must be non-negative");
  const double y0 = c.xi(0.0);
  // Taylor coefficients of H_index(xi(z)) and H_{index-1}(xi(z)) about z = 0.
  std::vector<double> h0(K + 1), h1(K + 1);
  for (int k = 0; k <= K; ++k) {
    const double f = std::pow(2.0 * c.xi_scale, k);
    h0[k] = f * binomial_real(c.index, k) * specfun::hermite_nu(c.index - k, y0);
    h1[k] = f * binomial_real(c.index - 1.0, k) * specfun::hermite_nu(c.index - 1.0 - k, y0);
  }
  PrefixSeries out;
  out.coeffs.assign(K + 1, 0.0);
  out.scale.assign(K + 1, 0.0);
  for (int k = 0; k <= K; ++k) {
    for (int j = 0; j <= k; ++j) {
      const double t0 = c.p0[j] * h0[k - j];
      const double t1 = c.p1[j] * h1[k - j];
      out.coeffs[k] += t0 + t1;
      out.scale[k] += std::abs(t0) + std::abs(t1);
    }
  }
  return out;
}

}  // namespace sextic
