#include "sextic/specfun.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/quadrature/exp_sinh.hpp>

namespace sextic::specfun {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// Neumaier-compensated running sum that also tracks sum |terms|.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;
  double abs_sum = 0.0;
  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v))
      comp += (sum - t) + v;
    else
      comp += (v - t) + sum;
    sum = t;
    abs_sum += std::abs(v);
  }
  double value() const { return sum + comp; }
};

struct SeriesValue {
  double value;
  double abs_sum;
};

SeriesValue kummer_series(double a, double b, double z, const EvalPolicy& policy) {
  CompensatedSum s;
  double term = 1.0;
  s.add(term);
  int small_run = 0;
  const double k_safe = std::max({-a, -b, std::abs(z), 0.0});
  for (int k = 0; k < policy.max_terms; ++k) {
    term *= (a + k) / (b + k) * z / (k + 1);
    if (term == 0.0) return {s.value(), s.abs_sum};
    s.add(term);
    if (k > k_safe && std::abs(term) <= policy.series_tol * std::abs(s.value())) {
      if (++small_run >= 2) return {s.value(), s.abs_sum};
    } else {
      small_run = 0;
    }
  }
  throw ConvergenceError("kummer_m: series did not converge within max_terms (a=" +
                         std::to_string(a) + ", b=" + std::to_string(b) +
                         ", z=" + std::to_string(z) + ")");
}

// int_0^inf t^p exp(-t^2 - 2 y t) dt for p > -1, y >= 0.
double gauss_laplace_moment(double p, double y) {
  thread_local boost::math::quadrature::exp_sinh<double> integrator;
  auto f = [&](double t) { return std::exp(p * std::log(t) - t * (t + 2.0 * y)); };
  return integrator.integrate(f, 1e-14);
}

// H_nu(y) for nu < 0 from the Laplace-type integral representation.
double hermite_integral(double nu, double y) {
  return rgamma(-nu) * gauss_laplace_moment(-nu - 1.0, y);
}

double hermite_series(double nu, double y, const EvalPolicy& policy) {
  const double y2 = y * y;
  const double g1 = rgamma(0.5 * (1.0 - nu));
  const double g2 = rgamma(-0.5 * nu);
  double t1 = 0.0;
  double t2 = 0.0;
  if (g1 != 0.0) t1 = g1 * kummer_series(-0.5 * nu, 0.5, y2, policy).value;
  if (g2 != 0.0 && y != 0.0) t2 = 2.0 * y * g2 * kummer_series(0.5 * (1.0 - nu), 1.5, y2, policy).value;
  return std::exp2(nu) * std::sqrt(kPi) * (t1 - t2);
}

double hermite_polynomial(int n, double y) {
  double hm = 1.0;
  if (n == 0) return hm;
  double h = 2.0 * y;
  for (int k = 1; k < n; ++k) {
    const double hp = 2.0 * y * h - 2.0 * k * hm;
    hm = h;
    h = hp;
  }
  return h;
}

// Upward recurrence from two seeds at orders f-3, f-2 with f = frac(nu); y > 0, nu >= -1.
std::pair<double, double> hermite_upward(double nu, double y) {
  const double f = nu - std::floor(nu);
  double mu = f - 2.0;
  double h_prev = hermite_integral(mu - 1.0, y);
  double h = hermite_integral(mu, y);
  const int steps = static_cast<int>(std::llround(nu - mu));
  for (int k = 0; k < steps; ++k) {
    const double next = 2.0 * y * h - 2.0 * mu * h_prev;
    h_prev = h;
    h = next;
    mu += 1.0;
  }
  return {h, h_prev};
}

double checked(double v, const char* what) {
  if (!std::isfinite(v)) throw std::overflow_error(std::string(what) + ": result not representable");
  return v;
}

}  // namespace

void EvalPolicy::validate() const {
  if (!(series_tol > 0.0)) throw std::invalid_argument("EvalPolicy: series_tol must be positive");
  if (max_terms < 1) throw std::invalid_argument("EvalPolicy: max_terms must be at least 1");
}

double sin_pi(double x) {
  double r = std::fmod(x, 2.0);
  if (r < -1.0) r += 2.0;
  if (r > 1.0) r -= 2.0;
  if (r == 0.0 || r == 1.0 || r == -1.0) return 0.0;
  if (r > 0.5) r = 1.0 - r;
  if (r < -0.5) r = -1.0 - r;
  return std::sin(kPi * r);
}

double gamma(double x) {
  if (is_nonpositive_integer(x)) throw PoleError("gamma: pole at non-positive integer");
  if (x < 0.5) return kPi / (sin_pi(x) * std::tgamma(1.0 - x));
  return std::tgamma(x);
}

double rgamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  if (x < 0.5) return sin_pi(x) * std::tgamma(1.0 - x) / kPi;
  if (x > 171.0) return 0.0;
  return 1.0 / std::tgamma(x);
}

double kummer_m(double a, double b, double z, const EvalPolicy& policy) {
  policy.validate();
  if (is_nonpositive_integer(b)) throw PoleError("kummer_m: b is a non-positive integer");
  if (z < 0.0) return checked(std::exp(z) * kummer_series(b - a, b, -z, policy).value, "kummer_m");
  return checked(kummer_series(a, b, z, policy).value, "kummer_m");
}

namespace {

double tricomi_connection(double a, double b, double z, const EvalPolicy& policy) {
  const double g1 = rgamma(a - b + 1.0);
  const double g2 = rgamma(a);
  double t1 = 0.0;
  double t2 = 0.0;
  if (g1 != 0.0) t1 = gamma(1.0 - b) * g1 * kummer_m(a, b, z, policy);
  if (g2 != 0.0) t2 = gamma(b - 1.0) * g2 * std::pow(z, 1.0 - b) * kummer_m(a - b + 1.0, 2.0 - b, z, policy);
  const double u = t1 + t2;
  const double scale = std::abs(t1) + std::abs(t2);
  if (scale > policy.max_cancellation * std::abs(u))
    throw PrecisionLossError("tricomi_u: cancellation exceeds the tolerance budget");
  return u;
}

}  // namespace

double tricomi_u(double a, double b, double z, const EvalPolicy& policy) {
  policy.validate();
  if (!(z > 0.0)) throw std::domain_error("tricomi_u: requires z > 0");
  if (a == 0.0) return 1.0;
  constexpr double h = 1e-3;
  if (std::abs(b - std::round(b)) >= h) return tricomi_connection(a, b, z, policy);
  auto sym = [&](double hh) {
    return 0.5 * (tricomi_connection(a, b - hh, z, policy) + tricomi_connection(a, b + hh, z, policy));
  };
  return (4.0 * sym(0.5 * h) - sym(h)) / 3.0;
}

double hermite_nu(double nu, double y, const EvalPolicy& policy) {
  policy.validate();
  if (y <= policy.recurrence_switch_threshold) return checked(hermite_series(nu, y, policy), "hermite_nu");
  if (nu >= 0.0 && nu == std::floor(nu) && nu < 1e6)
    return checked(hermite_polynomial(static_cast<int>(nu), y), "hermite_nu");
  if (nu < -1.0) return checked(hermite_integral(nu, y), "hermite_nu");
  return checked(hermite_upward(nu, y).first, "hermite_nu");
}

std::pair<double, double> hermite_nu_pair(double nu, double y, const EvalPolicy& policy) {
  policy.validate();
  if (y > policy.recurrence_switch_threshold && nu >= -1.0 &&
      !(nu >= 0.0 && nu == std::floor(nu))) {
    const auto hp = hermite_upward(nu, y);
    return {checked(hp.first, "hermite_nu"), checked(hp.second, "hermite_nu")};
  }
  return {hermite_nu(nu, y, policy), hermite_nu(nu - 1.0, y, policy)};
}

double hermite_nu_deriv(double nu, double y, const EvalPolicy& policy) {
  if (nu == 0.0) return 0.0;
  return 2.0 * nu * hermite_nu(nu - 1.0, y, policy);
}

double hermite_oscillatory_approx(double nu, double y) {
  if (!(y * y < 2.0 * nu + 1.0) || !(nu > 0.0))
    throw std::domain_error("hermite_oscillatory_approx: requires y^2 < 2 nu + 1 and nu > 0");
  const double amp = 2.0 * std::exp(0.5 * y * y + std::lgamma(nu) - std::lgamma(0.5 * nu)) /
                     std::pow(1.0 - y * y / (2.0 * nu + 1.0), 0.25);
  return amp * std::cos(0.5 * kPi * nu - y * std::sqrt(2.0 * nu - y * y / 3.0 + 1.0));
}

}  // namespace sextic::specfun
