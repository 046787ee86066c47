#pragma once

#include <stdexcept>
#include <utility>

namespace sextic::specfun {

struct EvalPolicy {
  double series_tol = 1e-16;
  int max_terms = 5000;
  // For y above this value H_nu(y) is built by upward recurrence from
  // quadrature-evaluated seeds instead of the Kummer pair.
  double recurrence_switch_threshold = 1.0;
  // Largest tolerated ratio sum|terms| / |result| in connection formulas.
  double max_cancellation = 1e10;

  void validate() const;
};

class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PrecisionLossError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double sin_pi(double x);
double gamma(double x);
// 1/Gamma(x), exactly zero at the poles.
double rgamma(double x);

double kummer_m(double a, double b, double z, const EvalPolicy& policy = {});
double tricomi_u(double a, double b, double z, const EvalPolicy& policy = {});

double hermite_nu(double nu, double y, const EvalPolicy& policy = {});
// (H_nu(y), H_{nu-1}(y)) sharing one evaluation.
std::pair<double, double> hermite_nu_pair(double nu, double y, const EvalPolicy& policy = {});
double hermite_nu_deriv(double nu, double y, const EvalPolicy& policy = {});

// Cosine-form approximation valid for y^2 < 2 nu + 1.
double hermite_oscillatory_approx(double nu, double y);

}  // namespace sextic::specfun
