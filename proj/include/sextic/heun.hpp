#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "sextic/exact_poly.hpp"
#include "sextic/polynomial.hpp"

namespace sextic {

struct PhysicalConstants {
  double hbar = 1.0;
  double mass = 0.5;
  // 2m / hbar^2
  double kappa() const { return 2.0 * mass / (hbar * hbar); }
  void validate() const;
};

// V(r) = v_m2 / r^2 + v0 + v2 r^2 + v4 r^4 + v6 r^6
struct Potential {
  double v_m2 = 0.0;
  double v0 = 0.0;
  double v2 = 0.0;
  double v4 = 0.0;
  double v6 = 0.0;
  double operator()(double r) const;
};

struct BranchChoice {
  int sign_gamma = -1;
  int sign_epsilon = -1;
  int sign_s0 = +1;
  void validate() const;
};

struct HeunParameters {
  double gamma = 0.0;
  double delta = 0.0;
  double epsilon = 0.0;
  double alpha = 0.0;
  double q = 0.0;
};

struct PrefactorExponents {
  double a0 = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;
};

struct HeunMapping {
  HeunParameters params;
  PrefactorExponents prefactor;
};

class ParameterError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NonRootError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DegeneratePivotError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

HeunMapping map_potential(const Potential& pot, double energy, const PhysicalConstants& consts = {},
                          const BranchChoice& branch = {});
PrefactorExponents prefactor_exponents(const HeunParameters& hp);

// q = slope * E + intercept
struct AffineMap {
  double slope = 0.0;
  double intercept = 0.0;
  double operator()(double e) const { return slope * e + intercept; }
  double inverse(double q) const { return (q - intercept) / slope; }
};

AffineMap q_of_energy(const Potential& pot, const PhysicalConstants& consts, double gamma, double delta);

// Centrifugal strength that makes gamma = -N on the bound-state branch.
double hierarchy_v_m2(int N, const PhysicalConstants& consts = {});

enum class ExpansionVariant { nu0_full, nu0_zero };

struct RecurrenceCoeffs {
  double R = 0.0;
  double Q = 0.0;
  double P = 0.0;
};

RecurrenceCoeffs recurrence_coeffs(const HeunParameters& hp, ExpansionVariant variant, int n, int sign_s0);

// Termination polynomial in q for gamma = -N (nu0 = gamma - alpha/epsilon branch).
Polynomial<double> q_polynomial(int N, double delta, double epsilon, double alpha);
// Termination polynomial in q for the nu0 = 0 branch with alpha = -M epsilon.
Polynomial<double> q_polynomial_nu0_zero(int M, double gamma, double delta, double epsilon);
// Same continuant as q_polynomial with gamma = -N, coefficients exact in (q, delta, epsilon, alpha).
ExactPoly exact_q_polynomial(int N);

struct HermiteExpansion {
  double nu0 = 0.0;
  int n_max = 0;
  std::vector<double> coeffs;
  double xi_shift = 0.0;
  double xi_scale = 0.0;
  HeunParameters params;
  ExpansionVariant variant = ExpansionVariant::nu0_full;
  // c_{N+1}, c_{N+2} from continuing the recurrence past the cut.
  std::array<double, 2> tail{0.0, 0.0};

  double xi(double z) const { return xi_scale * (z + xi_shift); }
  // u(z) = sum c_n H_{nu0+n}(xi(z))
  double evaluate(double z) const;
};

HermiteExpansion expansion_coefficients(const HeunParameters& hp, int N, int sign_s0 = +1);
HermiteExpansion polynomial_expansion(const HeunParameters& hp, int M, int sign_s0 = +1);

// u(z) = p0(z) H_index(xi) + p1(z) H_{index-1}(xi)
struct ContiguousSolution {
  Polynomial<double> p0;
  Polynomial<double> p1;
  double index = 0.0;
  double xi_shift = 0.0;
  double xi_scale = 0.0;

  double xi(double z) const { return xi_scale * (z + xi_shift); }
  double evaluate(double z) const;
};

ContiguousSolution reduce_to_contiguous(const HermiteExpansion& exp);
// Division-free construction valid at degenerate pivots; normalized as
// p0 = 1 for N = 0 and p0 = -s0 (q - delta), p1 = alpha for N = 1.
ContiguousSolution contiguous_solution(const HeunParameters& hp, int N, int sign_s0 = +1);

struct PrefixSeries {
  std::vector<double> coeffs;
  // Sum of magnitudes of the contributions to each coefficient.
  std::vector<double> scale;
};

PrefixSeries u_power_series_prefix(const HermiteExpansion& exp, int K);
// Taylor coefficients of the contiguous form about z = 0.
PrefixSeries contiguous_power_series(const ContiguousSolution& c, int K);

}  // namespace sextic
