#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "sextic/heun.hpp"
#include "sextic/spectrum.hpp"

namespace sextic::oracle {

struct RadialGrid {
  double r_min = 1e-4;
  double r_max = 5.0;
  double step = 1e-3;
  void validate() const;
  std::size_t size() const;
  double at(std::size_t i) const { return r_min + static_cast<double>(i) * step; }
};

// psi ~ r^power near the origin.
struct LeftBoundary {
  double power = 1.0;
};

struct NumerovResult {
  std::vector<double> r;
  std::vector<double> psi;
  // Sign changes before psi stops decaying beyond the outer turning point.
  int node_count = 0;
  double log_deriv_at_rmax = 0.0;
  // psi is the true solution times exp(-log_scale).
  double log_scale = 0.0;
  // psi(r_max) / max |psi|, the shooting mismatch.
  double mismatch = 0.0;
};

class NoSignChangeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Origin power of the regular solution for a given centrifugal strength.
double regular_power(const Potential& pot, const PhysicalConstants& consts);

NumerovResult numerov_integrate(const Potential& pot, const PhysicalConstants& consts, double E,
                                const RadialGrid& grid, const LeftBoundary& left);

double shoot_eigenvalue(const Potential& pot, const PhysicalConstants& consts, std::pair<double, double> bracket,
                        const RadialGrid& grid, const LeftBoundary& left, double tol = -1.0);

// Radius beyond the outer turning point where int sqrt(2m(V-E))/hbar dr reaches `exponent`.
double decay_radius(const Potential& pot, const PhysicalConstants& consts, double E, double exponent = 30.0);

double ode_residual(const Sampler& psi, const Potential& pot, const PhysicalConstants& consts, double E,
                    const RadialGrid& grid, double fd_step = 1e-3);

}  // namespace sextic::oracle
