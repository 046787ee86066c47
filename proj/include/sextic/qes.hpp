#pragma once

#include <vector>

#include "sextic/heun.hpp"
#include "sextic/spectrum.hpp"

namespace sextic {

// psi(r) = r^(2s-1/2) exp(-a r^4/4 - b r^2/2) P_M(r^2), units hbar = 1, m = 1/2.
struct QesParams {
  double a = 1.0;
  double b = 0.0;
  double s = 1.0;
  int M = 0;
  void validate() const;
};

struct QesSolution {
  std::vector<double> energies;
  // Ascending coefficients of P_M(x), normalized to P_M(0) = 1.
  std::vector<std::vector<double>> poly_coeffs;
};

Potential qes_potential(const QesParams& p);
HeunParameters qes_to_heun(const QesParams& p, const BranchChoice& signs, double energy = 0.0);

// Unsymmetrized tridiagonal matrix whose eigenvalues are the M+1 energies, row-major.
std::vector<std::vector<double>> qes_matrix(const QesParams& p);
QesSolution qes_spectrum(const QesParams& p);
Sampler qes_wavefunction(const QesParams& p, int which);

}  // namespace sextic
