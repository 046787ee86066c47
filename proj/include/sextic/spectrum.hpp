#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "sextic/heun.hpp"

namespace sextic {

using Sampler = std::function<double(double)>;

struct DimensionlessPair {
  double xi0 = 0.0;
  double w = 0.0;
};

DimensionlessPair to_dimensionless(const Potential& pot, const PhysicalConstants& consts = {});
// Level-N potential with V0 = 0 and the hierarchy value of v_m2.
Potential level_potential(int N, const DimensionlessPair& pair, double v6, const PhysicalConstants& consts = {});

// psi(r) = z^a0 exp(a1 z + a2 z^2) u(z), z = r^2 / 4
Sampler assemble_wavefunction(const Potential& pot, const PhysicalConstants& consts, const BranchChoice& branch,
                              const HermiteExpansion& exp, double energy);
Sampler assemble_wavefunction(const PrefactorExponents& pre, const ContiguousSolution& contig);

struct LevelSpectrum {
  std::vector<double> energies;
  std::vector<std::complex<double>> q_roots;
  int complex_count = 0;
};

LevelSpectrum energies_for_level(const Potential& pot, const PhysicalConstants& consts, int N);

struct BoundState {
  int level_N = 0;
  int branch_n = 0;
  double energy = 0.0;
  Sampler psi;
  DimensionlessPair pair;
};

// Solution on level N at the given real energy of energies_for_level.
BoundState level_state(const Potential& pot, const PhysicalConstants& consts, int N, double energy,
                       int branch_n = 0);

double origin_condition_N0(const DimensionlessPair& pair);
double origin_condition_N1(const DimensionlessPair& pair, int energy_sign);
double general_origin_condition(const ContiguousSolution& contig, const HeunParameters& hp);

double approx_N0(double xi0, int n);
double approx_N1_neg(double xi0, int n);
double approx_N1_pos(double xi0, int n);
// Correction term of approx_N1_pos.
double approx_N1_pos_delta(double xi0, int n);
// xi0 where approx_N1_pos reaches w = 0.
double approx_N1_pos_start(int n);
double airy_region_condition(double xi0);

// c1 M(alpha/2eps, (gamma+1)/2, -eps z^2/2) + c2 U(...); requires delta = q = 0.
double zero_energy_reduced(const HeunParameters& hp, double z, double c1, double c2);

}  // namespace sextic
