#include "sextic/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sextic/specfun.hpp"

namespace sextic {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kA = 1.0 / 3.0;

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

}  // namespace

DimensionlessPair to_dimensionless(const Potential& pot, const PhysicalConstants& consts) {
  consts.validate();
  if (!(pot.v6 > 0.0)) throw ParameterError("to_dimensionless: requires v6 > 0");
  const double h2 = consts.hbar * consts.hbar;
  const double s4 = std::pow(2.0 * h2 * pot.v6 * pot.v6 * pot.v6 / consts.mass, 0.25);
  const double s2 = std::sqrt(2.0 * h2 * pot.v6 / consts.mass);
  return {pot.v4 / (2.0 * s4), pot.v2 / s2};
}

Potential level_potential(int N, const DimensionlessPair& pair, double v6, const PhysicalConstants& consts) {
  consts.validate();
  if (!(v6 > 0.0)) throw ParameterError("level_potential: requires v6 > 0");
  const double h2 = consts.hbar * consts.hbar;
  Potential pot;
  pot.v6 = v6;
  pot.v4 = 2.0 * pair.xi0 * std::pow(2.0 * h2 * v6 * v6 * v6 / consts.mass, 0.25);
  pot.v2 = pair.w * std::sqrt(2.0 * h2 * v6 / consts.mass);
  pot.v_m2 = hierarchy_v_m2(N, consts);
  return pot;
}

Sampler assemble_wavefunction(const PrefactorExponents& pre, const ContiguousSolution& contig) {
  return [pre, contig](double r) {
    const double z = 0.25 * r * r;
    return std::exp(pre.a0 * std::log(z) + pre.a1 * z + pre.a2 * z * z) * contig.evaluate(z);
  };
}

Sampler assemble_wavefunction(const Potential& pot, const PhysicalConstants& consts, const BranchChoice& branch,
                              const HermiteExpansion& exp, double energy) {
  const HeunMapping m = map_potential(pot, energy, consts, branch);
  const HeunParameters& a = m.params;
  const HeunParameters& b = exp.params;
  constexpr double tol = 1e-9;
  if (!close(b.gamma, a.gamma, tol) || !close(b.delta, a.delta, tol) || !close(b.epsilon, a.epsilon, tol) ||
      !close(b.alpha, a.alpha, tol) || !close(b.q, a.q, tol) || (exp.xi_scale > 0) != (branch.sign_s0 > 0))
    throw ParameterError("assemble_wavefunction: expansion is inconsistent with the potential and energy");
  const PrefactorExponents pre = m.prefactor;
  if (exp.variant == ExpansionVariant::nu0_full && exp.n_max >= 1) {
    try {
      return assemble_wavefunction(pre, reduce_to_contiguous(exp));
    } catch (const DegeneratePivotError&) {
    }
  }
  return [pre, exp](double r) {
    const double z = 0.25 * r * r;
    return std::exp(pre.a0 * std::log(z) + pre.a1 * z + pre.a2 * z * z) * exp.evaluate(z);
  };
}

LevelSpectrum energies_for_level(const Potential& pot, const PhysicalConstants& consts, int N) {
  if (N < 0) throw std::invalid_argument("energies_for_level: N must be non-negative");
  const double expected = hierarchy_v_m2(N, consts);
  if (!close(pot.v_m2, expected, 1e-10))
    throw ParameterError("energies_for_level: v_m2 = " + std::to_string(pot.v_m2) + " does not match level " +
                         std::to_string(N) + " (" + std::to_string(expected) + ")");
  const HeunParameters hp = map_potential(pot, pot.v0, consts).params;
  const AffineMap qmap = q_of_energy(pot, consts, -N, hp.delta);
  LevelSpectrum out;
  out.q_roots = polynomial_roots(q_polynomial(N, hp.delta, hp.epsilon, hp.alpha));
  for (const auto& r : out.q_roots) {
    if (std::abs(r.imag()) <= 1e-9 * std::max(1.0, std::abs(r)))
      out.energies.push_back(qmap.inverse(r.real()));
    else
      ++out.complex_count;
  }
  std::sort(out.energies.begin(), out.energies.end());
  return out;
}

BoundState level_state(const Potential& pot, const PhysicalConstants& consts, int N, double energy, int branch_n) {
  const BranchChoice branch;
  HeunMapping m = map_potential(pot, energy, consts, branch);
  m.params.gamma = -N;
  const auto qp = q_polynomial(N, m.params.delta, m.params.epsilon, m.params.alpha);
  double qscale = 0.0;
  for (std::size_t k = 0; k < qp.size(); ++k) qscale += std::abs(qp[k] * std::pow(m.params.q, static_cast<double>(k)));
  if (std::abs(qp(m.params.q)) > 1e-9 * std::max(1.0, qscale))
    throw NonRootError("level_state: energy does not solve the termination condition of level " + std::to_string(N));
  const ContiguousSolution contig = contiguous_solution(m.params, N, branch.sign_s0);
  const PrefactorExponents pre = m.prefactor;

  BoundState bs;
  bs.level_N = N;
  bs.branch_n = branch_n;
  bs.energy = energy;
  bs.pair = to_dimensionless(pot, consts);
  bs.psi = assemble_wavefunction(pre, contig);

  // When the origin condition holds, u vanishes to order N and the contiguous form cancels
  // catastrophically near z = 0; the Taylor tail from z^(N+1) is used there instead.
  constexpr double z_switch = 0.05;
  constexpr int extra = 40;
  const PrefixSeries ps = contiguous_power_series(contig, N + extra);
  double ref = 0.0;
  for (double s : ps.scale) ref = std::max(ref, s);
  bool regular = true;
  for (int k = 0; k <= N; ++k) regular = regular && std::abs(ps.coeffs[k]) <= 1e-9 * ref;
  const double tail = std::abs(ps.coeffs.back()) * std::pow(z_switch, N + extra);
  if (regular && tail <= 1e-16 * ref) {
    std::vector<double> c(ps.coeffs.begin() + N + 1, ps.coeffs.end());
    const Sampler far = bs.psi;
    bs.psi = [pre, c, N, far](double r) {
      const double z = 0.25 * r * r;
      if (z > z_switch) return far(r);
      double acc = 0.0;
      for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
      return std::exp((pre.a0 + N + 1) * std::log(z) + pre.a1 * z + pre.a2 * z * z) * acc;
    };
  }
  return bs;
}

double origin_condition_N0(const DimensionlessPair& pair) {
  return specfun::hermite_nu(0.5 * (pair.xi0 * pair.xi0 - pair.w - 1.0), pair.xi0);
}

double origin_condition_N1(const DimensionlessPair& pair, int energy_sign) {
  if (energy_sign != 1 && energy_sign != -1) throw std::invalid_argument("energy_sign must be +1 or -1");
  if (pair.w < 0.0) throw std::domain_error("origin_condition_N1: requires w >= 0");
  const double d = pair.xi0 * pair.xi0 - pair.w;
  const auto [h0, h1] = specfun::hermite_nu_pair(0.5 * d, pair.xi0);
  return (pair.xi0 - energy_sign * std::sqrt(pair.w)) * h0 - d * h1;
}

double general_origin_condition(const ContiguousSolution& contig, const HeunParameters& hp) {
  if (!close(contig.index, -hp.alpha / hp.epsilon, 1e-9))
    throw ParameterError("general_origin_condition: index does not match -alpha/epsilon");
  const auto [h0, h1] = specfun::hermite_nu_pair(contig.index, contig.xi(0.0));
  return contig.p0(0.0) * h0 + contig.p1(0.0) * h1;
}

double approx_N0(double xi0, int n) {
  const double b = 1.0 - 4.0 * n;
  const double inner = (12.0 - kPi * kPi) / (3.0 * kPi * kPi) * xi0 * xi0 - b;
  if (inner < 0.0) throw std::domain_error("approx_N0: negative square-root argument");
  return b + xi0 * xi0 * (kPi * kPi - 8.0) / (kPi * kPi) - xi0 * (4.0 / kPi) * std::sqrt(inner);
}

double approx_N1_neg(double xi0, int n) {
  if (!(xi0 < 0.0)) throw std::domain_error("approx_N1_neg: requires xi0 < 0");
  return xi0 * xi0 - 2.0 * n;
}

double approx_N1_pos_delta(double xi0, int n) {
  return (2.0 - kA) * std::tanh(-std::sqrt(2.0) * (xi0 + std::sqrt(2.0 * n - kA)));
}

double approx_N1_pos(double xi0, int n) {
  if (!(xi0 < 0.0)) throw std::domain_error("approx_N1_pos: requires xi0 < 0");
  return (xi0 * xi0 - 2.0 * n + kA) + approx_N1_pos_delta(xi0, n);
}

double approx_N1_pos_start(int n) { return -std::sqrt(2.0 * n - kA); }

double airy_region_condition(double xi0) {
  if (!(xi0 < -1.0)) throw std::domain_error("airy_region_condition: requires xi0 < -1");
  const double x2 = xi0 * xi0;
  const double arg = kPi * (0.5 * x2 + 1.0 / 6.0);
  const double c = std::tgamma(7.0 / 6.0) / (4.0 * std::sqrt(kPi) * std::cbrt(3.0) * std::pow(x2, 2.0 / 3.0));
  return std::sin(arg) + c * std::cos(arg);
}

double zero_energy_reduced(const HeunParameters& hp, double z, double c1, double c2) {
  if (hp.delta != 0.0 || hp.q != 0.0) throw ParameterError("zero_energy_reduced: requires delta = q = 0");
  if (!(hp.epsilon < 0.0)) throw ParameterError("zero_energy_reduced: requires epsilon < 0");
  const double a = hp.alpha / (2.0 * hp.epsilon);
  const double b = 0.5 * (hp.gamma + 1.0);
  const double x = -0.5 * hp.epsilon * z * z;
  double u = 0.0;
  if (c1 != 0.0) u += c1 * specfun::kummer_m(a, b, x);
  if (c2 != 0.0) u += c2 * specfun::tricomi_u(a, b, x);
  return u;
}

}  // namespace sextic
