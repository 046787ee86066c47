#include "sextic/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "sextic/curves.hpp"
#include "sextic/heun.hpp"
#include "sextic/oracle.hpp"
#include "sextic/qes.hpp"
#include "sextic/specfun.hpp"

namespace sextic {

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::max(1e-300, std::abs(b)); }

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

void add(std::vector<CheckResult>& out, const std::string& suite, const std::string& name, bool pass,
         const std::string& detail) {
  out.push_back({suite, name, pass, detail});
}

void verify_specfun(std::vector<CheckResult>& out) {
  using namespace specfun;
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  add(out, "specfun", "gamma(5) = 24", rel(gamma(5.0), 24.0) <= 1e-14, "rel " + fmt(rel(gamma(5.0), 24.0)));
  add(out, "specfun", "gamma(1/2) = sqrt(pi)", rel(gamma(0.5), sqrt_pi) <= 1e-14,
      "rel " + fmt(rel(gamma(0.5), sqrt_pi)));
  add(out, "specfun", "M(1;1;1) = e", rel(kummer_m(1.0, 1.0, 1.0), std::exp(1.0)) <= 1e-14, "");
  const double h0 = hermite_nu(0.5, 0.0);
  const double h0_ref = sqrt_pi * std::sqrt(2.0) / gamma(0.25);
  add(out, "specfun", "H_{1/2}(0) closed form", rel(h0, h0_ref) <= 1e-12, "rel " + fmt(rel(h0, h0_ref)));
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dnu(-3.0, 6.0), dy(-5.0, 5.0);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double nu = dnu(rng), y = dy(rng);
    const double hp = hermite_nu(nu + 1.0, y);
    const double r = std::abs(hp - 2.0 * y * hermite_nu(nu, y) + 2.0 * nu * hermite_nu(nu - 1.0, y));
    worst = std::max(worst, r / std::max(1.0, std::abs(hp)));
  }
  add(out, "specfun", "three-term recurrence in the order", worst <= 1e-9, "max " + fmt(worst));
}

void verify_heun(std::vector<CheckResult>& out, const VerifyOptions& opt) {
  for (int N = 0; N <= 3; ++N) {
    ExactPoly gen = exact_q_polynomial(N);
    if (opt.perturb_qpoly) gen += ExactPoly(1);
    const bool ok = gen == reference_q_polynomial(N);
    add(out, "heun", "termination polynomial N=" + std::to_string(N) + " exact", ok, ok ? "" : gen.str());
  }
  const double delta = 0.7, eps = -3.0, alpha = 1.3;
  Polynomial<double> qp = q_polynomial(2, delta, eps, alpha);
  if (opt.perturb_qpoly) qp += Polynomial<double>{1.0};
  double worst = 0.0;
  for (const auto& r : polynomial_roots(qp)) {
    if (std::abs(r.imag()) > 1e-9) continue;
    HeunParameters hp{-2.0, delta, eps, alpha, r.real()};
    try {
      const HermiteExpansion ex = expansion_coefficients(hp, 2);
      worst = std::max({worst, std::abs(ex.tail[0]), std::abs(ex.tail[1])});
    } catch (const std::exception&) {
      worst = INFINITY;
    }
  }
  add(out, "heun", "expansion terminates at every real root (N=2)", worst <= 1e-8, "max tail " + fmt(worst));
}

void verify_curves(std::vector<CheckResult>& out) {
  const auto roots = roots_at(0, 0.0, 3);
  double worst = 0.0;
  for (int n = 1; n <= 3; ++n) worst = std::max(worst, std::abs(roots[n - 1] - (1.0 - 4.0 * n)));
  add(out, "curves", "N=0 branches pass through (0, 1-4n)", worst <= 1e-9, "max dev " + fmt(worst));
  const std::vector<double> grid = make_grid(-1.0, 1.0, 0.5);
  const BranchTable t = locate_branches(0, 2, grid);
  double diff = 0.0;
  for (int n = 1; n <= 2; ++n) {
    const CurveTrace tr = trace_curve(0, n, grid);
    for (std::size_t i = 0; i < tr.points.size(); ++i) diff = std::max(diff, std::abs(tr.points[i].w - t.at(i, n)));
    if (tr.points.size() != grid.size()) diff = INFINITY;
  }
  add(out, "curves", "continuation matches root counting", diff <= 1e-9, "max dev " + fmt(diff));
}

void verify_qes(std::vector<CheckResult>& out) {
  const QesParams p{1.3, 0.4, 1.5, 1};
  const BranchChoice signs{-1, -1, 1};
  const double E = 0.9;
  const HeunParameters d = qes_to_heun(p, signs, E);
  const HeunParameters m = map_potential(qes_potential(p), E, PhysicalConstants{}, signs).params;
  const double dev = std::max({rel(d.gamma, m.gamma), rel(d.delta, m.delta), rel(d.epsilon, m.epsilon),
                               rel(d.alpha, m.alpha), rel(d.q, m.q)});
  add(out, "qes", "dictionary round trip", dev <= 1e-12, "max rel " + fmt(dev));
  const QesParams p0{0.8, 0.6, 1.25, 0};
  const double e0 = qes_spectrum(p0).energies.at(0);
  add(out, "qes", "M=0 energy equals 4sb", std::abs(e0 - 4.0 * p0.s * p0.b) <= 1e-12, "");
  const BranchChoice plus{1, -1, 1};
  const HeunParameters h = qes_to_heun(p, plus);
  const auto qroots = polynomial_roots(q_polynomial_nu0_zero(p.M, h.gamma, h.delta, h.epsilon));
  std::vector<double> eh;
  for (const auto& r : qroots) eh.push_back(-h.gamma * h.delta / 2.0 - r.real());
  std::sort(eh.begin(), eh.end());
  const auto eq = qes_spectrum(p).energies;
  double worst = 0.0;
  for (std::size_t i = 0; i < eq.size(); ++i) worst = std::max(worst, rel(eq[i], eh[i]));
  add(out, "qes", "M=1 energies match the Heun termination roots", worst <= 1e-9, "max rel " + fmt(worst));
}

void verify_oracle(std::vector<CheckResult>& out) {
  Potential v;
  v.v2 = 1.0;
  const oracle::RadialGrid grid{1e-4, 8.0, 2e-3};
  double worst = 0.0;
  const double expected[] = {3.0, 7.0};
  for (double e : expected) {
    const double got = oracle::shoot_eigenvalue(v, {}, {e - 1.0, e + 1.0}, grid, {1.0}, 1e-11);
    worst = std::max(worst, std::abs(got - e));
  }
  add(out, "oracle", "V=r^2 odd levels 3, 7", worst <= 1e-6, "max dev " + fmt(worst));
}

}  // namespace

ExactPoly reference_q_polynomial(int N) {
  const ExactPoly q = ExactPoly::var(ExactPoly::q);
  const ExactPoly d = ExactPoly::var(ExactPoly::delta);
  const ExactPoly e = ExactPoly::var(ExactPoly::epsilon);
  const ExactPoly a = ExactPoly::var(ExactPoly::alpha);
  switch (N) {
    case 0:
      return q;
    case 1:
      return q * q - d * q + a;
    case 2:
      return q * q * q - ExactPoly(3) * d * q * q + ExactPoly(2) * (d * d + e + ExactPoly(2) * a) * q -
             ExactPoly(4) * a * d;
    case 3:
      return q * q * q * q - ExactPoly(6) * q * q * q * d +
             q * q * (ExactPoly(10) * a + ExactPoly(11) * d * d + ExactPoly(10) * e) -
             ExactPoly(6) * q * d * (ExactPoly(5) * a + d * d + ExactPoly(3) * e) +
             ExactPoly(9) * a * (a + ExactPoly(2) * d * d + ExactPoly(2) * e);
    default:
      throw std::invalid_argument("reference_q_polynomial: closed forms exist for N = 0..3");
  }
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> s{"specfun", "heun", "curves", "qes", "oracle"};
  return s;
}

std::vector<CheckResult> run_verify(const std::string& suite, const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  const bool all = suite == "all";
  bool known = all;
  if (all || suite == "specfun") verify_specfun(out), known = true;
  if (all || suite == "heun") verify_heun(out, opt), known = true;
  if (all || suite == "curves") verify_curves(out), known = true;
  if (all || suite == "qes") verify_qes(out), known = true;
  if (all || suite == "oracle") verify_oracle(out), known = true;
  if (!known) throw std::invalid_argument("unknown verify suite: " + suite);
  return out;
}

}  // namespace sextic
