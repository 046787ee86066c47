#include "sextic/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sextic::oracle {

namespace {

constexpr double kRescale = 1e200;

// Numerov is used only where h^2 |g| stays below this; closer to the origin the series is used.
constexpr double kStableH2G = 0.05;

}  // namespace

void RadialGrid::validate() const {
  if (!(r_min > 0.0) || !(r_max > r_min)) throw std::invalid_argument("RadialGrid: requires 0 < r_min < r_max");
  if (!(step > 0.0) || step > (r_max - r_min) / 100.0)
    throw std::invalid_argument("RadialGrid: step must be positive and at most (r_max - r_min)/100");
}

std::size_t RadialGrid::size() const {
  return static_cast<std::size_t>(std::floor((r_max - r_min) / step + 1e-9)) + 1;
}

double regular_power(const Potential& pot, const PhysicalConstants& consts) {
  const double disc = 1.0 + 4.0 * consts.kappa() * pot.v_m2;
  if (disc < 0.0) throw std::domain_error("regular_power: centrifugal term too attractive");
  return 0.5 * (1.0 + std::sqrt(disc));
}

NumerovResult numerov_integrate(const Potential& pot, const PhysicalConstants& consts, double E,
                                const RadialGrid& grid, const LeftBoundary& left) {
  grid.validate();
  consts.validate();
  const double k = consts.kappa();
  const double h = grid.step;
  const double h2 = h * h;
  const std::size_t n = grid.size();
  const double p = left.power;
  const double a2 = k * (pot.v0 - E) / (4.0 * p + 2.0);
  const double a4 = k * ((pot.v0 - E) * a2 + pot.v2) / (8.0 * p + 12.0);
  auto series = [&](double r) {
    const double r2 = r * r;
    return std::pow(r, p) * (1.0 + r2 * (a2 + r2 * a4));
  };
  auto g = [&](double r) { return k * (pot(r) - E); };

  NumerovResult res;
  res.r.resize(n);
  res.psi.resize(n);
  for (std::size_t i = 0; i < n; ++i) res.r[i] = grid.at(i);

  std::size_t start = 0;
  while (start + 2 < n && h2 * std::abs(g(res.r[start])) > kStableH2G) ++start;
  for (std::size_t i = 0; i <= std::min(start + 1, n - 1); ++i) res.psi[i] = series(res.r[i]);

  double f_prev = 1.0 - h2 * g(res.r[start]) / 12.0;
  double f_cur = 1.0 - h2 * g(res.r[start + 1]) / 12.0;
  for (std::size_t i = start + 1; i + 1 < n; ++i) {
    const double f_next = 1.0 - h2 * g(res.r[i + 1]) / 12.0;
    res.psi[i + 1] = ((12.0 - 10.0 * f_cur) * res.psi[i] - f_prev * res.psi[i - 1]) / f_next;
    if (std::abs(res.psi[i + 1]) > kRescale) {
      for (std::size_t j = 0; j <= i + 1; ++j) res.psi[j] /= kRescale;
      res.log_scale += std::log(kRescale);
    }
    f_prev = f_cur;
    f_cur = f_next;
  }

  double peak = 0.0;
  for (double v : res.psi) peak = std::max(peak, std::abs(v));
  std::size_t turn = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (g(res.r[i]) <= 0.0) turn = i;
  std::size_t stop = n;
  for (std::size_t i = turn + 1; i < n; ++i)
    if (std::abs(res.psi[i]) >= std::abs(res.psi[i - 1]) || (res.psi[i] < 0.0) != (res.psi[i - 1] < 0.0)) {
      stop = i;
      break;
    }
  for (std::size_t i = 1; i < stop; ++i)
    if (res.psi[i] != 0.0 && res.psi[i - 1] != 0.0 && (res.psi[i] < 0.0) != (res.psi[i - 1] < 0.0))
      ++res.node_count;
  const double last = res.psi[n - 1];
  res.mismatch = peak > 0.0 ? last / peak : 0.0;
  res.log_deriv_at_rmax = (3.0 * last - 4.0 * res.psi[n - 2] + res.psi[n - 3]) / (2.0 * h * last);
  return res;
}

double shoot_eigenvalue(const Potential& pot, const PhysicalConstants& consts, std::pair<double, double> bracket,
                        const RadialGrid& grid, const LeftBoundary& left, double tol) {
  double lo = std::min(bracket.first, bracket.second);
  double hi = std::max(bracket.first, bracket.second);
  auto m = [&](double e) { return numerov_integrate(pot, consts, e, grid, left).mismatch; };
  double m_lo = m(lo);
  double m_hi = m(hi);
  if (m_lo == 0.0) return lo;
  if (m_hi == 0.0) return hi;
  if ((m_lo < 0.0) == (m_hi < 0.0))
    throw NoSignChangeError("shoot_eigenvalue: mismatch has the same sign at both ends of [" +
                            std::to_string(lo) + ", " + std::to_string(hi) + "]");
  int side = 0;
  for (int it = 0; it < 200; ++it) {
    const double eps = tol > 0.0 ? tol : 1e-8 * std::max(1.0, std::abs(0.5 * (lo + hi)));
    if (hi - lo <= eps) break;
    // Illinois-modified regula falsi, with a bisection step when it stalls on one side.
    double e = (lo * m_hi - hi * m_lo) / (m_hi - m_lo);
    if (!(e > lo && e < hi) || std::abs(side) >= 3) {
      e = 0.5 * (lo + hi);
      side = 0;
    }
    const double me = m(e);
    if (me == 0.0) return e;
    if ((me < 0.0) == (m_lo < 0.0)) {
      lo = e;
      m_lo = me;
      if (side < 0) m_hi *= 0.5;
      side = side < 0 ? side - 1 : -1;
    } else {
      hi = e;
      m_hi = me;
      if (side > 0) m_lo *= 0.5;
      side = side > 0 ? side + 1 : 1;
    }
  }
  return 0.5 * (lo + hi);
}

double decay_radius(const Potential& pot, const PhysicalConstants& consts, double E, double exponent) {
  const double k = consts.kappa();
  double r_turn = 0.0;
  const double dr = 1e-3;
  for (double r = dr; r < 50.0; r += dr) {
    if (pot(r) <= E) r_turn = r;
    else if (r > 2.0 * std::max(r_turn, 1.0)) break;
  }
  double r = std::max(r_turn, dr);
  double acc = 0.0;
  while (acc < exponent) {
    const double v = pot(r + 0.5 * dr) - E;
    if (v > 0.0) acc += std::sqrt(k * v) * dr;
    r += dr;
    if (r > 1e3) throw std::runtime_error("decay_radius: no forbidden region found");
  }
  return r;
}

double ode_residual(const Sampler& psi, const Potential& pot, const PhysicalConstants& consts, double E,
                    const RadialGrid& grid, double fd_step) {
  grid.validate();
  const double k = consts.kappa();
  const double h = fd_step;
  double max_res = 0.0;
  double max_d2 = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double r = grid.at(i);
    if (r - 2.0 * h <= 0.0) continue;
    const double p0 = psi(r);
    const double d2 = (-psi(r + 2 * h) + 16.0 * psi(r + h) - 30.0 * p0 + 16.0 * psi(r - h) - psi(r - 2 * h)) /
                      (12.0 * h * h);
    max_res = std::max(max_res, std::abs(d2 + k * (E - pot(r)) * p0));
    max_d2 = std::max(max_d2, std::abs(d2));
  }
  return max_d2 > 0.0 ? max_res / max_d2 : max_res;
}

}  // namespace sextic::oracle
