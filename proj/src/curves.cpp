#include "sextic/curves.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <optional>
#include <stdexcept>

#include "sextic/specfun.hpp"

namespace sextic {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void check_level(int level_N, int energy_sign) {
  if (level_N != 0 && level_N != 1) throw std::invalid_argument("curve tracing supports levels 0 and 1");
  if (energy_sign != 1 && energy_sign != -1) throw std::invalid_argument("energy_sign must be +1 or -1");
}

template <typename F>
double bisect(F&& f, double lo, double hi, double flo) {
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
    if (hi - lo <= 1e-15 * std::max(1.0, std::abs(mid))) break;
  }
  return 0.5 * (lo + hi);
}

template <typename F>
double newton_step(F&& f, double x) {
  const double h = 1e-6 * std::max(1.0, std::abs(x));
  const double d = (f(x + h) - f(x - h)) / (2.0 * h);
  return d == 0.0 ? std::abs(f(x)) : std::abs(f(x) / d);
}

struct PointSolve {
  double x;
  double residual;
};

// Finds a sign change of f in [lo, hi] near seed, first inside seed +/- half, then by an outward scan.
template <typename F>
std::optional<PointSolve> solve_near(F&& f, double seed, double half, double lo, double hi,
                                     const TraceOptions& opt) {
  auto try_interval = [&](double a, double b) -> std::optional<PointSolve> {
    a = std::max(a, lo);
    b = std::min(b, hi);
    if (!(a < b)) return std::nullopt;
    const double fa = f(a);
    const double fb = f(b);
    if (fa == 0.0) return PointSolve{a, 0.0};
    if (fb == 0.0) return PointSolve{b, 0.0};
    if ((fa < 0.0) == (fb < 0.0)) return std::nullopt;
    const double x = bisect(f, a, b, fa);
    return PointSolve{x, newton_step(f, x)};
  };
  if (auto r = try_interval(seed - half, seed + half)) return r;
  const int steps = static_cast<int>(std::ceil(opt.scan_reach / opt.scan_step));
  for (int k = 1; k <= steps; ++k) {
    const double up0 = seed + (k - 1) * opt.scan_step;
    const double dn0 = seed - (k - 1) * opt.scan_step;
    if (auto r = try_interval(dn0 - opt.scan_step, dn0)) return r;
    if (auto r = try_interval(up0, up0 + opt.scan_step)) return r;
  }
  return std::nullopt;
}

// Branch residual as a function of the Hermite order nu at fixed xi0; solving in nu keeps
// roots that sit exponentially close to nu = 0 resolvable.
struct OrderProblem {
  int level_N;
  double xi0;
  int energy_sign;

  double operator()(double nu) const {
    if (level_N == 0) return specfun::hermite_nu(nu, xi0);
    const double d = 2.0 * nu;
    const auto [h0, h1] = specfun::hermite_nu_pair(nu, xi0);
    return (xi0 - energy_sign * std::sqrt(std::max(0.0, xi0 * xi0 - d))) * h0 - d * h1;
  }
  double w_of(double nu) const { return xi0 * xi0 - (level_N == 0 ? 1.0 : 0.0) - 2.0 * nu; }
  double nu_of(double w) const { return 0.5 * (xi0 * xi0 - (level_N == 0 ? 1.0 : 0.0) - w); }
  double nu_lo() const { return level_N == 0 ? 0.0 : 1e-200; }
  double nu_hi() const { return level_N == 0 ? std::numeric_limits<double>::infinity() : 0.5 * xi0 * xi0; }
};

}  // namespace

double branch_residual(int level_N, const DimensionlessPair& pair, int energy_sign) {
  return level_N == 0 ? origin_condition_N0(pair) : origin_condition_N1(pair, energy_sign);
}

double branch_approx(int level_N, double xi0, int n, int energy_sign) {
  if (level_N == 0) return approx_N0(xi0, n);
  return energy_sign < 0 ? approx_N1_neg(xi0, n) : approx_N1_pos(xi0, n);
}

std::pair<double, double> w_domain(int level_N, double xi0) {
  const double x2 = xi0 * xi0;
  if (level_N == 0) return {-std::numeric_limits<double>::infinity(), x2 - 1.0};
  return {0.0, x2};
}

double n1_domain_edge(int n) {
  if (n < 1) throw std::invalid_argument("branch index must be >= 1");
  auto f = [](double x) { return origin_condition_N1({x, 0.0}, -1); };
  const double guess = approx_N1_pos_start(n);
  const double step = 0.01;
  for (int k = 1; k <= 30; ++k) {
    for (double lo : {guess - k * step, guess + (k - 1) * step}) {
      const double flo = f(lo);
      if ((flo < 0.0) != (f(lo + step) < 0.0)) return bisect(f, lo, lo + step, flo);
    }
  }
  throw std::runtime_error("n1_domain_edge: no root near the approximate start point");
}

namespace {

double cached_domain_edge(int n) {
  static const std::vector<double> edges = [] {
    std::vector<double> e;
    for (int k = 1; k <= 40; ++k) e.push_back(n1_domain_edge(k));
    return e;
  }();
  return n <= static_cast<int>(edges.size()) ? edges[n - 1] : n1_domain_edge(n);
}

}  // namespace

std::vector<double> make_grid(double lo, double hi, double step) {
  if (!(step > 0.0) || !(hi >= lo)) throw std::invalid_argument("grid requires step > 0 and max >= min");
  const auto n = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
  std::vector<double> g;
  for (long k = 0; k <= n; ++k) g.push_back(lo + k * step);
  return g;
}

CurveTrace trace_curve(int level_N, int branch_n, const std::vector<double>& grid, int energy_sign,
                       const TraceOptions& opt) {
  check_level(level_N, energy_sign);
  if (branch_n < 1) throw std::invalid_argument("branch index must be >= 1");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1])) throw std::invalid_argument("xi0 grid must be strictly increasing");

  CurveTrace tr;
  tr.level_N = level_N;
  tr.branch_n = branch_n;
  tr.energy_sign = energy_sign;
  const std::size_t G = grid.size();
  if (G == 0) return tr;

  std::vector<bool> in_domain(G, true);
  if (level_N == 1) {
    const double edge = cached_domain_edge(branch_n);
    for (std::size_t i = 0; i < G; ++i) in_domain[i] = grid[i] < edge;
  }

  // Solutions are held as (nu, residual in nu); nu varies slowly along a branch, so seeds are built in nu.
  std::vector<std::optional<PointSolve>> sol(G);
  TraceOptions nu_opt = opt;
  nu_opt.scan_step = 0.5 * opt.scan_step;
  nu_opt.scan_reach = 0.5 * opt.scan_reach;
  auto problem = [&](std::size_t i) { return OrderProblem{level_N, grid[i], energy_sign}; };
  auto approx_nu = [&](std::size_t i) {
    return problem(i).nu_of(branch_approx(level_N, grid[i], branch_n, energy_sign));
  };
  auto solve_at = [&](std::size_t i, double seed, double half) {
    const OrderProblem f = problem(i);
    const double lo = f.nu_lo(), hi = f.nu_hi();
    seed = std::clamp(seed, lo, std::min(hi, 1e300));
    sol[i] = solve_near(f, seed, half, lo, hi, nu_opt);
  };
  const double bracket = 0.5 * opt.bracket_half_width;
  const double cont = 0.5 * opt.continuation_half_width;

  if (opt.seeds == SeedMode::approximation) {
    for (std::size_t i = 0; i < G; ++i)
      if (in_domain[i]) solve_at(i, approx_nu(i), bracket);
  } else {
    std::optional<std::size_t> start;
    for (std::size_t i = 0; i < G; ++i) {
      if (!in_domain[i]) continue;
      if (!start) {
        start = i;
        continue;
      }
      const bool better = level_N == 0 ? std::abs(grid[i]) < std::abs(grid[*start])
                                       : (energy_sign > 0 ? grid[i] > grid[*start] : grid[i] < grid[*start]);
      if (better) start = i;
    }
    if (start) {
      const std::size_t s = *start;
      solve_at(s, approx_nu(s), bracket);
      for (int dir : {-1, 1}) {
        std::vector<std::size_t> prev;
        if (sol[s]) prev.push_back(s);
        for (long i = static_cast<long>(s) + dir; i >= 0 && i < static_cast<long>(G); i += dir) {
          const auto ui = static_cast<std::size_t>(i);
          if (!in_domain[ui]) {
            prev.clear();
            continue;
          }
          const double x = grid[ui];
          double seed;
          double half = cont;
          if (prev.size() >= 2) {
            const std::size_t j1 = prev[prev.size() - 1], j2 = prev[prev.size() - 2];
            seed = sol[j1]->x + (sol[j1]->x - sol[j2]->x) * (x - grid[j1]) / (grid[j1] - grid[j2]);
          } else if (prev.size() == 1) {
            const std::size_t j1 = prev.back();
            seed = sol[j1]->x + approx_nu(ui) - approx_nu(j1);
          } else {
            seed = approx_nu(ui);
            half = bracket;
          }
          solve_at(ui, seed, half);
          if (sol[ui])
            prev.push_back(ui);
          else
            prev.clear();
        }
      }
    }
  }

  for (std::size_t i = 0; i < G; ++i) {
    if (!in_domain[i]) {
      tr.outside_domain.push_back(grid[i]);
    } else if (sol[i]) {
      tr.points.push_back({grid[i], problem(i).w_of(sol[i]->x)});
      tr.residuals.push_back(2.0 * sol[i]->residual);
    } else {
      tr.skipped.push_back({grid[i], "no sign change near the seed"});
    }
  }
  return tr;
}

std::vector<CurveTrace> trace_curves(int level_N, const std::vector<int>& branches, const std::vector<double>& grid,
                                     int energy_sign, const TraceOptions& opt) {
  check_level(level_N, energy_sign);
  std::vector<CurveTrace> out(branches.size());
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < static_cast<long>(branches.size()); ++k) {
    try {
      out[k] = trace_curve(level_N, branches[k], grid, energy_sign, opt);
    } catch (...) {
#pragma omp critical
      err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return out;
}

std::vector<double> roots_at(int level_N, double xi0, int n_max, int energy_sign) {
  check_level(level_N, energy_sign);
  if (level_N == 1 && !(xi0 < 0.0)) return std::vector<double>(n_max, kNaN);
  const OrderProblem f{level_N, xi0, energy_sign};
  constexpr double dnu = 0.05;
  const double nu_end = level_N == 0 ? 2.0 * xi0 * xi0 + 5.0 * n_max + 10.0 : f.nu_hi();
  double nu = f.nu_lo();
  std::vector<double> roots;
  double f_prev = f(nu);
  while (static_cast<int>(roots.size()) < n_max && nu < nu_end) {
    const double next = std::min(nu + dnu, nu_end);
    const double f_next = f(next);
    if (f_next == 0.0)
      roots.push_back(f.w_of(next));
    else if (f_prev != 0.0 && (f_prev < 0.0) != (f_next < 0.0))
      roots.push_back(f.w_of(bisect(f, nu, next, f_prev)));
    nu = next;
    f_prev = f_next;
  }
  if (level_N == 1) {
    int live = 0;
    while (live < static_cast<int>(roots.size()) && xi0 < cached_domain_edge(live + 1)) ++live;
    roots.resize(live);
  }
  roots.resize(n_max, kNaN);
  return roots;
}

namespace {

BranchTable make_table(const std::vector<double>& grid, int n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  BranchTable t;
  t.xi0 = grid;
  t.n_max = n_max;
  t.w.assign(grid.size() * n_max, kNaN);
  return t;
}

}  // namespace

BranchTable locate_branches_serial(int level_N, int n_max, const std::vector<double>& grid, int energy_sign) {
  BranchTable t = make_table(grid, n_max);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto r = roots_at(level_N, grid[i], n_max, energy_sign);
    std::copy(r.begin(), r.end(), t.w.begin() + i * n_max);
  }
  return t;
}

BranchTable locate_branches(int level_N, int n_max, const std::vector<double>& grid, int energy_sign) {
  check_level(level_N, energy_sign);
  BranchTable t = make_table(grid, n_max);
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < static_cast<long>(grid.size()); ++i) {
    try {
      const auto r = roots_at(level_N, grid[i], n_max, energy_sign);
      std::copy(r.begin(), r.end(), t.w.begin() + i * n_max);
    } catch (...) {
#pragma omp critical
      err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return t;
}

}  // namespace sextic
