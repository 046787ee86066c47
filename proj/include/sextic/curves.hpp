#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sextic/spectrum.hpp"

namespace sextic {

struct SkippedPoint {
  double xi0 = 0.0;
  std::string reason;
};

struct CurveTrace {
  int level_N = 0;
  int branch_n = 1;
  int energy_sign = -1;
  std::vector<DimensionlessPair> points;
  // Newton-step size |f / f'| at each root, in units of w.
  std::vector<double> residuals;
  // Grid points with no root on this branch because it has left the w >= 0 quadrant (N = 1).
  std::vector<double> outside_domain;
  std::vector<SkippedPoint> skipped;
};

enum class SeedMode { continuation, approximation };

struct TraceOptions {
  SeedMode seeds = SeedMode::continuation;
  double bracket_half_width = 1.0;
  double continuation_half_width = 0.25;
  double scan_step = 0.25;
  double scan_reach = 4.0;
};

// Residual whose zeros in w define the level's branches.
double branch_residual(int level_N, const DimensionlessPair& pair, int energy_sign);
double branch_approx(int level_N, double xi0, int n, int energy_sign);
// Admissible w interval at xi0.
std::pair<double, double> w_domain(int level_N, double xi0);
// Largest xi0 at which N = 1 branch n still has w >= 0.
double n1_domain_edge(int n);

std::vector<double> make_grid(double lo, double hi, double step);

CurveTrace trace_curve(int level_N, int branch_n, const std::vector<double>& xi0_grid, int energy_sign = -1,
                       const TraceOptions& opt = {});
// Independent branches traced concurrently; result order follows `branches`.
std::vector<CurveTrace> trace_curves(int level_N, const std::vector<int>& branches,
                                     const std::vector<double>& xi0_grid, int energy_sign = -1,
                                     const TraceOptions& opt = {});

// The first n_max roots at every grid point, found by scanning the branch order
// nu upward from 0 and counting sign changes. Rows are grid points; absent roots are NaN.
struct BranchTable {
  std::vector<double> xi0;
  int n_max = 0;
  std::vector<double> w;
  double at(std::size_t i, int n) const { return w[i * n_max + (n - 1)]; }
};

std::vector<double> roots_at(int level_N, double xi0, int n_max, int energy_sign = -1);
BranchTable locate_branches(int level_N, int n_max, const std::vector<double>& xi0_grid, int energy_sign = -1);
BranchTable locate_branches_serial(int level_N, int n_max, const std::vector<double>& xi0_grid,
                                   int energy_sign = -1);

}  // namespace sextic
