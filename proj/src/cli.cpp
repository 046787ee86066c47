#include "sextic/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "sextic/curves.hpp"
#include "sextic/oracle.hpp"
#include "sextic/spectrum.hpp"
#include "sextic/verify.hpp"

namespace sextic::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string json_string(const std::string& s) {
  std::string o = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') o += '\\';
    o += c;
  }
  return o + "\"";
}

struct PotentialFlags {
  double v_m2 = NAN;
  double v0 = 0.0;
  double v2 = 0.0;
  double v4 = 0.0;
  double v6 = 1.0;
  double hbar = 1.0;
  double mass = 0.5;

  void add(CLI::App* app) {
    app->add_option("--vm2", v_m2, "coefficient of r^-2 (default: hierarchy value of the level)");
    app->add_option("--v0", v0, "constant term");
    app->add_option("--v2", v2, "coefficient of r^2");
    app->add_option("--v4", v4, "coefficient of r^4");
    app->add_option("--v6", v6, "coefficient of r^6 (must be positive)");
    app->add_option("--hbar", hbar, "reduced Planck constant");
    app->add_option("--mass", mass, "particle mass");
  }

  PhysicalConstants consts() const {
    if (!(hbar > 0.0) || !(mass > 0.0)) throw UsageError("--hbar and --mass must be positive");
    return {hbar, mass};
  }

  Potential potential(int level) const {
    if (!(v6 > 0.0)) throw UsageError("--v6 must be positive");
    Potential p{v_m2, v0, v2, v4, v6};
    if (std::isnan(p.v_m2)) p.v_m2 = hierarchy_v_m2(level, consts());
    return p;
  }
};

struct OutputFlags {
  std::string format = "csv";
  std::string out_path;
  void add(CLI::App* app) {
    app->add_option("--format", format, "output format")->check(CLI::IsMember({"csv", "json"}));
    app->add_option("--out", out_path, "output file (default: standard output)");
  }
  void emit(const OutputRecord& rec, std::ostream& out) const {
    rec.validate();
    std::ofstream file;
    std::ostream* os = &out;
    if (!out_path.empty()) {
      file.open(out_path);
      if (!file) throw std::runtime_error("cannot open output file " + out_path);
      os = &file;
    }
    if (format == "json")
      write_json(rec, *os);
    else
      write_csv(rec, *os);
  }
};

int cmd_curves(int level, const std::string& branches_text, const std::string& grid_text, int energy_sign,
               const OutputFlags& of, std::ostream& out, std::ostream& err) {
  if (level != 0 && level != 1) throw UsageError("--level must be 0 or 1 for curves");
  if (energy_sign != 1 && energy_sign != -1) throw UsageError("--energy-sign must be -1 or 1");
  std::vector<int> branches;
  std::vector<double> grid;
  try {
    branches = parse_branch_list(branches_text);
    grid = parse_grid(grid_text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto traces = trace_curves(level, branches, grid, energy_sign);
  OutputRecord rec;
  rec.command = "curves";
  rec.columns = {"branch", "xi0", "w_exact", "w_approx", "abs_error"};
  rec.summary = {{"level", level}, {"energy_sign", energy_sign}};
  for (const auto& tr : traces) {
    for (const auto& p : tr.points) {
      const double wa = branch_approx(level, p.xi0, tr.branch_n, energy_sign);
      rec.rows.push_back({static_cast<double>(tr.branch_n), p.xi0, p.w, wa, std::abs(wa - p.w)});
    }
    for (const auto& s : tr.skipped)
      err << "skipped: branch " << tr.branch_n << " xi0=" << num(s.xi0) << ": " << s.reason << "\n";
  }
  of.emit(rec, out);
  return 0;
}

int cmd_spectrum(int level, const PotentialFlags& pf, const OutputFlags& of, std::ostream& out) {
  if (level < 0) throw UsageError("--level must be non-negative");
  const PhysicalConstants c = pf.consts();
  const Potential pot = pf.potential(level);
  LevelSpectrum spec;
  try {
    spec = energies_for_level(pot, c, level);
  } catch (const ParameterError& e) {
    throw UsageError(e.what());
  }
  const HeunParameters hp = map_potential(pot, pot.v0, c).params;
  const AffineMap qmap = q_of_energy(pot, c, -level, hp.delta);
  OutputRecord rec;
  rec.command = "spectrum";
  rec.columns = {"root", "q_real", "q_imag", "is_real", "energy_real", "energy_imag"};
  std::vector<std::complex<double>> roots = spec.q_roots;
  std::sort(roots.begin(), roots.end(), [&](const auto& a, const auto& b) {
    const double ea = qmap.inverse(a.real()), eb = qmap.inverse(b.real());
    return ea != eb ? ea < eb : a.imag() < b.imag();
  });
  int idx = 0;
  for (const auto& r : roots) {
    const bool real = std::abs(r.imag()) <= 1e-9 * std::max(1.0, std::abs(r));
    const double im = real ? 0.0 : r.imag();
    rec.rows.push_back({static_cast<double>(++idx), r.real(), im, real ? 1.0 : 0.0, qmap.inverse(r.real()),
                        im == 0.0 ? 0.0 : im / qmap.slope});
  }
  rec.summary = {{"level", level},
                 {"real_energies", static_cast<double>(spec.energies.size())},
                 {"complex_roots", static_cast<double>(spec.complex_count)}};
  of.emit(rec, out);
  return 0;
}

int cmd_wavefunction(int level, int branch, double r_max, int samples, const PotentialFlags& pf,
                     const OutputFlags& of, std::ostream& out) {
  if (level < 0) throw UsageError("--level must be non-negative");
  if (samples < 2) throw UsageError("--samples must be at least 2");
  if (!(r_max > 0.0)) throw UsageError("--r-max must be positive");
  const PhysicalConstants c = pf.consts();
  const Potential pot = pf.potential(level);
  LevelSpectrum spec;
  try {
    spec = energies_for_level(pot, c, level);
  } catch (const ParameterError& e) {
    throw UsageError(e.what());
  }
  if (branch < 1 || branch > static_cast<int>(spec.energies.size()))
    throw UsageError("--branch must index one of the " + std::to_string(spec.energies.size()) + " real energies");
  const double E = spec.energies[branch - 1];
  const BoundState bs = level_state(pot, c, level, E, branch);
  OutputRecord rec;
  rec.command = "wavefunction";
  rec.columns = {"r", "psi"};
  const double r0 = r_max / samples;
  for (int i = 0; i < samples; ++i) {
    const double r = r0 + (r_max - r0) * i / (samples - 1);
    rec.rows.push_back({r, bs.psi(r)});
  }
  const double hi = std::min(3.0, r_max);
  double residual = NAN;
  if (hi > 0.2) residual = oracle::ode_residual(bs.psi, pot, c, E, {0.1, hi, (hi - 0.1) / 200.0});
  const HeunMapping m = map_potential(pot, E, c);
  HeunParameters hp = m.params;
  hp.gamma = -level;
  double origin = NAN;
  if (level == 0)
    origin = origin_condition_N0(to_dimensionless(pot, c));
  else
    origin = general_origin_condition(contiguous_solution(hp, level), hp);
  rec.summary = {{"level", level}, {"energy", E}, {"origin_condition", origin}};
  if (!std::isnan(residual)) rec.summary.push_back({"ode_residual", residual});
  of.emit(rec, out);
  return 0;
}

int cmd_verify(const std::string& suite, bool perturb, std::ostream& out) {
  std::vector<CheckResult> res;
  try {
    res = run_verify(suite, {perturb});
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  bool ok = true;
  for (const auto& r : res) {
    out << (r.pass ? "[PASS] " : "[FAIL] ") << r.suite << ": " << r.name;
    if (!r.detail.empty()) out << " (" << r.detail << ")";
    out << "\n";
    ok = ok && r.pass;
  }
  out << (ok ? "all checks passed" : "verification failed") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

void OutputRecord::validate() const {
  for (const auto& row : rows) {
    if (row.size() != columns.size()) throw std::logic_error("OutputRecord: row width differs from column count");
    for (double v : row)
      if (!std::isfinite(v)) throw std::logic_error("OutputRecord: non-finite value");
  }
}

void write_csv(const OutputRecord& rec, std::ostream& os) {
  os << "# schema_version: " << rec.schema_version << "\n# command: " << rec.command << "\n";
  for (const auto& [k, v] : rec.summary) os << "# " << k << ": " << num(v) << "\n";
  for (std::size_t i = 0; i < rec.columns.size(); ++i) os << (i ? "," : "") << rec.columns[i];
  os << "\n";
  for (const auto& row : rec.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << num(row[i]);
    os << "\n";
  }
}

void write_json(const OutputRecord& rec, std::ostream& os) {
  os << "{\n  \"schema_version\": " << json_string(rec.schema_version) << ",\n  \"command\": "
     << json_string(rec.command) << ",\n  \"summary\": {";
  for (std::size_t i = 0; i < rec.summary.size(); ++i) {
    const double v = rec.summary[i].second;
    os << (i ? ", " : "") << json_string(rec.summary[i].first) << ": " << (std::isfinite(v) ? num(v) : "null");
  }
  os << "},\n  \"columns\": [";
  for (std::size_t i = 0; i < rec.columns.size(); ++i) os << (i ? ", " : "") << json_string(rec.columns[i]);
  os << "],\n  \"rows\": [";
  for (std::size_t r = 0; r < rec.rows.size(); ++r) {
    os << (r ? ",\n    [" : "\n    [");
    for (std::size_t i = 0; i < rec.rows[r].size(); ++i) os << (i ? ", " : "") << num(rec.rows[r][i]);
    os << "]";
  }
  os << (rec.rows.empty() ? "]\n}\n" : "\n  ]\n}\n");
}

std::vector<int> parse_branch_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  auto to_int = [&](const std::string& s) {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size() || v < 1) throw std::invalid_argument("invalid branch index '" + s + "'");
    return v;
  };
  try {
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      const auto dots = item.find("..");
      if (dots == std::string::npos) {
        out.push_back(to_int(item));
        continue;
      }
      const int a = to_int(item.substr(0, dots)), b = to_int(item.substr(dots + 2));
      if (b < a) throw std::invalid_argument("empty branch range '" + item + "'");
      for (int k = a; k <= b; ++k) out.push_back(k);
    }
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("branch index out of range");
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("malformed branch list: ") + e.what());
  }
  if (out.empty()) throw std::invalid_argument("branch list is empty");
  return out;
}

std::vector<double> parse_grid(const std::string& text) {
  double v[3];
  std::stringstream ss(text);
  std::string item;
  int n = 0;
  while (std::getline(ss, item, ':')) {
    if (n == 3) throw std::invalid_argument("grid must be MIN:MAX:STEP");
    try {
      std::size_t pos = 0;
      v[n] = std::stod(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw std::invalid_argument("grid must be MIN:MAX:STEP, bad number '" + item + "'");
    }
    ++n;
  }
  if (n != 3) throw std::invalid_argument("grid must be MIN:MAX:STEP");
  return make_grid(v[0], v[1], v[2]);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hermite-function solutions of the sextic oscillator", "sextic_cli"};
  app.require_subcommand(1);

  int level = 0;
  std::string branches = "1..10";
  std::string grid = "-4:4:0.05";
  int energy_sign = -1;
  OutputFlags of_curves;
  auto* curves = app.add_subcommand("curves", "trace (xi0, w) bound-state branches");
  curves->add_option("--level", level, "hierarchy level (0 or 1)");
  curves->add_option("--branches", branches, "branch list, e.g. 1..10 or 1,3,5");
  curves->add_option("--xi0", grid, "grid MIN:MAX:STEP");
  curves->add_option("--energy-sign", energy_sign, "sign of the energy for level 1");
  of_curves.add(curves);

  PotentialFlags pf_spec;
  OutputFlags of_spec;
  auto* spectrum = app.add_subcommand("spectrum", "energies and accessory-parameter roots of a level");
  spectrum->add_option("--level", level, "hierarchy level N");
  pf_spec.add(spectrum);
  of_spec.add(spectrum);

  PotentialFlags pf_wave;
  OutputFlags of_wave;
  int branch = 1;
  double r_max = 3.0;
  int samples = 200;
  auto* wave = app.add_subcommand("wavefunction", "sample psi(r) at one of the level's energies");
  wave->add_option("--level", level, "hierarchy level N");
  wave->add_option("--branch", branch, "1-based index into the level's real energies");
  wave->add_option("--r-max", r_max, "largest sampled radius");
  wave->add_option("--samples", samples, "number of samples");
  pf_wave.add(wave);
  of_wave.add(wave);

  std::string suite = "all";
  bool perturb = false;
  auto* verify = app.add_subcommand("verify", "run built-in consistency checks");
  verify->add_option("--suite", suite, "specfun, heun, curves, qes, oracle or all");
  verify->add_flag("--perturb-qpoly", perturb)->group("");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(std::move(rev));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (curves->parsed()) return cmd_curves(level, branches, grid, energy_sign, of_curves, out, err);
    if (spectrum->parsed()) return cmd_spectrum(level, pf_spec, of_spec, out);
    if (wave->parsed()) return cmd_wavefunction(level, branch, r_max, samples, pf_wave, of_wave, out);
    if (verify->parsed()) return cmd_verify(suite, perturb, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace sextic::cli
