#include "wellspec/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "wellspec/errors.hpp"
#include "wellspec/oracle.hpp"
#include "wellspec/wavefn.hpp"

namespace wellspec::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct PositionFlags {
  std::string rational;
  std::optional<double> real;

  void attach(CLI::App& cmd) {
    auto* r = cmd.add_option("--rho", rational, "Exact rational position P/N");
    auto* x = cmd.add_option("--rho-real", real, "Generic real position in (0, 1)");
    r->excludes(x);
  }

  Position resolve() const {
    if (!rational.empty()) return parse_rational_position(rational);
    if (real) {
      if (!(*real > 0.0 && *real < 1.0)) {
        throw PositionOutOfRange("--rho-real must lie strictly between 0 and 1");
      }
      return *real;
    }
    throw UsageError("one of --rho P/N or --rho-real X is required");
  }
};

// Writes to --out when given, otherwise to the command's stream.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file " + path);
  file << text;
  if (!file) throw UsageError("failed writing output file " + path);
}

std::vector<EigenState> lowest_states(const DimensionlessConfig& config, std::size_t count) {
  double k_max = kDefaultKMax;
  for (;;) {
    auto spectrum = full_spectrum(config, k_max);
    if (spectrum.entries.size() >= count || k_max >= 4096.0 * kPi) {
      spectrum.entries.resize(std::min(count, spectrum.entries.size()));
      return spectrum.entries;
    }
    k_max *= 2.0;
  }
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    double v = 0.0;
    const auto* first = item.data();
    const auto* last = item.data() + item.size();
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc{} || res.ptr != last || !(v > 0.0) || !std::isfinite(v)) {
      throw UsageError("--f-list entries must be positive numbers, got '" + item + "'");
    }
    values.push_back(v);
  }
  if (values.empty()) throw UsageError("--f-list is empty");
  return values;
}

}  // namespace

std::string format_number(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

std::vector<CurvePoint> dispersion_curve(const Position& position, double k_max_over_pi,
                                         int samples_per_pi) {
  if (samples_per_pi < 1) throw UsageError("--samples-per-pi must be positive");
  if (!(k_max_over_pi > 0.0)) throw UsageError("--kmax must be positive");
  const DimensionlessConfig config(position, 1.0);
  const auto last = static_cast<std::int64_t>(std::floor(k_max_over_pi * samples_per_pi + 1e-9));
  std::vector<CurvePoint> points;
  points.reserve(static_cast<std::size_t>(last + 1));
  for (std::int64_t i = 0; i <= last; ++i) {
    const double kL = kPi * static_cast<double>(i) / samples_per_pi;
    points.push_back({static_cast<double>(i) / samples_per_pi, rhs_positive(kL, config)});
  }
  return points;
}

std::string dispersion_curve_csv(std::span<const CurvePoint> points) {
  std::string out = "kL_over_pi,rhs,is_pole\n";
  for (const auto& p : points) {
    out += format_number(p.kL_over_pi);
    if (const auto* v = std::get_if<double>(&p.rhs)) {
      out += "," + format_number(*v) + ",0\n";
    } else {
      out += ",,1\n";
    }
  }
  return out;
}

std::vector<double> sweep_positions(int rho_steps) {
  if (rho_steps < 2) throw UsageError("--rho-steps must be at least 2");
  std::vector<double> rho(static_cast<std::size_t>(rho_steps));
  const double centre = 0.5 * (rho_steps - 1);
  const double step = 0.99 / (rho_steps - 1);
  for (int i = 0; i < rho_steps; ++i) rho[static_cast<std::size_t>(i)] = 0.5 + (i - centre) * step;
  return rho;
}

std::vector<SweepRow> sweep_ground(std::span<const double> f_list, SignSelection signs,
                                   int rho_steps, bool with_asymptote, Execution exec) {
  const auto positions = sweep_positions(rho_steps);
  std::vector<double> magnitudes(f_list.begin(), f_list.end());
  std::sort(magnitudes.begin(), magnitudes.end());
  magnitudes.erase(std::unique(magnitudes.begin(), magnitudes.end()), magnitudes.end());

  std::vector<DimensionlessConfig> configs;
  std::vector<SweepRow> rows;
  for (double f : magnitudes) {
    for (const char* sign : {"attract", "repel"}) {
      const bool attract = sign[0] == 'a';
      if ((attract && signs == SignSelection::repel) || (!attract && signs == SignSelection::attract)) {
        continue;
      }
      const double signed_f = attract ? f : -f;
      for (double rho : positions) {
        configs.push_back(DimensionlessConfig::generic(rho, signed_f));
        SweepRow row{f, sign, rho, 0.0, std::nullopt};
        if (with_asymptote) {
          row.near_wall_e_over_eb = near_wall_energy(1, std::min(rho, 1.0 - rho), signed_f) * f * f;
        }
        rows.push_back(std::move(row));
      }
    }
  }
  SolverOptions opts;
  opts.execution = exec;
  const auto energies = ground_state_energies(configs, opts);
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i].e_over_eb = energies[i] * rows[i].f * rows[i].f;
  return rows;
}

std::string sweep_csv(std::span<const SweepRow> rows, bool with_asymptote) {
  std::string out = with_asymptote ? "f,sign,rho,E_over_EB,near_wall_E_over_EB\n" : "f,sign,rho,E_over_EB\n";
  for (const auto& r : rows) {
    out += format_number(r.f) + "," + r.sign + "," + format_number(r.rho) + "," +
           format_number(r.e_over_eb);
    if (with_asymptote) out += "," + format_number(r.near_wall_e_over_eb.value_or(NAN));
    out += "\n";
  }
  return out;
}

std::size_t default_oracle_m(double f) {
  return std::max<std::size_t>(2000, static_cast<std::size_t>(std::ceil(400.0 / std::abs(f))));
}

RunReport run_checks(const DimensionlessConfig& config, const CheckOptions& options) {
  RunReport report;
  report.command = "check";
  auto states = lowest_states(config, options.count);
  report.config = echo_config(config, kDefaultKMax);

  std::vector<PiecewiseWave> waves;
  for (auto& s : states) {
    if (options.perturb != 0.0) {
      if (auto* pos = std::get_if<OrdinaryPositive>(&s.kind); pos && pos->kL > 0.0) {
        pos->kL += options.perturb;
        s.energy = pos->kL * pos->kL;
        waves.push_back(oscillatory_wave(pos->kL, config));
        continue;
      }
      if (auto* neg = std::get_if<OrdinaryNegative>(&s.kind)) {
        neg->kappaL += options.perturb;
        s.energy = -neg->kappaL * neg->kappaL;
        waves.push_back(evanescent_wave(neg->kappaL, config));
        continue;
      }
    }
    waves.push_back(build_wave(s, config));
  }
  for (const auto& s : states) report.entries.push_back(to_entry(s));

  double off_diag = 0.0;
  double diag_dev = 0.0;
  for (std::size_t i = 0; i < waves.size(); ++i) {
    for (std::size_t j = i; j < waves.size(); ++j) {
      const double g = inner_product(waves[i], waves[j]);
      if (i == j) {
        diag_dev = std::max(diag_dev, std::abs(g - 1.0));
      } else {
        off_diag = std::max(off_diag, std::abs(g));
      }
    }
  }
  double continuity = 0.0;
  double jump = 0.0;
  for (const auto& w : waves) {
    const auto d = matching_defect(w, config);
    continuity = std::max(continuity, d.continuity);
    jump = std::max(jump, d.jump);
  }
  report.checks.push_back({"gram_offdiag_max", off_diag, 1e-9, off_diag <= 1e-9});
  report.checks.push_back({"gram_diag_max_dev", diag_dev, 1e-12, diag_dev <= 1e-12});
  report.checks.push_back({"continuity_defect_max", continuity, 1e-10, continuity <= 1e-10});
  report.checks.push_back({"jump_defect_max", jump, 1e-8, jump <= 1e-8});

  const std::size_t m = options.oracle_m > 0 ? options.oracle_m : default_oracle_m(config.f());
  const auto oracle = extrapolated_spectrum(config, states.size(), m);
  for (std::size_t i = 0; i < states.size() && i < oracle.size(); ++i) {
    const double e = states[i].energy;
    const double delta = std::abs(oracle[i] - e);
    const double allowed = std::max(1e-6 * std::abs(e), std::abs(e) < 1.0 ? 1e-4 : 0.0);
    report.checks.push_back(
        {"oracle_level_" + std::to_string(i + 1), delta, allowed, delta <= allowed});
  }
  return report;
}

std::string check_table(const RunReport& report) {
  std::ostringstream out;
  out << "check                    value                    tolerance     result\n";
  for (const auto& c : report.checks) {
    std::string name = c.name;
    std::string value = format_number(c.value);
    std::string tol = format_number(c.tolerance);
    name.resize(std::max<std::size_t>(name.size(), 24), ' ');
    value.resize(std::max<std::size_t>(value.size(), 24), ' ');
    tol.resize(std::max<std::size_t>(tol.size(), 13), ' ');
    out << name << ' ' << value << ' ' << tol << ' ' << (c.passed ? "PASS" : "FAIL") << '\n';
  }
  out << (report.all_passed() ? "all checks passed\n" : "some checks FAILED\n");
  return out.str();
}

std::string spectrum_csv(std::span<const EigenState> entries, const DimensionlessConfig& config) {
  std::string out = "kind,n,j,wavenumber,kL_over_pi,energy,E_over_EB,residual\n";
  const double f2 = config.f() * config.f();
  for (const auto& s : entries) {
    const auto e = to_entry(s);
    out += e.kind + ",";
    out += s.is_nodal() ? std::to_string(e.n) + "," + std::to_string(e.j) + "," : ",,";
    out += format_number(e.wavenumber) + ",";
    out += s.is_negative() ? "" : format_number(e.wavenumber / kPi);
    out += "," + format_number(e.energy) + "," + format_number(e.energy * f2) + "," +
           format_number(e.residual) + "\n";
  }
  return out;
}

std::string plot_script(const std::string& dispersion_csv_path, const std::string& sweep_csv_path) {
  std::ostringstream s;
  s << "# gnuplot script: dispersion curve and ground-state sweep\n"
    << "set datafile separator ','\n"
    << "set datafile missing ''\n"
    << "set terminal pngcairo size 1200,500\n"
    << "set output 'wellspec.png'\n"
    << "set multiplot layout 1,2\n"
    << "set xlabel 'kL/pi'\n"
    << "set ylabel 'RHS'\n"
    << "set yrange [-10:10]\n"
    << "plot '" << dispersion_csv_path << "' every ::1 using 1:2 with lines title 'RHS'\n"
    << "set xlabel 'rho'\n"
    << "set ylabel 'E/E_B'\n"
    << "set autoscale y\n"
    << "plot for [s in 'attract repel'] '" << sweep_csv_path
    << "' every ::1 using 3:(strcol(2) eq s ? $4 : NaN) with lines title s\n"
    << "unset multiplot\n";
  return s.str();
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectrum of a delta potential inside an infinite square well"};
  app.require_subcommand(1);

  PositionFlags spec_pos;
  double spec_f = 0.0;
  double spec_kmax = 20.0;
  std::size_t spec_count = 0;
  std::string spec_format = "csv";
  std::string spec_out;
  bool spec_timing = false;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Sorted eigenvalues with kind labels");
  spec_pos.attach(*spectrum_cmd);
  spectrum_cmd->add_option("--f", spec_f, "Coupling f (negative: repulsive)")->required();
  spectrum_cmd->add_option("--kmax", spec_kmax, "Ceiling on kL in units of pi");
  spectrum_cmd->add_option("--count", spec_count, "Keep only the lowest N entries (0: all)");
  spectrum_cmd->add_option("--format", spec_format)->check(CLI::IsMember({"csv", "json"}));
  spectrum_cmd->add_option("--out", spec_out, "Output file (default stdout)");
  spectrum_cmd->add_flag("--timing", spec_timing, "Record elapsed time in the JSON report");

  PositionFlags curve_pos;
  double curve_kmax = 9.0;
  int curve_spp = 400;
  std::string curve_out;
  auto* curve_cmd = app.add_subcommand("dispersion-curve", "Right-hand side of the dispersion relation");
  curve_pos.attach(*curve_cmd);
  curve_cmd->add_option("--kmax", curve_kmax, "Upper end in units of pi");
  curve_cmd->add_option("--samples-per-pi", curve_spp);
  curve_cmd->add_option("--out", curve_out);

  std::string sweep_f = "0.1,0.4,0.5";
  std::string sweep_signs = "both";
  int sweep_steps = 199;
  std::string sweep_out;
  bool sweep_asymptote = false;
  auto* sweep_cmd = app.add_subcommand("sweep-ground", "Ground-state energy against position");
  sweep_cmd->add_option("--f-list", sweep_f, "Comma-separated coupling magnitudes");
  sweep_cmd->add_option("--signs", sweep_signs)->check(CLI::IsMember({"both", "attract", "repel"}));
  sweep_cmd->add_option("--rho-steps", sweep_steps);
  sweep_cmd->add_option("--out", sweep_out);
  sweep_cmd->add_flag("--with-asymptote", sweep_asymptote, "Add the near-wall asymptotic column");

  PositionFlags check_pos;
  double check_f = 0.0;
  CheckOptions check_opts;
  std::string check_json;
  bool check_timing = false;
  auto* check_cmd = app.add_subcommand("check", "Orthonormality, matching and oracle checks");
  check_pos.attach(*check_cmd);
  check_cmd->add_option("--f", check_f)->required();
  check_cmd->add_option("--count", check_opts.count);
  check_cmd->add_option("--oracle-m", check_opts.oracle_m, "Oracle basis size (default: auto)");
  check_cmd->add_option("--perturb", check_opts.perturb, "Shift every ordinary root (checker self-test)");
  check_cmd->add_option("--json", check_json, "Also write the JSON report here");
  check_cmd->add_flag("--timing", check_timing);

  std::string plot_dispersion = "dispersion.csv";
  std::string plot_sweep = "sweep.csv";
  std::string plot_out;
  auto* plot_cmd = app.add_subcommand("plot-script", "gnuplot script for the CSV outputs");
  plot_cmd->add_option("--dispersion", plot_dispersion);
  plot_cmd->add_option("--sweep", plot_sweep);
  plot_cmd->add_option("--out", plot_out);

  std::vector<std::string> argv_storage{"wellspec"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    app.exit(e, err, err);
    return kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };

  try {
    if (spectrum_cmd->parsed()) {
      if (!(spec_kmax > 0.0)) throw UsageError("--kmax must be positive");
      const DimensionlessConfig config(spec_pos.resolve(), spec_f);
      const double k_max = spec_kmax * kPi;
      auto spectrum = full_spectrum(config, k_max);
      auto& entries = spectrum.entries;
      if (spec_count > 0 && entries.size() > spec_count) entries.resize(spec_count);
      if (spec_format == "json") {
        RunReport report;
        report.command = "spectrum";
        report.config = echo_config(config, k_max);
        for (const auto& s : entries) report.entries.push_back(to_entry(s));
        if (spec_timing) report.elapsed_seconds = elapsed();
        emit(spec_out, to_json(report), out);
      } else {
        emit(spec_out, spectrum_csv(entries, config), out);
      }
    } else if (curve_cmd->parsed()) {
      const auto points = dispersion_curve(curve_pos.resolve(), curve_kmax, curve_spp);
      emit(curve_out, dispersion_curve_csv(points), out);
    } else if (sweep_cmd->parsed()) {
      const auto f_list = parse_list(sweep_f);
      const SignSelection signs = sweep_signs == "attract" ? SignSelection::attract
                                  : sweep_signs == "repel" ? SignSelection::repel
                                                           : SignSelection::both;
      apply_thread_cap_from_env();
      const auto rows = sweep_ground(f_list, signs, sweep_steps, sweep_asymptote);
      emit(sweep_out, sweep_csv(rows, sweep_asymptote), out);
    } else if (check_cmd->parsed()) {
      if (check_opts.count < 1) throw UsageError("--count must be positive");
      const DimensionlessConfig config(check_pos.resolve(), check_f);
      auto report = run_checks(config, check_opts);
      if (check_timing) report.elapsed_seconds = elapsed();
      out << check_table(report);
      if (!check_json.empty()) emit(check_json, to_json(report), out);
      return report.all_passed() ? kExitOk : kExitCheck;
    } else if (plot_cmd->parsed()) {
      emit(plot_out, plot_script(plot_dispersion, plot_sweep), out);
    }
  } catch (const SolverFailure& e) {
    err << "solver failure: " << e.what() << " [bracket " << format_number(e.bracket_lo()) << ", "
        << format_number(e.bracket_hi()) << "]\n";
    return kExitSolver;
  } catch (const ConvergenceFailure& e) {
    err << "solver failure: " << e.what() << "\n";
    return kExitSolver;
  } catch (const PositionOutOfRange& e) {
    err << "invalid flags: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidCoupling& e) {
    err << "invalid flags: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "invalid flags: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "solver failure: " << e.what() << "\n";
    return kExitSolver;
  }
  return kExitOk;
}

}  // namespace wellspec::cli
