// rotosc: spectra of the rotating harmonic oscillator.
//
// Subcommands: roots, exact, ritz, oracle, sweep, figure, verify.
// Exit codes: 0 success, 1 usage error, 2 numerical failure,
// 3 verification failure.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rotosc/eigenfunction.hpp"
#include "rotosc/errors.hpp"
#include "rotosc/model.hpp"
#include "rotosc/oracle.hpp"
#include "rotosc/recurrence.hpp"
#include "rotosc/ritz.hpp"
#include "rotosc/sweep.hpp"
#include "rotosc/truncation.hpp"
#include "rotosc/version.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string fmt(double x, const char* spec = "%.12g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, x);
  return buf;
}

struct GlobalOptions {
  bool json_output = false;
  std::string outdir;
  std::string manifest_name = "manifest.json";
};

fs::path resolve_outdir(const GlobalOptions& global, const std::string& fallback) {
  if (!global.outdir.empty()) return global.outdir;
  if (const char* env = std::getenv("ROTOSC_OUTDIR")) return env;
  return fallback;
}

void write_manifest(const fs::path& dir, const std::string& command, const json& config,
                    const json& tolerances, const std::string& name) {
  json manifest;
  manifest["version"] = rotosc::version_string;
  manifest["command"] = command;
  manifest["config"] = config;
  manifest["tolerances"] = tolerances;
  std::ofstream os(dir / name);
  os << manifest.dump(2) << '\n';
}

json ritz_options_json(const rotosc::RitzOptions& options) {
  return json{{"mode", options.mode == rotosc::RitzMode::Precise ? "precise" : "fast"},
              {"tau", options.tau},
              {"precision_bits", options.precision_bits}};
}

// ---------------------------------------------------------------- roots ----

int run_roots(const GlobalOptions& global, int n, int l, const std::string& dump_table) {
  const std::vector<double> roots = rotosc::truncation_roots(n, l);
  if (!dump_table.empty()) {
    std::ofstream os(dump_table);
    os << rotosc::table_to_json(rotosc::build_table(n, l)).dump(2) << '\n';
  }
  if (global.json_output) {
    json out;
    out["n"] = n;
    out["l"] = l;
    json list = json::array();
    for (size_t k = 0; k < roots.size(); ++k) {
      const double w = rotosc::truncation_energy(n, l, roots[k]);
      list.push_back({{"i", k + 1},
                      {"a", roots[k]},
                      {"W", w},
                      {"lambda", rotosc::lambda_from_w(w, roots[k])}});
    }
    out["roots"] = list;
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  std::cout << "# truncation roots for n=" << n << " l=" << l << "\n";
  std::cout << "i\ta\tW\tlambda\n";
  for (size_t k = 0; k < roots.size(); ++k) {
    const double w = rotosc::truncation_energy(n, l, roots[k]);
    std::cout << k + 1 << '\t' << fmt(roots[k], "%.6f") << '\t' << fmt(w, "%.6f") << '\t'
              << fmt(rotosc::lambda_from_w(w, roots[k]), "%.6f") << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------- exact ----

int run_exact(const GlobalOptions& global, int n, int l, const std::string& out_file,
              const std::string& wave_file, int wave_i) {
  std::vector<rotosc::ExactSolution> sols = rotosc::exact_solutions(n, l);
  for (auto& sol : sols) {
    rotosc::WaveForm w{sol};
    sol.node_count = rotosc::count_nodes(w);
  }
  if (!wave_file.empty()) {
    if (wave_i < 1 || wave_i > static_cast<int>(sols.size()))
      throw std::invalid_argument("exact: --wave-i outside 1..n+1");
    std::ofstream os(wave_file);
    rotosc::write_wave_csv(os, rotosc::WaveForm{sols[static_cast<size_t>(wave_i) - 1]},
                           rotosc::standard_residual_grid());
  }
  if (global.json_output) {
    json out;
    out["n"] = n;
    out["l"] = l;
    json list = json::array();
    for (const auto& sol : sols)
      list.push_back({{"i", sol.i},
                      {"a", sol.a_root},
                      {"W", sol.w},
                      {"lambda", rotosc::lambda_from_w(sol.w, sol.a_root)},
                      {"node_count", *sol.node_count},
                      {"coefficients", sol.coeffs}});
    out["solutions"] = list;
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  if (!out_file.empty()) {
    std::ofstream os(out_file);
    rotosc::write_solutions_csv(os, sols);
  } else {
    rotosc::write_solutions_csv(std::cout, sols);
  }
  return 0;
}

// ----------------------------------------------------------------- ritz ----

int run_ritz(const GlobalOptions& global, int l, double a, int size, int count, bool precise) {
  rotosc::RitzOptions options;
  if (precise) options.mode = rotosc::RitzMode::Precise;
  const rotosc::RitzSpectrum spec = rotosc::ritz_spectrum(l, a, size, options);
  const int shown =
      count > 0 ? std::min<int>(count, static_cast<int>(spec.eigenvalues.size()))
                : static_cast<int>(spec.eigenvalues.size());
  if (global.json_output) {
    json out;
    out["l"] = l;
    out["a"] = a;
    out["basis_size"] = size;
    out["effective_size"] = spec.effective_size;
    out["engine"] = ritz_options_json(options);
    out["eigenvalues"] =
        std::vector<double>(spec.eigenvalues.begin(), spec.eigenvalues.begin() + shown);
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  for (int k = 0; k < shown; ++k) std::cout << fmt(spec.eigenvalues[static_cast<size_t>(k)], "%.12f") << '\n';
  return 0;
}

// --------------------------------------------------------------- oracle ----

int run_oracle(const GlobalOptions& global, int l, double a, int count, double q_max, int points) {
  rotosc::FdGrid grid = rotosc::default_fd_grid(a);
  if (q_max > 0) grid.q_max = q_max;
  if (points > 0) grid.points = points;
  const std::vector<double> values = rotosc::fd_spectrum(l, a, grid, count);
  if (global.json_output) {
    json out;
    out["l"] = l;
    out["a"] = a;
    out["q_max"] = grid.q_max;
    out["points"] = grid.points;
    out["eigenvalues"] = values;
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  for (double v : values) std::cout << fmt(v, "%.12f") << '\n';
  return 0;
}

// ---------------------------------------------------------- sweep/figure ----

json sweep_config_json(const rotosc::SweepConfig& config) {
  return json{{"l", config.l},
              {"n_max", config.n_max},
              {"nu_max", config.nu_max},
              {"a_min", config.a_min},
              {"a_max", config.a_max},
              {"steps", config.steps},
              {"basis_size", config.basis_size},
              {"ritz", ritz_options_json(config.ritz)}};
}

int run_sweep(const GlobalOptions& global, const rotosc::SweepConfig& config,
              const std::string& default_dir, const std::string& command) {
  const fs::path outdir = resolve_outdir(global, default_dir);
  const rotosc::SpectrumDataset ds = rotosc::build_dataset(config);
  rotosc::write_dataset_csv(ds, outdir);
  rotosc::write_plot_script(ds, outdir / "plot.gp");
  write_manifest(outdir, command, sweep_config_json(config),
                 json{{"csv_digits", 17}, {"ritz_tau", config.ritz.tau}}, global.manifest_name);
  json summary;
  summary["outdir"] = outdir.string();
  summary["points"] = ds.points.size();
  summary["curves"] = ds.curves.size();
  summary["grid_points"] = ds.a_grid.size();
  if (global.json_output)
    std::cout << summary.dump(2) << '\n';
  else
    std::cout << "wrote " << ds.points.size() << " points and " << ds.curves.size()
              << " curves (plus mirrored family) to " << outdir.string() << '\n';
  return 0;
}

// --------------------------------------------------------------- verify ----

struct VerifyConfig {
  int l = 0;
  int n_max = 10;
  int nu_max = 10;
  int basis_size = 40;
  double tol = 1e-5;
  int steps = 121;
  double a_min = -4.0;
  double a_max = 4.0;
  int hft_samples = 20;
  bool fast = false;
};

int run_verify(const GlobalOptions& global, const VerifyConfig& config) {
  json report;
  bool pass = true;

  // --- intersections: curve nu = i-1 (and the mirrored family) pass through
  // every truncation point, Ritz evaluated exactly at the roots
  rotosc::RitzOptions engine;
  if (!config.fast) engine.mode = rotosc::RitzMode::Precise;
  std::map<double, std::vector<double>> cache;
  auto spectrum_at = [&](double a) -> const std::vector<double>& {
    auto it = cache.find(a);
    if (it == cache.end())
      it = cache
               .emplace(a, rotosc::ritz_spectrum(config.l, a, config.basis_size, engine).eigenvalues)
               .first;
    return it->second;
  };

  double worst_gap = 0.0, worst_mirror = 0.0;
  std::string worst_label;
  int checked = 0;
  for (int n = 1; n <= config.n_max; ++n) {
    for (const auto& sol : rotosc::exact_solutions(n, config.l)) {
      const int nu = sol.i - 1;
      const int nu_mirror = sol.n + 1 - sol.i;
      const auto& direct = spectrum_at(sol.a_root);
      const auto& flipped = spectrum_at(-sol.a_root);
      if (nu >= static_cast<int>(direct.size()) ||
          nu_mirror >= static_cast<int>(flipped.size()))
        throw rotosc::numerical_error("verify: basis too small for requested curve index");
      const double gap = std::abs(direct[static_cast<size_t>(nu)] - sol.w);
      const double mgap = std::abs(flipped[static_cast<size_t>(nu_mirror)] - sol.w);
      ++checked;
      if (gap > worst_gap) {
        worst_gap = gap;
        worst_label = "n=" + std::to_string(n) + " i=" + std::to_string(sol.i);
      }
      worst_mirror = std::max(worst_mirror, mgap);
      if (gap > config.tol || mgap > config.tol) pass = false;
    }
  }
  report["intersections"] = {{"checked", checked},
                             {"worst_gap", worst_gap},
                             {"worst_mirror_gap", worst_mirror},
                             {"worst", worst_label},
                             {"tol", config.tol},
                             {"pass", worst_gap <= config.tol && worst_mirror <= config.tol}};

  // --- lambda dichotomy on a sampled dataset
  rotosc::SweepConfig sweep;
  sweep.l = config.l;
  sweep.n_max = config.n_max;
  sweep.nu_max = config.nu_max;
  sweep.a_min = config.a_min;
  sweep.a_max = config.a_max;
  sweep.steps = config.steps;
  sweep.basis_size = config.basis_size;
  const rotosc::SpectrumDataset ds = rotosc::build_dataset(sweep);
  const rotosc::LambdaReport lam = rotosc::lambda_report(ds);
  report["lambda"] = {{"points", lam.n_points},
                      {"max_point_deviation", lam.max_point_deviation},
                      {"curve_samples", lam.n_curve_samples},
                      {"integer_hits", lam.integer_hits},
                      {"integer_fraction", lam.integer_fraction},
                      {"min_integer_distance", lam.min_integer_distance},
                      {"pass", lam.pass}};
  pass = pass && lam.pass;

  // --- Hellmann-Feynman on random curve samples
  std::mt19937 rng(20240817);
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  double worst_hft = 0.0;
  bool hft_pass = true;
  for (int trial = 0; trial < config.hft_samples; ++trial) {
    const int nu = static_cast<int>(rng() % 4);
    const double a = dist(rng);
    const double h = 1e-4;
    const double wp =
        rotosc::ritz_spectrum(config.l, a + h, config.basis_size).eigenvalues[static_cast<size_t>(nu)];
    const double wm =
        rotosc::ritz_spectrum(config.l, a - h, config.basis_size).eigenvalues[static_cast<size_t>(nu)];
    const double slope = (wp - wm) / (2 * h);
    const double qbar = rotosc::ritz_expectation_q(config.l, a, config.basis_size, nu);
    worst_hft = std::max(worst_hft, std::abs(slope + qbar));
    if (!(slope < 0.0) || std::abs(slope + qbar) > 1e-4) hft_pass = false;
  }
  report["hellmann_feynman"] = {{"samples", config.hft_samples},
                                {"worst_deviation", worst_hft},
                                {"tol", 1e-4},
                                {"pass", hft_pass}};
  pass = pass && hft_pass;
  report["pass"] = pass;

  if (global.json_output) {
    std::cout << report.dump(2) << '\n';
  } else {
    std::cout << "intersections: " << (report["intersections"]["pass"].get<bool>() ? "pass" : "FAIL")
              << " (checked " << checked << ", worst gap " << fmt(worst_gap, "%.3g")
              << ", worst mirrored gap " << fmt(worst_mirror, "%.3g") << ")\n";
    std::cout << "lambda dichotomy: " << (lam.pass ? "pass" : "FAIL") << " (points "
              << lam.n_points << ", max point deviation " << fmt(lam.max_point_deviation, "%.3g")
              << ", off-set samples " << lam.n_curve_samples << ", integer fraction "
              << fmt(lam.integer_fraction, "%.3g") << ")\n";
    std::cout << "hellmann-feynman: " << (hft_pass ? "pass" : "FAIL") << " (worst deviation "
              << fmt(worst_hft, "%.3g") << ")\n";
  }
  if (!pass) throw rotosc::verification_error("verification failed");
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"rotating harmonic oscillator spectra: exact truncation solutions, "
               "Ritz eigencurves, finite-difference oracle"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_flag("--json", global.json_output, "emit machine-readable JSON instead of tables");
  app.add_option("--outdir", global.outdir,
                 "output directory for file-producing commands (env ROTOSC_OUTDIR)");
  app.add_option("--seed-manifest", global.manifest_name,
                 "file name of the run manifest written next to outputs");

  int n = 1, l = 0, ritz_count = 0, oracle_count = 4, size = 40, points = 0;
  double a = 0.0, q_max = 0.0;
  bool precise = false;
  std::string out_file, dump_table;

  auto* roots_cmd = app.add_subcommand("roots", "truncation roots of c_{n+1}(a)");
  roots_cmd->fallthrough();
  roots_cmd->add_option("--n", n, "truncation order")->required()->check(CLI::NonNegativeNumber);
  roots_cmd->add_option("--l", l, "rotational quantum number")->check(CLI::NonNegativeNumber);
  roots_cmd->add_option("--dump-table", dump_table, "write the exact c_j(a) table as JSON");

  auto* exact_cmd = app.add_subcommand("exact", "exact solutions as CSV");
  exact_cmd->fallthrough();
  exact_cmd->add_option("--n", n, "truncation order")->required()->check(CLI::NonNegativeNumber);
  exact_cmd->add_option("--l", l, "rotational quantum number")->check(CLI::NonNegativeNumber);
  exact_cmd->add_option("--out", out_file, "CSV output path (default stdout)");

  auto* ritz_cmd = app.add_subcommand("ritz", "variational eigenvalues at (l, a)");
  ritz_cmd->fallthrough();
  ritz_cmd->add_option("--l", l)->check(CLI::NonNegativeNumber);
  ritz_cmd->add_option("--a", a)->required();
  ritz_cmd->add_option("--size", size, "basis size")->check(CLI::PositiveNumber);
  ritz_cmd->add_option("--count", ritz_count, "print only the lowest eigenvalues");
  ritz_cmd->add_flag("--precise", precise, "extended-precision engine, no conditioning filter");

  auto* oracle_cmd = app.add_subcommand("oracle", "finite-difference eigenvalues at (l, a)");
  oracle_cmd->fallthrough();
  oracle_cmd->add_option("--l", l)->check(CLI::NonNegativeNumber);
  oracle_cmd->add_option("--a", a)->required();
  oracle_cmd->add_option("--count", oracle_count, "number of eigenvalues")->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--q-max", q_max, "box radius (default max(12, a+12))");
  oracle_cmd->add_option("--points", points, "grid points (default 4000)");

  rotosc::SweepConfig sweep_config;
  auto add_sweep_options = [&](CLI::App* cmd) {
    cmd->add_option("--l", sweep_config.l)->check(CLI::NonNegativeNumber);
    cmd->add_option("--n-max", sweep_config.n_max)->check(CLI::PositiveNumber);
    cmd->add_option("--nu-max", sweep_config.nu_max)->check(CLI::NonNegativeNumber);
    cmd->add_option("--a-min", sweep_config.a_min);
    cmd->add_option("--a-max", sweep_config.a_max);
    cmd->add_option("--steps", sweep_config.steps);
    cmd->add_option("--size", sweep_config.basis_size)->check(CLI::PositiveNumber);
  };
  auto* sweep_cmd = app.add_subcommand("sweep", "curves + scatter + parabolas as CSV");
  sweep_cmd->fallthrough();
  add_sweep_options(sweep_cmd);
  auto* figure_cmd =
      app.add_subcommand("figure", "sweep with the default window and a gnuplot script");
  figure_cmd->fallthrough();
  add_sweep_options(figure_cmd);

  VerifyConfig verify_config;
  auto* verify_cmd = app.add_subcommand("verify", "intersection + lambda + Hellmann-Feynman checks");
  verify_cmd->fallthrough();
  verify_cmd->add_option("--l", verify_config.l)->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--n-max", verify_config.n_max)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--nu-max", verify_config.nu_max)->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--size", verify_config.basis_size)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--tol", verify_config.tol, "intersection tolerance");
  verify_cmd->add_option("--steps", verify_config.steps);
  verify_cmd->add_option("--a-min", verify_config.a_min);
  verify_cmd->add_option("--a-max", verify_config.a_max);
  verify_cmd->add_option("--hft-samples", verify_config.hft_samples);
  verify_cmd->add_flag("--fast", verify_config.fast,
                       "use the double-precision engine for the point checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (roots_cmd->parsed()) return run_roots(global, n, l, dump_table);
    if (exact_cmd->parsed()) return run_exact(global, n, l, out_file);
    if (ritz_cmd->parsed()) return run_ritz(global, l, a, size, ritz_count, precise);
    if (oracle_cmd->parsed()) return run_oracle(global, l, a, oracle_count, q_max, points);
    if (sweep_cmd->parsed()) return run_sweep(global, sweep_config, "sweep_out", "sweep");
    if (figure_cmd->parsed()) return run_sweep(global, sweep_config, "figure_out", "figure");
    if (verify_cmd->parsed()) return run_verify(global, verify_config);
  } catch (const rotosc::verification_error& e) {
    std::cerr << "verification failure: " << e.what() << '\n';
    return 3;
  } catch (const rotosc::numerical_error& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid arguments: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid arguments: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
