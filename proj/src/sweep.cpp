#include "rotosc/sweep.hpp"

#include "rotosc/eigenfunction.hpp"
#include "rotosc/errors.hpp"
#include "rotosc/model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

namespace rotosc {

namespace {

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<double> make_grid(double lo, double hi, int steps) {
  std::vector<double> grid(static_cast<size_t>(steps));
  for (int k = 0; k < steps; ++k)
    grid[static_cast<size_t>(k)] = lo + (hi - lo) * k / (steps - 1);
  return grid;
}

std::vector<double> curve_values(int l, double a, const SweepConfig& config) {
  RitzSpectrum spec;
  try {
    spec = ritz_spectrum(l, a, config.basis_size, config.ritz);
  } catch (const numerical_error& err) {
    std::ostringstream msg;
    msg << err.what() << " (at a=" << a << ")";
    throw numerical_error(msg.str());
  }
  if (static_cast<int>(spec.eigenvalues.size()) < config.nu_max + 1) {
    std::ostringstream msg;
    msg << "conditioning left only " << spec.eigenvalues.size() << " eigenvalues, need nu_max+1="
        << config.nu_max + 1 << " (at a=" << a << ")";
    throw numerical_error(msg.str());
  }
  return spec.eigenvalues;
}

// cubic Lagrange interpolation through the 4 grid samples nearest to x
double interpolate_curve(const std::vector<double>& grid, const std::vector<double>& w, double x) {
  const size_t n = grid.size();
  size_t hi = std::upper_bound(grid.begin(), grid.end(), x) - grid.begin();
  size_t first = (hi >= 2) ? hi - 2 : 0;
  if (first + 4 > n) first = n - 4;
  double acc = 0.0;
  for (size_t i = first; i < first + 4; ++i) {
    double term = w[i];
    for (size_t j = first; j < first + 4; ++j) {
      if (j == i) continue;
      term *= (x - grid[j]) / (grid[i] - grid[j]);
    }
    acc += term;
  }
  return acc;
}

} // namespace

SpectrumDataset build_dataset(const SweepConfig& config) {
  if (config.n_max < 1) throw std::invalid_argument("build_dataset: n_max must be >= 1");
  if (config.steps < 2) throw std::invalid_argument("build_dataset: steps must be >= 2");
  if (!(config.a_min < config.a_max))
    throw std::invalid_argument("build_dataset: a_min must be < a_max");
  if (config.nu_max < 0) throw std::invalid_argument("build_dataset: nu_max must be >= 0");

  SpectrumDataset ds;
  ds.config = config;
  ds.a_grid = make_grid(config.a_min, config.a_max, config.steps);

  ds.curves.reserve(static_cast<size_t>(config.nu_max) + 1);
  ds.mirrored.reserve(static_cast<size_t>(config.nu_max) + 1);
  for (int nu = 0; nu <= config.nu_max; ++nu) {
    ds.curves.push_back({nu, std::vector<double>(ds.a_grid.size())});
    ds.mirrored.push_back({nu, std::vector<double>(ds.a_grid.size())});
  }
  for (size_t k = 0; k < ds.a_grid.size(); ++k) {
    const std::vector<double> direct = curve_values(config.l, ds.a_grid[k], config);
    const std::vector<double> flipped = curve_values(config.l, -ds.a_grid[k], config);
    for (int nu = 0; nu <= config.nu_max; ++nu) {
      ds.curves[static_cast<size_t>(nu)].w[k] = direct[static_cast<size_t>(nu)];
      ds.mirrored[static_cast<size_t>(nu)].w[k] = flipped[static_cast<size_t>(nu)];
    }
  }

  for (int n = 1; n <= config.n_max; ++n) {
    for (ExactSolution& sol : exact_solutions(n, config.l)) {
      WaveForm wf{sol};
      const int nodes = count_nodes(wf);
      PointSummary p;
      p.n = n;
      p.i = sol.i;
      p.a = sol.a_root;
      p.w = sol.w;
      p.lambda = lambda_from_w(sol.w, sol.a_root);
      p.node_count = nodes;
      ds.points.push_back(p);
    }
  }

  for (int n : {1, config.n_max}) {
    ParabolaSeries par;
    par.n = n;
    par.w.reserve(ds.a_grid.size());
    for (double a : ds.a_grid) par.w.push_back(truncation_energy(n, config.l, a));
    ds.parabolas.push_back(std::move(par));
  }
  return ds;
}

IntersectionReport verify_intersections(const SpectrumDataset& ds, double tol,
                                        const IntersectionOptions& options) {
  IntersectionReport report;
  const double a_lo = ds.a_grid.front();
  const double a_hi = ds.a_grid.back();
  using Resolve = IntersectionOptions::Resolve;

  auto exact_curve_value = [&](double a, int nu) -> double {
    const RitzSpectrum spec = ritz_spectrum(ds.config.l, a, ds.config.basis_size, options.resolve_ritz);
    if (nu >= static_cast<int>(spec.eigenvalues.size()))
      throw numerical_error("verify_intersections: spectrum too short for requested curve index");
    return spec.eigenvalues[static_cast<size_t>(nu)];
  };

  auto gap_for = [&](const PointSummary& p, int nu, bool mirrored) -> std::optional<double> {
    // curve value at a = p.a; the mirrored family stores W_nu(-a) on the grid
    const bool in_grid = p.a >= a_lo && p.a <= a_hi;
    const bool have_curve = nu <= ds.config.nu_max;
    double w_curve = 0.0;
    bool resolved = false;
    if (options.resolve == Resolve::always || !in_grid || !have_curve) {
      if (options.resolve == Resolve::never) return std::nullopt;
      w_curve = exact_curve_value(mirrored ? -p.a : p.a, nu);
      resolved = true;
    } else {
      const auto& series = mirrored ? ds.mirrored[static_cast<size_t>(nu)].w
                                    : ds.curves[static_cast<size_t>(nu)].w;
      w_curve = interpolate_curve(ds.a_grid, series, p.a);
    }
    double gap = std::abs(w_curve - p.w);
    if (!resolved && options.resolve == Resolve::near_tol && gap > 0.5 * tol) {
      w_curve = exact_curve_value(mirrored ? -p.a : p.a, nu);
      gap = std::abs(w_curve - p.w);
    }
    return gap;
  };

  for (const PointSummary& p : ds.points) {
    const int nu_direct = p.i - 1;
    const int nu_mirror = p.n + 1 - p.i;

    std::ostringstream label;
    label << "n=" << p.n << " i=" << p.i << " a=" << p.a;

    if (auto gap = gap_for(p, nu_direct, false)) {
      ++report.checked;
      if (*gap > report.worst_gap) {
        report.worst_gap = *gap;
        report.worst_label = label.str();
      }
      if (*gap > tol) {
        report.pass = false;
        std::ostringstream msg;
        msg << "curve " << nu_direct << " misses point (" << label.str() << "): gap=" << *gap;
        report.failures.push_back(msg.str());
      }
    } else {
      ++report.skipped;
    }

    if (auto gap = gap_for(p, nu_mirror, true)) {
      ++report.mirror_checked;
      report.worst_mirror_gap = std::max(report.worst_mirror_gap, *gap);
      if (*gap > tol) {
        report.pass = false;
        std::ostringstream msg;
        msg << "mirrored curve " << nu_mirror << " misses point (" << label.str()
            << "): gap=" << *gap;
        report.failures.push_back(msg.str());
      }
    } else {
      ++report.skipped;
    }
  }
  return report;
}

LambdaReport lambda_report(const SpectrumDataset& ds) {
  LambdaReport report;
  const int l = ds.config.l;

  for (const PointSummary& p : ds.points) {
    const double expected = p.n + l + 1;
    report.max_point_deviation =
        std::max(report.max_point_deviation, std::abs(p.lambda - expected));
    ++report.n_points;
  }

  // truncation a-values per curve index: a_l^{(n, nu+1)}, n >= nu, collected
  // until the relevant root leaves the window on the left
  const double a_lo = ds.a_grid.front() - 1e-3;
  const double a_hi = ds.a_grid.back() + 1e-3;
  std::vector<std::vector<double>> exclusions(static_cast<size_t>(ds.config.nu_max) + 1);
  for (int n = 0; n <= 200; ++n) {
    const std::vector<double> roots = truncation_roots(n, l);
    for (int nu = 0; nu <= std::min(ds.config.nu_max, n); ++nu) {
      const double r = roots[static_cast<size_t>(nu)];
      if (r >= a_lo && r <= a_hi) exclusions[static_cast<size_t>(nu)].push_back(r);
    }
    if (n > ds.config.nu_max &&
        roots[static_cast<size_t>(std::min(ds.config.nu_max, n))] < a_lo)
      break;
  }

  for (const CurveSeries& curve : ds.curves) {
    const auto& excl = exclusions[static_cast<size_t>(curve.nu)];
    for (size_t k = 0; k < ds.a_grid.size(); ++k) {
      const double a = ds.a_grid[k];
      const bool near_truncation =
          std::any_of(excl.begin(), excl.end(), [a](double r) { return std::abs(a - r) < 1e-3; });
      if (near_truncation) continue;
      const double lambda = lambda_from_w(curve.w[k], a);
      const double dist = std::abs(lambda - std::round(lambda));
      ++report.n_curve_samples;
      report.min_integer_distance = std::min(report.min_integer_distance, dist);
      if (dist <= 1e-6) ++report.integer_hits;
    }
  }
  report.integer_fraction =
      report.n_curve_samples > 0
          ? static_cast<double>(report.integer_hits) / report.n_curve_samples
          : 0.0;
  report.pass = report.max_point_deviation <= 1e-10 && report.integer_hits == 0;
  return report;
}

void write_dataset_csv(const SpectrumDataset& ds, const std::filesystem::path& outdir) {
  std::filesystem::create_directories(outdir);

  auto write_curves = [&](const std::filesystem::path& name,
                          const std::vector<CurveSeries>& family) {
    std::ofstream os(outdir / name);
    os << "nu,a,W\n";
    for (const CurveSeries& curve : family)
      for (size_t k = 0; k < ds.a_grid.size(); ++k)
        os << curve.nu << ',' << fmt17(ds.a_grid[k]) << ',' << fmt17(curve.w[k]) << '\n';
  };
  write_curves("curves.csv", ds.curves);
  write_curves("curves_mirrored.csv", ds.mirrored);

  {
    std::ofstream os(outdir / "points.csv");
    os << "n,i,a,W,lambda,node_count\n";
    for (const PointSummary& p : ds.points)
      os << p.n << ',' << p.i << ',' << fmt17(p.a) << ',' << fmt17(p.w) << ',' << fmt17(p.lambda)
         << ',' << p.node_count << '\n';
  }
  {
    std::ofstream os(outdir / "parabolas.csv");
    os << "n,a,W\n";
    for (const ParabolaSeries& par : ds.parabolas)
      for (size_t k = 0; k < ds.a_grid.size(); ++k)
        os << par.n << ',' << fmt17(ds.a_grid[k]) << ',' << fmt17(par.w[k]) << '\n';
  }
}

void write_plot_script(const SpectrumDataset& ds, const std::filesystem::path& path) {
  std::ofstream os(path);
  os << "# gnuplot script for the spectral-curve dataset (run in the CSV directory)\n"
     << "set datafile separator ','\n"
     << "set xlabel 'a'\n"
     << "set ylabel 'W'\n"
     << "set key off\n"
     << "set xrange [" << fmt17(ds.a_grid.front()) << ':' << fmt17(ds.a_grid.back()) << "]\n"
     << "plot \\\n"
     << "  'curves.csv' skip 1 using 2:3 with dots lc rgb 'blue', \\\n"
     << "  'curves_mirrored.csv' skip 1 using 2:3 with dots lc rgb 'green', \\\n"
     << "  'parabolas.csv' skip 1 using 2:3 with dots lc rgb 'red', \\\n"
     << "  'points.csv' skip 1 using 3:4 with points pt 6 lc rgb 'red'\n"
     << "pause -1 'press enter'\n";
}

} // namespace rotosc
