#pragma once

#include "rotosc/ritz.hpp"
#include "rotosc/truncation.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace rotosc {

struct SweepConfig {
  int l = 0;
  int n_max = 30;
  int nu_max = 12;
  double a_min = -4.0;
  double a_max = 4.0;
  int steps = 161; ///< number of grid points, endpoints included
  int basis_size = 40;
  RitzOptions ritz;
};

struct CurveSeries {
  int nu = 0;
  std::vector<double> w; ///< sampled on the dataset a_grid
};

struct PointSummary {
  int n = 0;
  int i = 1;
  double a = 0.0;
  double w = 0.0;
  double lambda = 0.0;
  int node_count = 0;
};

struct ParabolaSeries {
  int n = 0;
  std::vector<double> w;
};

/// The Figure-1 content: Ritz eigencurves W_{nu,l}(a), the mirrored family
/// W_{nu,l}(-a), the truncation scatter, and the bounding parabolas for
/// n = 1 and n = n_max.
struct SpectrumDataset {
  SweepConfig config;
  std::vector<double> a_grid;
  std::vector<CurveSeries> curves;
  std::vector<CurveSeries> mirrored;
  std::vector<PointSummary> points;
  std::vector<ParabolaSeries> parabolas;
};

SpectrumDataset build_dataset(const SweepConfig& config);

struct IntersectionOptions {
  double tol = 1e-5;
  enum class Resolve { never, near_tol, always } resolve = Resolve::near_tol;
  RitzOptions resolve_ritz; ///< engine used for exact re-solves at a*
};

struct IntersectionReport {
  int checked = 0;
  int mirror_checked = 0;
  int skipped = 0; ///< points with no covering curve or outside the grid
  double worst_gap = 0.0;
  double worst_mirror_gap = 0.0;
  std::string worst_label;
  std::vector<std::string> failures;
  bool pass = true;
};

/// For each scatter point (a*, W*), checks that curve nu = i-1 passes
/// through it (cubic interpolation on the grid, optionally re-solved exactly
/// at a*) and that the mirrored family does as well (index n+1-i at a*).
IntersectionReport verify_intersections(const SpectrumDataset& ds, double tol,
                                        const IntersectionOptions& options = {});

struct LambdaReport {
  int n_points = 0;
  double max_point_deviation = 0.0; ///< max |lambda - (n+l+1)| over the scatter
  int n_curve_samples = 0;          ///< curve samples off the truncation set
  int integer_hits = 0;             ///< samples with lambda within 1e-6 of an integer
  double min_integer_distance = 1.0;
  double integer_fraction = 0.0;
  bool pass = true;
};

/// lambda = W/2 + a^2/8 - 1/2 is the integer n+l+1 at every truncation point
/// and generically non-integer elsewhere on the curves.
LambdaReport lambda_report(const SpectrumDataset& ds);

/// curves.csv / curves_mirrored.csv (nu,a,W), points.csv
/// (n,i,a,W,lambda,node_count), parabolas.csv (n,a,W); floats with 17
/// significant digits.
void write_dataset_csv(const SpectrumDataset& ds, const std::filesystem::path& outdir);

/// Self-contained gnuplot script rendering the dataset CSV files.
void write_plot_script(const SpectrumDataset& ds, const std::filesystem::path& path);

} // namespace rotosc
