#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rotosc/sweep.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

using namespace rotosc;

namespace {

SweepConfig small_config() {
  SweepConfig config;
  config.l = 0;
  config.n_max = 2;
  config.nu_max = 3;
  config.a_min = -3.0;
  config.a_max = 3.0;
  config.steps = 61;
  config.basis_size = 30;
  return config;
}

} // namespace

TEST_CASE("scatter content for n_max=2") {
  const SpectrumDataset ds = build_dataset(small_config());
  REQUIRE(ds.points.size() == 5); // (n+1) points for n = 1, 2
  std::multiset<double> ws;
  for (const auto& p : ds.points) ws.insert(p.w);
  CHECK(ws.count(4.5) == 2);
  // a = +-sqrt2 at W=4.5, -sqrt6, 0, sqrt6 at n=2
  const auto& p12 = ds.points[0];
  CHECK(p12.n == 1);
  CHECK(std::abs(p12.a + std::sqrt(2.0)) < 1e-12);
  bool found_zero = false;
  for (const auto& p : ds.points)
    if (p.n == 2 && p.i == 2) {
      found_zero = true;
      CHECK(p.a == 0.0);
      CHECK(p.w == doctest::Approx(7.0).epsilon(1e-14));
      CHECK(p.node_count == 1);
    }
  CHECK(found_zero);
}

TEST_CASE("scatter count follows sum_{n=1}^{n_max} (n+1)") {
  SweepConfig config = small_config();
  config.n_max = 6;
  const SpectrumDataset ds = build_dataset(config);
  CHECK(ds.points.size() == 2 + 3 + 4 + 5 + 6 + 7);
}

TEST_CASE("points at a=0 carry the harmonic energies 2n+3, n even") {
  SweepConfig config = small_config();
  config.n_max = 6;
  const SpectrumDataset ds = build_dataset(config);
  for (const auto& p : ds.points)
    if (p.a == 0.0) {
      CHECK(p.n % 2 == 0);
      CHECK(p.w == doctest::Approx(2.0 * p.n + 3.0).epsilon(1e-14));
    }
}

TEST_CASE("scatter is symmetric under a -> -a") {
  const SpectrumDataset ds = build_dataset(small_config());
  for (const auto& p : ds.points) {
    bool found = false;
    for (const auto& q : ds.points)
      if (q.n == p.n && std::abs(q.a + p.a) < 1e-10 && std::abs(q.w - p.w) < 1e-12) found = true;
    CHECK(found);
  }
}

TEST_CASE("points lie between the n=1 and n=n_max parabolas") {
  SweepConfig config = small_config();
  config.n_max = 8;
  const SpectrumDataset ds = build_dataset(config);
  for (const auto& p : ds.points) {
    const double lower = truncation_energy(1, config.l, p.a);
    const double upper = truncation_energy(config.n_max, config.l, p.a);
    CHECK(p.w >= lower - 1e-12);
    CHECK(p.w <= upper + 1e-12);
  }
}

TEST_CASE("curves strictly decrease in a") {
  const SpectrumDataset ds = build_dataset(small_config());
  for (const auto& curve : ds.curves)
    for (size_t k = 1; k < curve.w.size(); ++k) CHECK(curve.w[k] < curve.w[k - 1]);
  // mirrored curves increase on the same grid
  for (const auto& curve : ds.mirrored)
    for (size_t k = 1; k < curve.w.size(); ++k) CHECK(curve.w[k] > curve.w[k - 1]);
}

TEST_CASE("mirrored family equals the direct family at a=0") {
  const SpectrumDataset ds = build_dataset(small_config());
  const size_t mid = ds.a_grid.size() / 2;
  REQUIRE(ds.a_grid[mid] == 0.0);
  for (int nu = 0; nu <= ds.config.nu_max; ++nu)
    CHECK(ds.curves[static_cast<size_t>(nu)].w[mid] ==
          ds.mirrored[static_cast<size_t>(nu)].w[mid]);
}

TEST_CASE("intersection verification on a small dataset") {
  const SpectrumDataset ds = build_dataset(small_config());
  const IntersectionReport report = verify_intersections(ds, 1e-5);
  CHECK(report.pass);
  CHECK(report.checked == 5);
  CHECK(report.mirror_checked == 5);
  CHECK(report.worst_gap <= 1e-5);
  CHECK(report.worst_mirror_gap <= 1e-5);
  CHECK(report.failures.empty());
}

TEST_CASE("intersection verification flags a corrupted point") {
  SpectrumDataset ds = build_dataset(small_config());
  ds.points[2].w += 1e-3;
  IntersectionOptions options;
  options.resolve = IntersectionOptions::Resolve::never;
  const IntersectionReport report = verify_intersections(ds, 1e-5, options);
  CHECK(!report.pass);
  CHECK(!report.failures.empty());
}

TEST_CASE("lambda dichotomy on the small dataset") {
  const SpectrumDataset ds = build_dataset(small_config());
  const LambdaReport report = lambda_report(ds);
  CHECK(report.pass);
  CHECK(report.n_points == 5);
  CHECK(report.max_point_deviation <= 1e-10);
  CHECK(report.n_curve_samples > 200);
  CHECK(report.integer_hits == 0);
  CHECK(report.integer_fraction == 0.0);
  CHECK(report.min_integer_distance > 1e-6);
}

TEST_CASE("csv export and determinism") {
  namespace fs = std::filesystem;
  const SpectrumDataset ds = build_dataset(small_config());
  const fs::path dir1 = fs::temp_directory_path() / "rotosc_sweep_test_1";
  const fs::path dir2 = fs::temp_directory_path() / "rotosc_sweep_test_2";
  write_dataset_csv(ds, dir1);
  const SpectrumDataset ds2 = build_dataset(small_config());
  write_dataset_csv(ds2, dir2);

  for (const char* name : {"curves.csv", "curves_mirrored.csv", "points.csv", "parabolas.csv"}) {
    std::ifstream f1(dir1 / name), f2(dir2 / name);
    REQUIRE(f1.good());
    REQUIRE(f2.good());
    std::stringstream s1, s2;
    s1 << f1.rdbuf();
    s2 << f2.rdbuf();
    CHECK(s1.str() == s2.str()); // identical config => byte-identical output
    CHECK(!s1.str().empty());
  }
  // header shapes
  std::ifstream fc(dir1 / "curves.csv");
  std::string header;
  std::getline(fc, header);
  CHECK(header == "nu,a,W");
  std::ifstream fp(dir1 / "points.csv");
  std::getline(fp, header);
  CHECK(header == "n,i,a,W,lambda,node_count");
  std::ifstream fb(dir1 / "parabolas.csv");
  std::getline(fb, header);
  CHECK(header == "n,a,W");

  write_plot_script(ds, dir1 / "plot.gp");
  std::ifstream fg(dir1 / "plot.gp");
  std::stringstream sg;
  sg << fg.rdbuf();
  CHECK(sg.str().find("curves.csv") != std::string::npos);

  fs::remove_all(dir1);
  fs::remove_all(dir2);
}

TEST_CASE("config validation") {
  SweepConfig bad = small_config();
  bad.n_max = 0;
  CHECK_THROWS_AS(build_dataset(bad), std::invalid_argument);
  bad = small_config();
  bad.steps = 1;
  CHECK_THROWS_AS(build_dataset(bad), std::invalid_argument);
  bad = small_config();
  bad.a_min = 2.0;
  bad.a_max = -2.0;
  CHECK_THROWS_AS(build_dataset(bad), std::invalid_argument);
}
