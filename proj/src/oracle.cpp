#include "rotosc/oracle.hpp"

#include "rotosc/errors.hpp"
#include "rotosc/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace rotosc {

FdGrid default_fd_grid(double a) { return FdGrid{std::max(12.0, a + 12.0), 4000}; }

namespace {

// Number of eigenvalues of the tridiagonal matrix below x, from the signs of
// the LDL^T pivots.
int eigenvalues_below(const std::vector<double>& diag, double off2, double x) {
  int count = 0;
  double pivot = 1.0;
  for (size_t k = 0; k < diag.size(); ++k) {
    const double shift = (k == 0) ? 0.0 : off2 / pivot;
    pivot = diag[k] - x - shift;
    if (pivot == 0.0) pivot = -1e-300;
    if (pivot < 0.0) ++count;
  }
  return count;
}

} // namespace

std::vector<double> fd_spectrum_single_grid(int l, double a, const FdGrid& grid, int count) {
  if (count < 1) throw std::invalid_argument("fd_spectrum: count must be >= 1");
  if (count > grid.points)
    throw std::invalid_argument("fd_spectrum: count exceeds the number of grid modes");
  const double h = grid.spacing();
  const ModelParams params(l, a);

  // stability heuristic on the smooth part of the potential; the centrifugal
  // core is excluded since f ~ q^{l+1} suppresses it
  double vmax_smooth = 0.0;
  for (double q : {grid.q_max, std::abs(a) / 2.0})
    vmax_smooth = std::max(vmax_smooth, std::abs(q * q - a * q));
  if (h * h * vmax_smooth >= 1.0)
    throw std::invalid_argument("fd_spectrum: grid too coarse for the potential (h^2 max|V| >= 1)");

  std::vector<double> diag(static_cast<size_t>(grid.points));
  for (int k = 1; k <= grid.points; ++k)
    diag[static_cast<size_t>(k) - 1] = 2.0 / (h * h) + potential_value(params, k * h);
  const double off2 = 1.0 / (h * h * h * h);

  const double dmin = *std::min_element(diag.begin(), diag.end());
  const double dmax = *std::max_element(diag.begin(), diag.end());
  const double lo0 = dmin - 2.0 / (h * h);
  const double hi0 = dmax + 2.0 / (h * h);

  std::vector<double> out;
  out.reserve(static_cast<size_t>(count));
  for (int idx = 1; idx <= count; ++idx) {
    double lo = lo0, hi = hi0;
    while (hi - lo > 1e-13 * std::max(1.0, std::abs(lo) + std::abs(hi))) {
      const double mid = 0.5 * (lo + hi);
      if (mid == lo || mid == hi) break;
      if (eigenvalues_below(diag, off2, mid) >= idx)
        hi = mid;
      else
        lo = mid;
    }
    out.push_back(0.5 * (lo + hi));
  }
  return out;
}

std::vector<double> fd_spectrum(int l, double a, const FdGrid& grid, int count) {
  const std::vector<double> coarse = fd_spectrum_single_grid(l, a, grid, count);
  const FdGrid fine{grid.q_max, 2 * grid.points + 1};
  const std::vector<double> halved = fd_spectrum_single_grid(l, a, fine, count);
  std::vector<double> out(coarse.size());
  for (size_t k = 0; k < coarse.size(); ++k) out[k] = (4.0 * halved[k] - coarse[k]) / 3.0;
  return out;
}

} // namespace rotosc
