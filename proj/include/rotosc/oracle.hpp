#pragma once

#include <vector>

namespace rotosc {

/// Uniform Dirichlet grid on (0, q_max): interior nodes q_k = k h,
/// h = q_max/(points+1), f(0) = f(q_max) = 0.
struct FdGrid {
  double q_max = 12.0;
  int points = 4000;

  double spacing() const { return q_max / (points + 1); }
};

/// q_max = max(12, a + 12): the Gaussian tail makes the box error negligible
/// at that radius.
FdGrid default_fd_grid(double a);

/// Lowest `count` eigenvalues of the second-order finite-difference
/// discretization (diagonal 2/h^2 + V(q_k), off-diagonal -1/h^2), located by
/// bisection on the tridiagonal Sturm count.  No extrapolation.
std::vector<double> fd_spectrum_single_grid(int l, double a, const FdGrid& grid, int count);

/// Same, with one Richardson step combining the h and h/2 grids:
/// W = (4 W_{h/2} - W_h) / 3.
std::vector<double> fd_spectrum(int l, double a, const FdGrid& grid, int count);

} // namespace rotosc
