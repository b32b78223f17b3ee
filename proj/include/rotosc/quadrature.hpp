#pragma once

#include <functional>

namespace rotosc {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int intervals = 0;
};

/// Adaptive Gauss-Kronrod (G7/K15) integration of f on [lo, hi].
/// Subdivides the interval with the largest local error until
/// sum of local errors <= max(abs_tol, rel_tol * |integral|).
/// Throws numerical_error with diagnostics when the interval budget is
/// exhausted before convergence.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                                    double rel_tol, double abs_tol = 0.0, int max_intervals = 4000);

} // namespace rotosc
