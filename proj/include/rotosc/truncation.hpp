#pragma once

#include "rotosc/rational_poly.hpp"

#include <iosfwd>
#include <optional>
#include <vector>

namespace rotosc {

/// One truncation solution: at a = a_root the series P(q) collapses to a
/// degree-n polynomial and f = q^{l+1} P exp(a q/2 - q^2/2) is an exact
/// bound state with energy W = 2n+2l+3 - a^2/4.
struct ExactSolution {
  int n = 0;
  int l = 0;
  int i = 1; ///< 1-based index into the ascending root list
  double a_root = 0.0;
  double w = 0.0;
  std::vector<double> coeffs; ///< c_0 .. c_n, c_0 = 1
  std::optional<int> node_count; ///< positive zeros of P, filled by the eigenfunction module
};

/// W_l^{(n)}(a) = 2n + 2l + 3 - a^2/4.
double truncation_energy(int n, int l, double a);

/// The n+1 real roots of c_{n+1}(a), ascending.  Root realness, count and
/// simplicity are certified on the exact rational polynomial (Sturm chain in
/// the variable s = a^2); refinement is double-precision Newton inside exact
/// brackets.  Throws numerical_error("realness violation ...") if the
/// certificate fails.
std::vector<double> truncation_roots(int n, int l);

/// One ExactSolution per root of c_{n+1}, with coefficients from the
/// truncated recurrence evaluated at the root.  Verifies c_{n+1} and c_{n+2}
/// vanish at each root and that c_n does not ("degenerate truncation").
std::vector<ExactSolution> exact_solutions(int n, int l);

/// CSV rows n,l,i,a,W,lambda,node_count,coefficients (semicolon-joined,
/// 17 significant digits).  node_count is empty when not yet counted.
void write_solutions_csv(std::ostream& os, const std::vector<ExactSolution>& solutions);

} // namespace rotosc
