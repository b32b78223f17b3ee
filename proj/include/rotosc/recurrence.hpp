#pragma once

#include "rotosc/rational_poly.hpp"

#include <nlohmann/json_fwd.hpp>
#include <vector>

namespace rotosc {

/// The series coefficients c_j of f(q) = q^{l+1} P(q) exp(a q/2 - q^2/2),
/// P = sum_j c_j q^j, obey
///   c_{j+2} = A_j(a) c_{j+1} + B_j(W, a) c_j,   c_{-1} = 0, c_0 = 1.

/// A_j(a) = coeff_A(j, l) * a with coeff_A = -(j+l+2) / ((j+2)(j+2l+3)).
Rational coeff_A(int j, int l);

/// B_j(W, a) = [4(2j+2l+3-W) - a^2] / [4(j+2)(j+2l+3)], numeric form.
double coeff_B(int j, int l, double w, double a);

/// B_j at the truncation energy W = 2n+2l+3 - a^2/4, where the a-dependence
/// cancels: 2(j-n) / ((j+2)(j+2l+3)).
Rational coeff_B_truncated(int j, int n, int l);

/// c_0(a) ... c_{n+1}(a) as exact polynomials in a, built with the truncated
/// recurrence for order n.  degree(polys[j]) = j and c_j(-a) = (-1)^j c_j(a).
struct RecurrenceTable {
  int n = 0;
  int l = 0;
  std::vector<RationalPolynomial> polys;
};

RecurrenceTable build_table(int n, int l);

/// Numeric run of the truncated recurrence at a given a; returns
/// [c_0, ..., c_{n+2}].  c_{n+1} and c_{n+2} vanish at a truncation root.
std::vector<double> coefficient_run(int n, int l, double a);

/// Debug snapshot: array of coefficient lists, each entry a ["num","den"]
/// string pair, ordered by power of a.
nlohmann::json table_to_json(const RecurrenceTable& table);

} // namespace rotosc
