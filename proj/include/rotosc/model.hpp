#pragma once

#include <optional>

namespace rotosc {

/// Parameters of the radial eigenproblem
///   [-d^2/dq^2 + l(l+1)/q^2 - a q + q^2] f(q) = W f(q)
/// on 0 < q < infinity.  l is the rotational quantum number, a the
/// dimensionless linear coupling (any real value is admitted; the physical
/// rotating oscillator has a > 0).
struct ModelParams {
  int l = 0;
  double a = 0.0;

  ModelParams(int l_, double a_);
};

/// Dimensionless interaction parameter alpha and the optional dimensional
/// inputs it was derived from.  alpha^2 = hbar^2 / (4 m k r_e^4).
/// All computation downstream happens in the (l, a, W) parameterization;
/// this type only converts in and out of it.
struct ConversionContext {
  double alpha = 1.0;
  std::optional<double> mass;
  std::optional<double> force_constant;
  std::optional<double> equilibrium_distance;
  std::optional<double> hbar;

  static ConversionContext from_alpha(double alpha);
  static ConversionContext from_dimensional(double mass, double force_constant,
                                            double equilibrium_distance, double hbar);

  /// a = sqrt(2/alpha), positive for the physical oscillator.
  double coupling_a() const;
};

/// V(q) = l(l+1)/q^2 - a q + q^2.  Throws std::domain_error for q <= 0.
double potential_value(const ModelParams& params, double q);

/// W = 2 alpha Etilde - 1/(2 alpha).
double w_from_etilde(const ConversionContext& ctx, double etilde);

/// Exact inverse of w_from_etilde.
double etilde_from_w(const ConversionContext& ctx, double w);

/// lambda = W/2 + a^2/8 - 1/2, the eigenvalue convention of earlier work
/// (integer exactly at the truncation points).
double lambda_from_w(double w, double a);

/// Exact inverse of lambda_from_w at fixed a.
double w_from_lambda(double lambda, double a);

} // namespace rotosc
