#include "rotosc/model.hpp"

#include <cmath>
#include <stdexcept>

namespace rotosc {

ModelParams::ModelParams(int l_, double a_) : l(l_), a(a_) {
  if (l < 0) throw std::domain_error("ModelParams: l must be >= 0");
}

ConversionContext ConversionContext::from_alpha(double alpha) {
  if (!(alpha > 0.0)) throw std::domain_error("ConversionContext: alpha must be > 0");
  ConversionContext ctx;
  ctx.alpha = alpha;
  return ctx;
}

ConversionContext ConversionContext::from_dimensional(double mass, double force_constant,
                                                      double equilibrium_distance, double hbar) {
  if (!(mass > 0.0) || !(force_constant > 0.0) || !(equilibrium_distance > 0.0) || !(hbar > 0.0))
    throw std::domain_error("ConversionContext: dimensional inputs must be > 0");
  ConversionContext ctx;
  ctx.alpha = hbar / (2.0 * equilibrium_distance * equilibrium_distance *
                      std::sqrt(mass * force_constant));
  ctx.mass = mass;
  ctx.force_constant = force_constant;
  ctx.equilibrium_distance = equilibrium_distance;
  ctx.hbar = hbar;
  return ctx;
}

double ConversionContext::coupling_a() const { return std::sqrt(2.0 / alpha); }

double potential_value(const ModelParams& params, double q) {
  if (!(q > 0.0)) throw std::domain_error("potential_value: q must be > 0 (centrifugal singularity)");
  const double l = params.l;
  return l * (l + 1.0) / (q * q) - params.a * q + q * q;
}

double w_from_etilde(const ConversionContext& ctx, double etilde) {
  if (!(ctx.alpha > 0.0)) throw std::domain_error("w_from_etilde: alpha must be > 0");
  return 2.0 * ctx.alpha * etilde - 1.0 / (2.0 * ctx.alpha);
}

double etilde_from_w(const ConversionContext& ctx, double w) {
  if (!(ctx.alpha > 0.0)) throw std::domain_error("etilde_from_w: alpha must be > 0");
  return (w + 1.0 / (2.0 * ctx.alpha)) / (2.0 * ctx.alpha);
}

double lambda_from_w(double w, double a) { return 0.5 * w + a * a / 8.0 - 0.5; }

double w_from_lambda(double lambda, double a) { return 2.0 * lambda + 1.0 - a * a / 4.0; }

} // namespace rotosc
