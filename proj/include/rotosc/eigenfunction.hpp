#pragma once

#include "rotosc/truncation.hpp"

#include <vector>

namespace rotosc {

/// Exact bound-state wavefunction f(q) = q^{l+1} P(q) exp(a q/2 - q^2/2)
/// with P(q) = sum_j c_j q^j from an ExactSolution.
struct WaveForm {
  ExactSolution solution;
};

/// f(q); returns 0 at q = 0 (the q^{l+1} prefactor).
double evaluate(const WaveForm& w, double q);

/// Number of positive zeros of P with a sign change (odd multiplicity).
/// Uses an exact rational Sturm count when the coefficients are exactly
/// rational (a_root = 0); otherwise a sign-change scan on a 10^4-point grid.
/// A near-zero dip without a sign change emits a "tangential node" warning
/// on stderr.  Stores the result into w.solution.node_count.
int count_nodes(WaveForm& w);

/// ODE residual [-f'' + (l(l+1)/q^2 - a q + q^2) f - W f](q), computed by
/// exact polynomial differentiation of the P * exponential form.
double residual(const WaveForm& w, double q);

/// max(1, |f(q)| * |W|), the pointwise residual scale.  Attainable only for
/// small n: the root is stored as a double, and its rounding enters the
/// residual multiplied by q^{n+l} exp(a q/2 - q^2/2).
double residual_scale(const WaveForm& w, double q);

/// Backward-error scale of the symbolic residual assembly: the magnitude sum
/// of the recurrence terms composing it, times the q^l exponential prefactor.
/// |residual| / residual_identity_scale measures how well the coefficients
/// satisfy the ODE as an algebraic identity, independent of the envelope
/// amplification of the root rounding.
double residual_identity_scale(const WaveForm& w, double q);

/// q = 0.1, 0.2, ..., 8.0.
std::vector<double> standard_residual_grid();

/// <q> = integral q f^2 / integral f^2 by adaptive quadrature
/// (relative accuracy 1e-10) on (0, q_max), q_max = a/2 + 10 + sqrt(2W+20).
double expectation_q(const WaveForm& w);

/// First grid point beyond which |f| keeps decaying out to the tail:
/// max of a/2 + sqrt(n+l+2) and the largest stationary point of f.
double tail_decay_start(const WaveForm& w);

/// CSV rows q,f,residual on the given grid (17 significant digits).
void write_wave_csv(std::ostream& os, const WaveForm& w, const std::vector<double>& grid);

} // namespace rotosc
