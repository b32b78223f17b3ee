#pragma once

#include "rotosc/linalg.hpp"

#include <vector>

namespace rotosc {

/// Non-orthogonal basis u_{i,l}(q) = q^{i+l+1} exp(-q^2/2), i = 0..size-1.
struct GaussianBasis {
  int l = 0;
  int size = 0;

  GaussianBasis(int l_, int size_);
  /// power of q in u_i
  int exponent(int i) const { return i + l + 1; }
};

/// M(k) = integral_0^inf q^k exp(-q^2) dq = Gamma((k+1)/2)/2, computed by the
/// recursion M(k) = ((k-1)/2) M(k-2), M(0) = sqrt(pi)/2, M(1) = 1/2.
double half_gamma_moment(int k);

/// S_ij = M(m_i + m_j), m_i = i + l + 1.  Symmetric positive definite.
SquareMatrix<double> overlap_matrix(const GaussianBasis& basis);

/// H_ij = <u_i'|u_j'> + l(l+1) M(m_i+m_j-2) - a M(m_i+m_j+1) + M(m_i+m_j+2),
/// with the kinetic term in the weak (first-derivative) form
/// <u_i'|u_j'> = m_i m_j M(m_i+m_j-2) - (m_i+m_j) M(m_i+m_j) + M(m_i+m_j+2).
SquareMatrix<double> hamiltonian_matrix(const GaussianBasis& basis, double a);

/// Q_ij = M(m_i + m_j + 1), the matrix of the position operator q.
SquareMatrix<double> position_moment_matrix(const GaussianBasis& basis);

struct GeneralizedSolution {
  std::vector<double> values;    ///< ascending
  SquareMatrix<double> vectors;   ///< columns, in the original basis
  int effective_size = 0;         ///< basis functions kept by the conditioning filter
};

/// Eigenvalues of H v = W S v.  The overlap is scaled to unit diagonal, then
/// canonically orthogonalized: eigendirections of the scaled S with
/// eigenvalue below tau * max-eigenvalue are discarded (effective_size
/// reduced) before the reduction to a standard symmetric problem.  Both
/// symmetric eigenproblems use the cyclic Jacobi solver.
GeneralizedSolution solve_generalized(const SquareMatrix<double>& h, const SquareMatrix<double>& s,
                                      double tau = 1e-12);

enum class RitzMode {
  Fast,    ///< double precision, conditioning filter active
  Precise, ///< extended precision (GMP floats), Cholesky reduction, no filter
};

struct RitzOptions {
  RitzMode mode = RitzMode::Fast;
  double tau = 1e-12;       ///< Fast-path conditioning threshold
  int precision_bits = 256; ///< Precise-path mantissa size
};

/// Ascending variational eigenvalues W_{nu,l}(a) for one basis size.
struct RitzSpectrum {
  int l = 0;
  double a = 0.0;
  int basis_size = 0;
  int effective_size = 0;
  std::vector<double> eigenvalues;
};

RitzSpectrum ritz_spectrum(int l, double a, int size, const RitzOptions& options = {});

/// <q> of the nu-th Ritz eigenvector, evaluated through the moment matrices
/// as (v^T Q v) / (v^T S v).
double ritz_expectation_q(int l, double a, int size, int nu, const RitzOptions& options = {});

} // namespace rotosc
