#include "rotosc/ritz.hpp"

#include "rotosc/errors.hpp"

#include <gmpxx.h>

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace rotosc {

GaussianBasis::GaussianBasis(int l_, int size_) : l(l_), size(size_) {
  if (l < 0) throw std::domain_error("GaussianBasis: l must be >= 0");
  if (size < 1) throw std::domain_error("GaussianBasis: size must be >= 1");
}

double half_gamma_moment(int k) {
  if (k < 0) throw std::domain_error("half_gamma_moment: k must be >= 0");
  double even = std::sqrt(M_PI) / 2.0; // M(0)
  double odd = 0.5;                    // M(1)
  for (int j = 2; j <= k; ++j) {
    if (j % 2 == 0)
      even *= (j - 1) / 2.0;
    else
      odd *= (j - 1) / 2.0;
  }
  return (k % 2 == 0) ? even : odd;
}

namespace {

template <class T>
std::vector<T> moment_table(int kmax, const T& sqrt_pi) {
  std::vector<T> m(static_cast<size_t>(kmax) + 1);
  m[0] = sqrt_pi / T(2);
  if (kmax >= 1) m[1] = T(1) / T(2);
  for (int k = 2; k <= kmax; ++k)
    m[static_cast<size_t>(k)] = T(k - 1) / T(2) * m[static_cast<size_t>(k) - 2];
  return m;
}

template <class T>
void fill_matrices(const GaussianBasis& basis, const T& a, const std::vector<T>& m,
                   SquareMatrix<T>* s, SquareMatrix<T>* h) {
  const int n = basis.size;
  const int ll1 = basis.l * (basis.l + 1);
  for (int i = 0; i < n; ++i) {
    const int mi = basis.exponent(i);
    for (int j = 0; j < n; ++j) {
      const int mj = basis.exponent(j);
      const size_t k = static_cast<size_t>(mi + mj);
      if (s) (*s)(static_cast<size_t>(i), static_cast<size_t>(j)) = m[k];
      if (h)
        (*h)(static_cast<size_t>(i), static_cast<size_t>(j)) =
            T(mi * mj + ll1) * m[k - 2] - T(mi + mj) * m[k] + T(2) * m[k + 2] - a * m[k + 1];
    }
  }
}

// pi from Machin's formula, the two arctangent series summed exactly in
// rationals to below 2^-(bits+16).
mpq_class machin_pi(int bits) {
  auto atan_inv = [bits](long x) {
    mpq_class sum(0);
    mpq_class term(1, x);
    term.canonicalize();
    mpq_class x2(1, x * x);
    x2.canonicalize();
    const double bits_per_term = 2.0 * std::log2(static_cast<double>(x));
    const long kmax = static_cast<long>((bits + 24) / bits_per_term) + 2;
    for (long k = 0; k <= kmax; ++k) {
      if (k % 2 == 0)
        sum += term / (2 * k + 1);
      else
        sum -= term / (2 * k + 1);
      term *= x2;
    }
    return sum;
  };
  return 16 * atan_inv(5) - 4 * atan_inv(239);
}

} // namespace

SquareMatrix<double> overlap_matrix(const GaussianBasis& basis) {
  SquareMatrix<double> s(static_cast<size_t>(basis.size));
  const auto m = moment_table<double>(2 * basis.size + 2 * basis.l + 4, std::sqrt(M_PI));
  fill_matrices<double>(basis, 0.0, m, &s, nullptr);
  return s;
}

SquareMatrix<double> hamiltonian_matrix(const GaussianBasis& basis, double a) {
  SquareMatrix<double> h(static_cast<size_t>(basis.size));
  const auto m = moment_table<double>(2 * basis.size + 2 * basis.l + 4, std::sqrt(M_PI));
  fill_matrices<double>(basis, a, m, nullptr, &h);
  return h;
}

SquareMatrix<double> position_moment_matrix(const GaussianBasis& basis) {
  SquareMatrix<double> q(static_cast<size_t>(basis.size));
  const auto m = moment_table<double>(2 * basis.size + 2 * basis.l + 4, std::sqrt(M_PI));
  for (int i = 0; i < basis.size; ++i)
    for (int j = 0; j < basis.size; ++j)
      q(static_cast<size_t>(i), static_cast<size_t>(j)) =
          m[static_cast<size_t>(basis.exponent(i) + basis.exponent(j)) + 1];
  return q;
}

GeneralizedSolution solve_generalized(const SquareMatrix<double>& h, const SquareMatrix<double>& s,
                                      double tau) {
  const size_t n = s.size();
  if (h.size() != n) throw std::invalid_argument("solve_generalized: dimension mismatch");

  // unit-diagonal scaling keeps the spectral filter meaningful for a basis
  // whose raw norms span many orders of magnitude
  std::vector<double> d(n);
  for (size_t i = 0; i < n; ++i) {
    if (!(s(i, i) > 0.0)) throw numerical_error("solve_generalized: overlap diagonal not positive");
    d[i] = 1.0 / std::sqrt(s(i, i));
  }
  SquareMatrix<double> ss(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) ss(i, j) = s(i, j) * d[i] * d[j];

  const double jacobi_tol = 16.0 * std::numeric_limits<double>::epsilon();
  EigenDecomposition<double> sd = jacobi_eigensolve(ss, jacobi_tol);
  const double sigma_max = sd.values.back();
  if (!(sigma_max > 0.0))
    throw numerical_error("solve_generalized: overlap has no positive eigenvalue");

  std::vector<size_t> keep;
  for (size_t k = 0; k < n; ++k)
    if (sd.values[k] > tau * sigma_max) keep.push_back(k);
  for (size_t k : keep) {
    if (!(sd.values[k] > 0.0)) {
      std::ostringstream msg;
      msg << "solve_generalized: overlap not positive definite after filtering, eigenvalue "
          << sd.values[k];
      throw numerical_error(msg.str());
    }
  }
  const size_t m = keep.size();

  // X = D U sigma^{-1/2}: canonically orthogonalized combinations in the
  // original (unscaled) basis
  SquareMatrix<double> x(n); // n rows, first m columns used
  for (size_t c = 0; c < m; ++c) {
    const double inv = 1.0 / std::sqrt(sd.values[keep[c]]);
    for (size_t r = 0; r < n; ++r) x(r, c) = d[r] * sd.vectors(r, keep[c]) * inv;
  }

  // Ht = X^T H X
  SquareMatrix<double> hx(n);
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < m; ++c) {
      double acc = 0.0;
      for (size_t k = 0; k < n; ++k) acc += h(r, k) * x(k, c);
      hx(r, c) = acc;
    }
  SquareMatrix<double> ht(m);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j <= i; ++j) {
      double acc = 0.0;
      for (size_t r = 0; r < n; ++r) acc += x(r, i) * hx(r, j);
      ht(i, j) = acc;
      ht(j, i) = acc;
    }

  EigenDecomposition<double> hd = jacobi_eigensolve(ht, jacobi_tol);

  GeneralizedSolution out;
  out.effective_size = static_cast<int>(m);
  out.values = hd.values;
  out.vectors = SquareMatrix<double>(n);
  for (size_t c = 0; c < m; ++c)
    for (size_t r = 0; r < n; ++r) {
      double acc = 0.0;
      for (size_t k = 0; k < m; ++k) acc += x(r, k) * hd.vectors(k, c);
      out.vectors(r, c) = acc;
    }
  return out;
}

namespace {

std::vector<double> precise_eigenvalues(const GaussianBasis& basis, double a, int precision_bits) {
  mpf_set_default_prec(static_cast<mp_bitcnt_t>(precision_bits));
  const size_t n = static_cast<size_t>(basis.size);

  const mpf_class sqrt_pi = sqrt(mpf_class(machin_pi(precision_bits)));
  const auto m = moment_table<mpf_class>(2 * basis.size + 2 * basis.l + 4, sqrt_pi);
  SquareMatrix<mpf_class> s(n), h(n);
  fill_matrices<mpf_class>(basis, mpf_class(a), m, &s, &h);

  // unit-diagonal scaling, then Cholesky reduction; at this precision the
  // scaled overlap is numerically positive definite up to size ~100
  std::vector<mpf_class> d(n);
  for (size_t i = 0; i < n; ++i) d[i] = mpf_class(1) / sqrt(s(i, i));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      s(i, j) = s(i, j) * d[i] * d[j];
      h(i, j) = h(i, j) * d[i] * d[j];
    }

  SquareMatrix<mpf_class> l = cholesky_factor(s);

  // Y = L^{-1} H
  SquareMatrix<mpf_class> y(n);
  for (size_t c = 0; c < n; ++c)
    for (size_t r = 0; r < n; ++r) {
      mpf_class acc = h(r, c);
      for (size_t k = 0; k < r; ++k) acc -= l(r, k) * y(k, c);
      y(r, c) = acc / l(r, r);
    }
  // Ht = Y L^{-T}: forward substitution along each row
  SquareMatrix<mpf_class> ht(n);
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c) {
      mpf_class acc = y(r, c);
      for (size_t k = 0; k < c; ++k) acc -= l(c, k) * ht(r, k);
      ht(r, c) = acc / l(c, c);
    }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < i; ++j) {
      mpf_class v = (ht(i, j) + ht(j, i)) / 2;
      ht(i, j) = v;
      ht(j, i) = v;
    }

  mpf_class tol(1);
  tol >>= static_cast<unsigned long>(precision_bits > 16 ? precision_bits - 8 : 8);
  EigenDecomposition<mpf_class> ed = jacobi_eigensolve(ht, tol);

  std::vector<double> out;
  out.reserve(n);
  for (const auto& v : ed.values) out.push_back(v.get_d());
  return out;
}

} // namespace

RitzSpectrum ritz_spectrum(int l, double a, int size, const RitzOptions& options) {
  const GaussianBasis basis(l, size);
  RitzSpectrum spec;
  spec.l = l;
  spec.a = a;
  spec.basis_size = size;
  if (options.mode == RitzMode::Precise) {
    spec.eigenvalues = precise_eigenvalues(basis, a, options.precision_bits);
    spec.effective_size = size;
  } else {
    GeneralizedSolution sol =
        solve_generalized(hamiltonian_matrix(basis, a), overlap_matrix(basis), options.tau);
    spec.eigenvalues = std::move(sol.values);
    spec.effective_size = sol.effective_size;
  }
  for (size_t k = 1; k < spec.eigenvalues.size(); ++k)
    if (!(spec.eigenvalues[k] > spec.eigenvalues[k - 1]))
      throw numerical_error("ritz_spectrum: eigenvalues not strictly ascending");
  return spec;
}

double ritz_expectation_q(int l, double a, int size, int nu, const RitzOptions& options) {
  const GaussianBasis basis(l, size);
  const SquareMatrix<double> s = overlap_matrix(basis);
  GeneralizedSolution sol = solve_generalized(hamiltonian_matrix(basis, a), s, options.tau);
  if (nu < 0 || nu >= sol.effective_size)
    throw std::invalid_argument("ritz_expectation_q: nu outside the computed spectrum");
  const SquareMatrix<double> q = position_moment_matrix(basis);
  const size_t n = static_cast<size_t>(size);
  double num = 0.0, den = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const double vi = sol.vectors(i, static_cast<size_t>(nu));
    for (size_t j = 0; j < n; ++j) {
      const double vj = sol.vectors(j, static_cast<size_t>(nu));
      num += vi * q(i, j) * vj;
      den += vi * s(i, j) * vj;
    }
  }
  if (!(den > 0.0)) throw numerical_error("ritz_expectation_q: vanishing norm");
  return num / den;
}

} // namespace rotosc
