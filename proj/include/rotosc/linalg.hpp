#pragma once

#include "rotosc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <vector>

namespace rotosc {

/// Dense square matrix, row-major.  T is double or an exact/extended real
/// type (mpf_class) supporting +,-,*,/ and abs/sqrt.
template <class T>
class SquareMatrix {
public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, const T& fill = T(0)) : n_(n), data_(n * n, fill) {}

  std::size_t size() const { return n_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

template <class T>
struct EigenDecomposition {
  std::vector<T> values;  ///< ascending
  SquareMatrix<T> vectors; ///< columns match values
};

/// Cyclic-by-rows Jacobi eigensolver for a symmetric matrix.  Rotation order
/// is fixed, so results are bitwise reproducible for identical input.
/// `tol` is the relative off-diagonal threshold for convergence.
template <class T>
EigenDecomposition<T> jacobi_eigensolve(SquareMatrix<T> a, const T& tol, int max_sweeps = 100) {
  using std::abs;
  using std::sqrt;
  const std::size_t n = a.size();
  SquareMatrix<T> v(n);
  for (std::size_t i = 0; i < n; ++i) v(i, i) = T(1);

  T norm(0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) norm += abs(a(i, j));
  if (norm == T(0)) norm = T(1);

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    T off(0);
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += abs(a(p, q));
    if (off <= tol * norm) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const T apq = a(p, q);
        if (abs(apq) <= tol * norm / T(static_cast<double>(n * n))) continue;
        const T theta = (a(q, q) - a(p, p)) / (T(2) * apq);
        T t;
        {
          const T at = abs(theta);
          t = T(1) / (at + sqrt(theta * theta + T(1)));
          if (theta < T(0)) t = -t;
        }
        const T c = T(1) / sqrt(t * t + T(1));
        const T s = t * c;
        const T tau = s / (T(1) + c);

        const T app = a(p, p), aqq = a(q, q);
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = T(0);
        a(q, p) = T(0);
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const T akp = a(k, p), akq = a(k, q);
          a(k, p) = akp - s * (akq + tau * akp);
          a(p, k) = a(k, p);
          a(k, q) = akq + s * (akp - tau * akq);
          a(q, k) = a(k, q);
        }
        for (std::size_t k = 0; k < n; ++k) {
          const T vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp - s * (vkq + tau * vkp);
          v(k, q) = vkq + s * (vkp - tau * vkq);
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });

  EigenDecomposition<T> out;
  out.values.reserve(n);
  out.vectors = SquareMatrix<T>(n);
  for (std::size_t c = 0; c < n; ++c) {
    out.values.push_back(a(order[c], order[c]));
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, c) = v(r, order[c]);
  }
  return out;
}

/// Lower-triangular Cholesky factor of a symmetric positive definite matrix.
/// Throws numerical_error naming the failing pivot when S is not PD at the
/// working precision.
template <class T>
SquareMatrix<T> cholesky_factor(const SquareMatrix<T>& s) {
  using std::sqrt;
  const std::size_t n = s.size();
  SquareMatrix<T> l(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      T sum = s(i, j);
      for (std::size_t k = 0; k < j; ++k) sum -= l(i, k) * l(j, k);
      if (i == j) {
        if (!(sum > T(0))) {
          std::ostringstream msg;
          msg << "cholesky_factor: matrix not positive definite at pivot " << i;
          throw numerical_error(msg.str());
        }
        l(i, i) = sqrt(sum);
      } else {
        l(i, j) = sum / l(j, j);
      }
    }
  }
  return l;
}

} // namespace rotosc
