#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rotosc/linalg.hpp"
#include "rotosc/ritz.hpp"

#include <cmath>
#include <random>
#include <vector>

using namespace rotosc;

TEST_CASE("half gamma moments") {
  CHECK(half_gamma_moment(0) == doctest::Approx(std::sqrt(M_PI) / 2).epsilon(1e-15));
  CHECK(half_gamma_moment(1) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(half_gamma_moment(2) == doctest::Approx(std::sqrt(M_PI) / 4).epsilon(1e-15));
  CHECK(half_gamma_moment(4) == doctest::Approx(3 * std::sqrt(M_PI) / 8).epsilon(1e-15));
  CHECK(half_gamma_moment(5) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("overlap matrix") {
  const GaussianBasis b0(0, 3);
  const auto s = overlap_matrix(b0);
  CHECK(s(0, 0) == doctest::Approx(std::sqrt(M_PI) / 4).epsilon(1e-15));

  const GaussianBasis b1(1, 2);
  const auto s1 = overlap_matrix(b1);
  CHECK(s1(0, 1) == doctest::Approx(1.0).epsilon(1e-15)); // M(5)

  std::mt19937 rng(99);
  const GaussianBasis b(2, 8);
  const auto sb = overlap_matrix(b);
  for (int trial = 0; trial < 20; ++trial) {
    const size_t i = rng() % 8, j = rng() % 8;
    CHECK(sb(i, j) == sb(j, i));
  }
}

TEST_CASE("hamiltonian matrix: Rayleigh quotient of the exact ground state") {
  // u_{0,0} = q exp(-q^2/2) is the exact l=0 ground state with W = 3
  const GaussianBasis b(0, 1);
  const auto h = hamiltonian_matrix(b, 0.0);
  const auto s = overlap_matrix(b);
  CHECK(h(0, 0) / s(0, 0) == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("hamiltonian a-derivative is -M(m_i+m_j+1) entrywise") {
  const GaussianBasis b(1, 5);
  const auto h0 = hamiltonian_matrix(b, 0.7);
  const auto h1 = hamiltonian_matrix(b, 0.9);
  const auto q = position_moment_matrix(b);
  for (size_t i = 0; i < 5; ++i)
    for (size_t j = 0; j < 5; ++j) {
      const double slope = (h1(i, j) - h0(i, j)) / 0.2;
      CHECK(slope == doctest::Approx(-q(i, j)).epsilon(1e-11));
      CHECK(slope < 0.0);
    }
}

TEST_CASE("harmonic eigenvalues from a size-6 basis") {
  // exact l=0 spectrum at a=0 is W = 3, 7, 11, ... and the first three
  // eigenfunctions are odd polynomials within the size-6 span
  const GaussianBasis b(0, 6);
  const auto sol = solve_generalized(hamiltonian_matrix(b, 0.0), overlap_matrix(b));
  REQUIRE(sol.values.size() >= 3);
  CHECK(sol.values[0] == doctest::Approx(3.0).epsilon(1e-8));
  CHECK(sol.values[1] == doctest::Approx(7.0).epsilon(1e-8));
  CHECK(sol.values[2] == doctest::Approx(11.0).epsilon(1e-8));
}

TEST_CASE("solve_generalized: identity pencil and 1x1") {
  SquareMatrix<double> h(3), s(3);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) {
      s(i, j) = (i == j) ? 1.0 : 0.2 / (1.0 + i + j);
      h(i, j) = s(i, j);
    }
  const auto sol = solve_generalized(h, s);
  for (double v : sol.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));

  SquareMatrix<double> h1(1), s1(1);
  h1(0, 0) = 3.5;
  s1(0, 0) = 0.5;
  CHECK(solve_generalized(h1, s1).values[0] == doctest::Approx(7.0).epsilon(1e-13));
}

namespace {

// brute-force oracle: det(H - x S) via LU-free Leibniz expansion is hopeless
// beyond tiny sizes, so build the characteristic polynomial by exact
// cofactor expansion over permutations of the 5x5 pencil and scan its roots.
std::vector<double> pencil_eigenvalues_bruteforce(const SquareMatrix<double>& h,
                                                  const SquareMatrix<double>& s) {
  const int n = static_cast<int>(h.size());
  // coefficients of det(H - x S): iterate permutations with sign
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::vector<double> charpoly(static_cast<size_t>(n) + 1, 0.0);
  auto add_term = [&](const std::vector<int>& p, int sign) {
    // product over rows of (h(i,p_i) - x s(i,p_i)) -> polynomial in x
    std::vector<double> poly{1.0};
    for (int i = 0; i < n; ++i) {
      std::vector<double> next(poly.size() + 1, 0.0);
      const double hv = h(static_cast<size_t>(i), static_cast<size_t>(p[i]));
      const double sv = s(static_cast<size_t>(i), static_cast<size_t>(p[i]));
      for (size_t k = 0; k < poly.size(); ++k) {
        next[k] += poly[k] * hv;
        next[k + 1] -= poly[k] * sv;
      }
      poly = std::move(next);
    }
    for (size_t k = 0; k < poly.size(); ++k) charpoly[k] += sign * poly[k];
  };
  // Heap's algorithm with parity tracking
  std::vector<int> c(static_cast<size_t>(n), 0);
  int sign = 1;
  add_term(perm, sign);
  int i = 0;
  while (i < n) {
    if (c[static_cast<size_t>(i)] < i) {
      std::swap(perm[static_cast<size_t>(i % 2 == 0 ? 0 : c[static_cast<size_t>(i)])],
                perm[static_cast<size_t>(i)]);
      sign = -sign;
      add_term(perm, sign);
      ++c[static_cast<size_t>(i)];
      i = 0;
    } else {
      c[static_cast<size_t>(i)] = 0;
      ++i;
    }
  }
  // all roots real (S positive definite): locate by sampling + bisection
  auto eval = [&](double x) {
    double acc = 0.0;
    for (size_t k = charpoly.size(); k-- > 0;) acc = acc * x + charpoly[k];
    return acc;
  };
  std::vector<double> roots;
  const double lo = -1e3, hi = 1e3;
  double prev = eval(lo);
  const int grid = 2000000;
  for (int k = 1; k <= grid && static_cast<int>(roots.size()) < n; ++k) {
    const double x = lo + (hi - lo) * k / grid;
    const double v = eval(x);
    if (prev != 0.0 && v != 0.0 && std::signbit(prev) != std::signbit(v)) {
      double a = lo + (hi - lo) * (k - 1) / grid, b = x;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (a + b);
        if (eval(a) * eval(mid) <= 0.0)
          b = mid;
        else
          a = mid;
      }
      roots.push_back(0.5 * (a + b));
    }
    prev = v;
  }
  return roots;
}

} // namespace

TEST_CASE("solve_generalized against the 5x5 determinant oracle") {
  std::mt19937 rng(314159);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  SquareMatrix<double> s(5), h(5), a(5);
  for (size_t i = 0; i < 5; ++i)
    for (size_t j = 0; j < 5; ++j) a(i, j) = dist(rng);
  // S = A A^T + I is symmetric positive definite
  for (size_t i = 0; i < 5; ++i)
    for (size_t j = 0; j < 5; ++j) {
      double acc = (i == j) ? 1.0 : 0.0;
      for (size_t k = 0; k < 5; ++k) acc += a(i, k) * a(j, k);
      s(i, j) = acc;
    }
  for (size_t i = 0; i < 5; ++i)
    for (size_t j = 0; j <= i; ++j) {
      h(i, j) = dist(rng);
      h(j, i) = h(i, j);
    }
  const auto sol = solve_generalized(h, s);
  const auto oracle = pencil_eigenvalues_bruteforce(h, s);
  REQUIRE(oracle.size() == 5);
  REQUIRE(sol.values.size() == 5);
  for (size_t k = 0; k < 5; ++k) CHECK(sol.values[k] == doctest::Approx(oracle[k]).epsilon(1e-9));
}

TEST_CASE("ritz spectrum: harmonic limit and exact points") {
  const auto spec = ritz_spectrum(0, 0.0, 30);
  CHECK(spec.eigenvalues[0] == doctest::Approx(3.0).epsilon(1e-10));

  const auto s2 = ritz_spectrum(0, std::sqrt(2.0), 30);
  double best = 1e9;
  for (double v : s2.eigenvalues) best = std::min(best, std::abs(v - 4.5));
  CHECK(best < 1e-8);

  const auto s6 = ritz_spectrum(0, std::sqrt(6.0), 30);
  best = 1e9;
  for (double v : s6.eigenvalues) best = std::min(best, std::abs(v - 5.5));
  CHECK(best < 1e-7);
}

TEST_CASE("precise engine matches the fast engine where both converge") {
  RitzOptions precise;
  precise.mode = RitzMode::Precise;
  const auto fast = ritz_spectrum(0, 1.5, 24);
  const auto exact = ritz_spectrum(0, 1.5, 24, precise);
  for (int nu = 0; nu <= 3; ++nu)
    CHECK(fast.eigenvalues[static_cast<size_t>(nu)] ==
          doctest::Approx(exact.eigenvalues[static_cast<size_t>(nu)]).epsilon(1e-9));
  // and the variational value never drops below the precise one
  for (int nu = 0; nu <= 3; ++nu)
    CHECK(fast.eigenvalues[static_cast<size_t>(nu)] >=
          exact.eigenvalues[static_cast<size_t>(nu)] - 1e-10);
}

TEST_CASE("variational monotonicity in basis size (nested spaces)") {
  RitzOptions precise;
  precise.mode = RitzMode::Precise;
  for (int size : {10, 15, 20, 25}) {
    const auto small = ritz_spectrum(0, 1.0, size, precise);
    const auto big = ritz_spectrum(0, 1.0, size + 5, precise);
    for (int nu = 0; nu <= 3; ++nu)
      CHECK(big.eigenvalues[static_cast<size_t>(nu)] <=
            small.eigenvalues[static_cast<size_t>(nu)] + 1e-12);
  }
}

TEST_CASE("Hellmann-Feynman on the variational curves") {
  std::mt19937 rng(20240817);
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  const int size = 30;
  for (int trial = 0; trial < 8; ++trial) {
    const int nu = static_cast<int>(rng() % 4);
    const double a = dist(rng);
    const double h = 1e-4;
    const double wp = ritz_spectrum(0, a + h, size).eigenvalues[static_cast<size_t>(nu)];
    const double wm = ritz_spectrum(0, a - h, size).eigenvalues[static_cast<size_t>(nu)];
    const double slope = (wp - wm) / (2 * h);
    const double qbar = ritz_expectation_q(0, a, size, nu);
    CHECK(slope < 0.0);
    CHECK(std::abs(slope + qbar) < 1e-5);
  }
}

TEST_CASE("strict decrease of every curve in a") {
  const int size = 30;
  for (int nu = 0; nu <= 3; ++nu) {
    double prev = 1e300;
    for (double a = -3.0; a <= 3.0; a += 0.5) {
      const double w = ritz_spectrum(1, a, size).eigenvalues[static_cast<size_t>(nu)];
      CHECK(w < prev);
      prev = w;
    }
  }
}

TEST_CASE("conditioning filter reports effective size") {
  const auto spec = ritz_spectrum(0, 0.0, 40);
  CHECK(spec.effective_size < 40); // power basis is numerically dependent at this size
  CHECK(spec.effective_size >= 15);
  RitzOptions precise;
  precise.mode = RitzMode::Precise;
  const auto full = ritz_spectrum(0, 0.0, 40, precise);
  CHECK(full.effective_size == 40);
}
