#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rotosc/oracle.hpp"
#include "rotosc/ritz.hpp"

#include <cmath>

using namespace rotosc;

TEST_CASE("harmonic spectrum at a=0") {
  // exact l=0 values 3, 7, 11; l=1 ground state 5
  const FdGrid grid{12.0, 4000};
  const auto w = fd_spectrum(0, 0.0, grid, 3);
  REQUIRE(w.size() == 3);
  CHECK(std::abs(w[0] - 3.0) < 1e-5);
  CHECK(std::abs(w[1] - 7.0) < 1e-5);
  CHECK(std::abs(w[2] - 11.0) < 1e-5);

  const auto w1 = fd_spectrum(1, 0.0, grid, 1);
  CHECK(std::abs(w1[0] - 5.0) < 1e-5);
}

TEST_CASE("truncation point reproduced independently") {
  const double a = std::sqrt(2.0);
  const auto w = fd_spectrum(0, a, default_fd_grid(a), 2);
  CHECK(std::abs(w[1] - 4.5) < 1e-5);
}

TEST_CASE("grid refinement converges at second order") {
  for (auto [l, a] : {std::pair{0, 1.5}, std::pair{2, -3.0}}) {
    const double w1 = fd_spectrum_single_grid(l, a, FdGrid{12.0, 1000}, 1)[0];
    const double w2 = fd_spectrum_single_grid(l, a, FdGrid{12.0, 2001}, 1)[0];
    const double w3 = fd_spectrum_single_grid(l, a, FdGrid{12.0, 4003}, 1)[0];
    const double ratio = (w1 - w2) / (w2 - w3);
    CHECK(ratio == doctest::Approx(4.0).epsilon(0.05));
  }
}

TEST_CASE("agreement with the Ritz engine") {
  for (int l : {0, 1, 2}) {
    for (double a : {-3.0, -1.5, 0.0, 1.5, 3.0}) {
      const auto fd = fd_spectrum(l, a, default_fd_grid(a), 4);
      const auto ritz = ritz_spectrum(l, a, 40);
      for (int nu = 0; nu <= 3; ++nu) {
        CHECK(std::abs(fd[static_cast<size_t>(nu)] -
                       ritz.eigenvalues[static_cast<size_t>(nu)]) < 1e-4);
        // variational upper bound
        CHECK(ritz.eigenvalues[static_cast<size_t>(nu)] >
              fd[static_cast<size_t>(nu)] - 1e-4);
      }
    }
  }
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(fd_spectrum(0, 0.0, FdGrid{12.0, 100}, 101), std::invalid_argument);
  CHECK_THROWS_AS(fd_spectrum(0, 0.0, FdGrid{12.0, 4000}, 0), std::invalid_argument);
  // a 20-point grid on (0,12) violates the stability heuristic
  CHECK_THROWS_AS(fd_spectrum_single_grid(0, 0.0, FdGrid{12.0, 20}, 1), std::invalid_argument);
}

TEST_CASE("default grid tracks the coupling") {
  CHECK(default_fd_grid(0.0).q_max == 12.0);
  CHECK(default_fd_grid(-5.0).q_max == 12.0);
  CHECK(default_fd_grid(3.0).q_max == 15.0);
}
