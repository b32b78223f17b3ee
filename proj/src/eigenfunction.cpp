#include "rotosc/eigenfunction.hpp"

#include "rotosc/errors.hpp"
#include "rotosc/quadrature.hpp"
#include "rotosc/recurrence.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <ostream>
#include <vector>

namespace rotosc {

namespace {

double poly_eval(const std::vector<double>& c, double q) {
  double acc = 0.0;
  for (size_t k = c.size(); k-- > 0;) acc = acc * q + c[k];
  return acc;
}

std::vector<double> poly_derivative(const std::vector<double>& c) {
  if (c.size() <= 1) return {0.0};
  std::vector<double> d(c.size() - 1);
  for (size_t k = 1; k < c.size(); ++k) d[k - 1] = c[k] * static_cast<double>(k);
  return d;
}

// out += shift * q^power * p
void add_shifted(std::vector<double>& out, const std::vector<double>& p, int power, double shift) {
  if (out.size() < p.size() + static_cast<size_t>(power))
    out.resize(p.size() + static_cast<size_t>(power), 0.0);
  for (size_t k = 0; k < p.size(); ++k) out[k + static_cast<size_t>(power)] += shift * p[k];
}

// G(q) = q P'' + (2(l+1) + a q - 2 q^2) P' + ((l+1) a + (W - 2l - 3 + a^2/4) q) P.
// The residual of the full ODE is -q^l exp(a q/2 - q^2/2) G(q); G vanishes
// identically when the c_j satisfy the recurrence at (W, a).
std::vector<double> residual_core_poly(const ExactSolution& sol) {
  const double a = sol.a_root;
  const double l = sol.l;
  const std::vector<double>& p = sol.coeffs;
  const std::vector<double> dp = poly_derivative(p);
  const std::vector<double> ddp = poly_derivative(dp);
  std::vector<double> g;
  add_shifted(g, ddp, 1, 1.0);
  add_shifted(g, dp, 0, 2.0 * (l + 1.0));
  add_shifted(g, dp, 1, a);
  add_shifted(g, dp, 2, -2.0);
  add_shifted(g, p, 0, (l + 1.0) * a);
  add_shifted(g, p, 1, sol.w - 2.0 * l - 3.0 + a * a / 4.0);
  return g;
}

double exp_factor(const ExactSolution& sol, double q) {
  return std::exp(sol.a_root * q / 2.0 - q * q / 2.0);
}

// All real roots of P lie inside |q| <= 1 + max |c_k / c_n|.
double root_bound(const std::vector<double>& c) {
  double lead = c.back();
  double m = 0.0;
  for (size_t k = 0; k + 1 < c.size(); ++k) m = std::max(m, std::abs(c[k] / lead));
  return 1.0 + m;
}

int scan_nodes(const std::vector<double>& c, double bound) {
  constexpr int kGridPoints = 10000;
  const double h = bound / kGridPoints;
  int crossings = 0;
  double prev = poly_eval(c, h);
  // a drop of |P| by 12 orders below the running segment maximum without a
  // sign change suggests an even-order root
  double seg_max = std::abs(prev);
  bool dipped = false;
  for (int k = 2; k <= kGridPoints; ++k) {
    const double q = k * h;
    const double v = poly_eval(c, q);
    if (prev != 0.0 && v != 0.0 && std::signbit(prev) != std::signbit(v)) {
      ++crossings;
      seg_max = std::abs(v);
      dipped = false;
    } else {
      const double va = std::abs(v);
      if (va < 1e-12 * seg_max) {
        dipped = true;
      } else {
        if (dipped && va > 1e-6 * seg_max) {
          std::cerr << "rotosc: tangential node warning near q=" << q << " (degree "
                    << c.size() - 1 << ")\n";
          dipped = false;
        }
        seg_max = std::max(seg_max, va);
      }
    }
    prev = v;
  }
  return crossings;
}

// Exact Sturm count of positive roots; only valid when the recurrence
// coefficients at a_root are exactly rational, i.e. a_root = 0.
int exact_nodes_at_zero_root(int n, int l) {
  std::vector<Rational> c(static_cast<size_t>(n) + 1, Rational(0));
  c[0] = 1;
  // a = 0 kills the A-term; even coefficients follow from B alone.
  for (int j = 0; j + 2 <= n; ++j)
    c[static_cast<size_t>(j) + 2] = coeff_B_truncated(j, n, l) * c[static_cast<size_t>(j)];
  RationalPolynomial p{std::move(c)};
  auto chain = sturm_chain(p);
  return count_roots_above(chain, Rational(0));
}

} // namespace

// Zeros of a square-integrable solution cannot lie beyond the outer
// classical turning point: there f'' = (V - W) f has the sign of f, so a
// zero or a stationary point out in the forbidden region forces blow-up.
// With W + a^2/4 = 2n+2l+3 the turning point is a/2 + sqrt(2n+2l+3).
double turning_point(const ExactSolution& sol) {
  return sol.a_root / 2.0 + std::sqrt(2.0 * sol.n + 2.0 * sol.l + 3.0);
}

double evaluate(const WaveForm& w, double q) {
  if (q < 0.0) throw std::domain_error("evaluate: q must be >= 0");
  if (q == 0.0) return 0.0;
  const ExactSolution& sol = w.solution;
  return std::pow(q, sol.l + 1) * poly_eval(sol.coeffs, q) * exp_factor(sol, q);
}

int count_nodes(WaveForm& w) {
  const ExactSolution& sol = w.solution;
  int nodes;
  if (sol.a_root == 0.0) {
    nodes = exact_nodes_at_zero_root(sol.n, sol.l);
  } else {
    // the Cauchy bound explodes when the leading coefficient is tiny (edge
    // roots at large n); the turning point then caps the scan window
    const double bound = std::min(root_bound(sol.coeffs), turning_point(sol) + 1.0);
    nodes = scan_nodes(sol.coeffs, bound);
  }
  w.solution.node_count = nodes;
  return nodes;
}

double residual(const WaveForm& w, double q) {
  if (!(q > 0.0)) throw std::domain_error("residual: q must be > 0");
  const ExactSolution& sol = w.solution;
  const std::vector<double> g = residual_core_poly(sol);
  return -std::pow(q, sol.l) * exp_factor(sol, q) * poly_eval(g, q);
}

double residual_scale(const WaveForm& w, double q) {
  return std::max(1.0, std::abs(evaluate(w, q)) * std::abs(w.solution.w));
}

double residual_identity_scale(const WaveForm& w, double q) {
  const ExactSolution& sol = w.solution;
  const double a = sol.a_root;
  const int l = sol.l;
  const int n = sol.n;
  auto c = [&](int j) {
    return (j >= 0 && j <= n) ? std::abs(sol.coeffs[static_cast<size_t>(j)]) : 0.0;
  };
  double sum = 0.0;
  for (int j = -1; j <= n; ++j)
    sum += ((j + 2.0) * (j + 2.0 * l + 3.0) * c(j + 2) + std::abs(a) * (j + l + 2.0) * c(j + 1) +
            2.0 * std::abs(n - j) * c(j)) *
           std::pow(q, j + 1);
  return std::max(1.0, std::pow(q, l) * exp_factor(sol, q) * sum);
}

std::vector<double> standard_residual_grid() {
  std::vector<double> grid;
  grid.reserve(80);
  for (int k = 1; k <= 80; ++k) grid.push_back(k * 0.1);
  return grid;
}

double expectation_q(const WaveForm& w) {
  const ExactSolution& sol = w.solution;
  const double q_max =
      sol.a_root / 2.0 + 10.0 + std::sqrt(std::max(0.0, 2.0 * sol.w + 20.0));
  auto f2 = [&](double q) {
    const double f = evaluate(w, q);
    return f * f;
  };
  auto qf2 = [&](double q) { return q * f2(q); };
  const QuadratureResult den = integrate_adaptive(f2, 0.0, q_max, 1e-12);
  const QuadratureResult num = integrate_adaptive(qf2, 0.0, q_max, 1e-12);
  if (!(den.value > 0.0))
    throw numerical_error("expectation_q: vanishing norm integral");
  return num.value / den.value;
}

double tail_decay_start(const WaveForm& w) {
  const ExactSolution& sol = w.solution;
  const double a = sol.a_root;
  const double spec_start = a / 2.0 + std::sqrt(static_cast<double>(sol.n + sol.l + 2));

  // stationary points of f solve T(q) = (l+1)P + q P' + (a/2) q P - q^2 P = 0
  const std::vector<double>& p = sol.coeffs;
  std::vector<double> t;
  add_shifted(t, p, 0, sol.l + 1.0);
  add_shifted(t, poly_derivative(p), 1, 1.0);
  add_shifted(t, p, 1, a / 2.0);
  add_shifted(t, p, 2, -1.0);

  // last sign change of T on a dense grid bounds the last stationary point;
  // stationary points of f cannot sit beyond the turning point either
  const double hi = std::max(turning_point(sol), spec_start) + 2.0;
  constexpr int kGridPoints = 20000;
  double last = 0.0;
  double prev = poly_eval(t, hi / kGridPoints);
  for (int k = 2; k <= kGridPoints; ++k) {
    const double q = k * hi / kGridPoints;
    const double v = poly_eval(t, q);
    if (prev != 0.0 && v != 0.0 && std::signbit(prev) != std::signbit(v)) last = q;
    prev = v;
  }
  return std::max(spec_start, last * (1.0 + 1e-9)) + hi / kGridPoints;
}

void write_wave_csv(std::ostream& os, const WaveForm& w, const std::vector<double>& grid) {
  char buf[64];
  auto fmt = [&buf](double x) {
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return std::string(buf);
  };
  os << "q,f,residual\n";
  for (double q : grid)
    os << fmt(q) << ',' << fmt(evaluate(w, q)) << ',' << fmt(residual(w, q)) << '\n';
}

} // namespace rotosc
