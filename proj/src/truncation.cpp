#include "rotosc/truncation.hpp"

#include "rotosc/errors.hpp"
#include "rotosc/model.hpp"
#include "rotosc/recurrence.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace rotosc {

double truncation_energy(int n, int l, double a) {
  if (n < 0 || l < 0) throw std::domain_error("truncation_energy: n, l must be >= 0");
  return 2.0 * n + 2.0 * l + 3.0 - a * a / 4.0;
}

namespace {

// Extracts g with c_{n+1}(a) = a^p g(a^2), p in {0, 1}.
struct ParitySplit {
  int p = 0;
  RationalPolynomial g;
};

ParitySplit parity_split(const RationalPolynomial& poly, int n, int l) {
  const int p = poly.trailing_zeros();
  if (p > 1) {
    std::ostringstream msg;
    msg << "realness violation: c_{n+1} has a zero root of multiplicity " << p << " at n=" << n
        << " l=" << l;
    throw numerical_error(msg.str());
  }
  std::vector<Rational> g;
  for (int k = p; k <= poly.degree(); k += 2) g.push_back(poly.coeff(k));
  return {p, RationalPolynomial{std::move(g)}};
}

// Exact bisection of a Sturm-certified bracket (lo, hi] containing one root,
// down to relative width `width`, using dyadic midpoints.
void bisect_exact(const std::vector<RationalPolynomial>& chain, Rational& lo, Rational& hi,
                  double width) {
  while (true) {
    const double w = hi.get_d() - lo.get_d();
    if (w <= width * std::max(1.0, std::abs(hi.get_d()))) break;
    Rational mid = (lo + hi) / 2;
    if (count_roots_in(chain, lo, mid) == 1)
      hi = mid;
    else
      lo = mid;
  }
}

// Newton refinement on the double-converted polynomial inside a slightly
// inflated bracket (the exact bracket endpoints can round onto the root).
// Newton steps that leave the bracket degrade to bisection.
double refine_double(const RationalPolynomial& g, double lo, double hi) {
  const RationalPolynomial dg = g.derivative();
  const double w = hi - lo;
  lo -= 0.25 * w;
  hi += 0.25 * w;
  double flo = g.eval_double(lo);
  double fhi = g.eval_double(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;

  double x = 0.5 * (lo + hi);
  if (std::signbit(flo) == std::signbit(fhi)) {
    // inflation failed to straddle (clustered roots); plain Newton
    for (int iter = 0; iter < 60; ++iter) {
      const double dfx = dg.eval_double(x);
      if (dfx == 0.0) break;
      const double step = g.eval_double(x) / dfx;
      x -= step;
      if (std::abs(step) <= 1e-14 * std::max(1.0, std::abs(x))) break;
    }
    return x;
  }

  for (int iter = 0; iter < 120; ++iter) {
    const double fx = g.eval_double(x);
    if (fx == 0.0) return x;
    if (std::signbit(fx) == std::signbit(flo)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
      fhi = fx;
    }
    const double dfx = dg.eval_double(x);
    double next = (dfx != 0.0) ? x - fx / dfx : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double step = std::abs(next - x);
    x = next;
    if (step <= 1e-14 * std::max(1.0, std::abs(x))) break;
  }
  return x;
}

std::vector<double> positive_s_roots(const RationalPolynomial& g, int n, int l) {
  std::vector<double> out;
  const int expected = g.degree();
  if (expected <= 0) return out;

  auto chain = sturm_chain(g);
  if (chain.back().degree() != 0) {
    std::ostringstream msg;
    msg << "realness violation: c_{n+1} is not squarefree at n=" << n << " l=" << l;
    throw numerical_error(msg.str());
  }

  // Cauchy bound on the roots of g, as an exact rational.
  Rational bound(1);
  for (int k = 0; k < g.degree(); ++k) {
    Rational q = abs(g.coeff(k) / g.leading());
    if (q > bound) bound = q;
  }
  bound = bound + 1;

  const int count = count_roots_in(chain, Rational(0), bound);
  if (count != expected) {
    std::ostringstream msg;
    msg << "realness violation: expected " << expected << " positive roots of g(s) at n=" << n
        << " l=" << l << ", Sturm count gives " << count;
    throw numerical_error(msg.str());
  }

  // Subdivide until each bracket isolates one root.
  std::vector<std::pair<Rational, Rational>> work{{Rational(0), bound}}, isolated;
  while (!work.empty()) {
    auto [lo, hi] = work.back();
    work.pop_back();
    const int c = count_roots_in(chain, lo, hi);
    if (c == 0) continue;
    if (c == 1) {
      isolated.emplace_back(lo, hi);
      continue;
    }
    Rational mid = (lo + hi) / 2;
    work.emplace_back(lo, mid);
    work.emplace_back(mid, hi);
  }

  for (auto& [lo, hi] : isolated) {
    bisect_exact(chain, lo, hi, 1e-6);
    out.push_back(refine_double(g, lo.get_d(), hi.get_d()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

std::vector<double> truncation_roots(int n, int l) {
  const RecurrenceTable table = build_table(n, l);
  const RationalPolynomial& cn1 = table.polys.back();
  const ParitySplit split = parity_split(cn1, n, l);

  if (split.p != (n % 2 == 0 ? 1 : 0)) {
    std::ostringstream msg;
    msg << "realness violation: parity of c_{n+1} inconsistent at n=" << n << " l=" << l;
    throw numerical_error(msg.str());
  }

  const std::vector<double> s_roots = positive_s_roots(split.g, n, l);
  std::vector<double> roots;
  roots.reserve(static_cast<size_t>(n) + 1);
  for (auto it = s_roots.rbegin(); it != s_roots.rend(); ++it) roots.push_back(-std::sqrt(*it));
  if (split.p == 1) roots.push_back(0.0);
  for (double s : s_roots) roots.push_back(std::sqrt(s));

  if (static_cast<int>(roots.size()) != n + 1) {
    std::ostringstream msg;
    msg << "realness violation: root count " << roots.size() << " != " << n + 1 << " at n=" << n
        << " l=" << l;
    throw numerical_error(msg.str());
  }

  for (double r : roots) {
    const double res = std::abs(cn1.eval_double(r));
    const double scale = std::max(cn1.eval_scale(r), 1e-300);
    if (res > 1e-10 * scale) {
      std::ostringstream msg;
      msg << "truncation root residual " << res << " above tolerance at n=" << n << " l=" << l
          << " a=" << r;
      throw numerical_error(msg.str());
    }
  }
  return roots;
}

std::vector<ExactSolution> exact_solutions(int n, int l) {
  const RecurrenceTable table = build_table(n, l);
  const RationalPolynomial& cn1 = table.polys.back();

  // c_n and c_{n+1} sharing a root would make the order-n truncation collapse
  // onto a lower one; a constant gcd certifies c_n != 0 at every root.  (The
  // value of c_n at the edge roots becomes astronomically small for large n,
  // so no floating-point threshold can decide this.)
  if (n >= 1 && poly_gcd(table.polys[static_cast<size_t>(n)], cn1).degree() > 0) {
    std::ostringstream msg;
    msg << "degenerate truncation: c_n and c_{n+1} share a root at n=" << n << " l=" << l;
    throw numerical_error(msg.str());
  }

  const std::vector<double> roots = truncation_roots(n, l);
  std::vector<ExactSolution> out;
  out.reserve(roots.size());
  for (size_t idx = 0; idx < roots.size(); ++idx) {
    const double a = roots[idx];
    // coefficients by exact rational evaluation of c_j(a) at the dyadic root;
    // the forward recurrence in doubles loses digits to cancellation at the
    // outer roots
    const Rational a_exact(a);
    std::vector<double> coeffs(static_cast<size_t>(n) + 1);
    double scale = 1.0;
    for (int j = 0; j <= n; ++j) {
      coeffs[static_cast<size_t>(j)] =
          Rational(table.polys[static_cast<size_t>(j)](a_exact)).get_d();
      scale = std::max(scale, std::abs(coeffs[static_cast<size_t>(j)]));
    }
    const double cn1_val = Rational(cn1(a_exact)).get_d();
    const double cn2_val = coeff_A(n, l).get_d() * a * cn1_val; // B_n = 0 at truncation
    if (std::abs(cn1_val) > 1e-9 * scale || std::abs(cn2_val) > 1e-9 * scale) {
      std::ostringstream msg;
      msg << "truncation check failed: c_{n+1}, c_{n+2} do not vanish at n=" << n << " l=" << l
          << " a=" << a;
      throw numerical_error(msg.str());
    }

    ExactSolution sol;
    sol.n = n;
    sol.l = l;
    sol.i = static_cast<int>(idx) + 1;
    sol.a_root = a;
    sol.w = truncation_energy(n, l, a);
    sol.coeffs = std::move(coeffs);
    out.push_back(std::move(sol));
  }
  return out;
}

void write_solutions_csv(std::ostream& os, const std::vector<ExactSolution>& solutions) {
  os << "n,l,i,a,W,lambda,node_count,coefficients\n";
  char buf[64];
  auto fmt = [&buf](double x) {
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return std::string(buf);
  };
  for (const auto& sol : solutions) {
    os << sol.n << ',' << sol.l << ',' << sol.i << ',' << fmt(sol.a_root) << ',' << fmt(sol.w)
       << ',' << fmt(lambda_from_w(sol.w, sol.a_root)) << ',';
    if (sol.node_count) os << *sol.node_count;
    os << ',';
    for (size_t k = 0; k < sol.coeffs.size(); ++k) {
      if (k) os << ';';
      os << fmt(sol.coeffs[k]);
    }
    os << '\n';
  }
}

} // namespace rotosc
