#include "rotosc/quadrature.hpp"

#include "rotosc/errors.hpp"

#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

namespace rotosc {

namespace {

// 15-point Kronrod nodes/weights on [-1,1] with the embedded 7-point Gauss
// rule (QUADPACK dqk15 values).
constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691, 0.7415311855993944,
    0.5860872354676911, 0.4058451513773972, 0.2077849550078985, 0.0};
constexpr double kWgk[8] = {
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502, 0.1406532597155259,
    0.1690047266392679, 0.1903505780647854, 0.2044329400752989, 0.2094821410847278};
constexpr double kWg[4] = {0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
                           0.4179591836734694};

struct Segment {
  double lo, hi, value, error;
  bool operator<(const Segment& rhs) const { return error < rhs.error; }
};

Segment gk15(const std::function<double(double)>& f, double lo, double hi) {
  const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
  const double fc = f(c);
  double res_g = kWg[3] * fc;
  double res_k = kWgk[7] * fc;
  for (int j = 0; j < 7; ++j) {
    const double x = h * kXgk[j];
    const double fsum = f(c - x) + f(c + x);
    res_k += kWgk[j] * fsum;
    if (j % 2 == 1) res_g += kWg[j / 2] * fsum;
  }
  Segment s;
  s.lo = lo;
  s.hi = hi;
  s.value = res_k * h;
  s.error = std::abs((res_k - res_g) * h);
  return s;
}

} // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                                    double rel_tol, double abs_tol, int max_intervals) {
  std::priority_queue<Segment> queue;
  queue.push(gk15(f, lo, hi));
  double total = queue.top().value;
  double err = queue.top().error;
  int used = 1;
  while (err > std::max(abs_tol, rel_tol * std::abs(total))) {
    if (used >= max_intervals) {
      std::ostringstream msg;
      msg << "adaptive quadrature failed to converge: " << used << " intervals, integral=" << total
          << ", error estimate=" << err << ", target=" << std::max(abs_tol, rel_tol * std::abs(total));
      throw numerical_error(msg.str());
    }
    Segment worst = queue.top();
    queue.pop();
    total -= worst.value;
    err -= worst.error;
    const double mid = 0.5 * (worst.lo + worst.hi);
    Segment left = gk15(f, worst.lo, mid);
    Segment right = gk15(f, mid, worst.hi);
    total += left.value + right.value;
    err += left.error + right.error;
    queue.push(left);
    queue.push(right);
    ++used;
  }
  return {total, err, used};
}

} // namespace rotosc
