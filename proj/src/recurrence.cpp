#include "rotosc/recurrence.hpp"

#include <nlohmann/json.hpp>
#include <stdexcept>

namespace rotosc {

namespace {

void check_jl(int j, int l) {
  if (j < -1) throw std::domain_error("recurrence: j must be >= -1");
  if (l < 0) throw std::domain_error("recurrence: l must be >= 0");
}

} // namespace

Rational coeff_A(int j, int l) {
  check_jl(j, l);
  return make_rational(-(j + l + 2), (j + 2) * (j + 2 * l + 3));
}

double coeff_B(int j, int l, double w, double a) {
  check_jl(j, l);
  return (4.0 * (2 * j + 2 * l + 3 - w) - a * a) / (4.0 * (j + 2) * (j + 2 * l + 3));
}

Rational coeff_B_truncated(int j, int n, int l) {
  if (j < 0 || n < 0) throw std::domain_error("coeff_B_truncated: j, n must be >= 0");
  if (l < 0) throw std::domain_error("coeff_B_truncated: l must be >= 0");
  return make_rational(2 * (j - n), (j + 2) * (j + 2 * l + 3));
}

RecurrenceTable build_table(int n, int l) {
  if (n < 0 || l < 0) throw std::domain_error("build_table: n, l must be >= 0");
  RecurrenceTable table;
  table.n = n;
  table.l = l;
  auto& polys = table.polys;
  polys.reserve(static_cast<size_t>(n) + 2);
  polys.push_back(RationalPolynomial::constant(Rational(1)));           // c_0
  polys.push_back(RationalPolynomial::monomial(make_rational(-1, 2), 1)); // c_1 = -a/2
  for (int j = 0; j + 2 <= n + 1; ++j) {
    RationalPolynomial a_term =
        RationalPolynomial::monomial(coeff_A(j, l), 1) * polys[static_cast<size_t>(j) + 1];
    RationalPolynomial b_term = polys[static_cast<size_t>(j)].scaled(coeff_B_truncated(j, n, l));
    polys.push_back(a_term + b_term);
  }
  return table;
}

std::vector<double> coefficient_run(int n, int l, double a) {
  if (n < 0 || l < 0) throw std::domain_error("coefficient_run: n, l must be >= 0");
  std::vector<double> c(static_cast<size_t>(n) + 3, 0.0);
  c[0] = 1.0;
  c[1] = -a / 2.0;
  for (int j = 0; j + 2 <= n + 2; ++j) {
    const double aj = coeff_A(j, l).get_d() * a;
    const double bj = coeff_B_truncated(j, n, l).get_d();
    c[static_cast<size_t>(j) + 2] = aj * c[static_cast<size_t>(j) + 1] + bj * c[static_cast<size_t>(j)];
  }
  return c;
}

nlohmann::json table_to_json(const RecurrenceTable& table) {
  nlohmann::json out;
  out["n"] = table.n;
  out["l"] = table.l;
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& poly : table.polys) {
    nlohmann::json entry = nlohmann::json::array();
    for (int k = 0; k <= poly.degree(); ++k) {
      const Rational c = poly.coeff(k);
      entry.push_back({c.get_num().get_str(), c.get_den().get_str()});
    }
    if (poly.is_zero()) entry.push_back({"0", "1"});
    coeffs.push_back(entry);
  }
  out["c"] = coeffs;
  return out;
}

} // namespace rotosc
