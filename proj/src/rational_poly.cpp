#include "rotosc/rational_poly.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace rotosc {

namespace {

int sign_of(const Rational& x) { return sgn(x); }

} // namespace

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

RationalPolynomial RationalPolynomial::constant(Rational c) {
  return RationalPolynomial{std::vector<Rational>{std::move(c)}};
}

RationalPolynomial RationalPolynomial::monomial(Rational c, int k) {
  std::vector<Rational> v(static_cast<size_t>(k) + 1, Rational(0));
  v[static_cast<size_t>(k)] = std::move(c);
  return RationalPolynomial{std::move(v)};
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPolynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<size_t>(k)];
}

const Rational& RationalPolynomial::leading() const {
  if (coeffs_.empty()) throw std::logic_error("leading() of zero polynomial");
  return coeffs_.back();
}

int RationalPolynomial::trailing_zeros() const {
  int k = 0;
  while (k < static_cast<int>(coeffs_.size()) && coeffs_[static_cast<size_t>(k)] == 0) ++k;
  return coeffs_.empty() ? 0 : k;
}

bool RationalPolynomial::has_parity(int parity) const {
  for (size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0 && static_cast<int>(k % 2) != (parity % 2 + 2) % 2) return false;
  return true;
}

RationalPolynomial RationalPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return RationalPolynomial{};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return RationalPolynomial{std::move(d)};
}

Rational RationalPolynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
  return acc;
}

double RationalPolynomial::eval_double(double x) const {
  double acc = 0.0;
  for (size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k].get_d();
  return acc;
}

double RationalPolynomial::eval_scale(double x) const {
  double acc = 0.0;
  const double ax = std::abs(x);
  for (size_t k = coeffs_.size(); k-- > 0;) acc = acc * ax + std::abs(coeffs_[k].get_d());
  return acc;
}

RationalPolynomial RationalPolynomial::operator+(const RationalPolynomial& rhs) const {
  std::vector<Rational> out(std::max(coeffs_.size(), rhs.coeffs_.size()), Rational(0));
  for (size_t k = 0; k < coeffs_.size(); ++k) out[k] += coeffs_[k];
  for (size_t k = 0; k < rhs.coeffs_.size(); ++k) out[k] += rhs.coeffs_[k];
  return RationalPolynomial{std::move(out)};
}

RationalPolynomial RationalPolynomial::operator-(const RationalPolynomial& rhs) const {
  std::vector<Rational> out(std::max(coeffs_.size(), rhs.coeffs_.size()), Rational(0));
  for (size_t k = 0; k < coeffs_.size(); ++k) out[k] += coeffs_[k];
  for (size_t k = 0; k < rhs.coeffs_.size(); ++k) out[k] -= rhs.coeffs_[k];
  return RationalPolynomial{std::move(out)};
}

RationalPolynomial RationalPolynomial::operator*(const RationalPolynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return RationalPolynomial{};
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  return RationalPolynomial{std::move(out)};
}

RationalPolynomial RationalPolynomial::scaled(const Rational& c) const {
  std::vector<Rational> out(coeffs_.size());
  for (size_t k = 0; k < coeffs_.size(); ++k) out[k] = coeffs_[k] * c;
  return RationalPolynomial{std::move(out)};
}

std::pair<RationalPolynomial, RationalPolynomial> RationalPolynomial::divmod(
    const RationalPolynomial& num, const RationalPolynomial& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = num.coeffs_;
  const int dd = den.degree();
  std::vector<Rational> quo;
  if (static_cast<int>(rem.size()) - 1 >= dd)
    quo.assign(rem.size() - static_cast<size_t>(dd), Rational(0));
  for (int k = static_cast<int>(rem.size()) - 1; k >= dd; --k) {
    Rational factor = rem[static_cast<size_t>(k)] / den.leading();
    if (factor == 0) continue;
    quo[static_cast<size_t>(k - dd)] = factor;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<size_t>(k - dd + j)] -= factor * den.coeffs_[static_cast<size_t>(j)];
  }
  return {RationalPolynomial{std::move(quo)}, RationalPolynomial{std::move(rem)}};
}

RationalPolynomial RationalPolynomial::primitive_part() const {
  if (is_zero()) return *this;
  mpz_class den_lcm(1);
  for (const auto& c : coeffs_)
    if (c != 0) den_lcm = lcm(den_lcm, c.get_den());
  mpz_class num_gcd(0);
  for (const auto& c : coeffs_)
    if (c != 0) num_gcd = gcd(num_gcd, mpz_class(c.get_num() * den_lcm / c.get_den()));
  Rational scale(den_lcm, num_gcd); // positive by construction
  scale.canonicalize();
  return scaled(scale);
}

std::vector<RationalPolynomial> sturm_chain(const RationalPolynomial& p) {
  std::vector<RationalPolynomial> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p.primitive_part());
  RationalPolynomial d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d.primitive_part());
  while (true) {
    const auto& a = chain[chain.size() - 2];
    const auto& b = chain[chain.size() - 1];
    RationalPolynomial rem = RationalPolynomial::divmod(a, b).second;
    if (rem.is_zero()) break;
    chain.push_back(rem.scaled(Rational(-1)).primitive_part());
  }
  return chain;
}

namespace {

int count_variations(const std::vector<int>& signs) {
  int v = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

} // namespace

int sign_variations_at(const std::vector<RationalPolynomial>& chain, const Rational& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain) signs.push_back(sign_of(q(x)));
  return count_variations(signs);
}

int sign_variations_at_pos_infinity(const std::vector<RationalPolynomial>& chain) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain) signs.push_back(q.is_zero() ? 0 : sign_of(q.leading()));
  return count_variations(signs);
}

int sign_variations_at_neg_infinity(const std::vector<RationalPolynomial>& chain) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain) {
    if (q.is_zero()) {
      signs.push_back(0);
    } else {
      int s = sign_of(q.leading());
      if (q.degree() % 2 != 0) s = -s;
      signs.push_back(s);
    }
  }
  return count_variations(signs);
}

int count_roots_in(const std::vector<RationalPolynomial>& chain, const Rational& lo,
                   const Rational& hi) {
  return sign_variations_at(chain, lo) - sign_variations_at(chain, hi);
}

int count_roots_above(const std::vector<RationalPolynomial>& chain, const Rational& lo) {
  return sign_variations_at(chain, lo) - sign_variations_at_pos_infinity(chain);
}

bool is_squarefree(const RationalPolynomial& p) {
  if (p.is_zero()) return false;
  if (p.degree() == 0) return true;
  auto chain = sturm_chain(p);
  return chain.back().degree() == 0;
}

RationalPolynomial poly_gcd(RationalPolynomial a, RationalPolynomial b) {
  a = a.primitive_part();
  b = b.primitive_part();
  while (!b.is_zero()) {
    RationalPolynomial rem = RationalPolynomial::divmod(a, b).second.primitive_part();
    a = std::move(b);
    b = std::move(rem);
  }
  if (!a.is_zero() && a.leading() < 0) a = a.scaled(Rational(-1));
  return a;
}

} // namespace rotosc
