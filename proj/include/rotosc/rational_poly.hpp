#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace rotosc {

using Rational = mpq_class;

/// Returns num/den in canonical form.
Rational make_rational(long num, long den = 1);

/// Dense univariate polynomial with exact rational coefficients,
/// coefficients()[k] = coefficient of x^k.  The zero polynomial has an
/// empty coefficient vector and degree -1; otherwise the leading
/// coefficient is nonzero.
class RationalPolynomial {
public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs);

  static RationalPolynomial constant(Rational c);
  /// c * x^k
  static RationalPolynomial monomial(Rational c, int k);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Coefficient of x^k (zero beyond the degree).
  Rational coeff(int k) const;
  const Rational& leading() const;

  /// Multiplicity of the root x = 0 (count of trailing zero coefficients).
  int trailing_zeros() const;

  /// True when only powers x^k with k = parity (mod 2) carry nonzero
  /// coefficients; such a polynomial satisfies p(-x) = (-1)^parity p(x).
  bool has_parity(int parity) const;

  RationalPolynomial derivative() const;

  Rational operator()(const Rational& x) const;
  /// Horner evaluation on double-converted coefficients.
  double eval_double(double x) const;
  /// sum_k |c_k| |x|^k, the magnitude scale of the evaluation.
  double eval_scale(double x) const;

  RationalPolynomial operator+(const RationalPolynomial& rhs) const;
  RationalPolynomial operator-(const RationalPolynomial& rhs) const;
  RationalPolynomial operator*(const RationalPolynomial& rhs) const;
  RationalPolynomial scaled(const Rational& c) const;

  /// quotient/remainder of exact polynomial division.
  static std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& num,
                                                                  const RationalPolynomial& den);

  /// Scales so the coefficients become coprime integers with positive leading
  /// coefficient times the original sign structure (positive multiple only).
  RationalPolynomial primitive_part() const;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Sturm chain p, p', -rem(...), ...; every element reduced to its primitive
/// integer part (a positive rescaling, which preserves the sign sequence).
std::vector<RationalPolynomial> sturm_chain(const RationalPolynomial& p);

/// Number of sign alternations of the chain evaluated at x.
int sign_variations_at(const std::vector<RationalPolynomial>& chain, const Rational& x);
int sign_variations_at_pos_infinity(const std::vector<RationalPolynomial>& chain);
int sign_variations_at_neg_infinity(const std::vector<RationalPolynomial>& chain);

/// Count of distinct real roots in (lo, hi].
int count_roots_in(const std::vector<RationalPolynomial>& chain, const Rational& lo,
                   const Rational& hi);
/// Count of distinct real roots in (lo, +infinity).
int count_roots_above(const std::vector<RationalPolynomial>& chain, const Rational& lo);

/// gcd(p, p') is constant, i.e. all complex roots are simple.
bool is_squarefree(const RationalPolynomial& p);

/// Monic-normalized polynomial gcd by the Euclidean remainder sequence.
RationalPolynomial poly_gcd(RationalPolynomial a, RationalPolynomial b);

} // namespace rotosc
