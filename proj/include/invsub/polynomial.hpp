#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "invsub/numeric.hpp"

namespace invsub {

/// Dense univariate polynomial over Q. Coefficient i multiplies x^i;
/// trailing zeros are always stripped, so the zero polynomial is empty.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coefficients);
  RationalPolynomial(std::initializer_list<Rational> coefficients);

  static RationalPolynomial constant(const Rational& c);
  static RationalPolynomial monomial(const Rational& c, std::size_t degree);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& leading() const;
  Rational coefficient(std::size_t i) const;
  bool is_monic() const { return !is_zero() && leading() == 1; }

  RationalPolynomial monic() const;
  RationalPolynomial derivative() const;
  Rational evaluate(const Rational& x) const;

  RationalPolynomial operator-() const;
  RationalPolynomial& operator+=(const RationalPolynomial& o);
  RationalPolynomial& operator-=(const RationalPolynomial& o);
  RationalPolynomial& operator*=(const RationalPolynomial& o);
  RationalPolynomial& operator*=(const Rational& c);

  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) {
    return a += b;
  }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) {
    return a -= b;
  }
  friend RationalPolynomial operator*(RationalPolynomial a, const RationalPolynomial& b) {
    return a *= b;
  }
  friend RationalPolynomial operator*(RationalPolynomial a, const Rational& c) { return a *= c; }

  bool operator==(const RationalPolynomial&) const = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder; throws std::domain_error on a zero divisor.
std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                        const RationalPolynomial& b);

/// Monic gcd (zero if both arguments are zero).
RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b);

RationalPolynomial pow(const RationalPolynomial& p, unsigned e);

/// Human-readable form such as "x^3 - 2*x + 5".
std::string to_string(const RationalPolynomial& p);

}  // namespace invsub
