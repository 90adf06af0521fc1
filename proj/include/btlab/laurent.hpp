#pragma once

#include <map>

#include "btlab/rational.hpp"

namespace btlab {

/// Finite formal sum of powers of a variable with exponents in Z.
/// Depending on context the variable is t (group entries, place-zero
/// offsets) or the uniformizer t^-1 (place-infinity offsets).
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;  // zero over the rationals
  explicit LaurentPolynomial(Field f) : f_(f) {}

  static LaurentPolynomial zero(Field f) { return LaurentPolynomial(f); }
  static LaurentPolynomial term(const Scalar& c, int exp);

  Field field() const { return f_; }
  bool is_zero() const { return c_.empty(); }
  Scalar coeff(int exp) const;
  void add_term(int exp, const Scalar& c);
  const std::map<int, Scalar>& terms() const { return c_; }

  int min_exp() const;  // throws on zero
  int max_exp() const;  // throws on zero

  /// Terms with exponent in [lo, hi]; either bound may be omitted via
  /// INT_MIN / INT_MAX.
  LaurentPolynomial slice(int lo, int hi) const;

  LaurentPolynomial operator-() const;
  friend LaurentPolynomial operator+(const LaurentPolynomial& a,
                                     const LaurentPolynomial& b);
  friend LaurentPolynomial operator-(const LaurentPolynomial& a,
                                     const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(const LaurentPolynomial& a,
                                     const LaurentPolynomial& b);
  LaurentPolynomial operator*(const Scalar& s) const;
  friend bool operator==(const LaurentPolynomial& a,
                         const LaurentPolynomial& b);

  /// Evaluate with the variable read as t.
  RationalFunction to_rational() const;
  /// Evaluate with the variable read as t^-1.
  RationalFunction to_rational_inverted() const;

  std::string str(const char* var = "t") const;

 private:
  Field f_{};
  std::map<int, Scalar> c_;  // no stored zero coefficients
};

/// Truncated expansion of f in powers of the uniformizer at the given
/// place: the result g is supported on uniformizer-exponents in
/// [valuation(f), upper) and valuation(f - g, at) >= upper.
LaurentPolynomial laurent_expand(const RationalFunction& f, Place at,
                                 int upper);

/// Exact conversion; requires the denominator to be a monomial t^k.
LaurentPolynomial to_laurent(const RationalFunction& f);

bool is_laurent_polynomial(const RationalFunction& f);

int cmp(const LaurentPolynomial& a, const LaurentPolynomial& b);

}  // namespace btlab
