#pragma once

#include <limits>
#include <tuple>
#include <vector>

#include "btlab/scalar.hpp"

namespace btlab {

/// Dense polynomial over a Scalar field.  Coefficient index = degree;
/// the leading coefficient is nonzero unless the polynomial is zero.
class Polynomial {
 public:
  /// Sentinel returned by degree() for the zero polynomial.  Never use it
  /// in arithmetic; test is_zero() first.
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  explicit Polynomial(Field f) : f_(f) {}
  Polynomial(Field f, std::vector<Scalar> coeffs);

  static Polynomial zero(Field f) { return Polynomial(f); }
  static Polynomial constant(const Scalar& c);
  static Polynomial one(Field f) { return constant(Scalar::one(f)); }
  static Polynomial t(Field f);
  /// c * t^k, k >= 0.
  static Polynomial monomial(const Scalar& c, int k);

  Field field() const { return f_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return is_zero() ? kZeroDegree : int(c_.size()) - 1; }
  /// Multiplicity of t dividing this polynomial; throws on zero.
  int ord() const;
  Scalar coeff(int k) const;
  Scalar leading() const;
  const std::vector<Scalar>& coeffs() const { return c_; }

  bool is_monic() const { return !is_zero() && leading() == Scalar::one(f_); }
  Polynomial monic() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator*(const Scalar& s) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Euclidean division: returns (quotient, remainder) with deg r < deg b.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a,
                                                  const Polynomial& b);

  std::string str() const;  // human-readable, variable t

 private:
  void trim();

  Field f_;
  std::vector<Scalar> c_;
};

/// Monic gcd; gcd(0, 0) throws.
Polynomial gcd_poly(const Polynomial& a, const Polynomial& b);

/// Extended gcd: returns (g, u, v) with g = u*a + v*b and g monic.
std::tuple<Polynomial, Polynomial, Polynomial> xgcd_poly(const Polynomial& a,
                                                         const Polynomial& b);

int cmp(const Polynomial& a, const Polynomial& b);

}  // namespace btlab
