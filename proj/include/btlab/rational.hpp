#pragma once

#include "btlab/polynomial.hpp"

namespace btlab {

/// The two places of F(t) used throughout: zeros at t = 0 (uniformizer t)
/// and zeros at infinity (uniformizer t^-1).
enum class Place { Zero, Infinity };

inline const char* place_name(Place p) {
  return p == Place::Zero ? "zero" : "infinity";
}

/// Value of a discrete valuation: an integer or +infinity (for 0).
struct Valuation {
  bool infinite = false;
  long v = 0;

  static Valuation infinity() { return {true, 0}; }
  static Valuation of(long v) { return {false, v}; }

  bool operator>=(long bound) const { return infinite || v >= bound; }
  friend bool operator==(const Valuation&, const Valuation&) = default;

  std::string str() const { return infinite ? "+inf" : std::to_string(v); }
};

/// Reduced fraction of polynomials: denominator monic, coprime to the
/// numerator, never zero.  Zero is 0/1.
class RationalFunction {
 public:
  explicit RationalFunction(Field f)
      : num_(Polynomial::zero(f)), den_(Polynomial::one(f)) {}
  RationalFunction(Polynomial num, Polynomial den);
  explicit RationalFunction(Polynomial num);

  static RationalFunction zero(Field f) { return RationalFunction(f); }
  static RationalFunction one(Field f) {
    return RationalFunction(Polynomial::one(f));
  }
  static RationalFunction t(Field f) {
    return RationalFunction(Polynomial::t(f));
  }
  static RationalFunction constant(const Scalar& c) {
    return RationalFunction(Polynomial::constant(c));
  }
  /// t^k for any integer k.
  static RationalFunction t_power(Field f, int k);

  Field field() const { return num_.field(); }
  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RationalFunction operator-() const;
  RationalFunction inverse() const;
  friend RationalFunction operator+(const RationalFunction& a,
                                    const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a,
                                    const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a,
                                    const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a,
                                    const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

  std::string str() const;

 private:
  void normalize();

  Polynomial num_, den_;
};

/// nu_0(num/den * t^n) = n with t dividing neither polynomial;
/// nu_inf(p/q) = deg q - deg p.  valuation(0) = +infinity.
Valuation valuation(const RationalFunction& f, Place at);

int cmp(const RationalFunction& a, const RationalFunction& b);

}  // namespace btlab
