#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace btlab {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Coefficient field: exact rationals (p == 0) or the prime field F_p.
struct Field {
  unsigned p = 0;

  bool is_prime() const { return p != 0; }
  friend bool operator==(const Field&, const Field&) = default;
};

inline Field rationals() { return Field{0}; }
inline Field prime_field(unsigned p) { return Field{p}; }

/// An exact field element.  Rational backend: reduced fraction.
/// Prime backend: residue in [0, p).  Equality is representation equality.
class Scalar {
 public:
  Scalar() = default;  // rational zero
  Scalar(Field f, long v) : Scalar(f, BigRat(v)) {}
  Scalar(Field f, const BigRat& v);

  static Scalar zero(Field f) { return Scalar(f, 0); }
  static Scalar one(Field f) { return Scalar(f, 1); }

  Field field() const { return f_; }
  bool is_zero() const { return v_ == 0; }
  const BigRat& value() const { return v_; }

  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.f_ == b.f_ && a.v_ == b.v_;
  }

  std::string str() const;
  static Scalar parse(Field f, const std::string& text);

 private:
  void reduce();

  Field f_{};
  BigRat v_{};
};

/// Total order used for canonical map keys; not an arithmetic order on F_p.
int cmp(const Scalar& a, const Scalar& b);

void require_same_field(Field a, Field b, const char* where);

}  // namespace btlab
