#pragma once

#include <vector>

#include "btlab/laurent.hpp"

namespace btlab {

/// 2x2 matrix over F(t).  GL2 in general; SL2 where required, checked at
/// the call sites that need det = 1.
struct Matrix2 {
  RationalFunction a, b, c, d;

  static Matrix2 identity(Field f);
  /// diag(t^k, t^-k).
  static Matrix2 d_power(Field f, int k);
  /// (1 x; 0 1).
  static Matrix2 upper_unipotent(const RationalFunction& x);
  /// diag(u, u^-1) for a nonzero field constant u.
  static Matrix2 diag_unit(const Scalar& u);

  Field field() const { return a.field(); }
  RationalFunction det() const { return a * d - b * c; }
  bool is_sl2() const { return det() == RationalFunction::one(field()); }
  Matrix2 inverse() const;

  friend Matrix2 operator*(const Matrix2& x, const Matrix2& y);
  friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

int cmp(const Matrix2& x, const Matrix2& y);

/// Element of U: (1 x; 0 1), identified with its corner entry.
struct Unipotent {
  RationalFunction x;

  static Unipotent identity(Field f) {
    return Unipotent{RationalFunction::zero(f)};
  }
  Matrix2 to_matrix() const { return Matrix2::upper_unipotent(x); }
  bool is_identity() const { return x.is_zero(); }

  friend bool operator==(const Unipotent&, const Unipotent&) = default;
};

/// Base ring J of Gamma = SL2(J[t, t^-1]): the integers or F_p.
struct RingSpec {
  bool is_integers = true;
  unsigned p = 0;  // prime when !is_integers

  static RingSpec integers() { return RingSpec{true, 0}; }
  static RingSpec prime(unsigned p) { return RingSpec{false, p}; }

  /// The field backend this ring's computations run over.
  Field scalar_field() const {
    return is_integers ? rationals() : prime_field(p);
  }

  /// Representatives of the unit group modulo {+-1}, i.e. modulo the
  /// kernel of the action of diag(u, u^-1) on X.
  std::vector<Scalar> units_mod_sign() const;
};

/// Membership in U_n: v_inf(x) >= -n and v_0(x) >= -n.
bool in_U_n(const Unipotent& u, int n);

/// The factorization along U_Gamma = U_n U^n: inner entry supported on
/// t-exponents in [-n, n], outer entry outside.  The entry must be a
/// Laurent polynomial.
std::pair<Unipotent, Unipotent> split_window(const Unipotent& u, int n);

/// Constructive transitivity of SL2(F[t,t^-1]) on P^1(F(t)): a det-1
/// matrix whose first column is proportional to (x, y).
Matrix2 p1_witness(const LaurentPolynomial& x, const LaurentPolynomial& y);

/// All words of length <= radius in the fixed generating set of
/// SL2(J[t,t^-1]): elementary matrices with entries {+-1, +-t, +-t^-1}
/// plus D and D^-1.  Deduplicated, deterministic order.
std::vector<Matrix2> gamma_ball(const RingSpec& ring, int radius,
                                int radius_cap = 4);

}  // namespace btlab
