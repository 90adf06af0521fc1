#include "btlab/group.hpp"

#include <map>

namespace btlab {

Matrix2 Matrix2::identity(Field f) {
  return Matrix2{RationalFunction::one(f), RationalFunction::zero(f),
                 RationalFunction::zero(f), RationalFunction::one(f)};
}

Matrix2 Matrix2::d_power(Field f, int k) {
  return Matrix2{RationalFunction::t_power(f, k), RationalFunction::zero(f),
                 RationalFunction::zero(f), RationalFunction::t_power(f, -k)};
}

Matrix2 Matrix2::upper_unipotent(const RationalFunction& x) {
  Field f = x.field();
  return Matrix2{RationalFunction::one(f), x, RationalFunction::zero(f),
                 RationalFunction::one(f)};
}

Matrix2 Matrix2::diag_unit(const Scalar& u) {
  Field f = u.field();
  return Matrix2{RationalFunction::constant(u), RationalFunction::zero(f),
                 RationalFunction::zero(f),
                 RationalFunction::constant(u.inverse())};
}

Matrix2 Matrix2::inverse() const {
  RationalFunction dt = det();
  if (dt.is_zero()) throw std::domain_error("inverse of singular matrix");
  RationalFunction inv = dt.inverse();
  return Matrix2{d * inv, -b * inv, -c * inv, a * inv};
}

Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
  return Matrix2{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                 x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

int cmp(const Matrix2& x, const Matrix2& y) {
  if (int c = cmp(x.a, y.a); c != 0) return c;
  if (int c = cmp(x.b, y.b); c != 0) return c;
  if (int c = cmp(x.c, y.c); c != 0) return c;
  return cmp(x.d, y.d);
}

std::vector<Scalar> RingSpec::units_mod_sign() const {
  Field f = scalar_field();
  if (is_integers) return {Scalar::one(f)};
  std::vector<Scalar> units;
  // Residues u and p - u give the same action on X; keep one of each pair.
  for (unsigned u = 1; u <= p / 2; ++u)
    units.push_back(Scalar(f, long(u)));
  return units;
}

bool in_U_n(const Unipotent& u, int n) {
  if (n < 0) throw std::invalid_argument("in_U_n: n must be >= 0");
  return valuation(u.x, Place::Infinity) >= -n &&
         valuation(u.x, Place::Zero) >= -n;
}

std::pair<Unipotent, Unipotent> split_window(const Unipotent& u, int n) {
  LaurentPolynomial entry = to_laurent(u.x);  // throws if not Laurent
  LaurentPolynomial inner = entry.slice(-n, n);
  LaurentPolynomial outer = entry - inner;
  return {Unipotent{inner.to_rational()}, Unipotent{outer.to_rational()}};
}

Matrix2 p1_witness(const LaurentPolynomial& x, const LaurentPolynomial& y) {
  if (x.is_zero() && y.is_zero())
    throw std::invalid_argument("p1_witness: zero vector");
  Field f = x.field();
  // Clear t-powers so both coordinates are plain polynomials.
  int shift = 0;
  if (!x.is_zero()) shift = std::min(shift, x.min_exp());
  if (!y.is_zero()) shift = std::min(shift, y.min_exp());
  auto lift = [&](const LaurentPolynomial& v) {
    Polynomial p = Polynomial::zero(f);
    for (const auto& [e, c] : v.terms())
      p = p + Polynomial::monomial(c, e - shift);
    return p;
  };
  Polynomial px = lift(x), py = lift(y);
  // Divide out the polynomial gcd; t^k factors and the gcd are allowed
  // proportionality factors.
  Polynomial g = gcd_poly(px, py);
  px = Polynomial::divmod(px, g).first;
  py = Polynomial::divmod(py, g).first;
  auto [one, u, v] = xgcd_poly(px, py);
  if (one.degree() != 0)
    throw std::logic_error("p1_witness: gcd not cleared");
  Scalar inv = one.coeff(0).inverse();
  u = u * inv;
  v = v * inv;
  // det [[px, -v], [py, u]] = px*u + py*v = 1.
  return Matrix2{RationalFunction(px), RationalFunction(-v),
                 RationalFunction(py), RationalFunction(u)};
}

std::vector<Matrix2> gamma_ball(const RingSpec& ring, int radius,
                                int radius_cap) {
  if (radius < 0 || radius > radius_cap)
    throw std::invalid_argument("gamma_ball: radius exceeds cap");
  Field f = ring.scalar_field();
  std::vector<RationalFunction> entries = {
      RationalFunction::one(f),      -RationalFunction::one(f),
      RationalFunction::t(f),        -RationalFunction::t(f),
      RationalFunction::t_power(f, -1), -RationalFunction::t_power(f, -1)};
  std::vector<Matrix2> gens;
  for (const auto& e : entries) {
    gens.push_back(Matrix2::upper_unipotent(e));
    gens.push_back(Matrix2{RationalFunction::one(f), RationalFunction::zero(f),
                           e, RationalFunction::one(f)});
  }
  gens.push_back(Matrix2::d_power(f, 1));
  gens.push_back(Matrix2::d_power(f, -1));

  struct Less {
    bool operator()(const Matrix2& x, const Matrix2& y) const {
      return cmp(x, y) < 0;
    }
  };
  std::map<Matrix2, int, Less> seen;
  std::vector<Matrix2> ball = {Matrix2::identity(f)};
  seen.emplace(ball[0], 0);
  size_t frontier_begin = 0;
  for (int r = 1; r <= radius; ++r) {
    size_t frontier_end = ball.size();
    for (size_t i = frontier_begin; i < frontier_end; ++i) {
      for (const auto& g : gens) {
        Matrix2 w = ball[i] * g;
        if (seen.emplace(w, r).second) ball.push_back(w);
      }
    }
    frontier_begin = frontier_end;
  }
  return ball;
}

}  // namespace btlab
