#include "btlab/rational.hpp"

namespace btlab {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  require_same_field(num_.field(), den_.field(), "RationalFunction");
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  normalize();
}

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)), den_(Polynomial::one(num_.field())) {}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial::one(field());
    return;
  }
  Polynomial g = gcd_poly(num_, den_);
  if (g.degree() > 0) {
    num_ = Polynomial::divmod(num_, g).first;
    den_ = Polynomial::divmod(den_, g).first;
  }
  Scalar lead_inv = den_.leading().inverse();
  num_ = num_ * lead_inv;
  den_ = den_ * lead_inv;
}

RationalFunction RationalFunction::t_power(Field f, int k) {
  if (k >= 0)
    return RationalFunction(Polynomial::monomial(Scalar::one(f), k));
  return RationalFunction(Polynomial::one(f),
                          Polynomial::monomial(Scalar::one(f), -k));
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r(field());
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero rational function");
  return RationalFunction(den_, num_);
}

RationalFunction operator+(const RationalFunction& a,
                           const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a,
                           const RationalFunction& b) {
  return a + (-b);
}

RationalFunction operator*(const RationalFunction& a,
                           const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a,
                           const RationalFunction& b) {
  return a * b.inverse();
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::string RationalFunction::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

Valuation valuation(const RationalFunction& f, Place at) {
  if (f.is_zero()) return Valuation::infinity();
  if (at == Place::Infinity)
    return Valuation::of(f.den().degree() - f.num().degree());
  return Valuation::of(f.num().ord() - f.den().ord());
}

int cmp(const RationalFunction& a, const RationalFunction& b) {
  if (int c = cmp(a.num(), b.num()); c != 0) return c;
  return cmp(a.den(), b.den());
}

}  // namespace btlab
