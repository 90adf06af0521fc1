#include "btlab/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace btlab {

Polynomial::Polynomial(Field f, std::vector<Scalar> coeffs)
    : f_(f), c_(std::move(coeffs)) {
  for (const auto& c : c_) require_same_field(f_, c.field(), "Polynomial");
  trim();
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::constant(const Scalar& c) {
  Polynomial p(c.field());
  if (!c.is_zero()) p.c_ = {c};
  return p;
}

Polynomial Polynomial::t(Field f) {
  return Polynomial(f, {Scalar::zero(f), Scalar::one(f)});
}

Polynomial Polynomial::monomial(const Scalar& c, int k) {
  if (k < 0) throw std::invalid_argument("monomial: negative exponent");
  if (c.is_zero()) return zero(c.field());
  std::vector<Scalar> coeffs(size_t(k) + 1, Scalar::zero(c.field()));
  coeffs.back() = c;
  return Polynomial(c.field(), std::move(coeffs));
}

int Polynomial::ord() const {
  if (is_zero()) throw std::domain_error("ord of zero polynomial");
  for (size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return int(i);
  throw std::logic_error("unreachable");
}

Scalar Polynomial::coeff(int k) const {
  if (k < 0 || size_t(k) >= c_.size()) return Scalar::zero(f_);
  return c_[size_t(k)];
}

Scalar Polynomial::leading() const {
  if (is_zero()) throw std::domain_error("leading coeff of zero polynomial");
  return c_.back();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) throw std::domain_error("monic of zero polynomial");
  return *this * leading().inverse();
}

Polynomial Polynomial::operator-() const {
  Polynomial r(f_);
  r.c_.reserve(c_.size());
  for (const auto& c : c_) r.c_.push_back(-c);
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_field(a.f_, b.f_, "Polynomial::operator+");
  Polynomial r(a.f_);
  r.c_.resize(std::max(a.c_.size(), b.c_.size()), Scalar::zero(a.f_));
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(int(i)) + b.coeff(int(i));
  r.trim();
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a + (-b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_field(a.f_, b.f_, "Polynomial::operator*");
  Polynomial r(a.f_);
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Scalar::zero(a.f_));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j)
      r.c_[i + j] += a.c_[i] * b.c_[j];
  r.trim();
  return r;
}

Polynomial Polynomial::operator*(const Scalar& s) const {
  Polynomial r(f_);
  if (s.is_zero()) return r;
  r.c_.reserve(c_.size());
  for (const auto& c : c_) r.c_.push_back(c * s);
  r.trim();
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.f_ == b.f_ && a.c_ == b.c_;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a,
                                                     const Polynomial& b) {
  require_same_field(a.f_, b.f_, "Polynomial::divmod");
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  Polynomial q = zero(a.f_), r = a;
  Scalar lead_inv = b.leading().inverse();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    Scalar c = r.leading() * lead_inv;
    int k = r.degree() - b.degree();
    Polynomial term = monomial(c, k);
    q = q + term;
    r = r - term * b;
  }
  return {q, r};
}

Polynomial gcd_poly(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero())
    throw std::domain_error("gcd(0, 0) undefined");
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    auto [q, r] = Polynomial::divmod(x, y);
    x = y;
    y = r;
  }
  return x.monic();
}

std::tuple<Polynomial, Polynomial, Polynomial> xgcd_poly(const Polynomial& a,
                                                         const Polynomial& b) {
  if (a.is_zero() && b.is_zero())
    throw std::domain_error("xgcd(0, 0) undefined");
  Field f = a.field();
  Polynomial r0 = a, r1 = b;
  Polynomial s0 = Polynomial::one(f), s1 = Polynomial::zero(f);
  Polynomial t0 = Polynomial::zero(f), t1 = Polynomial::one(f);
  while (!r1.is_zero()) {
    auto [q, r2] = Polynomial::divmod(r0, r1);
    Polynomial s2 = s0 - q * s1;
    Polynomial t2 = t0 - q * t1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
    t0 = t1; t1 = t2;
  }
  Scalar inv = r0.leading().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Scalar c = coeff(k);
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0) {
      os << c.str();
    } else {
      if (!(c == Scalar::one(f_))) os << c.str() << "*";
      os << (k == 1 ? "t" : "t^" + std::to_string(k));
    }
  }
  return os.str();
}

int cmp(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (int k = a.degree(); k >= 0; --k) {
    if (int c = cmp(a.coeff(k), b.coeff(k)); c != 0) return c;
  }
  return 0;
}

}  // namespace btlab
