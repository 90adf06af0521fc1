#include "btlab/scalar.hpp"

namespace btlab {

namespace {

BigInt mod_inverse(const BigInt& a, const BigInt& p) {
  // Extended Euclid; p prime, a not divisible by p.
  BigInt r0 = p, r1 = a % p, s0 = 0, s1 = 1;
  if (r1 < 0) r1 += p;
  if (r1 == 0) throw std::domain_error("inverse of zero residue");
  while (r1 != 0) {
    BigInt q = r0 / r1;
    BigInt r2 = r0 - q * r1;
    BigInt s2 = s0 - q * s1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  if (r0 != 1) throw std::domain_error("modulus is not prime");
  s0 %= p;
  if (s0 < 0) s0 += p;
  return s0;
}

}  // namespace

void require_same_field(Field a, Field b, const char* where) {
  if (!(a == b)) {
    throw std::invalid_argument(std::string("field mismatch in ") + where);
  }
}

Scalar::Scalar(Field f, const BigRat& v) : f_(f), v_(v) { reduce(); }

void Scalar::reduce() {
  if (!f_.is_prime()) return;  // cpp_rational keeps fractions reduced
  BigInt p(f_.p);
  BigInt num = numerator(v_) % p;
  if (num < 0) num += p;
  BigInt den = denominator(v_) % p;
  if (den == 0) throw std::domain_error("denominator vanishes mod p");
  v_ = BigRat(num * mod_inverse(den, p) % p);
}

Scalar Scalar::operator-() const {
  return Scalar(f_, -v_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  // boost rejects negative denominators for unbounded integer backends.
  BigInt num = denominator(v_), den = numerator(v_);
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Scalar(f_, BigRat(num, den));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(f_, o.f_, "Scalar::operator+=");
  v_ += o.v_;
  reduce();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_field(f_, o.f_, "Scalar::operator-=");
  v_ -= o.v_;
  reduce();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(f_, o.f_, "Scalar::operator*=");
  v_ *= o.v_;
  reduce();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  return *this *= o.inverse();
}

std::string Scalar::str() const {
  if (denominator(v_) == 1) return numerator(v_).str();
  return numerator(v_).str() + "/" + denominator(v_).str();
}

Scalar Scalar::parse(Field f, const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Scalar(f, BigRat(BigInt(text)));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::domain_error("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    return Scalar(f, BigRat(num, den));
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("bad scalar literal: " + text);
  }
}

int cmp(const Scalar& a, const Scalar& b) {
  if (a.field().p != b.field().p) return a.field().p < b.field().p ? -1 : 1;
  if (a.value() < b.value()) return -1;
  if (b.value() < a.value()) return 1;
  return 0;
}

}  // namespace btlab
