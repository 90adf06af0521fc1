#include "btlab/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace btlab {

LaurentPolynomial LaurentPolynomial::term(const Scalar& c, int exp) {
  LaurentPolynomial r(c.field());
  r.add_term(exp, c);
  return r;
}

Scalar LaurentPolynomial::coeff(int exp) const {
  auto it = c_.find(exp);
  return it == c_.end() ? Scalar::zero(f_) : it->second;
}

void LaurentPolynomial::add_term(int exp, const Scalar& c) {
  require_same_field(f_, c.field(), "LaurentPolynomial::add_term");
  auto it = c_.find(exp);
  if (it == c_.end()) {
    if (!c.is_zero()) c_.emplace(exp, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) c_.erase(it);
}

int LaurentPolynomial::min_exp() const {
  if (is_zero()) throw std::domain_error("min_exp of zero");
  return c_.begin()->first;
}

int LaurentPolynomial::max_exp() const {
  if (is_zero()) throw std::domain_error("max_exp of zero");
  return c_.rbegin()->first;
}

LaurentPolynomial LaurentPolynomial::slice(int lo, int hi) const {
  LaurentPolynomial r(f_);
  for (const auto& [e, c] : c_)
    if (e >= lo && e <= hi) r.c_.emplace(e, c);
  return r;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r(f_);
  for (const auto& [e, c] : c_) r.c_.emplace(e, -c);
  return r;
}

LaurentPolynomial operator+(const LaurentPolynomial& a,
                            const LaurentPolynomial& b) {
  require_same_field(a.f_, b.f_, "LaurentPolynomial::operator+");
  LaurentPolynomial r = a;
  for (const auto& [e, c] : b.c_) r.add_term(e, c);
  return r;
}

LaurentPolynomial operator-(const LaurentPolynomial& a,
                            const LaurentPolynomial& b) {
  return a + (-b);
}

LaurentPolynomial operator*(const LaurentPolynomial& a,
                            const LaurentPolynomial& b) {
  require_same_field(a.f_, b.f_, "LaurentPolynomial::operator*");
  LaurentPolynomial r(a.f_);
  for (const auto& [ea, ca] : a.c_)
    for (const auto& [eb, cb] : b.c_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const Scalar& s) const {
  LaurentPolynomial r(f_);
  for (const auto& [e, c] : c_) r.add_term(e, c * s);
  return r;
}

bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  return a.f_ == b.f_ && a.c_ == b.c_;
}

RationalFunction LaurentPolynomial::to_rational() const {
  RationalFunction r = RationalFunction::zero(f_);
  for (const auto& [e, c] : c_)
    r = r + RationalFunction::constant(c) * RationalFunction::t_power(f_, e);
  return r;
}

RationalFunction LaurentPolynomial::to_rational_inverted() const {
  RationalFunction r = RationalFunction::zero(f_);
  for (const auto& [e, c] : c_)
    r = r + RationalFunction::constant(c) * RationalFunction::t_power(f_, -e);
  return r;
}

std::string LaurentPolynomial::str(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : c_) {
    if (!first) os << " + ";
    first = false;
    if (e == 0) {
      os << c.str();
    } else {
      if (!(c == Scalar::one(f_))) os << c.str() << "*";
      os << var << "^" << e;
    }
  }
  return os.str();
}

namespace {

/// Power-series quotient of n/d at t = 0 through exponent `count` terms,
/// where both polynomials have nonzero constant term.
std::vector<Scalar> series_quotient(const Polynomial& n, const Polynomial& d,
                                    int count) {
  Field f = n.field();
  Scalar d0_inv = d.coeff(0).inverse();
  std::vector<Scalar> q;
  q.reserve(size_t(std::max(count, 0)));
  for (int k = 0; k < count; ++k) {
    Scalar acc = n.coeff(k);
    for (int i = 0; i < k; ++i) acc -= q[size_t(i)] * d.coeff(k - i);
    q.push_back(acc * d0_inv);
  }
  return q;
}

LaurentPolynomial expand_at_zero(const Polynomial& num, const Polynomial& den,
                                 int upper) {
  Field f = num.field();
  LaurentPolynomial jet(f);
  if (num.is_zero()) return jet;
  int zn = num.ord(), zd = den.ord();
  int val = zn - zd;
  if (upper <= val) return jet;
  // Strip the t-powers so both parts have nonzero constant term.
  std::vector<Scalar> nc(num.coeffs().begin() + zn, num.coeffs().end());
  std::vector<Scalar> dc(den.coeffs().begin() + zd, den.coeffs().end());
  Polynomial nhat(f, std::move(nc)), dhat(f, std::move(dc));
  auto q = series_quotient(nhat, dhat, upper - val);
  for (size_t k = 0; k < q.size(); ++k)
    jet.add_term(val + int(k), q[k]);
  return jet;
}

Polynomial reversed(const Polynomial& p) {
  std::vector<Scalar> c(p.coeffs().rbegin(), p.coeffs().rend());
  return Polynomial(p.field(), std::move(c));
}

}  // namespace

LaurentPolynomial laurent_expand(const RationalFunction& f, Place at,
                                 int upper) {
  if (f.is_zero()) return LaurentPolynomial::zero(f.field());
  if (at == Place::Zero) return expand_at_zero(f.num(), f.den(), upper);
  // Substitute s = t^-1: p(t)/q(t) = s^(deg q - deg p) * rev(p)(s)/rev(q)(s),
  // then expand at s = 0.
  int shift = f.den().degree() - f.num().degree();
  Polynomial np = reversed(f.num()), dp = reversed(f.den());
  LaurentPolynomial base = expand_at_zero(np, dp, upper - shift);
  LaurentPolynomial jet(f.field());
  for (const auto& [e, c] : base.terms()) jet.add_term(e + shift, c);
  return jet;
}

bool is_laurent_polynomial(const RationalFunction& f) {
  const Polynomial& d = f.den();
  return d.degree() == d.ord();  // monic monomial t^k
}

LaurentPolynomial to_laurent(const RationalFunction& f) {
  if (!is_laurent_polynomial(f))
    throw std::invalid_argument("not a Laurent polynomial: " + f.str());
  LaurentPolynomial r(f.field());
  int shift = f.den().degree();
  if (f.is_zero()) return r;
  for (int k = 0; k <= f.num().degree(); ++k) {
    Scalar c = f.num().coeff(k);
    if (!c.is_zero()) r.add_term(k - shift, c);
  }
  return r;
}

int cmp(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  auto ia = a.terms().begin(), ib = b.terms().begin();
  while (ia != a.terms().end() && ib != b.terms().end()) {
    if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
    if (int c = cmp(ia->second, ib->second); c != 0) return c;
    ++ia;
    ++ib;
  }
  if (ia != a.terms().end()) return 1;
  if (ib != b.terms().end()) return -1;
  return 0;
}

}  // namespace btlab
