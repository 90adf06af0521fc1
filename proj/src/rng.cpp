#include "btlab/rng.hpp"

namespace btlab {

long Rng::int_in(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(eng_);
}

Scalar Rng::scalar(Field f, long bound) {
  if (f.is_prime()) return Scalar(f, int_in(0, long(f.p) - 1));
  long num = int_in(-bound, bound);
  long den = int_in(1, bound);
  return Scalar(f, BigRat(num, den));
}

Scalar Rng::nonzero_scalar(Field f, long bound) {
  for (;;) {
    Scalar s = scalar(f, bound);
    if (!s.is_zero()) return s;
  }
}

LaurentPolynomial Rng::laurent(Field f, int lo, int hi, int max_terms) {
  LaurentPolynomial p(f);
  long terms = int_in(0, max_terms);
  for (long i = 0; i < terms; ++i)
    p.add_term(int(int_in(lo, hi)), scalar(f));
  return p;
}

LaurentPolynomial Rng::nonzero_laurent(Field f, int lo, int hi,
                                       int max_terms) {
  for (;;) {
    LaurentPolynomial p = laurent(f, lo, hi, max_terms);
    if (!p.is_zero()) return p;
  }
}

Polynomial Rng::polynomial(Field f, int max_deg, long bound) {
  std::vector<Scalar> coeffs;
  long deg = int_in(0, max_deg);
  for (long i = 0; i <= deg; ++i) coeffs.push_back(scalar(f, bound));
  return Polynomial(f, std::move(coeffs));
}

RationalFunction Rng::rational(Field f, int max_deg, long bound) {
  Polynomial num = polynomial(f, max_deg, bound);
  Polynomial den = Polynomial::zero(f);
  while (den.is_zero()) den = polynomial(f, max_deg, bound);
  return RationalFunction(num, den);
}

Unipotent Rng::u_n_element(Field f, int n) {
  return Unipotent{laurent(f, -n, n).to_rational()};
}

Unipotent Rng::u_upper_element(Field f, int n, int width) {
  LaurentPolynomial low = laurent(f, -n - width, -n - 1, 2);
  LaurentPolynomial high = laurent(f, n + 1, n + width, 2);
  return Unipotent{(low + high).to_rational()};
}

ProductVertex Rng::point(Field f, int level_lo, int level_hi, int jet_lo) {
  auto factor = [&](Place at) {
    int level = int(int_in(level_lo, level_hi));
    LaurentPolynomial off(f);
    if (level - 1 >= jet_lo) off = laurent(f, jet_lo, level - 1, 3);
    return TreeVertex{at, level, off};
  };
  return ProductVertex{factor(Place::Infinity), factor(Place::Zero)};
}

}  // namespace btlab
