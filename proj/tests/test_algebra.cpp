#include <climits>

#include "doctest.h"

#include "btlab/laurent.hpp"
#include "btlab/parse.hpp"
#include "btlab/rng.hpp"

using namespace btlab;

namespace {

RationalFunction rf(Field f, const std::string& text) {
  return parse_rational_function(f, text);
}

}  // namespace

TEST_CASE("scalar arithmetic over the rationals") {
  Field q = rationals();
  Scalar half = Scalar::parse(q, "1/2");
  Scalar third = Scalar::parse(q, "1/3");
  CHECK(half + third == Scalar::parse(q, "5/6"));
  CHECK((half * third).str() == "1/6");
  CHECK(half - half == Scalar::zero(q));
  CHECK(half.inverse() == Scalar(q, 2));
  CHECK(Scalar::parse(q, "-2/5").inverse() == Scalar::parse(q, "-5/2"));
  CHECK(Scalar::parse(q, "1/-2") == Scalar::parse(q, "-1/2"));
  CHECK(Scalar::parse(q, "-3/6") == Scalar::parse(q, "-1/2"));
  CHECK_THROWS_AS(Scalar::zero(q).inverse(), std::domain_error);
  CHECK_THROWS_AS(Scalar::parse(q, "x"), std::invalid_argument);
}

TEST_CASE("scalar arithmetic in prime fields") {
  Field f5 = prime_field(5);
  CHECK(Scalar(f5, 2) + Scalar(f5, 4) == Scalar(f5, 1));
  CHECK(Scalar(f5, 3).inverse() == Scalar(f5, 2));
  CHECK(Scalar(f5, 7) == Scalar(f5, 2));
  CHECK(-Scalar(f5, 1) == Scalar(f5, 4));
  CHECK(Scalar::parse(f5, "1/2") == Scalar(f5, 3));
  CHECK_THROWS_AS(Scalar::parse(f5, "1/5"), std::domain_error);
  Field f2 = prime_field(2);
  CHECK_THROWS_AS((void)(Scalar(f2, 1) + Scalar(f5, 1)),
                  std::invalid_argument);
}

TEST_CASE("polynomial division against the multiply-back oracle") {
  for (Field f : {rationals(), prime_field(5)}) {
    Rng rng(11);
    for (int s = 0; s < 500; ++s) {
      Polynomial a = rng.polynomial(f, 6);
      Polynomial b = rng.polynomial(f, 4);
      if (b.is_zero()) b = Polynomial::one(f);
      auto [quot, rem] = Polynomial::divmod(a, b);
      CHECK(quot * b + rem == a);
      CHECK((rem.is_zero() || rem.degree() < b.degree()));
    }
  }
}

TEST_CASE("extended gcd of polynomials") {
  Field q = rationals();
  Polynomial t = Polynomial::t(q);
  Polynomial one = Polynomial::one(q);

  auto [g1, u1, v1] = xgcd_poly(t, t + one);
  CHECK(g1 == one);
  CHECK(u1 * t + v1 * (t + one) == one);

  auto [g2, u2, v2] = xgcd_poly(t * t, Polynomial::zero(q));
  CHECK(g2 == t * t);
  CHECK(u2 == one);
  CHECK(v2.is_zero());

  auto [g3, u3, v3] = xgcd_poly(t * t - one, t - one);
  CHECK(g3 == t - one);
  CHECK(u3 * (t * t - one) + v3 * (t - one) == g3);

  CHECK_THROWS_AS(xgcd_poly(Polynomial::zero(q), Polynomial::zero(q)),
                  std::domain_error);

  Rng rng(12);
  for (int s = 0; s < 100; ++s) {
    Polynomial a = rng.polynomial(q, 5);
    Polynomial b = rng.polynomial(q, 5);
    if (a.is_zero() && b.is_zero()) continue;
    auto [g, u, v] = xgcd_poly(a, b);
    CHECK(u * a + v * b == g);
    CHECK(g.is_monic());
  }
}

TEST_CASE("rational functions stay in reduced monic-denominator form") {
  Field q = rationals();
  RationalFunction norm = rf(q, "(2*t+2)/2");
  CHECK(norm == rf(q, "t+1"));
  CHECK(norm.den() == Polynomial::one(q));
  CHECK(rf(q, "t/(t+1)") * rf(q, "(t+1)/t") == RationalFunction::one(q));
  RationalFunction g = rf(q, "(t^2-1)/(2*t-2)");
  CHECK(g.den().is_monic());
  CHECK(g == rf(q, "(t+1)/2"));
  CHECK_THROWS_AS(rf(q, "1/(t-t)"), std::invalid_argument);
}

TEST_CASE("valuations at both places") {
  Field q = rationals();
  CHECK(valuation(rf(q, "t^2+t"), Place::Zero) == Valuation::of(1));
  CHECK(valuation(rf(q, "0"), Place::Infinity) == Valuation::infinity());
  CHECK(valuation(rf(q, "(t^3+1)/t^5"), Place::Infinity) == Valuation::of(2));
  CHECK(valuation(rf(q, "(t^3+1)/t^5"), Place::Zero) == Valuation::of(-5));

  Rng rng(13);
  for (int s = 0; s < 1000; ++s) {
    Field f = s % 2 ? rationals() : prime_field(3);
    RationalFunction a = rng.rational(f, 4);
    RationalFunction b = rng.rational(f, 4);
    if (a.is_zero() || b.is_zero()) continue;
    for (Place at : {Place::Zero, Place::Infinity}) {
      CHECK(valuation(a * b, at).v == valuation(a, at).v + valuation(b, at).v);
      Valuation vsum = valuation(a + b, at);
      long lo = std::min(valuation(a, at).v, valuation(b, at).v);
      CHECK(vsum >= lo);
    }
  }
}

TEST_CASE("truncated expansions at both places") {
  Field q = rationals();
  LaurentPolynomial geo = laurent_expand(rf(q, "1/(1-t)"), Place::Zero, 3);
  LaurentPolynomial expected(q);
  expected.add_term(0, Scalar::one(q));
  expected.add_term(1, Scalar::one(q));
  expected.add_term(2, Scalar::one(q));
  CHECK(geo == expected);

  CHECK(laurent_expand(rf(q, "t^2"), Place::Zero, 5) ==
        LaurentPolynomial::term(Scalar::one(q), 2));

  // 1/(t-1) = s/(1-s) in s = t^-1; truncating below s-exponent 2 keeps s.
  CHECK(laurent_expand(rf(q, "1/(t-1)"), Place::Infinity, 2) ==
        LaurentPolynomial::term(Scalar::one(q), 1));

  CHECK(laurent_expand(RationalFunction::zero(q), Place::Zero, 4).is_zero());
}

TEST_CASE("expansion is a jet morphism and a residue inverse") {
  Rng rng(14);
  for (int s = 0; s < 300; ++s) {
    Field f = s % 2 ? rationals() : prime_field(5);
    RationalFunction a = rng.rational(f, 3);
    RationalFunction b = rng.rational(f, 3);
    Place at = s % 4 < 2 ? Place::Zero : Place::Infinity;
    int upper = int(rng.int_in(-5, 5));

    // Truncation error: nu(f - jet) >= upper.
    for (const RationalFunction& x : {a, b, a + b, a * b}) {
      LaurentPolynomial jet = laurent_expand(x, at, upper);
      RationalFunction back = at == Place::Zero ? jet.to_rational()
                                                : jet.to_rational_inverted();
      CHECK(valuation(x - back, at) >= upper);
    }

    // Additive jets.
    LaurentPolynomial sum =
        laurent_expand(a, at, upper) + laurent_expand(b, at, upper);
    CHECK(laurent_expand(a + b, at, upper) == sum.slice(INT_MIN, upper - 1));

    // Multiplicative jets, with lower cutoffs widened by the valuations.
    if (!a.is_zero() && !b.is_zero()) {
      long va = valuation(a, at).v, vb = valuation(b, at).v;
      LaurentPolynomial prod =
          laurent_expand(a, at, upper - int(std::min(0L, vb))) *
          laurent_expand(b, at, upper - int(std::min(0L, va)));
      CHECK(laurent_expand(a * b, at, upper) ==
            prod.slice(INT_MIN, upper - 1));
    }
  }
}

TEST_CASE("laurent conversions") {
  Field q = rationals();
  RationalFunction f = rf(q, "t^-2 + 3 + t^4");
  CHECK(is_laurent_polynomial(f));
  CHECK(!is_laurent_polynomial(rf(q, "1/(t+1)")));
  LaurentPolynomial l = to_laurent(f);
  CHECK(l.min_exp() == -2);
  CHECK(l.max_exp() == 4);
  CHECK(l.to_rational() == f);
  CHECK_THROWS_AS(to_laurent(rf(q, "1/(t+1)")), std::invalid_argument);

  // Reading the variable as t^-1 mirrors the exponents.
  CHECK(l.to_rational_inverted() == rf(q, "t^2 + 3 + t^-4"));
}

TEST_CASE("expression parsing") {
  Field q = rationals();
  RationalFunction f = rf(q, "(t^2+1)/(t^3 - 2)");
  CHECK(valuation(f, Place::Infinity) == Valuation::of(1));
  CHECK(rf(q, f.str()) == f);
  CHECK(rf(q, "t^-2") == RationalFunction::t_power(q, -2));
  CHECK(rf(q, "1/2*t") == rf(q, "t/2"));
  CHECK(rf(prime_field(3), "4") == RationalFunction::one(prime_field(3)));

  CHECK_THROWS_AS(rf(q, "t^^2"), ParseError);
  CHECK_THROWS_AS(rf(q, "(t+1"), ParseError);
  try {
    rf(q, "t @ 1");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}
