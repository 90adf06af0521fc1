#include <algorithm>

#include "doctest.h"

#include "btlab/parse.hpp"
#include "btlab/rng.hpp"

using namespace btlab;

namespace {

Unipotent uni(Field f, const char* text) {
  return Unipotent{parse_rational_function(f, text)};
}

}  // namespace

TEST_CASE("window membership by valuations") {
  Field q = rationals();
  CHECK(in_U_n(uni(q, "t^-1 + t"), 1));
  CHECK(in_U_n(uni(q, "1/(t-1)"), 0));
  CHECK(!in_U_n(uni(q, "t^2"), 1));
  CHECK(in_U_n(uni(q, "0"), 0));
  CHECK_THROWS_AS(in_U_n(uni(q, "t"), -1), std::invalid_argument);
}

TEST_CASE("window splitting of Laurent unipotents") {
  Field q = rationals();
  auto [inner, outer] = split_window(uni(q, "t^-2 + 1 + t^3"), 2);
  CHECK(inner.x == parse_rational_function(q, "t^-2 + 1"));
  CHECK(outer.x == parse_rational_function(q, "t^3"));

  auto [i0, o0] = split_window(Unipotent::identity(q), 5);
  CHECK(i0.is_identity());
  CHECK(o0.is_identity());

  auto [i1, o1] = split_window(uni(q, "t^-3 + t^3"), 2);
  CHECK(i1.is_identity());
  CHECK(o1.x == parse_rational_function(q, "t^-3 + t^3"));

  CHECK_THROWS_AS(split_window(uni(q, "1/(t+1)"), 2), std::invalid_argument);

  Rng rng(21);
  for (int s = 0; s < 500; ++s) {
    Field f = s % 2 ? rationals() : prime_field(3);
    int n = int(rng.int_in(0, 4));
    Unipotent u{rng.laurent(f, -6, 6, 5).to_rational()};
    auto [in, out] = split_window(u, n);
    CHECK(in.x + out.x == u.x);
    CHECK(in.to_matrix() * out.to_matrix() == u.to_matrix());
    CHECK(in_U_n(in, n));
    if (!out.is_identity())
      CHECK(to_laurent(out.x).slice(-n, n).is_zero());
  }
}

TEST_CASE("projective transitivity witnesses") {
  Field q = rationals();
  LaurentPolynomial one = LaurentPolynomial::term(Scalar::one(q), 0);
  LaurentPolynomial zero = LaurentPolynomial::zero(q);
  CHECK(p1_witness(one, zero) == Matrix2::identity(q));

  Matrix2 weyl = p1_witness(zero, one);
  CHECK(weyl.a.is_zero());
  CHECK(weyl.b == -RationalFunction::one(q));
  CHECK(weyl.c == RationalFunction::one(q));
  CHECK(weyl.d.is_zero());

  LaurentPolynomial x = LaurentPolynomial::term(Scalar::one(q), 1);
  LaurentPolynomial y(q);
  y.add_term(1, Scalar::one(q));
  y.add_term(0, -Scalar::one(q));
  Matrix2 g = p1_witness(x, y);
  CHECK(g.is_sl2());
  CHECK(g.a * y.to_rational() == g.c * x.to_rational());
  CHECK(!(g.a.is_zero() && g.c.is_zero()));

  CHECK_THROWS_AS(p1_witness(zero, zero), std::invalid_argument);

  Rng rng(22);
  Field f5 = prime_field(5);
  for (int s = 0; s < 200; ++s) {
    LaurentPolynomial a = rng.laurent(f5, -3, 3);
    LaurentPolynomial b = rng.laurent(f5, -3, 3);
    if (a.is_zero() && b.is_zero()) continue;
    Matrix2 w = p1_witness(a, b);
    CHECK(w.is_sl2());
    // Round trip: the witness of the witness's own first column matches
    // the same projective point.
    CHECK(w.a * b.to_rational() == w.c * a.to_rational());
  }
}

TEST_CASE("diagonal powers") {
  Field q = rationals();
  CHECK(Matrix2::d_power(q, 0) == Matrix2::identity(q));
  Matrix2 d = Matrix2::d_power(q, 1);
  CHECK(d.a == RationalFunction::t(q));
  CHECK(d.d == RationalFunction::t_power(q, -1));
  CHECK(d.b.is_zero());
  CHECK(Matrix2::d_power(q, -2).a == RationalFunction::t_power(q, -2));
  for (int k = -5; k <= 5; ++k)
    CHECK(Matrix2::d_power(q, k).is_sl2());
}

TEST_CASE("word balls in the lattice group") {
  RingSpec z = RingSpec::integers();
  std::vector<Matrix2> ball0 = gamma_ball(z, 0);
  REQUIRE(ball0.size() == 1);
  CHECK(ball0[0] == Matrix2::identity(rationals()));

  std::vector<Matrix2> ball1 = gamma_ball(z, 1);
  Field q = rationals();
  Matrix2 upper_t = Matrix2::upper_unipotent(RationalFunction::t(q));
  Matrix2 d = Matrix2::d_power(q, 1);
  CHECK(std::count(ball1.begin(), ball1.end(), upper_t) == 1);
  CHECK(std::count(ball1.begin(), ball1.end(), d) == 1);

  std::vector<Matrix2> ball2 = gamma_ball(z, 2);
  CHECK(ball2.size() >= ball1.size());

  for (const Matrix2& g : ball2) {
    CHECK(g.is_sl2());
    for (const RationalFunction* e : {&g.a, &g.b, &g.c, &g.d})
      CHECK((e->is_zero() || is_laurent_polynomial(*e)));
  }

  // Deduplication: no repeated canonical matrices.
  for (size_t i = 0; i + 1 < ball2.size(); ++i)
    for (size_t j = i + 1; j < ball2.size(); ++j)
      CHECK(!(ball2[i] == ball2[j]));

  CHECK_THROWS_AS(gamma_ball(z, 9), std::invalid_argument);
}

TEST_CASE("unit representatives modulo sign") {
  CHECK(RingSpec::integers().units_mod_sign().size() == 1);
  CHECK(RingSpec::prime(2).units_mod_sign().size() == 1);
  std::vector<Scalar> u5 = RingSpec::prime(5).units_mod_sign();
  CHECK(u5.size() == 2);
  std::vector<Scalar> u7 = RingSpec::prime(7).units_mod_sign();
  CHECK(u7.size() == 3);
  // No two representatives are equal or opposite.
  for (size_t i = 0; i < u7.size(); ++i)
    for (size_t j = i + 1; j < u7.size(); ++j) {
      CHECK(!(u7[i] == u7[j]));
      CHECK(!(u7[i] == -u7[j]));
    }
}
