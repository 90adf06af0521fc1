#pragma once

#include <random>

#include "btlab/complex.hpp"

namespace btlab {

/// Deterministic random generator for exact algebraic objects, shared by
/// the certificate generators and the test suites.
class Rng {
 public:
  explicit Rng(unsigned long long seed) : eng_(seed) {}

  long int_in(long lo, long hi);

  Scalar scalar(Field f, long bound = 5);
  Scalar nonzero_scalar(Field f, long bound = 5);

  /// Up to max_terms nonzero terms with exponents in [lo, hi].
  LaurentPolynomial laurent(Field f, int lo, int hi, int max_terms = 3);
  LaurentPolynomial nonzero_laurent(Field f, int lo, int hi,
                                    int max_terms = 3);

  Polynomial polynomial(Field f, int max_deg, long bound = 5);
  RationalFunction rational(Field f, int max_deg, long bound = 5);

  /// Element of U_n with a Laurent-polynomial entry: support in [-n, n].
  Unipotent u_n_element(Field f, int n);
  /// Element of U^n: support in [-n - width, -n - 1] or [n + 1, n + width].
  Unipotent u_upper_element(Field f, int n, int width = 2);

  /// Point with levels in [level_lo, level_hi] per factor and random
  /// canonical offsets with exponents >= jet_lo.
  ProductVertex point(Field f, int level_lo, int level_hi, int jet_lo);

 private:
  std::mt19937_64 eng_;
};

}  // namespace btlab
