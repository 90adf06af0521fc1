// Acceptance runner: one printed pass/fail line per criterion.  Exits
// nonzero if any criterion fails.

#include <chrono>
#include <exception>
#include <iostream>
#include <string>

#include "btlab/parse.hpp"
#include "btlab/verify.hpp"
#include "support.hpp"

using namespace btlab;
using namespace btlab::testing;

namespace {

int failures = 0;

void run(int idx, const std::string& what, bool (*body)()) {
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = std::string(" (exception: ") + e.what() + ")";
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  std::cout << "criterion " << idx << " [" << what << "]: "
            << (ok ? "PASS" : "FAIL") << note << " (" << ms << " ms)\n";
  if (!ok) ++failures;
}

bool criterion_distance_oracle() {
  return distance_matches_bfs(prime_field(2), Place::Zero, 4) &&
         distance_matches_bfs(prime_field(2), Place::Infinity, 4) &&
         distance_matches_bfs(prime_field(3), Place::Zero, 4) &&
         distance_matches_bfs(prime_field(3), Place::Infinity, 4);
}

bool criterion_valence() {
  for (unsigned p : {2u, 3u, 5u}) {
    Field f = prime_field(p);
    for (Place at : {Place::Zero, Place::Infinity}) {
      BfsBall ball = bfs_ball(f, at, 3);
      for (const TreeVertex& v : ball.vertices)
        if (neighbors(v).size() != p + 1) return false;
    }
  }
  return true;
}

bool criterion_busemann_anchors() {
  Field q = rationals();
  Rng rng(101);
  Matrix2 d = Matrix2::d_power(q, 1);
  for (int s = 0; s < 200; ++s) {
    int level = int(rng.int_in(-4, 4));
    LaurentPolynomial off = rng.laurent(q, level - 4, level - 1);
    Place at = s % 2 ? Place::Zero : Place::Infinity;
    TreeVertex v{at, level, off};
    int shift = at == Place::Infinity ? 2 : -2;
    if (busemann(tree_act(d, v)) != busemann(v) + shift) return false;
  }
  // Finite-field vertices from a small ball as well.
  Field f3 = prime_field(3);
  Matrix2 d3 = Matrix2::d_power(f3, 1);
  for (Place at : {Place::Zero, Place::Infinity}) {
    int shift = at == Place::Infinity ? 2 : -2;
    for (const TreeVertex& v : bfs_ball(f3, at, 3).vertices)
      if (busemann(tree_act(d3, v)) != busemann(v) + shift) return false;
  }
  if (beta_rho(base_point(q)) != 0) return false;
  for (int n = 0; n <= 10; ++n)
    if (beta_rho(x_point(q, n)) != 2 * n) return false;
  return true;
}

bool criterion_star_bijection() {
  for (unsigned p : {2u, 3u, 5u}) {
    Field f = prime_field(p);
    for (int n = 1; n <= 3; ++n) {
      std::vector<Cell> cells = enumerate_star_down(f, n);
      if (cells.size() != size_t(p) * p) return false;
      std::set<std::pair<std::string, std::string>> seen;
      for (const Cell& cell : cells) {
        if (!in_star_down(cell, n)) return false;
        auto [a, b] = cell_coords(cell, n);
        if (!(make_C(n, a, b).cell == cell)) return false;
        if (!seen.emplace(a.str(), b.str()).second) return false;
      }
    }
  }
  return true;
}

bool criterion_phi_invariance() {
  Rng rng(102);
  for (int s = 0; s < 200; ++s) {
    Field f = s % 2 ? rationals() : prime_field(5);
    int n = int(rng.int_in(1, 3));
    Chain b = basic_cycle_chain(random_basic_cycle(rng, f, n));
    Unipotent u = rng.u_n_element(f, n);
    if (!(phi(n, act_chain(u.to_matrix(), b)) == phi(n, b))) return false;
  }
  return true;
}

bool criterion_boundary_squares_to_zero() {
  Rng rng(103);
  for (int s = 0; s < 100; ++s) {
    Field f = s % 2 ? rationals() : prime_field(3);
    Chain c(f);
    int pieces = int(rng.int_in(1, 4));
    for (int i = 0; i < pieces; ++i) {
      if (rng.int_in(0, 1) == 0) {
        c.add(apartment_square(f, int(rng.int_in(-3, 3)),
                               int(rng.int_in(-3, 3))),
              rng.nonzero_scalar(f));
      } else {
        int n = int(rng.int_in(1, 3));
        Chain piece(f);
        piece.add(make_C(n, rng.scalar(f), rng.scalar(f)),
                  rng.nonzero_scalar(f));
        Matrix2 g = Matrix2::upper_unipotent(
                        rng.laurent(f, -2, 2).to_rational()) *
                    Matrix2::d_power(f, int(rng.int_in(-1, 1)));
        c = c + act_chain(g, piece);
      }
    }
    if (c.is_zero()) continue;
    if (!boundary(boundary(c)).is_zero()) return false;
  }
  return true;
}

bool criterion_pairing() {
  Field q = rationals();
  RingSpec z = RingSpec::integers();
  HoroballSpec h{1};
  PairingReport rep = pairing_matrix({2, 4, 6}, z, h);
  if (!rep.triangular || rep.rank != 3) return false;
  for (int i = 0; i < 3; ++i)
    if (!(rep.matrix[i][i] == Scalar::one(q))) return false;
  for (int n = 1; n <= 3; ++n) {
    Chain b = square_B(q, n);
    for (int k = 2 * n + 1; k <= 8; ++k)
      if (!(big_phi(k, b, z, h) == Scalar::zero(q))) return false;
  }
  return true;
}

bool criterion_theta() {
  Rng rng(104);
  for (int s = 0; s < 100; ++s) {
    Field f = s % 2 ? rationals() : prime_field(2);
    int n = int(rng.int_in(1, 3));
    ProductVertex p = rng.point(f, -n, 3, -n - 3);
    ThetaResult r = reduce_theta(n, p);
    if (!in_Y_n(n, r.q)) return false;
    if (!(act_point(r.u.to_matrix(), p) == r.q)) return false;
    if (!r.u.is_identity() && !to_laurent(r.u.x).slice(-n, n).is_zero())
      return false;
    ThetaResult again = reduce_theta(n, r.q);
    if (!again.u.is_identity() || !(again.q == r.q)) return false;
    Unipotent w = rng.u_upper_element(f, n);
    if (!(reduce_theta(n, act_point(w.to_matrix(), p)).q == r.q))
      return false;
  }
  return y_membership_matches_enumeration();
}

bool criterion_projective_witnesses() {
  Field f5 = prime_field(5);
  Rng rng(105);
  int done = 0;
  while (done < 100) {
    LaurentPolynomial x = rng.laurent(f5, -3, 3);
    LaurentPolynomial y = rng.laurent(f5, -3, 3);
    if (x.is_zero() && y.is_zero()) continue;
    ++done;
    Matrix2 g = p1_witness(x, y);
    if (!g.is_sl2()) return false;
    // g [1:0] = [g.a : g.c] must be the input point projectively.
    if (!(g.a * y.to_rational() == g.c * x.to_rational())) return false;
    if (g.a.is_zero() && g.c.is_zero()) return false;
  }
  return true;
}

bool criterion_density() {
  Rng rng(106);
  for (int s = 0; s < 50; ++s) {
    Field f = s % 2 ? rationals() : prime_field(3);
    RationalFunction v = rng.rational(f, 3);
    RationalFunction w = rng.rational(f, 3);
    int kInf = int(rng.int_in(-6, 6));
    int kZero = int(rng.int_in(-6, 6));
    DensityWitness dw = density_witness(v, w, kInf, kZero);
    if (!(valuation(dw.beta - v, Place::Infinity) >= kInf)) return false;
    if (!(valuation(dw.beta - w, Place::Zero) >= kZero)) return false;
  }
  return true;
}

bool criterion_horoball_gap() {
  Certificate cert = horoball_gap(RingSpec::integers(), 3);
  if (!cert.pass) return false;
  bool has_rstar = false, has_count = false;
  for (const std::string& w : cert.witnesses) {
    if (w.rfind("Rstar=", 0) == 0) has_rstar = true;
    if (w.rfind("elements=", 0) == 0) has_count = true;
  }
  return has_rstar && has_count;
}

bool criterion_divergence() {
  Rng rng(107);
  Field q = rationals();
  for (int s = 0; s < 20; ++s) {
    Scalar alpha = rng.nonzero_scalar(q);
    Scalar gamma = rng.nonzero_scalar(q);
    long m = rng.int_in(0, 3);
    long k = rng.int_in(-m, m);
    int L = int(rng.int_in(-2, 2));
    Matrix2 g{RationalFunction::constant(alpha) *
                  RationalFunction::t_power(q, int(-m)),
              RationalFunction::zero(q),
              RationalFunction::constant(gamma) *
                  RationalFunction::t_power(q, int(k)),
              RationalFunction::constant(alpha.inverse()) *
                  RationalFunction::t_power(q, int(m))};
    Certificate cert = divergence_certificate(g, L);
    if (!cert.pass) return false;
    long i0 = 0;
    bool found = false;
    for (const std::string& w : cert.witnesses)
      if (w.rfind("i0=", 0) == 0) {
        i0 = std::stol(w.substr(3));
        found = true;
      }
    if (!found) return false;
    // One step earlier some first-column entry still meets the bound:
    // nu_inf(a) = m, nu_inf(c) = -k, and i0 - 1 = -L + max(m, |k|).
    long va = valuation(g.a, Place::Infinity).v;
    long vc = valuation(g.c, Place::Infinity).v;
    if (!(va - (i0 - 1) >= L || vc - (i0 - 1) >= L)) return false;
  }
  return true;
}

}  // namespace

int main() {
  run(1, "closed-form distance equals the BFS oracle",
      criterion_distance_oracle);
  run(2, "valence p+1 on radius-3 balls", criterion_valence);
  run(3, "Busemann anchors and corner heights", criterion_busemann_anchors);
  run(4, "star cells biject with coordinate pairs", criterion_star_bijection);
  run(5, "cochain invariance under window unipotents",
      criterion_phi_invariance);
  run(6, "boundary squares to zero", criterion_boundary_squares_to_zero);
  run(7, "triangular full-rank pairing with vanishing upper evaluations",
      criterion_pairing);
  run(8, "fundamental-domain reduction is an orbit normal form",
      criterion_theta);
  run(9, "projective transitivity witnesses over F_5",
      criterion_projective_witnesses);
  run(10, "two-place interpolation meets requested precisions",
      criterion_density);
  run(11, "orbit height maximum over the radius-3 word ball",
      criterion_horoball_gap);
  run(12, "valuation divergence indices are tight", criterion_divergence);

  if (failures > 0) {
    std::cout << failures << " criteria failed\n";
    return 1;
  }
  std::cout << "all 12 criteria passed\n";
  return 0;
}
