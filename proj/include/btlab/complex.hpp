#pragma once

#include <functional>
#include <optional>

#include "btlab/tree.hpp"

namespace btlab {

/// Point of X = T_inf x T_0.
struct ProductVertex {
  TreeVertex vInf, vZero;

  Field field() const { return vInf.field(); }
  friend bool operator==(const ProductVertex&,
                         const ProductVertex&) = default;
};

int cmp(const ProductVertex& a, const ProductVertex& b);

ProductVertex base_point(Field f);
/// x_n = (ell_inf(n), ell_0(n)).
ProductVertex x_point(Field f, int n);

/// beta_rho(x, y) = beta_inf(x) + beta_0(y); beta_rho(x_0) = 0.
int beta_rho(const ProductVertex& p);

/// One factor of a product cell: a vertex or a canonically oriented edge.
struct CellFactor {
  TreeVertex v;                  // vertex, or the edge tail
  std::optional<TreeVertex> head;  // set iff this factor is an edge

  bool is_edge() const { return head.has_value(); }
  friend bool operator==(const CellFactor&, const CellFactor&) = default;
};

/// Cell of X in canonical form: each edge factor carries the canonical
/// orientation (beta increasing); orientation reversals are tracked by the
/// sign of the coefficient in a Chain.
struct Cell {
  CellFactor fInf, fZero;

  int dim() const { return (fInf.is_edge() ? 1 : 0) + (fZero.is_edge() ? 1 : 0); }
  Field field() const { return fInf.v.field(); }
  friend bool operator==(const Cell&, const Cell&) = default;
};

int cmp(const Cell& a, const Cell& b);

struct CellLess {
  bool operator()(const Cell& a, const Cell& b) const { return cmp(a, b) < 0; }
};

Cell vertex_cell(const ProductVertex& p);

/// A cell together with an orientation sign relative to canonical form.
struct OrientedCell {
  Cell cell;
  int sign = 1;
};

/// Finite formal F-linear combination of same-dimension canonical cells.
class Chain {
 public:
  explicit Chain(Field f) : f_(f) {}

  Field field() const { return f_; }
  bool is_zero() const { return terms_.empty(); }
  int dim() const;  // throws on the zero chain
  const std::map<Cell, Scalar, CellLess>& terms() const { return terms_; }

  void add(const Cell& cell, const Scalar& coeff);
  void add(const OrientedCell& oc, const Scalar& coeff);
  Scalar coeff(const Cell& cell) const;

  Chain operator-() const;
  friend Chain operator+(const Chain& a, const Chain& b);
  friend Chain operator-(const Chain& a, const Chain& b);
  Chain operator*(const Scalar& s) const;
  friend bool operator==(const Chain& a, const Chain& b);

  Chain filtered(const std::function<bool(const Cell&)>& keep) const;

 private:
  Field f_;
  std::map<Cell, Scalar, CellLess> terms_;
};

/// Cellular boundary with the product rule
/// d(e x f) = (de) x f - e x (df); satisfies d o d = 0.
Chain boundary(const Chain& c);

/// Cellwise action with orientation transport; commutes with boundary.
OrientedCell act_cell(const Matrix2& g, const Cell& cell);
Chain act_chain(const Matrix2& g, const Chain& c);

ProductVertex act_point(const Matrix2& g, const ProductVertex& p);

/// The 2-cell C^n_{a,b} of S_n-down, oriented so that its boundary
/// restricted to the edges at x_n is e_a - f_b (paper orientation).
OrientedCell make_C(int n, const Scalar& a, const Scalar& b);

/// The square ell_inf([i, i+1]) x ell_0([j, j+1]) with the same global
/// orientation convention as make_C.
OrientedCell apartment_square(Field f, int i, int j);

/// Membership of a canonical 2-cell in S_n-down: both factor edges
/// incident to the respective ell(n) vertex, beta range [n-1, n].
bool in_star_down(const Cell& cell, int n);

/// All p^2 cells of S_n-down over a finite field, canonical form.
std::vector<Cell> enumerate_star_down(Field f, int n);

/// Coordinates (a, b) with make_C(n, a, b).cell == cell; throws outside
/// S_n-down.
std::pair<Scalar, Scalar> cell_coords(const Cell& cell, int n);

/// The triangle chain Z_2n: apartment squares [i,i+1] x [j,j+1] with
/// -2n <= i, j <= 2n - 1 and i + j >= 0, right-angle corner at x_2n.
/// `literal_corner` selects the paper's literal triangle (corner x_n)
/// instead; it fails the S_2n-down intersection identity and exists to
/// make the discrepancy demonstrable.
Chain triangle_Z(Field f, int n, bool literal_corner = false);

/// B_2n: signed sum of the four unipotent translates of Z_2n.
Chain square_B(Field f, int n, bool literal_corner = false);

/// Horoball threshold: beta_rho >= threshold.
struct HoroballSpec {
  int threshold = 1;
};

bool in_horoball(const ProductVertex& p, const HoroballSpec& h);

/// Min/max of beta over the factor vertices of a cell, per factor.
struct BetaRange {
  int loInf, hiInf, loZero, hiZero;
};

BetaRange beta_range(const Cell& cell);

}  // namespace btlab
