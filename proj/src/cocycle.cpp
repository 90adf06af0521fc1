#include "btlab/cocycle.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace btlab {

Scalar phi(int n, const Chain& c) {
  Field f = c.field();
  Scalar sum = Scalar::zero(f);
  for (const auto& [cell, coeff] : c.terms()) {
    if (!in_star_down(cell, n)) continue;
    auto [a, b] = cell_coords(cell, n);
    // Canonical cells carry sign -1 relative to make_C's orientation.
    sum += -(coeff * a * b);
  }
  return sum;
}

Chain basic_cycle_chain(const BasicCycle& bc) {
  Field f = bc.coeff.field();
  Chain c(f);
  c.add(make_C(bc.n, bc.x, bc.y), bc.coeff);
  c.add(make_C(bc.n, bc.xp, bc.y), -bc.coeff);
  c.add(make_C(bc.n, bc.x, bc.yp), -bc.coeff);
  c.add(make_C(bc.n, bc.xp, bc.yp), bc.coeff);
  return c;
}

namespace {

struct ScalarLess {
  bool operator()(const Scalar& a, const Scalar& b) const {
    return cmp(a, b) < 0;
  }
};

using Coord = std::pair<Scalar, Scalar>;

struct CoordLess {
  bool operator()(const Coord& a, const Coord& b) const {
    if (int c = cmp(a.first, b.first); c != 0) return c < 0;
    return cmp(a.second, b.second) < 0;
  }
};

}  // namespace

std::vector<BasicCycle> decompose_basic(const Chain& c, int n) {
  Field f = c.field();
  std::map<Coord, Scalar, CoordLess> alpha;  // coefficients in make_C orientation
  for (const auto& [cell, coeff] : c.terms()) {
    if (!in_star_down(cell, n))
      throw std::invalid_argument("decompose_basic: cell outside S_n-down");
    auto [a, b] = cell_coords(cell, n);
    alpha.emplace(Coord{a, b}, -coeff);
  }

  // Relative-cycle check: the boundary coefficient of e_a is the signed sum
  // over the row a; of f_b, minus the sum over the column b.
  std::map<Scalar, Scalar, ScalarLess> row, col;
  for (const auto& [ab, v] : alpha) {
    auto r = row.emplace(ab.first, Scalar::zero(f)).first;
    r->second += v;
    auto cl = col.emplace(ab.second, Scalar::zero(f)).first;
    cl->second += v;
  }
  for (const auto& [a, v] : row)
    if (!v.is_zero())
      throw std::invalid_argument(
          "decompose_basic: not a relative cycle; boundary contains edge e_a "
          "with a = " +
          a.str());
  for (const auto& [b, v] : col)
    if (!v.is_zero())
      throw std::invalid_argument(
          "decompose_basic: not a relative cycle; boundary contains edge f_b "
          "with b = " +
          b.str());

  auto set = [&](const Coord& key, const Scalar& delta) {
    auto it = alpha.find(key);
    if (it == alpha.end()) {
      if (!delta.is_zero()) alpha.emplace(key, delta);
      return;
    }
    it->second += delta;
    if (it->second.is_zero()) alpha.erase(it);
  };

  std::vector<BasicCycle> out;
  while (!alpha.empty()) {
    // Lexicographically least nonzero coordinate; partners exist because
    // row and column sums stay zero under basic-cycle subtraction.
    auto it = alpha.begin();
    auto [x, y] = it->first;
    Scalar coeff = it->second;
    std::optional<Scalar> xp, yp;
    for (auto jt = std::next(it); jt != alpha.end(); ++jt) {
      if (!yp && cmp(jt->first.first, x) == 0) yp = jt->first.second;
      if (!xp && cmp(jt->first.second, y) == 0 && cmp(jt->first.first, x) > 0)
        xp = jt->first.first;
      if (xp && yp) break;
    }
    if (!xp || !yp)
      throw std::logic_error("decompose_basic: no partner for a nonzero cell");
    out.push_back(BasicCycle{x, y, *xp, *yp, coeff, n});
    set({x, y}, -coeff);
    set({*xp, y}, coeff);
    set({x, *yp}, coeff);
    set({*xp, *yp}, -coeff);
  }
  return out;
}

namespace {

bool offset_in_window(const LaurentPolynomial& off, int n) {
  return off.is_zero() || off.min_exp() >= -n;
}

}  // namespace

bool in_Y_n(int n, const ProductVertex& p) {
  if (n < 1) throw std::invalid_argument("in_Y_n: n must be >= 1");
  return offset_in_window(p.vInf.offset, n) &&
         offset_in_window(p.vZero.offset, n);
}

ThetaResult reduce_theta(int n, const ProductVertex& p) {
  if (n < 1) throw std::invalid_argument("reduce_theta: n must be >= 1");
  // Tail below t-exponent -n of the Zero-offset, plus the tail of the
  // Infinity-offset below uniformizer-exponent -n (t-exponents above n);
  // the two supports are disjoint, so the correction lies in U^n.
  LaurentPolynomial zero_tail = p.vZero.offset.slice(INT_MIN, -n - 1);
  LaurentPolynomial inf_tail = p.vInf.offset.slice(INT_MIN, -n - 1);
  RationalFunction x =
      -(zero_tail.to_rational() + inf_tail.to_rational_inverted());
  Unipotent u{x};
  ProductVertex q = x.is_zero() ? p : act_point(u.to_matrix(), p);
  return ThetaResult{u, q};
}

namespace {

std::vector<ProductVertex> cell_vertices(const Cell& cell) {
  std::vector<TreeVertex> vi{cell.fInf.v}, vz{cell.fZero.v};
  if (cell.fInf.is_edge()) vi.push_back(*cell.fInf.head);
  if (cell.fZero.is_edge()) vz.push_back(*cell.fZero.head);
  std::vector<ProductVertex> out;
  for (const auto& a : vi)
    for (const auto& b : vz) out.push_back(ProductVertex{a, b});
  return out;
}

}  // namespace

Chain theta_chain(int n, const Chain& c) {
  Chain out(c.field());
  for (const auto& [cell, coeff] : c.terms()) {
    std::vector<ProductVertex> vs = cell_vertices(cell);
    Unipotent u = reduce_theta(n, vs.front()).u;
    for (size_t i = 1; i < vs.size(); ++i)
      if (!(reduce_theta(n, vs[i]).u == u))
        throw std::invalid_argument(
            "theta_chain: cell vertices require different reducers");
    if (u.is_identity()) {
      out.add(cell, coeff);
    } else {
      out.add(act_cell(u.to_matrix(), cell), coeff);
    }
  }
  return out;
}

namespace {

long floor_div(long a, long b) {
  long q = a / b, r = a % b;
  return (r != 0 && (r < 0) != (b < 0)) ? q - 1 : q;
}

long ceil_div(long a, long b) { return -floor_div(-a, b); }

}  // namespace

CosetWindow coset_window_for(int n, const Chain& c, const RingSpec& ring) {
  CosetWindow w;
  w.units = ring.units_mod_sign();
  if (c.is_zero()) return w;
  bool first = true;
  long loI = 0, hiI = 0, loZ = 0, hiZ = 0;
  for (const auto& [cell, coeff] : c.terms()) {
    BetaRange r = beta_range(cell);
    if (first) {
      loI = r.loInf, hiI = r.hiInf, loZ = r.loZero, hiZ = r.hiZero;
      first = false;
    } else {
      loI = std::min<long>(loI, r.loInf);
      hiI = std::max<long>(hiI, r.hiInf);
      loZ = std::min<long>(loZ, r.loZero);
      hiZ = std::max<long>(hiZ, r.hiZero);
    }
  }
  // D^k shifts beta by +2k in the Infinity factor and -2k in the Zero
  // factor; keep k iff both shifted ranges meet [n-1, n].
  long lo = std::max(ceil_div(n - 1 - hiI, 2), ceil_div(loZ - n, 2));
  long hi = std::min(floor_div(n - loI, 2), floor_div(hiZ - (n - 1), 2));
  for (long k = lo; k <= hi; ++k) w.d_powers.push_back(int(k));
  return w;
}

Scalar big_phi(int n, const Chain& c, const RingSpec& ring,
               const HoroballSpec& h, BigPhiStats* stats) {
  Field f = c.field();
  require_same_field(f, ring.scalar_field(), "big_phi");
  // Cells not fully inside the horoball are outside the certified regime;
  // drop them (counted) per the support precondition.
  int dropped = 0;
  Chain kept = c.filtered([&](const Cell& cell) {
    BetaRange r = beta_range(cell);
    bool inside = r.loInf + r.loZero >= h.threshold;
    if (!inside) ++dropped;
    return inside;
  });
  CosetWindow window = coset_window_for(n, kept, ring);
  if (stats) {
    stats->dropped_cells = dropped;
    stats->window = window;
  }
  Scalar total = Scalar::zero(f);
  // Only cells whose per-factor beta ranges are exactly [n-1, n] can land
  // in S_n-down under theta (theta preserves beta factorwise).
  auto in_beta_window = [&](const Cell& cell) {
    BetaRange r = beta_range(cell);
    return r.loInf >= n - 1 && r.hiInf <= n && r.loZero >= n - 1 &&
           r.hiZero <= n;
  };
  for (const Scalar& u : window.units) {
    for (int k : window.d_powers) {
      Matrix2 g = Matrix2::diag_unit(u) * Matrix2::d_power(f, k);
      Chain moved = act_chain(g, kept).filtered(in_beta_window);
      total += phi(n, theta_chain(n, moved));
    }
  }
  return total;
}

PairingReport pairing_matrix(const std::vector<int>& indices,
                             const RingSpec& ring, const HoroballSpec& h) {
  for (size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 2 || indices[i] % 2 != 0)
      throw std::invalid_argument("pairing_matrix: indices must be even, >= 2");
    if (i > 0 && indices[i] <= indices[i - 1])
      throw std::invalid_argument("pairing_matrix: indices must be ascending");
  }
  Field f = ring.scalar_field();
  PairingReport rep;
  rep.indices = indices;
  size_t m = indices.size();
  std::vector<Chain> bchains;
  bchains.reserve(m);
  for (size_t j = 0; j < m; ++j)
    bchains.push_back(square_B(f, indices[j] / 2));
  rep.matrix.assign(m, std::vector<Scalar>(m, Scalar::zero(f)));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      rep.matrix[i][j] = big_phi(indices[i], bchains[j], ring, h);

  rep.triangular = true;
  Scalar one = Scalar::one(f);
  for (size_t i = 0; i < m && rep.triangular; ++i) {
    if (!(rep.matrix[i][i] == one)) rep.triangular = false;
    for (size_t j = 0; j < i; ++j)  // indices[i] > indices[j]
      if (!rep.matrix[i][j].is_zero()) rep.triangular = false;
  }

  // Exact Gaussian elimination.
  std::vector<std::vector<Scalar>> a = rep.matrix;
  size_t rank = 0;
  for (size_t col = 0; col < m && rank < m; ++col) {
    size_t pivot = m;
    for (size_t r = rank; r < m; ++r)
      if (!a[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot == m) continue;
    std::swap(a[rank], a[pivot]);
    Scalar inv = a[rank][col].inverse();
    for (size_t cc = col; cc < m; ++cc) a[rank][cc] *= inv;
    for (size_t r = 0; r < m; ++r) {
      if (r == rank || a[r][col].is_zero()) continue;
      Scalar factor = a[r][col];
      for (size_t cc = col; cc < m; ++cc) a[r][cc] -= factor * a[rank][cc];
    }
    ++rank;
  }
  rep.rank = int(rank);
  return rep;
}

}  // namespace btlab
