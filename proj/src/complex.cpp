#include "btlab/complex.hpp"

#include <algorithm>

namespace btlab {

int cmp(const ProductVertex& a, const ProductVertex& b) {
  if (int c = cmp(a.vInf, b.vInf); c != 0) return c;
  return cmp(a.vZero, b.vZero);
}

ProductVertex base_point(Field f) { return x_point(f, 0); }

ProductVertex x_point(Field f, int n) {
  return ProductVertex{line_vertex(f, Place::Infinity, n),
                       line_vertex(f, Place::Zero, n)};
}

int beta_rho(const ProductVertex& p) {
  return busemann(p.vInf) + busemann(p.vZero);
}

int cmp(const CellFactor& a, const CellFactor& b) {
  if (a.is_edge() != b.is_edge()) return a.is_edge() ? 1 : -1;
  if (int c = cmp(a.v, b.v); c != 0) return c;
  if (a.is_edge()) return cmp(*a.head, *b.head);
  return 0;
}

int cmp(const Cell& a, const Cell& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim() ? -1 : 1;
  if (int c = cmp(a.fInf, b.fInf); c != 0) return c;
  return cmp(a.fZero, b.fZero);
}

Cell vertex_cell(const ProductVertex& p) {
  return Cell{CellFactor{p.vInf, std::nullopt},
              CellFactor{p.vZero, std::nullopt}};
}

int Chain::dim() const {
  if (is_zero()) throw std::domain_error("dim of zero chain");
  return terms_.begin()->first.dim();
}

void Chain::add(const Cell& cell, const Scalar& coeff) {
  require_same_field(f_, coeff.field(), "Chain::add");
  if (coeff.is_zero()) return;
  if (!terms_.empty() && terms_.begin()->first.dim() != cell.dim())
    throw std::invalid_argument("Chain::add: mixed cell dimensions");
  auto it = terms_.find(cell);
  if (it == terms_.end()) {
    terms_.emplace(cell, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

void Chain::add(const OrientedCell& oc, const Scalar& coeff) {
  add(oc.cell, oc.sign < 0 ? -coeff : coeff);
}

Scalar Chain::coeff(const Cell& cell) const {
  auto it = terms_.find(cell);
  return it == terms_.end() ? Scalar::zero(f_) : it->second;
}

Chain Chain::operator-() const {
  Chain r(f_);
  for (const auto& [cell, c] : terms_) r.terms_.emplace(cell, -c);
  return r;
}

Chain operator+(const Chain& a, const Chain& b) {
  Chain r = a;
  for (const auto& [cell, c] : b.terms_) r.add(cell, c);
  return r;
}

Chain operator-(const Chain& a, const Chain& b) { return a + (-b); }

Chain Chain::operator*(const Scalar& s) const {
  Chain r(f_);
  if (s.is_zero()) return r;
  for (const auto& [cell, c] : terms_) r.terms_.emplace(cell, c * s);
  return r;
}

bool operator==(const Chain& a, const Chain& b) {
  return a.f_ == b.f_ && a.terms_ == b.terms_;
}

Chain Chain::filtered(const std::function<bool(const Cell&)>& keep) const {
  Chain r(f_);
  for (const auto& [cell, c] : terms_)
    if (keep(cell)) r.terms_.emplace(cell, c);
  return r;
}

Chain boundary(const Chain& chain) {
  if (chain.is_zero()) return chain;
  int d = chain.dim();
  if (d == 0) throw std::domain_error("boundary of a 0-chain");
  Field f = chain.field();
  Chain out(f);
  for (const auto& [cell, c] : chain.terms()) {
    if (cell.fInf.is_edge()) {
      // (de) x f, with f either the zero-factor vertex or edge.
      Cell head{CellFactor{*cell.fInf.head, std::nullopt}, cell.fZero};
      Cell tail{CellFactor{cell.fInf.v, std::nullopt}, cell.fZero};
      out.add(head, c);
      out.add(tail, -c);
    }
    if (cell.fZero.is_edge()) {
      // -(e x df) when the infinity factor is an edge, +(v x df) otherwise.
      Scalar s = cell.fInf.is_edge() ? -c : c;
      Cell head{cell.fInf, CellFactor{*cell.fZero.head, std::nullopt}};
      Cell tail{cell.fInf, CellFactor{cell.fZero.v, std::nullopt}};
      out.add(head, s);
      out.add(tail, -s);
    }
  }
  return out;
}

namespace {

std::pair<CellFactor, int> act_factor(const Matrix2& g, const CellFactor& f) {
  TreeVertex v = tree_act(g, f.v);
  if (!f.is_edge()) return {CellFactor{v, std::nullopt}, 1};
  TreeVertex h = tree_act(g, *f.head);
  auto [edge, sign] = make_edge(v, h);
  // make_edge returns sign relative to (v -> h), which transports the
  // canonical (tail -> head) orientation of the input.
  return {CellFactor{edge.tail, edge.head}, sign};
}

}  // namespace

OrientedCell act_cell(const Matrix2& g, const Cell& cell) {
  auto [fi, si] = act_factor(g, cell.fInf);
  auto [fz, sz] = act_factor(g, cell.fZero);
  return OrientedCell{Cell{fi, fz}, si * sz};
}

Chain act_chain(const Matrix2& g, const Chain& c) {
  Chain out(c.field());
  for (const auto& [cell, coeff] : c.terms()) out.add(act_cell(g, cell), coeff);
  return out;
}

ProductVertex act_point(const Matrix2& g, const ProductVertex& p) {
  return ProductVertex{tree_act(g, p.vInf), tree_act(g, p.vZero)};
}

namespace {

/// Canonical edge from the downward neighbor of ell(n) with offset
/// coefficient `c` at uniformizer-exponent -n, up to ell(n).
TreeEdge star_edge(Place at, int n, const Scalar& c) {
  Field f = c.field();
  TreeVertex top = line_vertex(f, at, n);  // level -n
  LaurentPolynomial off(f);
  off.add_term(-n, c);
  TreeVertex low{at, -n + 1, off};
  return TreeEdge{low, top};
}

}  // namespace

OrientedCell make_C(int n, const Scalar& a, const Scalar& b) {
  if (n < 1) throw std::invalid_argument("make_C: n must be >= 1");
  TreeEdge fInf = star_edge(Place::Infinity, n, b);
  TreeEdge fZero = star_edge(Place::Zero, n, a);
  // Sign -1 makes the boundary at x_n equal e_a - f_b with the paper's
  // away-from-x_n edge orientations.
  return OrientedCell{Cell{CellFactor{fInf.tail, fInf.head},
                           CellFactor{fZero.tail, fZero.head}},
                      -1};
}

OrientedCell apartment_square(Field f, int i, int j) {
  CellFactor fi{line_vertex(f, Place::Infinity, i),
                line_vertex(f, Place::Infinity, i + 1)};
  CellFactor fz{line_vertex(f, Place::Zero, j),
                line_vertex(f, Place::Zero, j + 1)};
  return OrientedCell{Cell{fi, fz}, -1};
}

namespace {

/// Checks one factor of an S_n-down cell and extracts the label.
std::optional<Scalar> star_down_label(const CellFactor& fac, Place at, int n) {
  if (!fac.is_edge()) return std::nullopt;
  Field f = fac.v.field();
  if (!(*fac.head == line_vertex(f, at, n))) return std::nullopt;
  if (fac.v.level != -n + 1) return std::nullopt;
  // Canonical tail offsets below level -n+1 that are adjacent to ell(n)
  // live at exponent -n only.
  const LaurentPolynomial& off = fac.v.offset;
  if (off.is_zero()) return Scalar::zero(f);
  if (off.min_exp() != -n || off.max_exp() != -n) return std::nullopt;
  return off.coeff(-n);
}

}  // namespace

bool in_star_down(const Cell& cell, int n) {
  return star_down_label(cell.fInf, Place::Infinity, n).has_value() &&
         star_down_label(cell.fZero, Place::Zero, n).has_value();
}

std::vector<Cell> enumerate_star_down(Field f, int n) {
  if (!f.is_prime())
    throw std::domain_error("star_down enumeration requires a finite field");
  std::vector<Cell> cells;
  for (unsigned a = 0; a < f.p; ++a)
    for (unsigned b = 0; b < f.p; ++b)
      cells.push_back(make_C(n, Scalar(f, long(a)), Scalar(f, long(b))).cell);
  return cells;
}

std::pair<Scalar, Scalar> cell_coords(const Cell& cell, int n) {
  auto b = star_down_label(cell.fInf, Place::Infinity, n);
  auto a = star_down_label(cell.fZero, Place::Zero, n);
  if (!a || !b)
    throw std::invalid_argument("cell_coords: cell outside S_n-down");
  return {*a, *b};
}

Chain triangle_Z(Field f, int n, bool literal_corner) {
  if (n < 1) throw std::invalid_argument("triangle_Z: n must be >= 1");
  int top = literal_corner ? n : 2 * n;
  Chain z(f);
  Scalar one = Scalar::one(f);
  for (int i = -top; i <= top - 1; ++i)
    for (int j = std::max(-i, -top); j <= top - 1; ++j)
      z.add(apartment_square(f, i, j), one);
  return z;
}

Chain square_B(Field f, int n, bool literal_corner) {
  Chain z = triangle_Z(f, n, literal_corner);
  auto u = [&](int lo, int hi) {
    RationalFunction x = RationalFunction::zero(f);
    if (lo != 0) x = x + RationalFunction::t_power(f, lo);
    if (hi != 0) x = x + RationalFunction::t_power(f, hi);
    return Matrix2::upper_unipotent(x);
  };
  Chain b = z - act_chain(u(2 * n, 0), z) - act_chain(u(-2 * n, 0), z) +
            act_chain(u(-2 * n, 2 * n), z);
  return b;
}

bool in_horoball(const ProductVertex& p, const HoroballSpec& h) {
  return beta_rho(p) >= h.threshold;
}

namespace {

void expand_range(const CellFactor& fac, int& lo, int& hi) {
  lo = busemann(fac.v);
  hi = lo;
  if (fac.is_edge()) {
    int bh = busemann(*fac.head);
    lo = std::min(lo, bh);
    hi = std::max(hi, bh);
  }
}

}  // namespace

BetaRange beta_range(const Cell& cell) {
  BetaRange r{};
  expand_range(cell.fInf, r.loInf, r.hiInf);
  expand_range(cell.fZero, r.loZero, r.hiZero);
  return r;
}

}  // namespace btlab
