#include "btlab/tree.hpp"

#include <algorithm>
#include <climits>

namespace btlab {

namespace {

long finite(const Valuation& v, const char* where) {
  if (v.infinite) throw std::domain_error(std::string(where) + ": zero value");
  return v.v;
}

}  // namespace

int cmp(const TreeVertex& a, const TreeVertex& b) {
  if (a.place != b.place) return a.place < b.place ? -1 : 1;
  if (a.level != b.level) return a.level < b.level ? -1 : 1;
  return cmp(a.offset, b.offset);
}

TreeVertex base_vertex(Field f, Place at) {
  return TreeVertex{at, 0, LaurentPolynomial::zero(f)};
}

TreeVertex line_vertex(Field f, Place at, int s) {
  return TreeVertex{at, -s, LaurentPolynomial::zero(f)};
}

TreeVertex canonicalize(const Matrix2& m, Place at) {
  RationalFunction det = m.det();
  if (det.is_zero()) throw std::domain_error("canonicalize: singular matrix");
  // Pick the bottom-row entry of minimal valuation: columns (a, c), (b, d);
  // after one column elimination and a global scaling the lattice is
  // spanned by (pi^level, 0) and (offset, 1).
  Valuation vc = valuation(m.c, at), vd = valuation(m.d, at);
  bool use_d = !vd.infinite && (vc.infinite || vd.v <= vc.v);
  const RationalFunction& bottom = use_d ? m.d : m.c;
  const RationalFunction& top = use_d ? m.b : m.a;
  long level = finite(valuation(det, at), "canonicalize") -
               2 * finite(valuation(bottom, at), "canonicalize");
  LaurentPolynomial offset = laurent_expand(top / bottom, at, int(level));
  return TreeVertex{at, int(level), offset};
}

Matrix2 representative(const TreeVertex& v) {
  Field f = v.field();
  int sign = v.place == Place::Zero ? 1 : -1;
  RationalFunction pi_m = RationalFunction::t_power(f, sign * v.level);
  RationalFunction c = v.place == Place::Zero
                           ? v.offset.to_rational()
                           : v.offset.to_rational_inverted();
  return Matrix2{pi_m, c, RationalFunction::zero(f),
                 RationalFunction::one(f)};
}

TreeVertex tree_act(const Matrix2& g, const TreeVertex& v) {
  return canonicalize(g * representative(v), v.place);
}

int tree_distance(const TreeVertex& u, const TreeVertex& v) {
  if (u.place != v.place)
    throw std::invalid_argument("tree_distance: mixed places");
  int dm = v.level - u.level;
  LaurentPolynomial diff = v.offset - u.offset;
  int lowest = dm < 0 ? dm : 0;
  if (!diff.is_zero()) lowest = std::min(lowest, diff.min_exp() - u.level);
  return dm - 2 * std::min(0, lowest);
}

std::vector<TreeVertex> neighbors(const TreeVertex& v) {
  Field f = v.field();
  if (!f.is_prime())
    throw std::domain_error("neighbors: enumeration requires a finite field");
  std::vector<TreeVertex> out;
  // Parent: level - 1, offset reduced below the new level.
  out.push_back(TreeVertex{v.place, v.level - 1,
                           v.offset.slice(INT_MIN, v.level - 2)});
  // Children: one per residue.
  for (unsigned r = 0; r < f.p; ++r) {
    LaurentPolynomial c = v.offset;
    c.add_term(v.level, Scalar(f, long(r)));
    out.push_back(TreeVertex{v.place, v.level + 1, c});
  }
  return out;
}

int busemann(const TreeVertex& v) { return -v.level; }

int cmp(const TreeEdge& a, const TreeEdge& b) {
  if (int c = cmp(a.tail, b.tail); c != 0) return c;
  return cmp(a.head, b.head);
}

std::pair<TreeEdge, int> make_edge(const TreeVertex& a, const TreeVertex& b) {
  if (tree_distance(a, b) != 1)
    throw std::invalid_argument("make_edge: vertices not adjacent");
  if (a.level == b.level + 1) return {TreeEdge{a, b}, 1};
  return {TreeEdge{b, a}, -1};
}

}  // namespace btlab
