#pragma once

#include "btlab/group.hpp"

namespace btlab {

/// Canonical coordinate for a vertex of the Bruhat-Tits tree at one place:
/// the homothety class of the lattice spanned by (pi^level, 0) and
/// (offset, 1), where pi is the uniformizer of the place and the offset is
/// a finite jet in uniformizer-exponents strictly below `level`.
struct TreeVertex {
  Place place;
  int level;
  LaurentPolynomial offset;

  Field field() const { return offset.field(); }
  friend bool operator==(const TreeVertex& a, const TreeVertex& b) {
    return a.place == b.place && a.level == b.level && a.offset == b.offset;
  }
};

int cmp(const TreeVertex& a, const TreeVertex& b);

TreeVertex base_vertex(Field f, Place at);

/// ell(s) = (level -s, offset 0); ell(0) is the vertex stabilized by
/// SL2(F[t]) (place zero) resp. SL2(F[t^-1]) (place infinity).
TreeVertex line_vertex(Field f, Place at, int s);

/// Vertex of the homothety class of the column lattice of M.
TreeVertex canonicalize(const Matrix2& m, Place at);

/// A representative matrix whose column lattice is the class of v.
Matrix2 representative(const TreeVertex& v);

/// Left action on lattice representatives.
TreeVertex tree_act(const Matrix2& g, const TreeVertex& v);

/// Tree metric, in canonical coordinates:
///   d = (m' - m) - 2 * min(m' - m, nu(c' - c) - m, 0).
int tree_distance(const TreeVertex& u, const TreeVertex& v);

/// The |F| + 1 vertices at distance 1; requires a finite base field.
std::vector<TreeVertex> neighbors(const TreeVertex& v);

/// Busemann function for the ray ell|[0, inf): beta(level, c) = -level,
/// normalized so beta(base) = 0 and beta(ell(s)) = s.
int busemann(const TreeVertex& v);

/// Oriented tree edge in canonical orientation: beta(head) = beta(tail)+1.
struct TreeEdge {
  TreeVertex tail, head;

  friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
};

int cmp(const TreeEdge& a, const TreeEdge& b);

/// Canonical edge between two adjacent vertices plus the sign relating it
/// to the orientation (a -> b).
std::pair<TreeEdge, int> make_edge(const TreeVertex& a, const TreeVertex& b);

}  // namespace btlab
