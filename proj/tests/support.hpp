#pragma once

// Helpers shared by the unit suite and the acceptance runner: a BFS
// distance oracle on tree balls, random basic cycles, and the exhaustive
// fundamental-domain membership check over F_2.

#include <climits>
#include <map>
#include <queue>
#include <set>
#include <vector>

#include "btlab/cocycle.hpp"
#include "btlab/rng.hpp"

namespace btlab::testing {

struct VertexLess {
  bool operator()(const TreeVertex& a, const TreeVertex& b) const {
    return cmp(a, b) < 0;
  }
};

struct BfsBall {
  std::vector<TreeVertex> vertices;
  std::map<TreeVertex, int, VertexLess> index;
  std::vector<std::vector<int>> adjacency;
};

/// Radius-r ball around the base vertex over a finite field, with the
/// adjacency restricted to the ball.
inline BfsBall bfs_ball(Field f, Place at, int radius) {
  BfsBall ball;
  TreeVertex base = base_vertex(f, at);
  ball.vertices.push_back(base);
  ball.index.emplace(base, 0);
  std::vector<int> depth{0};
  for (size_t i = 0; i < ball.vertices.size(); ++i) {
    if (depth[i] == radius) continue;
    for (const TreeVertex& w : neighbors(ball.vertices[i])) {
      if (ball.index.emplace(w, int(ball.vertices.size())).second) {
        ball.vertices.push_back(w);
        depth.push_back(depth[i] + 1);
      }
    }
  }
  ball.adjacency.resize(ball.vertices.size());
  for (size_t i = 0; i < ball.vertices.size(); ++i)
    for (const TreeVertex& w : neighbors(ball.vertices[i])) {
      auto it = ball.index.find(w);
      if (it != ball.index.end()) ball.adjacency[i].push_back(it->second);
    }
  return ball;
}

/// BFS distances from one source within the ball's induced graph.  In a
/// tree the geodesic between two ball vertices stays inside the ball, so
/// these are the true tree distances.
inline std::vector<int> bfs_distances(const BfsBall& ball, int source) {
  std::vector<int> dist(ball.vertices.size(), -1);
  std::queue<int> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (int w : ball.adjacency[v])
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push(w);
      }
  }
  return dist;
}

/// Every pair in the radius-r ball: closed-form distance == BFS distance.
inline bool distance_matches_bfs(Field f, Place at, int radius) {
  BfsBall ball = bfs_ball(f, at, radius);
  for (size_t i = 0; i < ball.vertices.size(); ++i) {
    std::vector<int> dist = bfs_distances(ball, int(i));
    for (size_t j = 0; j < ball.vertices.size(); ++j) {
      if (dist[j] < 0) return false;  // ball not connected: impossible
      if (tree_distance(ball.vertices[i], ball.vertices[j]) != dist[j])
        return false;
    }
  }
  return true;
}

inline BasicCycle random_basic_cycle(Rng& rng, Field f, int n) {
  Scalar x = rng.scalar(f), y = rng.scalar(f);
  Scalar xp = x, yp = y;
  while (xp == x) xp = rng.scalar(f);
  while (yp == y) yp = rng.scalar(f);
  return BasicCycle{x, y, xp, yp, rng.nonzero_scalar(f), n};
}

struct ProductVertexLess {
  bool operator()(const ProductVertex& a, const ProductVertex& b) const {
    return cmp(a, b) < 0;
  }
};

/// Exhaustive check of in_Y_n against enumeration over F_2, n = 1, with
/// factor levels in [-1, 2] and offset jets supported down to exponent -3.
/// Candidate matchers are the interpolations u = f (1 - alpha_N) + g alpha_N
/// with alpha_N = t^N/(t^N + 1): the Zero-side jet of u is f and the
/// Infinity-side jet is g, so the family realizes every pair of independent
/// window jets an element of U_n can produce.
inline bool y_membership_matches_enumeration() {
  const Field f2 = prime_field(2);
  const int n = 1, jet_lo = -3, level_lo = -1, level_hi = 2, big = 8;
  RationalFunction alpha =
      RationalFunction::t_power(f2, big) /
      (RationalFunction::t_power(f2, big) + RationalFunction::one(f2));

  // All window jets supported on exponents [-n, n].
  std::vector<LaurentPolynomial> jets;
  for (int mask = 0; mask < 8; ++mask) {
    LaurentPolynomial j(f2);
    for (int bit = 0; bit < 3; ++bit)
      if (mask & (1 << bit)) j.add_term(bit - n, Scalar::one(f2));
    jets.push_back(j);
  }

  // The image of the apartment under every candidate U_n matcher.
  std::set<ProductVertex, ProductVertexLess> reachable;
  for (int mInf = level_lo; mInf <= level_hi; ++mInf)
    for (int mZero = level_lo; mZero <= level_hi; ++mZero) {
      ProductVertex sigma{TreeVertex{Place::Infinity, mInf,
                                     LaurentPolynomial::zero(f2)},
                          TreeVertex{Place::Zero, mZero,
                                     LaurentPolynomial::zero(f2)}};
      for (const LaurentPolynomial& fz : jets)
        for (const LaurentPolynomial& gi : jets) {
          RationalFunction u = fz.to_rational() +
                               (gi.to_rational_inverted() - fz.to_rational()) *
                                   alpha;
          reachable.insert(
              act_point(Matrix2::upper_unipotent(u), sigma));
        }
    }

  // Enumerate all canonical points in the window and compare verdicts.
  std::vector<TreeVertex> factors[2];
  for (int side = 0; side < 2; ++side) {
    Place at = side == 0 ? Place::Infinity : Place::Zero;
    for (int m = level_lo; m <= level_hi; ++m) {
      int width = m - jet_lo;  // exponents jet_lo .. m-1
      for (int mask = 0; mask < (1 << width); ++mask) {
        LaurentPolynomial off(f2);
        for (int bit = 0; bit < width; ++bit)
          if (mask & (1 << bit)) off.add_term(jet_lo + bit, Scalar::one(f2));
        factors[side].push_back(TreeVertex{at, m, off});
      }
    }
  }
  for (const TreeVertex& vi : factors[0])
    for (const TreeVertex& vz : factors[1]) {
      ProductVertex p{vi, vz};
      if (in_Y_n(n, p) != (reachable.count(p) != 0)) return false;
    }
  return true;
}

}  // namespace btlab::testing
