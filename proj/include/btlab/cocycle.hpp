#pragma once

#include "btlab/complex.hpp"

namespace btlab {

/// Evaluation of the cochain phi_n: sum over cells of S_n-down of
/// coefficient * a * b (paper orientation); cells outside S_n-down
/// contribute 0.
Scalar phi(int n, const Chain& c);

/// coeff * (C^n_{x,y} - C^n_{x',y} - C^n_{x,y'} + C^n_{x',y'}).
struct BasicCycle {
  Scalar x, y, xp, yp;
  Scalar coeff;
  int n;
};

Chain basic_cycle_chain(const BasicCycle& bc);

/// Greedy decomposition of a relative 2-cycle of (S_n-down, boundary)
/// into basic cycles; the signed sum of the result equals the input.
/// Throws (naming a violating e_a or f_b edge) on non-cycle input.
std::vector<BasicCycle> decompose_basic(const Chain& c, int n);

/// Membership in Y_n = Stab_U(x_n) . Sigma: both canonical offsets have
/// uniformizer-valuation >= -n.
bool in_Y_n(int n, const ProductVertex& p);

struct ThetaResult {
  Unipotent u;       // element of U^n with act(u, p) = q
  ProductVertex q;   // representative in Y_n
};

/// Deterministic reduction to the U^n fundamental domain Y_n by tail
/// cancellation; idempotent and constant on U^n-orbits.
ThetaResult reduce_theta(int n, const ProductVertex& p);

/// Cellwise reduction; all vertices of each cell must share one reducer.
Chain theta_chain(int n, const Chain& c);

/// Finite set of coset representatives (units x D-powers) that can move
/// the beta ranges of a chain into the window [n-1, n] of both factors.
struct CosetWindow {
  std::vector<int> d_powers;
  std::vector<Scalar> units;  // modulo +-1, the kernel of the action on X
};

CosetWindow coset_window_for(int n, const Chain& c, const RingSpec& ring);

struct BigPhiStats {
  int dropped_cells = 0;  // support below the horoball threshold
  CosetWindow window;
};

/// Certified finite-window evaluation of Phi_n on a chain in X.
Scalar big_phi(int n, const Chain& c, const RingSpec& ring,
               const HoroballSpec& h, BigPhiStats* stats = nullptr);

struct PairingReport {
  std::vector<int> indices;
  std::vector<std::vector<Scalar>> matrix;  // matrix[i][j] = Phi_indices[i](B_indices[j])
  bool triangular = false;
  int rank = 0;
};

/// matrix[i][j] = big_phi(indices[i], square_B(indices[j] / 2)); verdict:
/// unit diagonal with zeros at indices[i] > indices[j].
PairingReport pairing_matrix(const std::vector<int>& indices,
                             const RingSpec& ring, const HoroballSpec& h);

}  // namespace btlab
