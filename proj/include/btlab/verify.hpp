#pragma once

#include "btlab/cocycle.hpp"
#include "btlab/rng.hpp"

namespace btlab {

/// Machine-checkable record of one lemma-level check.  A PASS verdict means
/// every asserted equality/inequality was evaluated exactly; labels record
/// whether the claim itself is exhaustive (EXACT) or sampled at desk scale
/// (SAMPLED).
struct Certificate {
  std::string lemma;
  std::map<std::string, std::string> params;
  bool pass = true;
  std::vector<std::string> witnesses;  // "key=value" facts
  std::vector<std::string> labels;     // EXACT / SAMPLED
  std::vector<std::string> notes;

  void fail(const std::string& why) {
    pass = false;
    notes.push_back(why);
  }
};

struct DensityWitness {
  RationalFunction beta;
  int i = 0;  // minimal adequate interpolation index
};

/// Two-place interpolation: beta = (v - w) * alpha_i + w with
/// alpha_i = t^i / (t^i + 1), so that nu_inf(beta - v) >= kInf and
/// nu_0(beta - w) >= kZero.
DensityWitness density_witness(const RationalFunction& v,
                               const RationalFunction& w, int kInf,
                               int kZero);

Certificate check_density(const RationalFunction& v, const RationalFunction& w,
                          int kInf, int kZero);

struct ApartmentReduction {
  Unipotent u;
  ProductVertex q;  // both offsets zero; same (beta_inf, beta_0) as input
};

/// Constructive form of "Sigma is a fundamental domain for U": a single
/// unipotent cancelling both offset jets, built from a density witness.
ApartmentReduction reduce_to_apartment(const ProductVertex& p);

/// Exhaustive beta_rho maximum over the word ball: R* = 1 + max over
/// gamma_ball(ring, radius) of beta_rho(g x_0).
Certificate horoball_gap(const RingSpec& ring, int radius);

/// Valuation-violation index for the D-conjugation divergence argument:
/// i0 = 1 - L + max(0, -valuations of the first-column entries); checks
/// that nu_inf(e * t^i) < L for each nonzero first-column entry e and
/// every i in [i0, i0 + 3].
Certificate divergence_certificate(const Matrix2& m, int L);

/// Sampled coverage of the horosphere beta_rho = R by the word-ball orbit
/// of the apartment point at that height.
Certificate horosphere_cover_sample(const RingSpec& ring, int R, int samples,
                                    int word_radius, unsigned long long seed);

/// Sampled contrapositive of "gamma H = H implies gamma in P": translates
/// of deep horoball points by a non-P element leave the horoball.
Certificate nooverlap_sample(const Matrix2& gamma, const HoroballSpec& h,
                             int samples, unsigned long long seed);

struct VerifyConfig {
  RingSpec ring = RingSpec::integers();
  HoroballSpec horoball{};
  unsigned long long seed = 1;
  int samples = 20;
  int word_radius = 2;
  int gap_radius = 2;
  bool corrupt_sign_hook = false;  // test hook: must flip the pairing verdict
};

/// Every certificate above plus beta_rho-invariance and a small pairing
/// check; deterministic given the seed; sorted by lemma tag.
std::vector<Certificate> run_all(const VerifyConfig& config);

/// One certificate by tag (apartment, cover, density, divergence, horoball,
/// invariance, nooverlap, pairing, theta); throws on unknown tags.
Certificate run_verify_tag(const std::string& tag, const VerifyConfig& config);

/// Re-runs the exact checks of a certificate from its serialized params and
/// witnesses; returns the recomputed verdict.
bool reverify(const Certificate& cert);

}  // namespace btlab
