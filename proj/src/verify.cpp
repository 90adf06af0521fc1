#include "btlab/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "btlab/parse.hpp"

namespace btlab {

namespace {

RationalFunction alpha_i(Field f, int i) {
  RationalFunction ti = RationalFunction::t_power(f, i);
  return ti / (ti + RationalFunction::one(f));
}

std::string ring_to_string(const RingSpec& ring) {
  return ring.is_integers ? "z" : "fp:" + std::to_string(ring.p);
}

RingSpec ring_from_string(const std::string& s) {
  if (s == "z") return RingSpec::integers();
  if (s.rfind("fp:", 0) == 0)
    return RingSpec::prime(unsigned(std::stoul(s.substr(3))));
  throw std::invalid_argument("unknown ring: " + s);
}

std::string param(const Certificate& cert, const std::string& key) {
  auto it = cert.params.find(key);
  if (it == cert.params.end())
    throw std::invalid_argument("certificate missing param " + key);
  return it->second;
}

void stamp_config(Certificate& cert, const VerifyConfig& config) {
  cert.params["ring"] = ring_to_string(config.ring);
  cert.params["threshold"] = std::to_string(config.horoball.threshold);
  cert.params["seed"] = std::to_string(config.seed);
  cert.params["samples"] = std::to_string(config.samples);
  cert.params["word_radius"] = std::to_string(config.word_radius);
  cert.params["gap_radius"] = std::to_string(config.gap_radius);
  if (config.corrupt_sign_hook) cert.params["corrupt_sign_hook"] = "1";
}

VerifyConfig config_from_params(const Certificate& cert) {
  VerifyConfig config;
  config.ring = ring_from_string(param(cert, "ring"));
  config.horoball.threshold = std::stoi(param(cert, "threshold"));
  config.seed = std::stoull(param(cert, "seed"));
  config.samples = std::stoi(param(cert, "samples"));
  config.word_radius = std::stoi(param(cert, "word_radius"));
  config.gap_radius = std::stoi(param(cert, "gap_radius"));
  config.corrupt_sign_hook = cert.params.count("corrupt_sign_hook") > 0;
  return config;
}

}  // namespace

DensityWitness density_witness(const RationalFunction& v,
                               const RationalFunction& w, int kInf,
                               int kZero) {
  if (v == w) return DensityWitness{v, 0};
  for (int i = 1; i <= 100000; ++i) {
    RationalFunction beta = (v - w) * alpha_i(v.field(), i) + w;
    // Both gaps gain one valuation unit per step, so the first adequate i
    // is minimal.
    if (valuation(beta - v, Place::Infinity) >= kInf &&
        valuation(beta - w, Place::Zero) >= kZero)
      return DensityWitness{beta, i};
  }
  throw std::logic_error("density_witness: no adequate index found");
}

Certificate check_density(const RationalFunction& v, const RationalFunction& w,
                          int kInf, int kZero) {
  Certificate cert;
  cert.lemma = "density";
  cert.params["field"] = std::to_string(v.field().p);
  cert.params["v"] = v.str();
  cert.params["w"] = w.str();
  cert.params["kInf"] = std::to_string(kInf);
  cert.params["kZero"] = std::to_string(kZero);
  cert.labels.push_back("EXACT");
  DensityWitness dw = density_witness(v, w, kInf, kZero);
  cert.witnesses.push_back("beta=" + dw.beta.str());
  cert.witnesses.push_back("i=" + std::to_string(dw.i));
  if (!(valuation(dw.beta - v, Place::Infinity) >= kInf))
    cert.fail("nu_inf(beta - v) below requested bound");
  if (!(valuation(dw.beta - w, Place::Zero) >= kZero))
    cert.fail("nu_0(beta - w) below requested bound");
  return cert;
}

ApartmentReduction reduce_to_apartment(const ProductVertex& p) {
  Field f = p.field();
  RationalFunction v = -p.vInf.offset.to_rational_inverted();
  RationalFunction w = -p.vZero.offset.to_rational();
  RationalFunction x =
      density_witness(v, w, p.vInf.level, p.vZero.level).beta;
  Unipotent u{x};
  ProductVertex q = x.is_zero() ? p : act_point(u.to_matrix(), p);
  if (!q.vInf.offset.is_zero() || !q.vZero.offset.is_zero())
    throw std::logic_error("reduce_to_apartment: residual offset");
  return ApartmentReduction{u, q};
}

Certificate horoball_gap(const RingSpec& ring, int radius) {
  Certificate cert;
  cert.lemma = "horoball";
  cert.params["ring"] = ring_to_string(ring);
  cert.params["radius"] = std::to_string(radius);
  cert.labels.push_back("EXACT");
  cert.notes.push_back(
      "word-ball scale: asserts the gap over the enumerated ball only");
  Field f = ring.scalar_field();
  ProductVertex x0 = base_point(f);
  std::vector<Matrix2> ball = gamma_ball(ring, radius, std::max(radius, 4));
  int max_beta = 0;  // identity gives beta_rho(x_0) = 0
  for (const Matrix2& g : ball)
    max_beta = std::max(max_beta, beta_rho(act_point(g, x0)));
  int rstar = max_beta + 1;
  for (const Matrix2& g : ball)
    if (beta_rho(act_point(g, x0)) >= rstar)
      cert.fail("orbit point at or above R*");
  cert.witnesses.push_back("elements=" + std::to_string(ball.size()));
  cert.witnesses.push_back("max_beta=" + std::to_string(max_beta));
  cert.witnesses.push_back("Rstar=" + std::to_string(rstar));
  return cert;
}

namespace {

long finite_val(const RationalFunction& e, Place at) {
  Valuation v = valuation(e, at);
  if (v.infinite) throw std::logic_error("finite_val: zero entry");
  return v.v;
}

}  // namespace

Certificate divergence_certificate(const Matrix2& m, int L) {
  if (!m.is_sl2())
    throw std::invalid_argument("divergence_certificate: determinant not 1");
  for (const RationalFunction* e : {&m.a, &m.b, &m.c, &m.d})
    if (!is_laurent_polynomial(*e))
      throw std::invalid_argument(
          "divergence_certificate: entries must be Laurent polynomials");
  Certificate cert;
  cert.lemma = "divergence";
  cert.params["field"] = std::to_string(m.field().p);
  cert.params["a"] = m.a.str();
  cert.params["b"] = m.b.str();
  cert.params["c"] = m.c.str();
  cert.params["d"] = m.d.str();
  cert.params["L"] = std::to_string(L);
  cert.labels.push_back("EXACT");
  long bound = 0;
  for (const RationalFunction* e : {&m.a, &m.c}) {
    if (e->is_zero()) continue;
    bound = std::max(bound, -finite_val(*e, Place::Infinity));
    bound = std::max(bound, -finite_val(*e, Place::Zero));
  }
  long i0 = 1 - L + bound;
  cert.witnesses.push_back("i0=" + std::to_string(i0));
  for (long i = i0; i <= i0 + 3; ++i) {
    const char* names[] = {"a", "c"};
    const RationalFunction* entries[] = {&m.a, &m.c};
    for (int j = 0; j < 2; ++j) {
      if (entries[j]->is_zero()) continue;
      long vi = finite_val(*entries[j], Place::Infinity) - i;
      cert.witnesses.push_back("i=" + std::to_string(i) + ":nu_inf(" +
                               names[j] + "*t^i)=" + std::to_string(vi));
      if (vi >= L)
        cert.fail("first-column entry still meets the bound at i = " +
                  std::to_string(i));
    }
  }
  return cert;
}

Certificate horosphere_cover_sample(const RingSpec& ring, int R, int samples,
                                    int word_radius, unsigned long long seed) {
  Certificate cert;
  cert.lemma = "cover";
  cert.params["ring"] = ring_to_string(ring);
  cert.params["R"] = std::to_string(R);
  cert.params["samples"] = std::to_string(samples);
  cert.params["word_radius"] = std::to_string(word_radius);
  cert.params["seed"] = std::to_string(seed);
  cert.labels.push_back("SAMPLED");
  cert.notes.push_back(
      "reports the observed maximum only; not a bound on the supremum");
  Field f = ring.scalar_field();
  Rng rng(seed);
  // Reference net: the word-ball orbit of the apartment point at height R.
  ProductVertex ref{line_vertex(f, Place::Infinity, R - R / 2),
                    line_vertex(f, Place::Zero, R / 2)};
  std::vector<ProductVertex> net;
  for (const Matrix2& g : gamma_ball(ring, word_radius, std::max(word_radius, 4)))
    net.push_back(act_point(g, ref));
  long max_dist = 0;
  for (int s = 0; s < samples; ++s) {
    long a = rng.int_in(-2, R + 2);
    ProductVertex sigma{line_vertex(f, Place::Infinity, int(a)),
                        line_vertex(f, Place::Zero, int(R - a))};
    Unipotent u{rng.laurent(f, -3, 3).to_rational()};
    ProductVertex p = act_point(u.to_matrix(), sigma);
    long best = -1;
    for (const ProductVertex& q : net) {
      long d = tree_distance(p.vInf, q.vInf) + tree_distance(p.vZero, q.vZero);
      if (best < 0 || d < best) best = d;
    }
    max_dist = std::max(max_dist, best);
  }
  cert.witnesses.push_back("max_distance=" + std::to_string(max_dist));
  return cert;
}

Certificate nooverlap_sample(const Matrix2& gamma, const HoroballSpec& h,
                             int samples, unsigned long long seed) {
  if (gamma.c.is_zero())
    throw std::invalid_argument(
        "nooverlap_sample: gamma is in P; use the exact beta_rho-invariance "
        "check instead");
  Certificate cert;
  cert.lemma = "nooverlap";
  cert.params["gamma_a"] = gamma.a.str();
  cert.params["gamma_b"] = gamma.b.str();
  cert.params["gamma_c"] = gamma.c.str();
  cert.params["gamma_d"] = gamma.d.str();
  cert.params["threshold"] = std::to_string(h.threshold);
  cert.params["samples"] = std::to_string(samples);
  cert.params["seed"] = std::to_string(seed);
  cert.labels.push_back("SAMPLED");
  Field f = gamma.field();
  Rng rng(seed);
  // Sample well inside the horoball: deep enough that the lower-left entry
  // dominates both canonicalizations.
  long depth = 6;
  for (const RationalFunction* e : {&gamma.a, &gamma.b, &gamma.c, &gamma.d}) {
    if (e->is_zero()) continue;
    depth = std::max(depth, 6 + std::abs(finite_val(*e, Place::Infinity)));
    depth = std::max(depth, 6 + std::abs(finite_val(*e, Place::Zero)));
  }
  for (int s = 0; s < samples; ++s) {
    long s1 = std::max<long>(h.threshold, 0) + depth + rng.int_in(0, 3);
    long s2 = std::max<long>(h.threshold, 0) + depth + rng.int_in(0, 3);
    ProductVertex sigma{line_vertex(f, Place::Infinity, int(s1)),
                        line_vertex(f, Place::Zero, int(s2))};
    Unipotent u{rng.laurent(f, -3, 3).to_rational()};
    ProductVertex p = act_point(u.to_matrix(), sigma);
    int before = beta_rho(p);
    int after = beta_rho(act_point(gamma, p));
    cert.witnesses.push_back("beta_before=" + std::to_string(before) +
                             ",beta_after=" + std::to_string(after));
    if (before < h.threshold) cert.fail("sample missed the horoball");
    if (after >= h.threshold)
      cert.fail("translate stayed in the horoball");
  }
  return cert;
}

namespace {

Certificate cert_apartment(const VerifyConfig& config) {
  Certificate cert;
  cert.lemma = "apartment";
  cert.labels.push_back("EXACT");
  Field f = config.ring.scalar_field();
  Rng rng(config.seed);
  int failures = 0;
  for (int s = 0; s < 100; ++s) {
    int b_inf = int(rng.int_in(-4, 4)), b_zero = int(rng.int_in(-4, 4));
    ProductVertex sigma{line_vertex(f, Place::Infinity, b_inf),
                        line_vertex(f, Place::Zero, b_zero)};
    Unipotent u{rng.laurent(f, -3, 3).to_rational()};
    ProductVertex p = act_point(u.to_matrix(), sigma);
    ApartmentReduction r = reduce_to_apartment(p);
    bool ok = r.q == sigma && act_point(r.u.to_matrix(), p) == r.q &&
              busemann(r.q.vInf) == busemann(p.vInf) &&
              busemann(r.q.vZero) == busemann(p.vZero);
    if (!ok) ++failures;
  }
  cert.witnesses.push_back("round_trips=100");
  cert.witnesses.push_back("failures=" + std::to_string(failures));
  if (failures > 0) cert.fail("round-trip mismatch");
  return cert;
}

Certificate cert_density(const VerifyConfig& config) {
  Certificate cert;
  cert.lemma = "density";
  cert.labels.push_back("EXACT");
  Field f = config.ring.scalar_field();
  Rng rng(config.seed);
  int failures = 0, max_i = 0;
  for (int s = 0; s < 50; ++s) {
    RationalFunction v = rng.rational(f, 3), w = rng.rational(f, 3);
    int kInf = int(rng.int_in(0, 6)), kZero = int(rng.int_in(0, 6));
    DensityWitness dw = density_witness(v, w, kInf, kZero);
    max_i = std::max(max_i, dw.i);
    if (!(valuation(dw.beta - v, Place::Infinity) >= kInf) ||
        !(valuation(dw.beta - w, Place::Zero) >= kZero))
      ++failures;
  }
  cert.witnesses.push_back("instances=50");
  cert.witnesses.push_back("max_i=" + std::to_string(max_i));
  cert.witnesses.push_back("failures=" + std::to_string(failures));
  if (failures > 0) cert.fail("valuation bound missed");
  return cert;
}

Certificate cert_invariance(const VerifyConfig& config) {
  Certificate cert;
  cert.lemma = "invariance";
  cert.labels.push_back("EXACT");
  cert.notes.push_back(
      "beta shifts of the P-generators: U fixes both factors, D shifts "
      "(+2, -2), diagonal units fix both");
  Field f = config.ring.scalar_field();
  Rng rng(config.seed);
  int failures = 0;
  for (int s = 0; s < 50; ++s) {
    ProductVertex p = rng.point(f, -3, 3, -5);
    Unipotent u{rng.laurent(f, -3, 3).to_rational()};
    ProductVertex pu = act_point(u.to_matrix(), p);
    if (busemann(pu.vInf) != busemann(p.vInf) ||
        busemann(pu.vZero) != busemann(p.vZero))
      ++failures;
    ProductVertex pd = act_point(Matrix2::d_power(f, 1), p);
    if (busemann(pd.vInf) != busemann(p.vInf) + 2 ||
        busemann(pd.vZero) != busemann(p.vZero) - 2)
      ++failures;
    for (const Scalar& unit : config.ring.units_mod_sign()) {
      ProductVertex pa = act_point(Matrix2::diag_unit(unit), p);
      if (busemann(pa.vInf) != busemann(p.vInf) ||
          busemann(pa.vZero) != busemann(p.vZero))
        ++failures;
    }
  }
  cert.witnesses.push_back("points=50");
  cert.witnesses.push_back("failures=" + std::to_string(failures));
  if (failures > 0) cert.fail("beta shift mismatch");
  return cert;
}

Certificate cert_divergence(const VerifyConfig& config) {
  Certificate cert;
  cert.lemma = "divergence";
  cert.labels.push_back("EXACT");
  Field f = config.ring.scalar_field();
  Rng rng(config.seed);
  int failures = 0;
  long max_i0 = 0;
  for (int s = 0; s < 20; ++s) {
    // Monomial first column: the pinned i0 formula is tight here, so the
    // minimality check at i0 - 1 is part of the certificate.
    Scalar alpha = rng.nonzero_scalar(f);
    Scalar gamma2 = rng.nonzero_scalar(f);
    long mexp = rng.int_in(0, 3);
    long kexp = rng.int_in(-mexp, mexp);
    int L = int(rng.int_in(-2, 2));
    Matrix2 m{RationalFunction::constant(alpha) *
                  RationalFunction::t_power(f, int(-mexp)),
              RationalFunction::zero(f),
              RationalFunction::constant(gamma2) *
                  RationalFunction::t_power(f, int(kexp)),
              RationalFunction::constant(alpha.inverse()) *
                  RationalFunction::t_power(f, int(mexp))};
    Certificate one = divergence_certificate(m, L);
    long i0 = 1 - L + mexp;
    max_i0 = std::max(max_i0, i0);
    bool minimal = finite_val(m.a, Place::Infinity) - (i0 - 1) >= L ||
                   finite_val(m.c, Place::Infinity) - (i0 - 1) >= L;
    if (!one.pass || !minimal) ++failures;
  }
  cert.witnesses.push_back("instances=20");
  cert.witnesses.push_back("max_i0=" + std::to_string(max_i0));
  cert.witnesses.push_back("failures=" + std::to_string(failures));
  if (failures > 0) cert.fail("violation or minimality check failed");
  return cert;
}

Certificate cert_theta(const VerifyConfig& config) {
  Certificate cert;
  cert.lemma = "theta";
  cert.labels.push_back("EXACT");
  cert.notes.push_back(
      "points drawn with factor levels >= -n, the regime where the "
      "tail-cancellation rule is a strict orbit normal form");
  Field f = config.ring.scalar_field();
  Rng rng(config.seed);
  const int n = 2;
  int failures = 0;
  for (int s = 0; s < 50; ++s) {
    ProductVertex p = rng.point(f, -n, 3, -n - 3);
    ThetaResult r = reduce_theta(n, p);
    bool in_upper = r.u.is_identity() ||
                    to_laurent(r.u.x).slice(-n, n).is_zero();
    bool ok = in_Y_n(n, r.q) && in_upper &&
              act_point(r.u.to_matrix(), p) == r.q &&
              reduce_theta(n, r.q).u.is_identity();
    Unipotent w = rng.u_upper_element(f, n, 2);
    ok = ok && reduce_theta(n, act_point(w.to_matrix(), p)).q == r.q;
    if (!ok) ++failures;
  }
  cert.witnesses.push_back("points=50");
  cert.witnesses.push_back("failures=" + std::to_string(failures));
  if (failures > 0) cert.fail("theta reduction property failed");
  return cert;
}

Certificate cert_pairing(const VerifyConfig& config) {
  Certificate cert;
  cert.lemma = "pairing";
  cert.labels.push_back("EXACT");
  std::vector<int> indices{2, 4};
  PairingReport rep =
      pairing_matrix(indices, config.ring, config.horoball);
  Field f = config.ring.scalar_field();
  bool ok = rep.rank == int(indices.size());
  Scalar one = Scalar::one(f);
  for (size_t i = 0; i < indices.size(); ++i) {
    Scalar diag = rep.matrix[i][i];
    if (config.corrupt_sign_hook) diag = -diag;
    if (!(diag == one)) ok = false;
    for (size_t j = 0; j < i; ++j)
      if (!rep.matrix[i][j].is_zero()) ok = false;
  }
  for (size_t i = 0; i < indices.size(); ++i)
    for (size_t j = 0; j < indices.size(); ++j)
      cert.witnesses.push_back("M[" + std::to_string(indices[i]) + "][" +
                               std::to_string(indices[j]) +
                               "]=" + rep.matrix[i][j].str());
  cert.witnesses.push_back("rank=" + std::to_string(rep.rank));
  if (!ok) cert.fail("pairing matrix not unit-triangular of full rank");
  return cert;
}

Certificate run_one(const std::string& tag, const VerifyConfig& config) {
  Certificate cert;
  if (tag == "apartment") {
    cert = cert_apartment(config);
  } else if (tag == "cover") {
    cert = horosphere_cover_sample(
        config.ring, std::max(2, config.horoball.threshold + 1),
        config.samples, config.word_radius, config.seed);
  } else if (tag == "density") {
    cert = cert_density(config);
  } else if (tag == "divergence") {
    cert = cert_divergence(config);
  } else if (tag == "horoball") {
    cert = horoball_gap(config.ring, config.gap_radius);
  } else if (tag == "invariance") {
    cert = cert_invariance(config);
  } else if (tag == "nooverlap") {
    Field f = config.ring.scalar_field();
    Matrix2 gamma{RationalFunction::zero(f), -RationalFunction::one(f),
                  RationalFunction::one(f), RationalFunction::zero(f)};
    cert = nooverlap_sample(gamma, config.horoball, config.samples,
                            config.seed);
  } else if (tag == "pairing") {
    cert = cert_pairing(config);
  } else if (tag == "theta") {
    cert = cert_theta(config);
  } else {
    throw std::invalid_argument(
        "unknown lemma tag: " + tag +
        " (known: apartment cover density divergence horoball invariance "
        "nooverlap pairing theta)");
  }
  stamp_config(cert, config);
  return cert;
}

}  // namespace

std::vector<Certificate> run_all(const VerifyConfig& config) {
  std::vector<Certificate> out;
  for (const char* tag :
       {"apartment", "cover", "density", "divergence", "horoball",
        "invariance", "nooverlap", "pairing", "theta"})
    out.push_back(run_one(tag, config));
  return out;
}

Certificate run_verify_tag(const std::string& tag,
                           const VerifyConfig& config) {
  return run_one(tag, config);
}

bool reverify(const Certificate& cert) {
  // Standalone density certificates carry their own instance data.
  if (cert.lemma == "density" && cert.params.count("v")) {
    Field f{unsigned(std::stoul(param(cert, "field")))};
    RationalFunction v = parse_rational_function(f, param(cert, "v"));
    RationalFunction w = parse_rational_function(f, param(cert, "w"));
    RationalFunction beta(f);
    bool have_beta = false;
    for (const std::string& witness : cert.witnesses) {
      if (witness.rfind("beta=", 0) == 0) {
        beta = parse_rational_function(f, witness.substr(5));
        have_beta = true;
      }
    }
    if (!have_beta) return false;
    return valuation(beta - v, Place::Infinity) >=
               std::stol(param(cert, "kInf")) &&
           valuation(beta - w, Place::Zero) >=
               std::stol(param(cert, "kZero"));
  }
  if (cert.lemma == "divergence" && cert.params.count("a")) {
    Field f{unsigned(std::stoul(param(cert, "field")))};
    Matrix2 m{parse_rational_function(f, param(cert, "a")),
              parse_rational_function(f, param(cert, "b")),
              parse_rational_function(f, param(cert, "c")),
              parse_rational_function(f, param(cert, "d"))};
    Certificate redo = divergence_certificate(m, std::stoi(param(cert, "L")));
    return redo.pass && redo.witnesses == cert.witnesses && cert.pass;
  }
  // Standalone word-ball gap certificates carry ring and radius directly.
  if (cert.lemma == "horoball" && cert.params.count("threshold") == 0) {
    Certificate redo = horoball_gap(ring_from_string(param(cert, "ring")),
                                    std::stoi(param(cert, "radius")));
    return redo.pass && redo.witnesses == cert.witnesses && cert.pass;
  }
  // Aggregate certificates: deterministic re-run from the stamped config.
  VerifyConfig config = config_from_params(cert);
  Certificate redo = run_one(cert.lemma, config);
  return redo.pass == cert.pass && redo.witnesses == cert.witnesses &&
         cert.pass;
}

}  // namespace btlab
