#pragma once

#include "json.hpp"

#include "btlab/verify.hpp"

namespace btlab {

using Json = nlohmann::json;

/// 2x2 array of rational-function strings.
Json matrix_to_json(const Matrix2& m);
Matrix2 matrix_from_json(Field f, const Json& j);

/// {place, level, offset: [[exponent, coeff-string], ...]}.
Json vertex_to_json(const TreeVertex& v);
TreeVertex vertex_from_json(Field f, const Json& j);

/// List of {cell: {eInf: {v1, v2?}, eZero: {v1, v2?}}, coeff}; edge factors
/// carry v2, vertex factors omit it.  The reader re-canonicalizes edge
/// orientations, folding signs into the coefficients.
Json chain_to_json(const Chain& c);
Chain chain_from_json(Field f, const Json& j);

/// {lemma, params, verdict, witnesses, labels, notes}.
Json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const Json& j);

/// {indices, matrix (strings), triangular, rank}.
Json pairing_to_json(const PairingReport& rep);

/// DOT graph of the radius-r ball around the base vertex; Busemann level
/// used as the rank hint.  Requires a finite field.
std::string dot_ball(Field f, Place at, int radius);

/// DOT graph of a chain's support projected to one tree factor.
std::string dot_chain(const Chain& c, Place at);

}  // namespace btlab
