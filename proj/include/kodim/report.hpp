#pragma once

// JSON encodings shared by the CLI and the tests.

#include "kodim/fourfold.hpp"
#include "kodim/lattice.hpp"
#include "kodim/maps.hpp"
#include "kodim/taxonomy.hpp"
#include "kodim/threefold.hpp"

#include <json.hpp>

namespace kodim {

using Json = nlohmann::ordered_json;

Json to_json(KodairaDim k);
Json to_json(const Rational& r);
Json to_json(const SymbolicNorm& n);
Json to_json(const NormValue& n);
Json to_json(const Geometry3& g);
Json to_json(const Geometry4& g);
Json to_json(const Geometry4Report& r);
Json to_json(const ShapeReport& r);
Json to_json(const Products6& p);
Json to_json(const Kappa6& k);
Json to_json(const KappaH& k);
Json to_json(const IntMatrix& m);

/// Table export: one object per geometry in listing order.
Json taxonomy_json(int dimension);

// Input documents. All throw PreconditionError on malformed content.

/// "-inf" or a non-negative integer.
KodairaDim kodaira_from_json(const Json& j);
/// Rational given as a JSON integer or a "p/q" / decimal string.
Rational rational_from_json(const Json& j);
/// {"terms": [{"coefficient": "3/2", "constants": ["INV_V3"]}]}, 0, or
/// "nonzero_unquantified".
NormValue norm_from_json(const Json& j);
InvariantProfile profile_from_json(const Json& j);
MapClaim claim_from_json(const Json& j);
IntMatrix matrix_from_json(const Json& j);
/// {"matrices": [...]} or a bare array of matrices.
HomologyEndo endo_from_json(const Json& j);

}  // namespace kodim
