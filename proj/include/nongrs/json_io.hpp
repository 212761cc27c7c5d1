// SPDX-License-Identifier: Apache-2.0

#ifndef NONGRS_JSON_IO_HPP
#define NONGRS_JSON_IO_HPP

// JSON forms of the library types. All emitters are deterministic: object
// keys come out sorted and no floating-point values are written.

#include "json.hpp"
#include "nongrs/certificate.hpp"
#include "nongrs/constructions.hpp"
#include "nongrs/hyperoval.hpp"
#include "nongrs/matrix.hpp"

namespace nongrs {

using nlohmann::json;

/// {"kind":"prime","p":17} or {"kind":"gf2m","m":3,"poly":11}
json field_spec_to_json(const FieldSpec& s);
FieldSpec field_spec_from_json(const json& j);

/// {"field":{...},"rows":r,"cols":c,"data":[[...],...]}
json matrix_to_json(const FieldMatrix& m);
FieldMatrix matrix_from_json(const json& j);

json evalset_to_json(const EvalSet& s);
EvalSet evalset_from_json(const json& j);

/// {"family":"C2","q":17,"alphas":[...],"k":3,"r":2,"delta":2}; binary
/// fields add "m" and "poly".
json params_to_json(const ConstructionParams& p);
ConstructionParams params_from_json(const json& j);

/// {"q":8,"h":6,"gcdOk":true,"verdict":"o-monomial"}
json omonomial_to_json(const OMonomialReport& r);
OMonomialReport omonomial_from_json(const json& j);

}  // namespace nongrs

#endif
