#pragma once

#include <json.hpp>

#include "chronocalc/family.hpp"
#include "chronocalc/matrix.hpp"
#include "chronocalc/ordered.hpp"

namespace chronocalc {

using Json = nlohmann::json;

/// {"dim": n, "re": [...], "im": [...]} in row-major order.
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j);

/// {"dim": n, "terms": [{"coeff": [re,im], "factors": [{"t": tau, "matrix": {...}}]}]}
Json expr_to_json(const TimeOrderedExpr& e);
TimeOrderedExpr expr_from_json(const Json& j);

/// Family descriptors:
///   {"kind":"constant","matrix":{...},"a":0,"b":1}
///   {"kind":"step","breaks":[...],"pieces":[{...},...]}
///   {"kind":"tabulated","times":[...],"samples":[{...},...]}
///   {"kind":"named","name":"...","params":[...],"a":0,"b":1}
GeneratorFamily family_from_json(const Json& j);

}  // namespace chronocalc
