#pragma once

#include <string>

#include "json.hpp"

#include "aglcp/constructions.hpp"

namespace aglcp {

using json = nlohmann::ordered_json;

json field_to_json(const Field& F);
FieldRef field_from_json(const json& j);

json elem_to_json(const Field& F, felem e);        // little-endian coordinate vector
felem elem_from_json(const Field& F, const json& j);

json place_to_json(const Field& F, const Place& P);
Place place_from_json(const FunctionField& ff, const json& j);

json divisor_to_json(const Field& F, const Divisor& D);
Divisor divisor_from_json(const FunctionField& ff, const json& j);

json matrix_to_json(const Field& F, const Matrix& M);

json certificate_to_json(const CodeCertificate& c);

json construction_to_json(const CurveConstruction& c);
json elliptic_to_json(const EllipticConstruction& c);

// rebuild and re-certify the construction named by a stored result; returns
// the freshly computed JSON for comparison
json recompute_from_json(const json& stored, const CertifyOptions& opt);

}  // namespace aglcp
