#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include <json.hpp>

#include "segre/reconstruct.hpp"

namespace segre {

/// Key order is part of the output contract (byte-identical reruns), so
/// everything serializes through the order-preserving variant.
using Json = nlohmann::ordered_json;

/// Canonical modulus as a code array, ascending degree. For prime q this is
/// the polynomial t, i.e. [0, 1].
Json modulus_json(const Field& field);

/// {"q": q, "points": [[x,y,z], ...]} with normalized codes.
Json oval_to_json(std::uint32_t q, const Oval& oval);

/// Structural half of oval parsing: shape and integer-range validation
/// only, no field yet (the caller must vet q before building one). Throws
/// std::invalid_argument with a readable message.
struct OvalFile {
    std::uint32_t q = 0;
    std::vector<std::array<std::uint32_t, 3>> points;
};
OvalFile oval_file_from_json(const Json& j);

/// {"q": q, "form": [A,B,C,D,E,F]}.
Json conic_to_json(const Conic& c);
Conic conic_from_json(const Field& field, const Json& j);

/// Report schema: q, modulus, oval_id (when known), one boolean per named
/// check, degree (null for the zero polynomial), all_ok, and the witness
/// triple when some check failed.
Json report_to_json(const Field& field, const IdentityReport& rep);

}  // namespace segre
