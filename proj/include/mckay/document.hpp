#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "mckay/moduli.hpp"
#include "mckay/quiver.hpp"

namespace mckay {

using Json = nlohmann::json;  // std::map backed, so keys come out sorted

inline constexpr const char* kSchema = "mckay-moduli/1";

Json rational_json(const Rational& q);
Json rational_vector_json(const RatVector& v);
Json integer_vector_json(const IntVector& v);

/// Vertices, arrows and the B, C, D matrices (row-major).
Json quiver_document(const McKayQuiver& quiver);

/// Pieces of a fan or rep document; absent parts are omitted.
struct DocumentParts {
    const PThetaData* ptheta = nullptr;
    const ThetaFan* fan = nullptr;
    const DistinguishedRep* rep = nullptr;
    RatVector w;
    bool ghilb = false;
};

Json moduli_document(const DocumentParts& parts);

/// Two-space indentation and a trailing newline.
std::string dump(const Json& doc);

}  // namespace mckay
