#pragma once

// JSON encodings; see docs/formats.md. Decoders accept plain integers for
// polynomial entries when the ring is known from context. Encoders always
// write the canonical object form.

#include <optional>

#include "json.hpp"
#include "maslovkit/lgroups.hpp"
#include "maslovkit/sturm.hpp"

namespace maslovkit::json {

using Json = nlohmann::ordered_json;

Json encode(const RingDescriptor& r);
Json encode(const LaurentPolynomial& f);
Json encode(const RingMatrix& m);
Json encode(const HermitianForm& f);
Json encode(const StabilizerModule& s);
Json encode(const CliffordUnitary& u);
Json encode(const WittClass& c);
Json encode(const LagrangianLoop& loop);
Json encode(const MaslovResult& m);
Json encode(const LagrangianReport& r);
Json encode(const Circuit& c);

RingDescriptor decode_ring(const Json& j);
/// ctx supplies the ring for bare integers and is checked against full objects.
LaurentPolynomial decode_poly(const Json& j, const std::optional<RingDescriptor>& ctx = std::nullopt);
RingMatrix decode_matrix(const Json& j, const std::optional<RingDescriptor>& ctx = std::nullopt);
/// Forms carry their ring in "ring" or in their entries; ctx otherwise.
HermitianForm decode_form(const Json& j, const std::optional<RingDescriptor>& ctx = std::nullopt);
StabilizerModule decode_module(const Json& j);
LagrangianLoop decode_loop(const Json& j);
Circuit decode_circuit(const Json& j, const std::optional<RingDescriptor>& ctx = std::nullopt);
WittClass decode_witt(const Json& j);

/// Runs f, turning nlohmann exceptions into ParseError.
template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::ParseError, std::string(what) + ": " + e.what());
    }
}

}  // namespace maslovkit::json
