#pragma once

// JSON views of the library's reports. Every document the CLI prints is one
// of these objects with a top-level "schema": "pda-workbench/1".

#include "pdaw/bound/search.hpp"
#include "pdaw/bound/theorem1.hpp"
#include "pdaw/closed_forms.hpp"
#include "pdaw/core/verify.hpp"
#include "pdaw/filler.hpp"
#include "pdaw/simulator.hpp"

#include <json.hpp>

namespace pdaw::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "pda-workbench/1";

/// {"schema": ..., ...body}
Json with_schema(Json body);

/// Integer when it fits in 64 bits, decimal string otherwise.
Json big_to_json(const BigInt& v);
/// {"num": n, "den": d}
Json rational_to_json(const Rational& r);

Json to_json(const PdaParams& p);
Json to_json(const Violation& v);
Json to_json(const VerifyResult& r);
/// {value, rate_bound, witness, step_sizes, method, exact, nodes}
Json to_json(const BoundCertificate& c);
Json to_json(const StarPattern& p);
Json to_json(const SearchReport& r);
/// Signals as {id, terms: [{user, row}], payload_hex}; adds the decode log
/// and failures when `decoded` is given.
Json to_json(const DeliveryTranscript& t, const DecodeResult* decoded = nullptr);
Json to_json(const RatioReport& r);

std::string hex(std::span<const std::byte> bytes);

} // namespace pdaw::io
