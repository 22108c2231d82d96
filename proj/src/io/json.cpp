#include "pdaw/io/json.hpp"

namespace pdaw::io {

Json with_schema(Json body)
{
    Json out;
    out["schema"] = kSchema;
    for (auto& [k, v] : body.items())
        out[k] = v;
    return out;
}

Json big_to_json(const BigInt& v)
{
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

Json rational_to_json(const Rational& r)
{
    return Json{{"num", big_to_json(numerator_of(r))}, {"den", big_to_json(denominator_of(r))}};
}

Json to_json(const PdaParams& p)
{
    return Json{{"K", p.users},
                {"F", p.rows},
                {"Z", p.stars},
                {"S", p.symbols},
                {"rate", rational_to_json(p.rate())},
                {"memory_ratio", rational_to_json(p.memory_ratio())}};
}

Json to_json(const Violation& v)
{
    Json cells = Json::array();
    for (const auto& c : v.cells)
        cells.push_back({c.row + 1, c.col + 1});
    Json out{{"axiom", to_string(v.axiom)}, {"cells", cells}};
    if (v.symbol != kStar)
        out["symbol"] = v.symbol;
    if (!v.detail.empty())
        out["detail"] = v.detail;
    return out;
}

Json to_json(const VerifyResult& r)
{
    Json vs = Json::array();
    for (const auto& v : r.violations)
        vs.push_back(to_json(v));
    return Json{{"valid", r.valid()}, {"violations", vs}};
}

Json to_json(const BoundCertificate& c)
{
    return Json{{"value", c.value},
                {"rate_bound", rational_to_json(c.rate_bound())},
                {"witness", c.witness.one_based()},
                {"step_sizes", c.step_sizes},
                {"method", to_string(c.method)},
                {"exact", c.exact},
                {"nodes", c.nodes}};
}

Json to_json(const StarPattern& p)
{
    Json sets = Json::array();
    for (const auto& s : p.uncached_sets())
        sets.push_back(s.one_based());
    return Json{{"K", p.users()}, {"F", p.rows()}, {"Z", p.stars_per_user()}, {"uncached", sets}};
}

Json to_json(const SearchReport& r)
{
    return Json{{"K", r.users},
                {"F", r.rows},
                {"Z", r.stars},
                {"mode", to_string(r.mode)},
                {"best_value", r.best_value},
                {"rate_bound", rational_to_json(r.rate_bound())},
                {"exhaustive", r.exhaustive},
                {"nodes_explored", r.nodes_explored},
                {"dedup_hits", r.dedup_hits},
                {"pruned", r.pruned},
                {"best_pattern", to_json(r.best_pattern)}};
}

std::string hex(std::span<const std::byte> bytes)
{
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (auto b : bytes) {
        const auto v = std::to_integer<unsigned>(b);
        out.push_back(digits[v >> 4]);
        out.push_back(digits[v & 0xF]);
    }
    return out;
}

Json to_json(const DeliveryTranscript& t, const DecodeResult* decoded)
{
    Json signals = Json::array();
    for (const auto& s : t.signals) {
        Json terms = Json::array();
        for (const auto& term : s.terms)
            terms.push_back({{"user", term.user + 1}, {"row", term.row + 1}});
        signals.push_back({{"id", s.symbol}, {"terms", terms}, {"payload_hex", hex(s.payload)}});
    }
    Json out{{"demand", t.demand.one_based()}, {"load", rational_to_json(t.load())}, {"signals", signals}};
    if (decoded) {
        Json log = Json::array();
        for (std::size_t k = 0; k < decoded->log.size(); ++k) {
            Json steps = Json::array();
            for (const auto& step : decoded->log[k])
                steps.push_back({{"row", step.row + 1}, {"signal", step.signal}});
            log.push_back({{"user", k + 1}, {"steps", steps}});
        }
        Json failures = Json::array();
        for (const auto& f : decoded->failures)
            failures.push_back({{"signal", f.signal}, {"user", f.user + 1}, {"row", f.row + 1}, {"reason", f.reason}});
        out["decode_log"] = log;
        out["failures"] = failures;
        out["verified"] = decoded->verified;
    }
    return out;
}

Json to_json(const RatioReport& r)
{
    Json out{{"q", r.q},
             {"m", r.m},
             {"s_pda", big_to_json(r.s_pda)},
             {"s_derived", big_to_json(r.s_derived)},
             {"s_exact", r.s_exact ? big_to_json(*r.s_exact) : Json(nullptr)},
             {"exact_note", r.exact_note},
             {"mu", r.mu ? rational_to_json(*r.mu) : Json(nullptr)},
             {"formula_ratio", rational_to_json(r.formula_ratio)}};
    return out;
}

} // namespace pdaw::io
