#include "segre/json_io.hpp"

#include <stdexcept>

namespace segre {
namespace {

std::uint32_t uint_field(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_unsigned())
        throw std::invalid_argument(std::string("expected unsigned integer field \"") + key +
                                    "\"");
    const std::uint64_t v = j[key].get<std::uint64_t>();
    if (v > 0xffffffffull)
        throw std::invalid_argument(std::string("field \"") + key + "\" out of range");
    return static_cast<std::uint32_t>(v);
}

std::uint32_t code_entry(const Json& j) {
    if (!j.is_number_unsigned()) throw std::invalid_argument("coordinate must be unsigned");
    const std::uint64_t v = j.get<std::uint64_t>();
    if (v > 0xffffffffull) throw std::invalid_argument("coordinate out of range");
    return static_cast<std::uint32_t>(v);
}

}  // namespace

Json modulus_json(const Field& field) {
    Json m = Json::array();
    for (const std::uint32_t c : field.modulus()) m.push_back(c);
    return m;
}

Json oval_to_json(std::uint32_t q, const Oval& oval) {
    Json pts = Json::array();
    for (const ProjPoint& p : oval.points())
        pts.push_back({p.coords[0].code, p.coords[1].code, p.coords[2].code});
    Json j;
    j["q"] = q;
    j["points"] = std::move(pts);
    return j;
}

OvalFile oval_file_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("oval input must be a JSON object");
    OvalFile out;
    out.q = uint_field(j, "q");
    if (!j.contains("points") || !j["points"].is_array())
        throw std::invalid_argument("expected array field \"points\"");
    for (const Json& row : j["points"]) {
        if (!row.is_array() || row.size() != 3)
            throw std::invalid_argument("each point must be a [x,y,z] triple");
        out.points.push_back({code_entry(row[0]), code_entry(row[1]), code_entry(row[2])});
    }
    return out;
}

Json conic_to_json(const Conic& c) {
    Json form = Json::array();
    for (const Fe e : c.form()) form.push_back(e.code);
    Json j;
    j["q"] = c.field().q();
    j["form"] = std::move(form);
    return j;
}

Conic conic_from_json(const Field& field, const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("conic input must be a JSON object");
    if (uint_field(j, "q") != field.q()) throw std::invalid_argument("conic q mismatch");
    if (!j.contains("form") || !j["form"].is_array() || j["form"].size() != 6)
        throw std::invalid_argument("expected six-entry array field \"form\"");
    std::array<std::uint32_t, 6> codes{};
    for (std::size_t i = 0; i < 6; ++i) codes[i] = code_entry(j["form"][i]);
    return Conic::from_codes(field, codes);
}

Json report_to_json(const Field& field, const IdentityReport& rep) {
    Json r;
    r["q"] = rep.q;
    r["modulus"] = modulus_json(field);
    if (!rep.oval_id.empty()) r["oval_id"] = rep.oval_id;
    Json checks;
    checks["graph_arc"] = rep.graph_arc_ok;
    checks["slope_set"] = rep.slope_set_ok;
    checks["sets_identity"] = rep.sets_eq_ok;
    checks["prod_identity"] = rep.prod_eq_ok;
    checks["antisymmetry"] = rep.antisymmetry_ok;
    checks["symmetric_pointwise"] = rep.symmetric_pointwise_ok;
    checks["symmetric_polynomial"] = rep.symmetric_polynomial_ok;
    checks["degree_bound"] = rep.degree_bound_ok;
    r["checks"] = std::move(checks);
    if (rep.degree)
        r["degree"] = *rep.degree;
    else
        r["degree"] = nullptr;
    r["all_ok"] = rep.all_ok();
    if (rep.witness) {
        Json w;
        w["u"] = rep.witness->u.code;
        w["v"] = rep.witness->v.code;
        if (rep.witness->x) w["x"] = rep.witness->x->code;
        r["witness"] = std::move(w);
    }
    return r;
}

}  // namespace segre
