#pragma once

#include <json.hpp>

#include "stratum/composition.hpp"
#include "stratum/heckefun.hpp"
#include "stratum/laurent.hpp"
#include "stratum/traceeval.hpp"
#include "stratum/weylcomb.hpp"
#include "stratum/zelring.hpp"

// JSON views of the library types.  Exponents serialize as twice their value
// ([const_twice, alpha_twice] for affine exponents); rationals as "num/den"
// strings.

namespace stratum {

using json = nlohmann::ordered_json;

inline json to_json(const AffineExp& e) { return json::array({e.c.twice, e.a.twice}); }

inline AffineExp affine_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw std::invalid_argument("exponent must be [const_twice, alpha_twice]");
    return AffineExp(HalfInt(j[0].get<std::int64_t>()), HalfInt(j[1].get<std::int64_t>()));
}

inline json to_json(const LaurentPoly& p) {
    json terms = json::array();
    for (const auto& [k, c] : p.terms()) {
        json t;
        t["coefficient"] = to_fraction_string(c);
        t["q_exponent"] = to_json(k.qexp);
        json vars = json::array();
        for (const auto& v : k.vars) vars.push_back(to_json(v));
        t["var_exponents"] = vars;
        if (k.alpha_sign) t["sign_parity"] = "odd";
        terms.push_back(t);
    }
    return json{{"num_vars", p.num_vars()}, {"terms", terms}};
}

inline json to_json(const Composition& c) { return json(c.parts); }

inline Composition composition_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("composition must be an array");
    std::vector<int> parts;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw std::invalid_argument("composition parts must be integers");
        parts.push_back(v.get<int>());
    }
    return Composition(std::move(parts));
}

inline json to_json(const ConstantTermExpansion& e) {
    json summands = json::array();
    for (const auto& sm : e.summands)
        summands.push_back(json{{"ext", sm.ext}, {"q_exponent", to_json(sm.qexp)}});
    return json{{"blocks", to_json(e.blocks)}, {"s", e.s}, {"summands", summands}};
}

inline json to_json(const Permutation& w) { return json(w.img); }

inline json to_json(const std::vector<Permutation>& ws) {
    json out = json::array();
    for (const auto& w : ws) out.push_back(to_json(w));
    return out;
}

inline json to_json(const Segment& s) { return json::array({s.begin.twice, s.end.twice}); }

inline Segment segment_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw std::invalid_argument("segment must be [begin_twice, end_twice]");
    return Segment(HalfInt(j[0].get<std::int64_t>()), HalfInt(j[1].get<std::int64_t>()));
}

inline json to_json(const Multisegment& m) {
    json out = json::array();
    for (const auto& s : m.segments) out.push_back(to_json(s));
    return out;
}

inline Multisegment multisegment_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("multisegment must be an array of segments");
    std::vector<Segment> segs;
    for (const auto& s : j) segs.push_back(segment_from_json(s));
    return Multisegment(std::move(segs));
}

inline json to_json(const SignedHeckeMatrix& m) {
    json out = json::array();
    for (const auto& e : m.entries) out.push_back(json::array({e.sign, e.exp.twice}));
    return out;
}

inline json to_json(const TraceResult& tr) {
    json terms = json::array();
    for (const auto& [k, c] : tr.poly.terms()) {
        terms.push_back(json{{"coefficient", to_fraction_string(c)},
                             {"q_exp", to_json(k.qexp)},
                             {"sign_parity", k.alpha_sign ? "odd" : "even"}});
    }
    return terms;
}

inline json to_json(const PointValue& v) {
    if (!v.sqrt_p) return json(to_fraction_string(v.r));
    return json{{"value", to_fraction_string(v.r)}, {"times_sqrt_p", true}};
}

}  // namespace stratum
