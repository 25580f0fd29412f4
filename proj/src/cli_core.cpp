#include "stratum/cli_core.hpp"

#include <algorithm>

namespace stratum {

namespace {

const json& field(const json& params, const char* name) {
    auto it = params.find(name);
    if (it == params.end()) throw SchemaError(std::string("missing field: params.") + name);
    return *it;
}

std::int64_t get_int(const json& params, const char* name) {
    const json& v = field(params, name);
    if (!v.is_number_integer())
        throw SchemaError(std::string("params.") + name + " must be an integer");
    return v.get<std::int64_t>();
}

Int get_bigint(const json& params, const char* name) {
    const json& v = field(params, name);
    if (v.is_number_integer()) return Int(v.get<std::int64_t>());
    if (v.is_string()) {
        try {
            return Int(v.get<std::string>());
        } catch (const std::runtime_error&) {
            throw SchemaError(std::string("params.") + name + " is not an integer literal");
        }
    }
    throw SchemaError(std::string("params.") + name + " must be an integer or string");
}

Composition get_composition(const json& params, const char* name) {
    try {
        return composition_from_json(field(params, name));
    } catch (const std::invalid_argument& ex) {
        throw SchemaError(std::string("params.") + name + ": " + ex.what());
    }
}

std::vector<BlockChar> get_chars(const json& params, const char* name) {
    const json& v = field(params, name);
    if (!v.is_array()) throw SchemaError(std::string("params.") + name + " must be an array");
    std::vector<BlockChar> out;
    for (const auto& c : v) {
        if (c == "trivial")
            out.push_back(BlockChar::Trivial);
        else if (c == "quadratic")
            out.push_back(BlockChar::Quadratic);
        else
            throw SchemaError(std::string("params.") + name +
                              " entries must be \"trivial\" or \"quadratic\"");
    }
    return out;
}

SteinbergProductRep get_rep(const json& params) {
    return SteinbergProductRep(get_composition(params, "blocks"), get_chars(params, "chars"));
}

std::vector<GlobalTerm> get_terms(const json& params) {
    const json& v = field(params, "terms");
    if (!v.is_array()) throw SchemaError("params.terms must be an array");
    std::vector<GlobalTerm> out;
    for (const auto& t : v) {
        GlobalTerm term;
        term.rep = get_rep(t);
        const json& coeff = field(t, "N");
        if (!coeff.is_string()) throw SchemaError("terms[].N must be a rational string");
        try {
            term.coefficient = parse_rational(coeff.get<std::string>());
        } catch (const std::invalid_argument& ex) {
            throw SchemaError(std::string("terms[].N: ") + ex.what());
        }
        out.push_back(std::move(term));
    }
    return out;
}

std::optional<bool> alpha_odd_choice(const json& params, const CliOptions& opts) {
    std::string parity;
    if (params.contains("alpha_parity")) {
        if (!params["alpha_parity"].is_string())
            throw SchemaError("params.alpha_parity must be \"even\" or \"odd\"");
        parity = params["alpha_parity"].get<std::string>();
    } else if (opts.alpha_parity) {
        parity = *opts.alpha_parity;
    } else {
        return std::nullopt;
    }
    if (parity == "even") return false;
    if (parity == "odd") return true;
    throw SchemaError("alpha_parity must be \"even\" or \"odd\"");
}

json dispatch(const std::string& command, const json& params, const CliOptions& opts) {
    if (command == "satake") {
        int n = static_cast<int>(get_int(params, "n"));
        int s = static_cast<int>(get_int(params, "s"));
        std::string variant = params.value("variant", "gl");
        if (variant == "gl") return to_json(satake_phi(n, s));
        if (variant == "gu") return to_json(satake_f_gu(n, s));
        throw SchemaError("params.variant must be \"gl\" or \"gu\"");
    }
    if (command == "constant-term") {
        return to_json(constant_term(static_cast<int>(get_int(params, "n")),
                                     static_cast<int>(get_int(params, "s")),
                                     get_composition(params, "blocks")));
    }
    if (command == "truncate") {
        if (params.contains("levi")) {
            const json& spb = field(params, "s_per_block");
            if (!spb.is_array()) throw SchemaError("params.s_per_block must be an array");
            ExtComposition s_per_block;
            for (const auto& v : spb) {
                if (!v.is_number_integer())
                    throw SchemaError("params.s_per_block entries must be integers");
                s_per_block.push_back(v.get<int>());
            }
            return to_json(truncated_constant_term_levi(get_composition(params, "levi"),
                                                        s_per_block,
                                                        get_composition(params, "sub_blocks")));
        }
        return to_json(truncated_constant_term(static_cast<int>(get_int(params, "n")),
                                               static_cast<int>(get_int(params, "s")),
                                               get_composition(params, "blocks")));
    }
    if (command == "cosets") {
        Composition lambda = get_composition(params, "lambda");
        Composition mu = get_composition(params, "mu");
        bool theta = params.value("theta", false);
        return to_json(theta ? enumerate_G_theta_PQ(lambda, mu) : enumerate_G_PQ(lambda, mu));
    }
    if (command == "poset") {
        Multisegment m;
        if (params.contains("speh")) {
            const json& xy = params["speh"];
            if (!xy.is_array() || xy.size() != 2)
                throw SchemaError("params.speh must be [x, y]");
            m = speh_multisegment(xy[0].get<int>(), xy[1].get<int>());
        } else {
            try {
                m = multisegment_from_json(field(params, "segments"));
            } catch (const std::invalid_argument& ex) {
                throw SchemaError(std::string("params.segments: ") + ex.what());
            }
        }
        std::int64_t bound = params.value("bound", std::int64_t{12});
        json out = json::array();
        for (const auto& b : poset_below(m, bound)) out.push_back(to_json(b));
        return out;
    }
    if (command == "hecke-matrix") return to_json(hecke_matrix(get_rep(params)));
    if (command == "trace") {
        int n = static_cast<int>(get_int(params, "n"));
        int s = static_cast<int>(get_int(params, "s"));
        TraceResult tr = twisted_compact_trace(n, s, get_rep(params));
        std::string mode = params.value("mode", "symbolic");
        if (mode == "numeric") {
            Rational p(get_bigint(params, "p"));
            return json(to_fraction_string(tr.eval(p * p, get_int(params, "alpha"))));
        }
        if (mode != "symbolic") throw SchemaError("params.mode must be \"symbolic\" or \"numeric\"");
        if (auto odd = alpha_odd_choice(params, opts)) {
            TraceResult folded;
            folded.poly = tr.resolved(*odd);
            return to_json(folded);
        }
        return to_json(tr);
    }
    if (command == "count" || command == "check-parity") {
        GlobalInput input;
        input.n = static_cast<int>(get_int(params, "n"));
        input.s = static_cast<int>(get_int(params, "s"));
        input.p = get_bigint(params, "p");
        input.ker1 = get_bigint(params, "ker1");
        input.terms = get_terms(params);
        if (command == "count") {
            input.alpha = get_int(params, "alpha");
            return to_json(point_count(input));
        }
        return json(parity_relation_check(input, get_int(params, "k")));
    }
    throw SchemaError("unknown command: " + command);
}

}  // namespace

json run(const std::string& command, const json& params, const CliOptions& opts) {
    json result;
    try {
        result = dispatch(command, params, opts);
    } catch (const json::exception& ex) {
        throw SchemaError(ex.what());
    }
    return json{{"command", command},
                {"params", params},
                {"version", kVersion},
                {"result", result}};
}

json run_batch(const json& requests, const std::string& default_command, const CliOptions& opts) {
    if (!requests.is_array()) throw SchemaError("batch input must be a JSON array");
    json out = json::array();
    for (const auto& entry : requests) {
        std::string command = default_command;
        json params = entry;
        if (entry.is_object() && entry.contains("command")) {
            if (!entry["command"].is_string()) {
                out.push_back(json{{"command", nullptr},
                                   {"error", {{"type", "schema"},
                                              {"message", "command must be a string"}}}});
                continue;
            }
            command = entry["command"].get<std::string>();
            params = entry.value("params", json::object());
        }
        try {
            out.push_back(run(command, params, opts));
        } catch (const SchemaError& ex) {
            out.push_back(json{{"command", command},
                               {"error", {{"type", "schema"}, {"message", ex.what()}}}});
        } catch (const std::invalid_argument& ex) {
            out.push_back(json{{"command", command},
                               {"error", {{"type", "domain"}, {"message", ex.what()}}}});
        }
    }
    return out;
}

}  // namespace stratum
