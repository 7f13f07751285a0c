#include "supersol/json_io.hpp"

#include <cstdio>

#include "supersol/errors.hpp"

namespace supersol {

std::string mask_to_bitstring(std::uint32_t mask, int width) {
    std::string s(width, '0');
    for (int i = 0; i < width; ++i)
        if (mask >> i & 1) s[i] = '1';
    return s;
}

std::uint32_t bitstring_to_mask(const std::string& s) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            mask |= 1u << i;
        else if (s[i] != '0')
            throw Error("bitstring_to_mask: invalid character in '" + s + "'");
    }
    return mask;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

nlohmann::ordered_json to_json(const Coefficient& c) {
    return {{"q", c.q().to_string()}, {"pi_pow", c.pi_half()}};
}

nlohmann::ordered_json to_json(const SuperElement& e) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [mono, c] : e.terms()) {
        nlohmann::ordered_json t;
        t["q"] = c.q().to_string();
        t["pi_pow"] = c.pi_half();
        t["x_exp"] = mono.x_exp;
        t["g_mask"] = mask_to_bitstring(mono.g_mask, 2 * e.n());
        t["e_mask"] = mask_to_bitstring(mono.e_mask, e.m());
        t["w_exp"] = mono.w_exp;
        terms.push_back(std::move(t));
    }
    return {{"m", e.m()}, {"n", e.n()}, {"terms", std::move(terms)}};
}

nlohmann::ordered_json to_json(const RadialExpr& e) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [key, c] : e.terms()) {
        nlohmann::ordered_json t;
        t["q"] = c.q().to_string();
        t["pi_pow"] = c.pi_half();
        t["alpha"] = key.alpha;
        t["xvec"] = key.xvec ? 1 : 0;
        t["beta"] = key.beta;
        terms.push_back(std::move(t));
    }
    return {{"m", e.m()}, {"n", e.n()}, {"terms", std::move(terms)}};
}

nlohmann::ordered_json to_json(const CheckReport& r, bool with_timings) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["m"] = r.m;
    j["n"] = r.n;
    j["k"] = r.k;
    j["status"] = r.pass ? "PASS" : "FAIL";
    j["witness"] = r.witness;
    j["detail"] = r.detail;
    j["term_count"] = r.term_count;
    if (with_timings) j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

nlohmann::ordered_json to_json(const PairingReport& r) {
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& e : r.entries) {
        entries.push_back({{"value", format_double(e.value)},
                           {"target", format_double(e.target)},
                           {"rel_error", format_double(e.rel_error)},
                           {"status", e.pass ? "PASS" : "FAIL"}});
    }
    return {{"tolerance", format_double(r.tolerance)},
            {"status", r.pass ? "PASS" : "FAIL"},
            {"entries", std::move(entries)}};
}

nlohmann::ordered_json to_json(const ResidualReport& r) {
    return {{"max_rel_residual", format_double(r.max_rel_residual)},
            {"h", format_double(r.h)},
            {"tolerance", format_double(r.tolerance)},
            {"status", r.pass ? "PASS" : "FAIL"}};
}

nlohmann::ordered_json to_json(const SampledSuperFunction& f) {
    nlohmann::ordered_json sectors = nlohmann::ordered_json::object();
    for (const auto& [mask, values] : f.sectors) {
        nlohmann::ordered_json vals = nlohmann::ordered_json::array();
        for (double v : values) vals.push_back(format_double(v));
        sectors[mask_to_bitstring(mask, 2 * f.n)] = std::move(vals);
    }
    nlohmann::ordered_json grid = nlohmann::ordered_json::array();
    for (const auto& p : f.grid) {
        nlohmann::ordered_json pt = nlohmann::ordered_json::array();
        for (double c : p) pt.push_back(format_double(c));
        grid.push_back(std::move(pt));
    }
    return {{"m", f.m}, {"n", f.n}, {"grid", std::move(grid)}, {"sectors", std::move(sectors)}};
}

RadialExpr radial_from_json(const nlohmann::json& j) {
    RadialExpr e(j.at("m").get<int>(), j.at("n").get<int>());
    for (const auto& t : j.at("terms")) {
        Coefficient c(Rational::from_string(t.at("q").get<std::string>()),
                      t.at("pi_pow").get<int>());
        e.add_term(t.at("alpha").get<int>(), t.at("xvec").get<int>() != 0,
                   t.at("beta").get<int>(), c);
    }
    return e;
}

SuperTestFunction test_function_from_json(const nlohmann::json& j) {
    SuperTestFunction f(j.at("m").get<int>(), j.at("n").get<int>());
    for (const auto& spec : j.at("functions")) {
        if (spec.at("type").get<std::string>() != "gaussian")
            throw Error("test_function_from_json: unknown type '" +
                        spec.at("type").get<std::string>() + "'");
        std::uint32_t mask = 0;
        if (spec.contains("grassmann_mask"))
            mask = bitstring_to_mask(spec.at("grassmann_mask").get<std::string>());
        f.add_gaussian(mask, spec.value("amplitude", 1.0),
                       spec.at("center").get<std::vector<double>>(),
                       spec.at("width").get<double>());
    }
    return f;
}

}  // namespace supersol
