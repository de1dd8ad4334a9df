#include "hms/spec_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "hms/errors.hpp"

namespace hms {

namespace {

Rat rho_from_json(const nlohmann::json& v) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rat(Int(v.get<long long>()));
    throw input_error("rho must be a rational string or an integer");
}

}  // namespace

LaurentPolySpec parse_spec_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("terms"))
        throw input_error("spec document must be an object with fields n and terms");
    if (!doc["n"].is_number_integer()) throw input_error("field n must be an integer");

    LaurentPolySpec spec;
    spec.n = doc["n"].get<int>();
    if (!doc["terms"].is_array()) throw input_error("field terms must be an array");
    for (const auto& t : doc["terms"]) {
        if (!t.is_object() || !t.contains("alpha") || !t.contains("rho"))
            throw input_error("each term must carry alpha and rho");
        SpecTerm term;
        if (!t["alpha"].is_array()) throw input_error("alpha must be an integer array");
        for (const auto& a : t["alpha"]) {
            if (!a.is_number_integer()) throw input_error("alpha entries must be integers");
            term.alpha.push_back(Int(a.get<long long>()));
        }
        term.rho = rho_from_json(t["rho"]);
        if (t.contains("coeff")) {
            if (!t["coeff"].is_string()) throw input_error("coeff must be a string");
            term.coeff = t["coeff"].get<std::string>();
        }
        spec.terms.push_back(std::move(term));
    }
    validate_spec(spec);
    return spec;
}

LaurentPolySpec load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open spec file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec_json(buf.str());
}

std::string spec_to_json(const LaurentPolySpec& spec) {
    nlohmann::ordered_json doc;
    doc["n"] = spec.n;
    doc["terms"] = nlohmann::ordered_json::array();
    for (const auto& t : spec.terms) {
        nlohmann::ordered_json jt;
        jt["alpha"] = nlohmann::ordered_json::array();
        for (const auto& a : t.alpha) jt["alpha"].push_back(a.convert_to<long long>());
        jt["rho"] = rational_to_string(t.rho);
        if (!t.coeff.empty()) jt["coeff"] = t.coeff;
        doc["terms"].push_back(std::move(jt));
    }
    return doc.dump(2) + "\n";
}

}  // namespace hms
