#include "sphdyn/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "sphdyn/errors.hpp"

namespace sphdyn {

namespace {

json coeffs_to_json(const Poly& p) {
    json arr = json::array();
    for (const auto& c : p.c) arr.push_back(json::array({c.real(), c.imag()}));
    return arr;
}

Poly coeffs_from_json(const json& arr) {
    if (!arr.is_array()) throw DomainError("map JSON: coefficient list expected");
    Poly p;
    for (const auto& e : arr) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
            throw DomainError("map JSON: coefficients must be [re, im] pairs");
        }
        p.c.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    p.trim();
    return p;
}

// JSON has no infinities; the -inf exponent sentinel serializes as null.
json finite_or_null(double v) {
    if (std::isfinite(v)) return json(v);
    return json(nullptr);
}

}  // namespace

json map_to_json(const RationalMap& f) {
    json j;
    j["num"] = coeffs_to_json(f.num);
    j["den"] = coeffs_to_json(f.den);
    return j;
}

RationalMap map_from_json(const json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
        throw DomainError("map JSON: object with 'num' and 'den' expected");
    }
    for (const auto& [key, _] : j.items()) {
        if (key != "num" && key != "den") {
            throw DomainError("map JSON: unknown key '" + key + "'");
        }
    }
    return make_map(coeffs_from_json(j["num"]), coeffs_from_json(j["den"]));
}

RationalMap map_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open map file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw DomainError(std::string("map JSON parse error: ") + e.what());
    }
    return map_from_json(j);
}

json point_to_json(const SpherePoint& p) {
    const SpherePoint c = p.canonical();
    return json::array(
        {c.chart == Chart::Z ? "Z" : "U", c.coord.real(), c.coord.imag()});
}

json kreport_to_json(const KReport& r) {
    json j;
    j["value"] = r.value;
    json argmax = json::array();
    for (const auto& p : r.argmax_points) argmax.push_back(point_to_json(p));
    j["argmax"] = argmax;
    j["grid_size"] = r.grid_size;
    j["n_seeds"] = r.n_seeds;
    j["polish_tol"] = r.polish_tol;
    return j;
}

json chi_to_json(const ChiEstimate& e) {
    json j;
    j["value"] = finite_or_null(e.value);
    j["stderr"] = e.stderr_;
    j["n_samples"] = e.n_samples;
    j["method"] = chi_method_name(e.method);
    return j;
}

json cycles_to_json(const std::vector<CycleRecord>& cycles) {
    json arr = json::array();
    for (const auto& c : cycles) {
        json j;
        j["period"] = c.period;
        json pts = json::array();
        for (const auto& p : c.points) pts.push_back(point_to_json(p));
        j["points"] = pts;
        j["multiplier"] = json::array({c.multiplier.real(), c.multiplier.imag()});
        j["exponent"] = finite_or_null(c.exponent);
        arr.push_back(j);
    }
    return arr;
}

json bracket_to_json(const KInfinityBracket& b) {
    json j;
    j["upper"] = b.upper;
    j["lower"] = finite_or_null(b.lower);
    j["per_n"] = b.per_n;
    return j;
}

json exponent_report_to_json(const ExponentReport& r) {
    json j;
    j["map_label"] = r.map_label;
    j["degree"] = r.degree;
    j["log_k"] = r.log_k;
    j["k_inf_upper"] = r.k_inf_upper;
    j["k_inf_lower"] = finite_or_null(r.k_inf_lower);
    j["chi_a"] = chi_to_json(r.chi_a);
    j["floors"] = json{{"half_log_d", r.floor_half_log_d}, {"log2", r.floor_log2}};
    j["tol"] = r.tol;
    j["chain_ok"] = r.chain_ok;
    return j;
}

json area_identity_to_json(const AreaIdentityResult& r) {
    json j;
    j["integral"] = r.integral;
    j["expected"] = r.expected;
    j["rel_err"] = r.rel_err;
    return j;
}

std::string growth_table_to_csv(const std::vector<GrowthRow>& rows) {
    std::ostringstream os;
    os << "n,degree,k,ratio,phi\n";
    os.precision(17);
    for (const auto& r : rows) {
        os << r.n << "," << r.degree << "," << r.k << "," << r.ratio << "," << r.phi
           << "\n";
    }
    return os.str();
}

}  // namespace sphdyn
