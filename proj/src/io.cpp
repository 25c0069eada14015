#include "hopf/io.hpp"

#include <fstream>
#include <sstream>

namespace hopf::io {

namespace {

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

Rational rational_field(const json& v) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(Integer(v.dump()));
    throw ParseError("coefficient must be a string or an integer");
}

}  // namespace

series::SeriesProfile parse_series(std::string_view text) {
    const json j = parse_json(text);
    if (!j.is_object()) throw ParseError("series must be a JSON object");
    if (!j.contains("kind") || !j["kind"].is_string()) throw ParseError("series: missing \"kind\"");
    if (!j.contains("coeffs") || !j["coeffs"].is_array()) throw ParseError("series: missing \"coeffs\" array");
    const auto kind_text = j["kind"].get<std::string>();
    if (kind_text.size() != 1) throw ParseError("series: kind must be one of R, P, S, D");
    const auto kind = series::kind_from_letter(kind_text[0]);

    std::vector<Rational> coeffs;
    for (const auto& c : j["coeffs"]) coeffs.push_back(rational_field(c));
    if (coeffs.empty()) throw ParseError("series: order must be at least 1");
    if (j.contains("order")) {
        if (!j["order"].is_number_unsigned()) throw ParseError("series: order must be a positive integer");
        if (j["order"].get<std::size_t>() != coeffs.size())
            throw ParseError("series: order " + j["order"].dump() + " but " + std::to_string(coeffs.size()) +
                             " coefficients");
    }
    return {kind, std::move(coeffs)};
}

json series_to_json(const series::SeriesProfile& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs) coeffs.push_back(to_string(c));
    return json{{"kind", std::string(1, series::kind_letter(p.kind))}, {"order", p.order()}, {"coeffs", coeffs}};
}

nck::DecorationSet parse_decorations(std::string_view text) {
    const json j = parse_json(text);
    if (!j.is_array()) throw ParseError("decorations must be a JSON array");
    std::vector<nck::Decoration> out;
    for (const auto& d : j) {
        if (!d.is_object() || !d.contains("label") || !d["label"].is_string() || !d.contains("degree") ||
            !d["degree"].is_number_integer())
            throw ParseError("decoration entries need a string \"label\" and an integer \"degree\"");
        out.push_back({d["label"].get<std::string>(), d["degree"].get<int>()});
    }
    try {
        return nck::DecorationSet(std::move(out));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

json matrix_to_json(const la::Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

la::Matrix matrix_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("matrix must be an array of rows");
    std::vector<std::vector<Rational>> rows;
    std::size_t cols = 0;
    for (const auto& r : j) {
        if (!r.is_array()) throw ParseError("matrix row must be an array");
        std::vector<Rational> row;
        for (const auto& v : r) row.push_back(rational_field(v));
        if (!rows.empty() && row.size() != cols) throw ParseError("ragged matrix");
        cols = row.size();
        rows.push_back(std::move(row));
    }
    return la::Matrix::from_rows(cols, rows);
}

json gate_to_json(const series::GateVerdict& v) {
    json j{{"pass", v.pass}};
    j["first_failure"] = v.first_failure ? json(*v.first_failure) : json(nullptr);
    j["witness"] = v.witness ? json(to_string(*v.witness)) : json(nullptr);
    j["values"] = series_to_json(v.values);
    return j;
}

json decomposition_to_json(const nck::Algebra& alg, const structure::DegreeDecomposition& d) {
    return json{{"degree", d.degree},
                {"dim_H", alg.dim(d.degree)},
                {"dim_primitives", d.primitives.dim()},
                {"dim_decomposables", d.decomposables.dim()},
                {"dim_core", d.core.dim()},
                {"dim_m", d.m.dim()},
                {"dim_h", d.h.dim()},
                {"dim_w", d.w.dim()},
                {"invariants", d.invariants_hold()}};
}

json gram_to_json(const pairing::PairingState& st) {
    json j = json::object();
    for (std::size_t n = 0; n < st.gram.size(); ++n) j[std::to_string(n)] = matrix_to_json(st.gram[n]);
    return j;
}

json verification_to_json(const pairing::VerificationReport& r) {
    json checks{{"counit", r.counit},
                {"multiplicativity", r.multiplicativity},
                {"homogeneity", r.homogeneity},
                {"symmetry", r.symmetry},
                {"nondegeneracy", r.nondegeneracy},
                {"restriction", r.restriction}};
    json violations = json::array();
    for (const auto& v : r.violations)
        violations.push_back({{"check", v.check}, {"degree", v.degree}, {"triple", v.triple}, {"detail", v.detail}});
    return json{{"pass", r.pass()}, {"checks", checks}, {"triples_checked", r.triples_checked},
                {"violations", violations}};
}

}  // namespace hopf::io
