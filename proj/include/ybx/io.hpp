// JSON interchange.
//
// Matrices travel as
//   {"nrows": N, "ncols": M, "entries": [[re, im], ...]}   (row-major)
// and parsers reject entry-count mismatches.  Doubles are printed with
// enough digits that a decimal round trip is lossless.

#pragma once

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ybx/ansatz.hpp"
#include "ybx/analysis.hpp"
#include "ybx/families.hpp"
#include "ybx/matrix.hpp"
#include "ybx/verify.hpp"

namespace ybx {

using json = nlohmann::ordered_json;

// ── Matrices ────────────────────────────────────────────────────────────────

inline json matrix_to_json(const CMat& m) {
    json entries = json::array();
    for (const cplx& z : m.a) entries.push_back({z.real(), z.imag()});
    return json{{"nrows", m.nrows}, {"ncols", m.ncols}, {"entries", std::move(entries)}};
}

inline CMat matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("nrows") || !j.contains("ncols") || !j.contains("entries"))
        throw std::invalid_argument("matrix JSON: wants nrows, ncols, entries");
    const int nrows = j.at("nrows").get<int>();
    const int ncols = j.at("ncols").get<int>();
    if (nrows < 0 || ncols < 0) throw std::invalid_argument("matrix JSON: negative dimension");
    const json& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != static_cast<size_t>(nrows) * ncols)
        throw std::invalid_argument("matrix JSON: entry count does not match nrows*ncols");
    std::vector<cplx> data;
    data.reserve(entries.size());
    for (const json& e : entries) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("matrix JSON: entries must be [re, im] pairs");
        data.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    CMat m(nrows, ncols, std::move(data));
    if (!m.all_finite()) throw std::invalid_argument("matrix JSON: non-finite entry");
    return m;
}

inline void save_matrix(const CMat& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << matrix_to_json(m).dump(2) << "\n";
}

inline CMat load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
    return matrix_from_json(j);
}

// ── Reports ─────────────────────────────────────────────────────────────────

inline json report_to_json(const VerifyReport& r) {
    json j{{"equation", to_string(r.equation)}, {"lhs_dim", r.lhs_dim},
           {"residual_max", r.residual_max},   {"residual_fro", r.residual_fro},
           {"tol", r.tol},                     {"passed", r.passed}};
    if (!r.detail.empty()) j["detail"] = r.detail;
    return j;
}

inline json entanglement_to_json(const EntanglementReport& r) {
    json witnesses = json::array();
    for (const auto& w : r.witnesses)
        witnesses.push_back({{"input", w.input}, {"schmidt_rank", w.schmidt_rank}});
    return json{{"gate_dim", r.gate_dim},
                {"witnesses", std::move(witnesses)},
                {"entangling", r.entangling}};
}

inline json bipartition_to_json(const BipartitionReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"input", row.input},
                        {"rank_1_23", row.rank_1_23},
                        {"rank_2_13", row.rank_2_13},
                        {"rank_12_3", row.rank_12_3}});
    return json{{"bipartitions", std::move(rows)},
                {"entangling_every_cut", r.entangling_every_cut}};
}

inline json unitarity_to_json(const UnitarityCondition& c) {
    json clauses = json::array();
    for (const auto& k : c.constraints)
        clauses.push_back(
            {{"description", k.description}, {"satisfied", k.satisfied}, {"defect", k.defect}});
    return json{{"family", to_string(c.family)},
                {"constraints", std::move(clauses)},
                {"overall", c.overall},
                {"unitary_defect", c.unitary_defect}};
}

// ── Ansatz systems ──────────────────────────────────────────────────────────
//
// An equation is a list of {"monomial": [names...], "coeff": [re, im, den]}
// terms with exact integer components.

inline json system_to_json(const AnsatzSystem& sys) {
    json equations = json::array();
    for (const SparsePoly& eq : sys.equations) {
        json terms = json::array();
        for (const auto& [mono, c] : eq.terms) {
            json names = json::array();
            for (int v : mono) names.push_back(sys.variables[v]);
            terms.push_back(
                {{"monomial", std::move(names)}, {"coeff", {c.num_re, c.num_im, c.den}}});
        }
        equations.push_back(std::move(terms));
    }
    json vars = json::array();
    for (const auto& v : sys.variables) vars.push_back(v);
    return json{{"variables", std::move(vars)}, {"equations", std::move(equations)}};
}

inline AnsatzSystem system_from_json(const json& j) {
    AnsatzSystem sys;
    for (const json& v : j.at("variables")) sys.variables.push_back(v.get<std::string>());
    for (const json& jeq : j.at("equations")) {
        SparsePoly eq;
        for (const json& jterm : jeq) {
            Monomial mono;
            for (const json& name : jterm.at("monomial"))
                mono.push_back(sys.variable_id(name.get<std::string>()));
            const json& c = jterm.at("coeff");
            eq.add_term(std::move(mono), GaussianRational(c.at(0).get<long long>(),
                                                          c.at(1).get<long long>(),
                                                          c.at(2).get<long long>()));
        }
        if (!eq.is_zero()) sys.equations.push_back(std::move(eq));
    }
    return sys;
}

}  // namespace ybx
