#include "tdkit/json_io.hpp"

namespace tdkit {

namespace {

const Json& require(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing key \"") + key + "\"");
    return j.at(key);
}

std::size_t require_size(const Json& j, const char* key)
{
    const Json& v = require(j, key);
    if (!v.is_number_unsigned() || v.get<std::size_t>() == 0) {
        throw FormatError(std::string("\"") + key + "\" must be a positive integer");
    }
    return v.get<std::size_t>();
}

Json diagnostics_to_json(const std::vector<Diagnostic>& ds)
{
    Json out = Json::array();
    for (const auto& d : ds) out.push_back({{"code", d.code}, {"detail", d.detail}});
    return out;
}

} // namespace

Json to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const Json& j)
{
    try {
        if (j.is_string()) return Rat::parse(j.get<std::string>());
        if (j.is_number_integer()) return Rat(j.get<long long>());
    } catch (const std::exception& e) {
        throw FormatError(std::string("bad rational: ") + e.what());
    }
    throw FormatError("rational must be a \"p/q\" string or an integer");
}

Json to_json(const Mat& m)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

Mat mat_from_json(const Json& j)
{
    const std::size_t rows = require_size(j, "rows");
    const std::size_t cols = require_size(j, "cols");
    const Json& entries = require(j, "entries");
    if (!entries.is_array() || entries.size() != rows) throw FormatError("\"entries\" must hold one array per row");
    Mat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!entries[i].is_array() || entries[i].size() != cols) {
            throw FormatError("row " + std::to_string(i) + " has the wrong length");
        }
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = rat_from_json(entries[i][k]);
    }
    return m;
}

Json to_json(const ParamSeq& p)
{
    return {{"beta", to_json(p.beta)},
            {"gamma", to_json(p.gamma)},
            {"gamma_star", to_json(p.gamma_star)},
            {"rho", to_json(p.rho)},
            {"rho_star", to_json(p.rho_star)}};
}

ParamSeq params_from_json(const Json& j)
{
    return {rat_from_json(require(j, "beta")), rat_from_json(require(j, "gamma")),
            rat_from_json(require(j, "gamma_star")), rat_from_json(require(j, "rho")),
            rat_from_json(require(j, "rho_star"))};
}

Json to_json(const ParamSolution& s)
{
    Json out;
    switch (s.kind) {
    case ParamKind::unique: out["kind"] = "unique"; break;
    case ParamKind::family: out["kind"] = "family"; break;
    case ParamKind::none: out["kind"] = "none"; break;
    }
    if (s.kind != ParamKind::none) {
        out["particular"] = to_json(s.particular);
        Json basis = Json::array();
        for (const auto& v : s.null_basis) basis.push_back(to_json(ParamSeq::from_array(v)));
        out["null_basis"] = std::move(basis);
    } else {
        out["reason"] = s.reason;
    }
    return out;
}

Json to_json(const XPoly& f)
{
    Json coeffs = Json::array();
    for (const Rat& c : f.coeffs()) coeffs.push_back(to_json(c));
    return {{"coeffs", std::move(coeffs)}};
}

XPoly xpoly_from_json(const Json& j)
{
    const Json& coeffs = require(j, "coeffs");
    if (!coeffs.is_array()) throw FormatError("\"coeffs\" must be an array");
    std::vector<Rat> v;
    for (const Json& c : coeffs) v.push_back(rat_from_json(c));
    return XPoly(std::move(v));
}

Json to_json(const LaurentPoly& f)
{
    Json terms = Json::object();
    for (const auto& [e, c] : f.terms()) terms[std::to_string(e)] = to_json(c);
    return {{"terms", std::move(terms)}};
}

LaurentPoly laurent_from_json(const Json& j)
{
    const Json& terms = require(j, "terms");
    if (!terms.is_object()) throw FormatError("\"terms\" must be an object");
    LaurentPoly f;
    for (const auto& [key, value] : terms.items()) {
        long e = 0;
        try {
            std::size_t used = 0;
            e = std::stol(key, &used);
            if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
            throw FormatError("bad exponent \"" + key + "\"");
        }
        f.add_term(e, rat_from_json(value));
    }
    return f;
}

Json to_json(const EigSeq& s)
{
    Json out = Json::array();
    for (const Rat& v : s.values()) out.push_back(to_json(v));
    return out;
}

Json to_json(const ClosedForm& cf)
{
    Json out{{"case", case_name(cf.kind)}, {"beta", to_json(cf.beta)}};
    if (cf.q) out["q"] = to_json(*cf.q);
    if (cf.has_coefficients()) {
        out["a"] = to_json(*cf.a);
        out["b"] = to_json(*cf.b);
        out["c"] = to_json(*cf.c);
    }
    return out;
}

Json to_json(const FitResult& r)
{
    Json out{{"status", fit_status_name(r.status)}};
    if (r.form) out["closed_form"] = to_json(*r.form);
    if (!r.detail.empty()) out["detail"] = r.detail;
    return out;
}

Json to_json(const HalfParams& h)
{
    return {{"beta", to_json(h.beta)}, {"gamma", to_json(h.gamma)}, {"rho", to_json(h.rho)}};
}

Json to_json(const PairReport& r)
{
    Json out{{"is_td_pair", r.is_td_pair},
             {"is_leonard_pair", r.is_leonard_pair},
             {"diameter", r.diameter},
             {"eigenvalue_sequence", to_json(r.eig_seq)},
             {"dual_eigenvalue_sequence", to_json(r.dual_eig_seq)},
             {"shape", r.shape},
             {"params", to_json(r.params)},
             {"word_span_dim", r.word_span_dim},
             {"diagnostics", diagnostics_to_json(r.diagnostics)},
             {"notes", diagnostics_to_json(r.notes)}};
    if (r.invariant_subspace_dim) out["invariant_subspace_dim"] = *r.invariant_subspace_dim;
    return out;
}

Json to_json(const GeneratedPair& g)
{
    Json out{{"label", g.label}, {"A", to_json(g.a)}, {"Astar", to_json(g.a_star)}};
    if (g.witness) out["P"] = to_json(*g.witness);
    if (g.expected_params) out["expected_params"] = to_json(*g.expected_params);
    return out;
}

} // namespace tdkit
