#pragma once

#include "transvect/conformal.hpp"
#include "transvect/invariance.hpp"
#include "transvect/op.hpp"

#include <json.hpp>

#include <string>

namespace transvect {

using nlohmann::json;

/// { "arity":, "weights": ["-2/3",...], "order":, "coeffs": [{"idx":[...],
///   "val":"p/q"}, ...] } with indices in lexicographic order (map order).
template <ScalarField S>
json op_to_json(const DensityOp<S>& op) {
    json j;
    j["arity"] = op.arity();
    json ws = json::array();
    for (const S& w : op.source_weights())
        ws.push_back(w.str());
    j["weights"] = std::move(ws);
    j["order"] = op.order();
    json coeffs = json::array();
    for (const auto& [idx, val] : op.coeffs()) {
        json entry;
        entry["idx"] = idx;
        entry["val"] = val.str();
        coeffs.push_back(std::move(entry));
    }
    j["coeffs"] = std::move(coeffs);
    return j;
}

template <ScalarField S>
DensityOp<S> op_from_json(const json& j) {
    std::vector<S> weights;
    for (const auto& w : j.at("weights"))
        weights.push_back(parse_scalar<S>(w.template get<std::string>()));
    std::map<MultiIndex, S> coeffs;
    for (const auto& entry : j.at("coeffs")) {
        MultiIndex idx = entry.at("idx").template get<MultiIndex>();
        S val = parse_scalar<S>(entry.at("val").template get<std::string>());
        auto [it, fresh] = coeffs.emplace(std::move(idx), val);
        if (!fresh)
            it->second = it->second + val;
    }
    return DensityOp<S>(std::move(weights), j.at("order").template get<int>(), std::move(coeffs));
}

template <ScalarField S>
json kernel_to_json(const KernelBasis<S>& K) {
    json j;
    j["order"] = K.order;
    json ws = json::array();
    for (const S& w : K.weights)
        ws.push_back(w.str());
    j["weights"] = std::move(ws);
    j["dimension"] = K.dimension();
    json basis = json::array();
    for (int i = 0; i < K.dimension(); ++i)
        basis.push_back(op_to_json(K.op(i)));
    j["basis"] = std::move(basis);
    json pivots = json::array();
    for (const auto& p : K.pivots)
        pivots.push_back(p);
    j["pivots"] = std::move(pivots);
    return j;
}

/// { "n":, "k":, "weights": [...], "terms": [{"exp":[a..f], "val":"p/q"}] }
inline json symbol_to_json(const ConformalSymbol& s) {
    json j;
    j["n"] = s.n;
    j["k"] = s.degree;
    json ws = json::array();
    for (const Rational& w : s.weights)
        ws.push_back(w.str());
    j["weights"] = std::move(ws);
    json terms = json::array();
    for (const auto& [e, val] : s.terms) {
        json entry;
        entry["exp"] = e;
        entry["val"] = val.str();
        terms.push_back(std::move(entry));
    }
    j["terms"] = std::move(terms);
    return j;
}

inline ConformalSymbol symbol_from_json(const json& j) {
    std::array<Rational, 3> weights;
    const auto& ws = j.at("weights");
    for (int i = 0; i < 3; ++i)
        weights[i] = Rational::parse(ws.at(i).get<std::string>());
    std::map<Exp6, Rational> terms;
    for (const auto& entry : j.at("terms")) {
        Exp6 e{};
        const auto& exp = entry.at("exp");
        for (int i = 0; i < 6; ++i)
            e[i] = exp.at(i).get<int>();
        terms.emplace(e, Rational::parse(entry.at("val").get<std::string>()));
    }
    int k = 0;
    if (!terms.empty())
        k = exp6_sum(terms.begin()->first);
    if (j.contains("k"))
        k = j.at("k").get<int>();
    return ConformalSymbol(j.at("n").get<int>(), k, weights, std::move(terms));
}

/// One sweep row: order, weights, kernel dimension, matched catalog names.
struct SweepRow {
    int order = 0;
    Rational lambda, gamma, tau;
    int dimension = 0;
    std::vector<std::string> matched;
};

inline std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos)
        return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline std::string sweep_csv_header() {
    return "order,lambda,gamma,tau,dimension,matched_catalog_names";
}

inline std::string sweep_csv_row(const SweepRow& row) {
    std::string names;
    for (size_t i = 0; i < row.matched.size(); ++i) {
        if (i)
            names += ';';
        names += row.matched[i];
    }
    return std::to_string(row.order) + "," + row.lambda.str() + "," + row.gamma.str() + "," +
           row.tau.str() + "," + std::to_string(row.dimension) + "," + csv_escape(names);
}

} // namespace transvect
