#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "superquant/equivariant.hpp"
#include "superquant/nary_operator.hpp"
#include "superquant/symbol_space.hpp"

namespace superquant {

using ordered_json = nlohmann::ordered_json;

inline ordered_json rational_to_json(const Rational& r) { return r.to_string(); }

inline Rational rational_from_json(const ordered_json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    return Rational::parse(j.get<std::string>());
}

inline ordered_json polynomial_to_json(const Polynomial& p) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : p.coefficients()) arr.push_back(rational_to_json(c));
    return arr;
}

inline Polynomial polynomial_from_json(const ordered_json& j) {
    std::vector<Rational> coeffs;
    for (const auto& c : j) coeffs.push_back(rational_from_json(c));
    return Polynomial(std::move(coeffs));
}

inline ordered_json multi_index_to_json(const MultiIndex& m) {
    ordered_json arr = ordered_json::array();
    for (int e : m.entries()) arr.push_back(e);
    return arr;
}

inline MultiIndex multi_index_from_json(const ordered_json& j) {
    std::vector<int> e;
    for (const auto& v : j) e.push_back(v.get<int>());
    return MultiIndex(std::move(e));
}

inline ordered_json lambdas_to_json(const std::vector<Rational>& ls) {
    ordered_json arr = ordered_json::array();
    for (const auto& l : ls) arr.push_back(rational_to_json(l));
    return arr;
}

inline std::vector<Rational> lambdas_from_json(const ordered_json& j) {
    std::vector<Rational> out;
    for (const auto& v : j) out.push_back(rational_from_json(v));
    return out;
}

inline ordered_json operator_to_json(const NaryOperator& A) {
    ordered_json j;
    j["n"] = A.arity();
    j["order2"] = A.order2();
    j["lambdas"] = lambdas_to_json(A.lambdas());
    j["mu"] = rational_to_json(A.mu());
    ordered_json coeffs = ordered_json::array();
    for (const auto& [idx, fn] : A.coefficients()) {
        ordered_json c;
        c["index"] = multi_index_to_json(idx);
        c["f0"] = polynomial_to_json(fn.even_part());
        c["f1"] = polynomial_to_json(fn.odd_part());
        coeffs.push_back(std::move(c));
    }
    j["coeffs"] = std::move(coeffs);
    return j;
}

namespace detail {

/// The serialized form carries no parity field; a nonzero homogeneous
/// coefficient pins it down, an empty operator defaults to even.
inline Parity infer_parity(const std::vector<std::pair<MultiIndex, SuperFunction>>& coeffs) {
    for (const auto& [idx, fn] : coeffs)
        if (!fn.is_zero()) return parity_add(fn.parity(), parity_of(idx.total()));
    return Parity::even;
}

inline std::vector<std::pair<MultiIndex, SuperFunction>> coeffs_from_json(const ordered_json& j) {
    std::vector<std::pair<MultiIndex, SuperFunction>> out;
    for (const auto& c : j) {
        MultiIndex idx = multi_index_from_json(c.at("index"));
        SuperFunction fn(polynomial_from_json(c.at("f0")), polynomial_from_json(c.at("f1")));
        out.emplace_back(std::move(idx), std::move(fn));
    }
    return out;
}

} // namespace detail

inline NaryOperator operator_from_json(const ordered_json& j) {
    auto coeffs = detail::coeffs_from_json(j.at("coeffs"));
    NaryOperator A(j.at("n").get<int>(), j.at("order2").get<int>(),
                   lambdas_from_json(j.at("lambdas")), rational_from_json(j.at("mu")),
                   detail::infer_parity(coeffs));
    for (auto& [idx, fn] : coeffs) A.set_coefficient(idx, std::move(fn));
    return A;
}

inline ordered_json symbol_to_json(const Symbol& s) {
    ordered_json j;
    j["n"] = s.arity();
    j["order2"] = s.order2();
    j["delta"] = rational_to_json(s.delta());
    ordered_json coeffs = ordered_json::array();
    for (const auto& [idx, fn] : s.coefficients()) {
        ordered_json c;
        c["index"] = multi_index_to_json(idx);
        c["f0"] = polynomial_to_json(fn.even_part());
        c["f1"] = polynomial_to_json(fn.odd_part());
        coeffs.push_back(std::move(c));
    }
    j["coeffs"] = std::move(coeffs);
    return j;
}

inline Symbol symbol_from_json(const ordered_json& j) {
    auto coeffs = detail::coeffs_from_json(j.at("coeffs"));
    Symbol s(j.at("n").get<int>(), j.at("order2").get<int>(), rational_from_json(j.at("delta")),
             detail::infer_parity(coeffs));
    for (auto& [idx, fn] : coeffs) s.set_coefficient(idx, std::move(fn));
    return s;
}

inline ordered_json table_to_json(const CoefficientTable& t) {
    ordered_json j;
    j["kind"] = to_string(t.kind);
    j["n"] = t.arity;
    j["order2"] = t.order2;
    j["lambdas"] = lambdas_to_json(t.lambdas);
    j["mu"] = rational_to_json(t.mu());
    j["delta"] = rational_to_json(t.delta);
    ordered_json entries = ordered_json::array();
    for (const auto& [key, value] : t.entries) {
        ordered_json e;
        e["s"] = multi_index_to_json(key.first);
        e["i"] = multi_index_to_json(key.second);
        e["value"] = rational_to_json(value);
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    return j;
}

inline CoefficientTable table_from_json(const ordered_json& j) {
    TableKind kind;
    std::string k = j.at("kind").get<std::string>();
    if (k == "gamma")
        kind = TableKind::gamma;
    else if (k == "beta")
        kind = TableKind::beta;
    else if (k == "chi")
        kind = TableKind::chi;
    else if (k == "varpi")
        kind = TableKind::varpi;
    else
        throw std::invalid_argument("unknown table kind: " + k);
    CoefficientTable t{kind, j.at("n").get<int>(), j.at("order2").get<int>(),
                       lambdas_from_json(j.at("lambdas")), rational_from_json(j.at("delta")), {}};
    for (const auto& e : j.at("entries"))
        t.set(multi_index_from_json(e.at("s")), multi_index_from_json(e.at("i")),
              rational_from_json(e.at("value")));
    return t;
}

} // namespace superquant
