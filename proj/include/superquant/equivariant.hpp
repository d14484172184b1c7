#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "superquant/multi_index.hpp"
#include "superquant/nary_operator.hpp"
#include "superquant/supermath.hpp"
#include "superquant/symbol_space.hpp"

namespace superquant {

enum class TableKind { gamma, beta, chi, varpi };

inline std::string to_string(TableKind k) {
    switch (k) {
        case TableKind::gamma: return "gamma";
        case TableKind::beta: return "beta";
        case TableKind::chi: return "chi";
        case TableKind::varpi: return "varpi";
    }
    return "?";
}

/// Sparse rational table indexed by a pair (upper, lower) of multi-indices.
/// For gamma and varpi the lower index labels the output component and the
/// upper index the source coefficient; beta is the inverse convention; chi
/// is the gamma family with the lower index re-expressed as a shift.
struct CoefficientTable {
    TableKind kind;
    int arity;
    int order2;
    std::vector<Rational> lambdas;
    Rational delta;
    std::map<std::pair<MultiIndex, MultiIndex>, Rational> entries;

    Rational mu() const {
        Rational m = delta;
        for (const auto& l : lambdas) m += l;
        return m;
    }

    Rational value(const MultiIndex& upper, const MultiIndex& lower) const {
        auto it = entries.find({upper, lower});
        return it == entries.end() ? Rational(0) : it->second;
    }

    void set(const MultiIndex& upper, const MultiIndex& lower, Rational v) {
        if (v.is_zero())
            entries.erase({upper, lower});
        else
            entries[{upper, lower}] = std::move(v);
    }

    friend bool operator==(const CoefficientTable&, const CoefficientTable&) = default;
};

/// The obstruction locus: the symbol map degenerates exactly when twice the
/// weight gap is an integer between 1 and the doubled order.
inline bool is_resonant(const Rational& delta, int order2) {
    Rational two_delta = Rational(2) * delta;
    if (!two_delta.is_integer()) return false;
    long long v = two_delta.numerator();
    return 1 <= v && v <= order2;
}

namespace detail {

inline void check_table_indices(const MultiIndex& s, const MultiIndex& i, std::size_t slots) {
    if (s.size() != static_cast<int>(slots) || i.size() != static_cast<int>(slots))
        throw ArityMismatch("table index arity mismatch");
}

} // namespace detail

/// Closed form of the normalized symbol-map coefficient.  Zero off the
/// support i <= s; throws ResonantDelta when the overall denominator
/// degenerates, which happens exactly on the resonance locus.
inline Rational gamma(const MultiIndex& s, const MultiIndex& i, const std::vector<Rational>& lambdas,
                      const Rational& delta) {
    detail::check_table_indices(s, i, lambdas.size());
    const int n = s.size();
    for (int t = 0; t < n; ++t)
        if (s[t] < i[t]) return Rational(0);
    const int ell = s.total();
    const int p = i.total();

    Rational den = gen_binomial(Rational(2) * delta - Rational(p + 1), floor_div(ell - p + 1, 2));
    if (den.is_zero()) throw ResonantDelta(ell, p);

    Rational out(parity_sign(floor_div(ell - p + 1, 2)));
    out *= xi(s[0], i[0], lambdas[0]);
    long long phi = s[0] - i[0];
    long long s_prefix = s[0];
    for (int t = 1; t < n; ++t) {
        long long d = s[t] - i[t];
        phi += d;
        Rational num = super_binomial(phi, d) * xi(s[t], i[t], lambdas[static_cast<std::size_t>(t)]);
        if (num.is_zero()) return Rational(0);
        num *= Rational(parity_sign(s_prefix * d));
        num /= binomial(floor_div(phi, 2), floor_div(d, 2));
        num /= binomial(floor_div(phi + 1, 2), floor_div(d + 1, 2));
        out *= num;
        s_prefix += s[t];
    }
    if (out.is_zero()) return out;
    return out / den;
}

/// The same family written in shifted coordinates: the lower argument is the
/// drop s applied to the coefficient index i, so chi(i, s) agrees with
/// gamma(i, i - s).  Zero unless s <= i componentwise.
inline Rational chi_coefficient(const MultiIndex& i, const MultiIndex& s,
                                const std::vector<Rational>& lambdas, const Rational& delta) {
    detail::check_table_indices(i, s, lambdas.size());
    const int n = i.size();
    for (int t = 0; t < n; ++t)
        if (i[t] < s[t]) return Rational(0);
    const int ell = s.total();
    const int p = i.total();

    Rational den = gen_binomial(Rational(2) * delta + Rational(ell - p - 1), floor_div(ell + 1, 2));
    if (den.is_zero()) throw ResonantDelta(p, p - ell);

    Rational out(parity_sign(floor_div(ell + 1, 2)));
    out *= xi(i[0], i[0] - s[0], lambdas[0]);
    long long big_gamma = s[0];
    long long i_prefix = i[0];
    for (int t = 1; t < n; ++t) {
        big_gamma += s[t];
        Rational num =
            super_binomial(big_gamma, s[t]) * xi(i[t], i[t] - s[t], lambdas[static_cast<std::size_t>(t)]);
        if (num.is_zero()) return Rational(0);
        num *= Rational(parity_sign(i_prefix * s[t]));
        num /= binomial(floor_div(big_gamma, 2), floor_div(s[t], 2));
        num /= binomial(floor_div(big_gamma + 1, 2), floor_div(s[t] + 1, 2));
        out *= num;
        i_prefix += i[t];
    }
    if (out.is_zero()) return out;
    return out / den;
}

/// Closed-form candidate for the quantization coefficients, kept as a
/// cross-check only: it agrees with the exact inverse of gamma on low
/// corank but drifts from it once |s| - |i| reaches 3, so the shipped
/// quantization always uses the inverted table.
inline Rational beta_closed_form(const MultiIndex& s, const MultiIndex& i,
                                 const std::vector<Rational>& lambdas, const Rational& delta) {
    detail::check_table_indices(s, i, lambdas.size());
    const int n = s.size();
    for (int t = 0; t < n; ++t)
        if (s[t] < i[t]) return Rational(0);
    const int ell = s.total();
    const int p = i.total();
    if (ell == p) return Rational(1);

    Rational den = gen_binomial(Rational(2) * delta - Rational(ell), floor_div(ell - p + 1, 2));
    if (den.is_zero()) throw ResonantDelta(ell, p);

    Rational out(parity_sign(floor_div(ell - p - 1, 2)));
    out *= xi(s[0], i[0], lambdas[0]);
    long long phi = s[0] - i[0];
    long long s_prefix = s[0];
    for (int t = 1; t < n; ++t) {
        long long d = s[t] - i[t];
        phi += d;
        Rational num = super_binomial(phi, d) * xi(s[t], i[t], lambdas[static_cast<std::size_t>(t)]);
        if (num.is_zero()) return Rational(0);
        num *= Rational(parity_sign(s_prefix * d));
        num /= binomial(floor_div(phi, 2), floor_div(d, 2));
        num /= binomial(floor_div(phi + 1, 2), floor_div(d + 1, 2));
        out *= num;
        s_prefix += s[t];
    }
    if (out.is_zero()) return out;
    return out / den;
}

/// Full gamma table for the given shape.  With allow_partial the entries
/// killed by a resonant denominator are skipped instead of failing.
inline CoefficientTable build_gamma_table(int n, int order2, std::vector<Rational> lambdas,
                                          const Rational& delta, bool allow_partial = false) {
    CoefficientTable table{TableKind::gamma, n, order2, std::move(lambdas), delta, {}};
    for (const auto& i : multi_indices_up_to(n, order2)) {
        for (const auto& s : multi_indices_up_to(n, order2)) {
            if (s.total() < i.total()) continue;
            try {
                table.set(s, i, gamma(s, i, table.lambdas, delta));
            } catch (const ResonantDelta&) {
                if (!allow_partial) throw;
            }
        }
    }
    return table;
}

/// Chi table over its own support s <= i.
inline CoefficientTable build_chi_table(int n, int order2, std::vector<Rational> lambdas,
                                        const Rational& delta, bool allow_partial = false) {
    CoefficientTable table{TableKind::chi, n, order2, std::move(lambdas), delta, {}};
    for (const auto& i : multi_indices_up_to(n, order2)) {
        for (const auto& s : multi_indices_up_to(n, i.total())) {
            try {
                table.set(i, s, chi_coefficient(i, s, table.lambdas, delta));
            } catch (const ResonantDelta&) {
                if (!allow_partial) throw;
            }
        }
    }
    return table;
}

/// Identity normalization of the principal symbol, as a convenience for the
/// recursion solver.
inline std::map<MultiIndex, Rational> identity_principal(int n, int order2) {
    std::map<MultiIndex, Rational> out;
    for (const auto& i : multi_indices_of_total(n, order2)) out.emplace(i, Rational(1));
    return out;
}

/// Solves the defining recursion of the symbol-map coefficients level by
/// level.  Row i starts from its diagonal seed (the principal normalization
/// for top rows, 1 otherwise); each step divides by the pivot
/// (-1)^{l-p} Upsilon(delta - l/2, l - p), and a vanishing pivot aborts with
/// ResonantDelta since the table stops being determined there.
inline CoefficientTable solve_varpi(int n, int order2, std::vector<Rational> lambdas,
                                    const Rational& delta,
                                    const std::map<MultiIndex, Rational>& principal = {}) {
    if (static_cast<int>(lambdas.size()) != n) throw ArityMismatch("expected one lambda per slot");
    CoefficientTable table{TableKind::varpi, n, order2, std::move(lambdas), delta, {}};
    for (const auto& i : multi_indices_up_to(n, order2)) {
        const int p = i.total();
        Rational seed(1);
        if (p == order2) {
            auto it = principal.find(i);
            if (it != principal.end()) seed = it->second;
        }
        table.set(i, i, seed);
        for (int ell = p + 1; ell <= order2; ++ell) {
            Rational pivot = Rational(parity_sign(ell - p)) * upsilon(delta - Rational(ell, 2), ell - p);
            if (pivot.is_zero()) throw ResonantDelta(ell, p);
            for (const auto& s : multi_indices_of_total(n, ell)) {
                Rational rhs(0);
                for (int t = 0; t < n; ++t) {
                    if (s[t] == 0) continue;
                    Rational prev = table.value(s.with_added(t, -1), i);
                    if (prev.is_zero()) continue;
                    rhs += Rational(parity_sign(s.prefix_total(t))) *
                           upsilon(table.lambdas[static_cast<std::size_t>(t)], s[t]) * prev;
                }
                if (!rhs.is_zero()) table.set(s, i, rhs / pivot);
            }
        }
    }
    return table;
}

/// Exact inverse of a gamma-type table, usable as the quantization table.
/// The inversion is triangular in the index order, with unit diagonal.
inline CoefficientTable invert_gamma(const CoefficientTable& g) {
    CoefficientTable table{TableKind::beta, g.arity, g.order2, g.lambdas, g.delta, {}};
    auto all = multi_indices_up_to(g.arity, g.order2);
    for (const auto& i : all) {
        for (const auto& u : all) {
            if (u.total() < i.total()) continue;
            Rational guu = g.value(u, u);
            if (guu.is_zero()) throw std::logic_error("gamma table has a vanishing diagonal entry");
            if (u == i) {
                table.set(i, i, Rational(1) / guu);
                continue;
            }
            Rational acc(0);
            for (const auto& s : all) {
                if (s.total() < i.total() || s.total() >= u.total()) continue;
                Rational b = table.value(s, i);
                if (b.is_zero()) continue;
                Rational gus = g.value(u, s);
                if (gus.is_zero()) continue;
                acc += b * gus;
            }
            if (!acc.is_zero()) table.set(u, i, -acc / guu);
        }
    }
    return table;
}

namespace detail {

/// Shared contraction out_i = sum_s table(s, i) D^{|s|-|i|}(in_s).
inline std::map<MultiIndex, SuperFunction> apply_table(
    const CoefficientTable& table, const std::map<MultiIndex, SuperFunction>& input) {
    std::map<MultiIndex, SuperFunction> out;
    for (const auto& [key, c] : table.entries) {
        const auto& [s, i] = key;
        auto it = input.find(s);
        if (it == input.end()) continue;
        out[i] += c * it->second.d_power(s.total() - i.total());
    }
    return out;
}

} // namespace detail

/// Conformally equivariant symbol of an operator, through an explicit table.
inline Symbol symbol_map(const NaryOperator& A, const CoefficientTable& table) {
    if (table.arity != A.arity() || table.order2 < A.order2())
        throw ArityMismatch("table shape does not cover the operator");
    Symbol out(A.arity(), A.order2(), A.delta(), A.parity());
    for (auto& [idx, fn] : detail::apply_table(table, A.coefficients())) out.set_coefficient(idx, fn);
    return out;
}

inline Symbol symbol_map(const NaryOperator& A) {
    return symbol_map(A, build_gamma_table(A.arity(), A.order2(), A.lambdas(), A.delta()));
}

/// Quantization: rebuilds the operator of the given source weights from a
/// symbol, through an explicit beta-type table.
inline NaryOperator quantize(const Symbol& sigma, const std::vector<Rational>& lambdas,
                             const Rational& mu, const CoefficientTable& table) {
    if (table.arity != sigma.arity() || table.order2 < sigma.order2())
        throw ArityMismatch("table shape does not cover the symbol");
    Rational gap = mu;
    for (const auto& l : lambdas) gap -= l;
    if (!(gap == sigma.delta())) throw WeightMismatch("weights do not reproduce the symbol's delta");
    NaryOperator out(sigma.arity(), sigma.order2(), lambdas, mu, sigma.parity());
    for (auto& [idx, fn] : detail::apply_table(table, sigma.coefficients())) out.set_coefficient(idx, fn);
    return out;
}

inline NaryOperator quantize(const Symbol& sigma, const std::vector<Rational>& lambdas,
                             const Rational& mu) {
    return quantize(sigma, lambdas, mu,
                    invert_gamma(build_gamma_table(sigma.arity(), sigma.order2(), lambdas, sigma.delta())));
}

} // namespace superquant
