#include <catch2/catch_amalgamated.hpp>

#include "superquant/equivariant.hpp"
#include "superquant/sampling.hpp"
#include "superquant/verification.hpp"

using namespace superquant;

namespace {

Rational g1(int s, int i, const Rational& lambda, const Rational& delta) {
    return gamma(MultiIndex({s}), MultiIndex({i}), {lambda}, delta);
}

} // namespace

TEST_CASE("gamma unary spot values") {
    Rational lam(1, 3), delta(1, 5);
    Rational two_l = Rational(2) * lam;
    Rational two_d = Rational(2) * delta;

    REQUIRE(g1(0, 0, lam, delta) == Rational(1));
    REQUIRE(g1(3, 3, lam, delta) == Rational(1));
    REQUIRE(g1(1, 0, lam, delta) == -two_l / (two_d - 1));
    REQUIRE(g1(2, 0, lam, delta) == -two_l / (two_d - 1));
    REQUIRE(g1(2, 1, lam, delta) == Rational(-1) / (two_d - 2));
    REQUIRE(g1(3, 0, lam, delta) == two_l * (two_l + 1) / ((two_d - 1) * (two_d - 2)));
    REQUIRE(g1(3, 1, lam, delta) == -(two_l + 1) / (two_d - 2));
    REQUIRE(g1(3, 2, lam, delta) == -(two_l + 1) / (two_d - 3));
    REQUIRE(g1(1, 2, lam, delta).is_zero());
}

TEST_CASE("gamma binary spot values") {
    Rational l1(1, 3), l2(-1, 2), delta(1, 5);
    std::vector<Rational> lam{l1, l2};
    Rational two_d = Rational(2) * delta;

    auto g = [&](std::vector<int> s, std::vector<int> i) {
        return gamma(MultiIndex(std::move(s)), MultiIndex(std::move(i)), lam, delta);
    };

    REQUIRE(g({1, 0}, {0, 0}) == Rational(-2) * l1 / (two_d - 1));
    REQUIRE(g({0, 1}, {0, 0}) == Rational(-2) * l2 / (two_d - 1));
    REQUIRE(g({1, 1}, {0, 0}).is_zero());
    REQUIRE(g({1, 1}, {1, 0}) == Rational(2) * l2 / (two_d - 2));
    REQUIRE(g({1, 1}, {0, 1}) == Rational(-2) * l1 / (two_d - 2));
    REQUIRE(g({2, 1}, {1, 0}).is_zero());
    REQUIRE(g({3, 0}, {1, 0}) == -(Rational(2) * l1 + 1) / (two_d - 2));
    REQUIRE(g({2, 2}, {0, 0}) == Rational(4) * l1 * l2 / ((two_d - 1) * (two_d - 2)));
}

TEST_CASE("appending a zero slot changes nothing") {
    Rational l1(2, 3), delta(-1, 4);
    for (const auto& l2 : {Rational(0), Rational(5, 7), Rational(-3)}) {
        std::vector<Rational> lam2{l1, l2};
        for (int s = 0; s <= 4; ++s)
            for (int i = 0; i <= s; ++i)
                REQUIRE(gamma(MultiIndex({s, 0}), MultiIndex({i, 0}), lam2, delta) ==
                        g1(s, i, l1, delta));
    }
}

TEST_CASE("recursion agrees with the closed form") {
    std::vector<std::vector<Rational>> weight_sets = {
        {Rational(1, 3)},
        {Rational(1, 3), Rational(-1, 2)},
        {Rational(1), Rational(1, 2), Rational(-2, 3)},
    };
    for (const auto& lam : weight_sets) {
        int n = static_cast<int>(lam.size());
        int order2 = n == 3 ? 3 : 4;
        for (const auto& delta : {Rational(1, 5), Rational(-2), Rational(7, 3)}) {
            CoefficientTable closed = build_gamma_table(n, order2, lam, delta);
            CoefficientTable solved = solve_varpi(n, order2, lam, delta);
            REQUIRE(closed.entries == solved.entries);
        }
    }

    // Ternary entries worth pinning down by hand: one forced zero and one
    // whose sign depends on how the crossing factors accumulate.
    std::vector<Rational> lam{Rational(1, 3), Rational(-1, 2), Rational(4, 5)};
    Rational delta(1, 5);
    CoefficientTable t = solve_varpi(3, 2, lam, delta);
    REQUIRE(t.value(MultiIndex({1, 0, 1}), MultiIndex({0, 0, 0})).is_zero());
    REQUIRE(t.value(MultiIndex({1, 1, 0}), MultiIndex({1, 0, 0})) ==
            Rational(2) * lam[1] / (Rational(2) * delta - 2));
}

TEST_CASE("recursion residual also holds unhalved") {
    // The solved table satisfies the level recursion with every Upsilon
    // doubled as well, since the scale divides out of both sides.
    std::vector<Rational> lam{Rational(1, 3), Rational(-1, 2)};
    Rational delta(1, 5);
    int order2 = 3;
    CoefficientTable t = solve_varpi(2, order2, lam, delta);
    for (const auto& i : multi_indices_up_to(2, order2)) {
        for (const auto& s : multi_indices_up_to(2, order2)) {
            int ell = s.total(), p = i.total();
            if (ell <= p) continue;
            Rational lhs = Rational(parity_sign(ell - p)) * Rational(2) *
                           upsilon(delta - Rational(ell, 2), ell - p) * t.value(s, i);
            Rational rhs(0);
            for (int u = 0; u < 2; ++u) {
                if (s[u] == 0) continue;
                rhs += Rational(parity_sign(s.prefix_total(u))) * Rational(2) *
                       upsilon(lam[static_cast<std::size_t>(u)], s[u]) * t.value(s.with_added(u, -1), i);
            }
            REQUIRE(lhs == rhs);
        }
    }
}

TEST_CASE("principal normalization scales the top rows") {
    std::vector<Rational> lam{Rational(1, 3)};
    Rational delta(1, 5);
    CoefficientTable plain = solve_varpi(1, 2, lam, delta);

    std::map<MultiIndex, Rational> principal;
    for (auto& [idx, v] : identity_principal(1, 2)) principal.emplace(idx, Rational(3) * v);
    CoefficientTable scaled = solve_varpi(1, 2, lam, delta, principal);

    // Only the top-level seeds move; every derived entry keeps its value.
    for (const auto& [key, v] : plain.entries) {
        bool top_diag = key.second.total() == 2 && key.first == key.second;
        Rational expect = top_diag ? Rational(3) * v : v;
        REQUIRE(scaled.value(key.first, key.second) == expect);
    }
    REQUIRE(scaled.value(MultiIndex({2}), MultiIndex({2})) == Rational(3));
    REQUIRE(scaled.value(MultiIndex({1}), MultiIndex({1})) == Rational(1));
}

TEST_CASE("chi is gamma in shifted coordinates") {
    std::vector<Rational> lam{Rational(1, 3), Rational(-1, 2)};
    Rational delta(1, 5);
    for (const auto& i : multi_indices_up_to(2, 4)) {
        for (const auto& s : multi_indices_up_to(2, i.total())) {
            bool supported = true;
            for (int t = 0; t < 2; ++t) supported = supported && i[t] >= s[t];
            Rational direct = chi_coefficient(i, s, lam, delta);
            if (!supported) {
                REQUIRE(direct.is_zero());
                continue;
            }
            std::vector<int> drop;
            for (int t = 0; t < 2; ++t) drop.push_back(i[t] - s[t]);
            REQUIRE(direct == gamma(i, MultiIndex(std::move(drop)), lam, delta));
        }
    }

    // The entry that separates the two candidate crossing-sign conventions.
    REQUIRE(chi_coefficient(MultiIndex({1, 1}), MultiIndex({0, 1}), lam, delta) ==
            Rational(2) * lam[1] / (Rational(2) * delta - 2));

    CoefficientTable built = build_chi_table(2, 3, lam, delta);
    for (const auto& [key, v] : built.entries) {
        std::vector<int> drop;
        for (int t = 0; t < 2; ++t) drop.push_back(key.first[t] - key.second[t]);
        REQUIRE(v == gamma(key.first, MultiIndex(std::move(drop)), lam, delta));
    }
}

TEST_CASE("resonance detection") {
    std::vector<Rational> lam{Rational(1, 3)};

    REQUIRE(!is_resonant(Rational(1, 5), 4));
    REQUIRE(is_resonant(Rational(1, 2), 4));
    REQUIRE(is_resonant(Rational(2), 4));
    REQUIRE(!is_resonant(Rational(5, 2), 4));
    REQUIRE(is_resonant(Rational(5, 2), 5));
    REQUIRE(!is_resonant(Rational(0), 4));
    REQUIRE(!is_resonant(Rational(-1), 4));

    // Both construction routes refuse resonant weights, reporting the same
    // first degenerate pivot.
    const int order2 = 4;
    for (int v = 1; v <= order2; ++v) {
        Rational delta(v, 2);
        int p_star = std::max(0, 2 * v - 1 - order2);
        int l_star = 2 * v - 1 - p_star;
        try {
            build_gamma_table(1, order2, lam, delta);
            FAIL("closed form accepted a resonant delta");
        } catch (const ResonantDelta& e) {
            REQUIRE(e.level() == l_star);
            REQUIRE(e.degree() == p_star);
        }
        try {
            solve_varpi(1, order2, lam, delta);
            FAIL("recursion accepted a resonant delta");
        } catch (const ResonantDelta& e) {
            REQUIRE(e.level() == l_star);
            REQUIRE(e.degree() == p_star);
        }
    }

    // Just past the locus everything works again.
    Rational delta(order2 + 1, 2);
    REQUIRE_NOTHROW(build_gamma_table(1, order2, lam, delta));
    REQUIRE_NOTHROW(solve_varpi(1, order2, lam, delta));

    CoefficientTable partial = build_gamma_table(1, order2, lam, Rational(1, 2), true);
    REQUIRE(!partial.entries.empty());
    for (const auto& [key, v] : partial.entries) REQUIRE(!v.is_zero());
}

TEST_CASE("beta spot values and the closed-form drift") {
    Rational lam(1, 3), delta(1, 5);
    Rational two_l = Rational(2) * lam;
    Rational two_d = Rational(2) * delta;
    std::vector<Rational> lv{lam};

    CoefficientTable beta = invert_gamma(build_gamma_table(1, 3, lv, delta));
    REQUIRE(beta.value(MultiIndex({1}), MultiIndex({0})) == two_l / (two_d - 1));
    REQUIRE(beta.value(MultiIndex({2}), MultiIndex({0})) == two_l / (two_d - 2));
    REQUIRE(beta.value(MultiIndex({2}), MultiIndex({1})) == Rational(1) / (two_d - 2));
    REQUIRE(beta.value(MultiIndex({3}), MultiIndex({0})) ==
            two_l * (two_l + 1) / ((two_d - 2) * (two_d - 3)));

    // The closed-form candidate matches up to corank 2 and departs at 3.
    for (int s = 0; s <= 3; ++s)
        for (int i = 0; i <= s; ++i) {
            Rational closed = beta_closed_form(MultiIndex({s}), MultiIndex({i}), lv, delta);
            if (s - i <= 2)
                REQUIRE(closed == beta.value(MultiIndex({s}), MultiIndex({i})));
        }
    REQUIRE(beta_closed_form(MultiIndex({3}), MultiIndex({0}), lv, delta) ==
            -two_l * (two_l + 1) / ((two_d - 3) * (two_d - 4)));
}

TEST_CASE("symbol map and quantization validation") {
    std::vector<Rational> lam{Rational(1, 3)};
    Rational mu = lam[0] + Rational(1, 5);

    NaryOperator A(1, 2, lam, mu, Parity::even);
    A.set_coefficient(MultiIndex({2}), SuperFunction::x());

    CoefficientTable wrong_arity = build_gamma_table(2, 2, {lam[0], Rational(0)}, Rational(1, 5));
    REQUIRE_THROWS_AS(symbol_map(A, wrong_arity), ArityMismatch);
    CoefficientTable too_small = build_gamma_table(1, 1, lam, Rational(1, 5));
    REQUIRE_THROWS_AS(symbol_map(A, too_small), ArityMismatch);

    Symbol sigma = symbol_map(A);
    REQUIRE_THROWS_AS(quantize(sigma, lam, mu + Rational(1)), WeightMismatch);
    REQUIRE(quantize(sigma, lam, mu) == A);
}

TEST_CASE("verification driver profiles") {
    VerifyOptions opt;
    opt.max_arity = 1;
    opt.max_order2 = 2;
    opt.ops_per_shape = 2;
    opt.weights_per_shape = 2;
    opt.leibniz_cases = 10;
    opt.resonance_max_order2 = 2;
    auto report = run_all_checks(opt);
    REQUIRE(report.size() == 8);
    for (const auto& r : report) {
        INFO(r.name << ": " << r.detail);
        REQUIRE(r.passed);
        REQUIRE(!r.skipped);
    }

    // delta = 1/2 is resonant for doubled order 2: the weight-dependent
    // suites downgrade to skips while the algebra check still runs.
    auto fixed = run_fixed_checks(1, 2, {Rational(1, 3)}, Rational(1, 3) + Rational(1, 2), 7, 2);
    REQUIRE(fixed.size() == 4);
    for (const auto& r : fixed) {
        INFO(r.name << ": " << r.detail);
        REQUIRE(r.passed);
        REQUIRE(r.skipped == (r.name != "osp-commutation"));
    }

    auto mutated = run_fixed_checks(1, 2, {Rational(1, 3)}, Rational(1, 3) + Rational(1, 5), 7, 2, true);
    bool any_failed = false;
    for (const auto& r : mutated) any_failed = any_failed || !r.passed;
    REQUIRE(any_failed);
}
