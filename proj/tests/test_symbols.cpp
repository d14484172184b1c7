#include <catch2/catch_amalgamated.hpp>

#include "superquant/sampling.hpp"
#include "superquant/symbol_space.hpp"

using namespace superquant;

TEST_CASE("component weights and counts") {
    Symbol s(2, 3, Rational(1, 5), Parity::even);
    REQUIRE(s.component_weight(MultiIndex({0, 0})) == Rational(1, 5));
    REQUIRE(s.component_weight(MultiIndex({2, 1})) == Rational(1, 5) - Rational(3, 2));

    REQUIRE(component_count(2, 3) == 4);
    REQUIRE(component_count(3, 2) == 6);
    REQUIRE(component_count(1, 7) == 1);
    REQUIRE(component_count(1, 0) == 1);
}

TEST_CASE("symbol component validation") {
    Symbol s(2, 2, Rational(0), Parity::odd);
    REQUIRE_THROWS_AS(s.set_coefficient(MultiIndex({1}), SuperFunction::theta()), ArityMismatch);
    REQUIRE_THROWS_AS(s.set_coefficient(MultiIndex({2, 1}), SuperFunction::theta()), std::invalid_argument);
    REQUIRE_THROWS_AS(s.set_coefficient(MultiIndex({1, 1}), SuperFunction::x()), ParityError);
    s.set_coefficient(MultiIndex({1, 0}), SuperFunction::x());
    s.set_coefficient(MultiIndex({1, 0}), SuperFunction());
    REQUIRE(s.is_zero());
}

TEST_CASE("symbol action is diagonal") {
    Rng rng(42424242);
    Symbol s(2, 2, Rational(2, 3), Parity::even);
    s.set_coefficient(MultiIndex({0, 0}), random_superfunction(rng, 3, Parity::even));
    s.set_coefficient(MultiIndex({1, 0}), random_superfunction(rng, 3, Parity::odd));
    s.set_coefficient(MultiIndex({1, 1}), random_superfunction(rng, 3, Parity::even));

    for (const auto& f : osp_generators()) {
        Symbol moved = lie_symbol(f, s);
        REQUIRE(moved.delta() == s.delta());
        for (const auto& [idx, fn] : s.coefficients()) {
            WeightedDensity expect = lie_density(f, {fn, s.component_weight(idx)});
            REQUIRE(moved.coefficient(idx) == expect.coefficient);
        }
        // Nothing appears at indices the input did not populate.
        REQUIRE(moved.coefficient(MultiIndex({0, 1})).is_zero());
        REQUIRE(moved.coefficient(MultiIndex({2, 0})).is_zero());
    }
}

TEST_CASE("principal symbol keeps the top layer") {
    std::vector<Rational> lam{Rational(1, 2)};
    NaryOperator A(1, 2, lam, Rational(1), Parity::even);
    A.set_coefficient(MultiIndex({0}), SuperFunction::x());
    A.set_coefficient(MultiIndex({1}), SuperFunction::theta());
    A.set_coefficient(MultiIndex({2}), SuperFunction::one());

    Symbol top = principal_symbol(A);
    REQUIRE(top.delta() == Rational(1, 2));
    REQUIRE(top.coefficients().size() == 1);
    REQUIRE(top.coefficient(MultiIndex({2})) == SuperFunction::one());
}

TEST_CASE("symbol difference") {
    Symbol a(1, 1, Rational(0), Parity::even);
    a.set_coefficient(MultiIndex({0}), SuperFunction::x());
    Symbol b = a;
    b -= a;
    REQUIRE(b.is_zero());
    REQUIRE(!(a == b));
}
