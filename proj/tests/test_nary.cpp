#include <catch2/catch_amalgamated.hpp>

#include "superquant/nary_operator.hpp"
#include "superquant/sampling.hpp"

using namespace superquant;

TEST_CASE("apply crossing sign") {
    // A = Dbar (x) Dbar picks up a minus sign moving the second Dbar past an
    // odd first argument.
    std::vector<Rational> lam{Rational(1, 2), Rational(1, 3)};
    NaryOperator A(2, 2, lam, Rational(2), Parity::even);
    A.set_coefficient(MultiIndex({1, 1}), SuperFunction::one());

    WeightedDensity th{SuperFunction::theta(), lam[0]};
    WeightedDensity x{SuperFunction::x(), lam[1]};
    REQUIRE(superquant::apply(A, {th, x}).coefficient == SuperFunction::theta());
    REQUIRE(superquant::apply(A, {th, x}).weight == Rational(2));

    WeightedDensity x1{SuperFunction::x(), lam[0]};
    WeightedDensity th2{SuperFunction::theta(), lam[1]};
    REQUIRE(superquant::apply(A, {x1, th2}).coefficient == -SuperFunction::theta());
}

TEST_CASE("apply input validation") {
    std::vector<Rational> lam{Rational(1)};
    NaryOperator A(1, 2, lam, Rational(2), Parity::even);
    A.set_coefficient(MultiIndex({2}), SuperFunction::x());

    REQUIRE_THROWS_AS(superquant::apply(A, {}), ArityMismatch);
    REQUIRE_THROWS_AS(superquant::apply(A, {WeightedDensity{SuperFunction::x(), Rational(2)}}), WeightMismatch);
}

TEST_CASE("coefficient validation") {
    std::vector<Rational> lam{Rational(1, 2), Rational(1, 3)};
    NaryOperator A(2, 2, lam, Rational(0), Parity::odd);

    REQUIRE_THROWS_AS(A.set_coefficient(MultiIndex({1}), SuperFunction::one()), ArityMismatch);
    REQUIRE_THROWS_AS(A.set_coefficient(MultiIndex({2, 1}), SuperFunction::theta()), std::invalid_argument);
    REQUIRE_THROWS_AS(A.set_coefficient(MultiIndex({-1, 0}), SuperFunction::theta()), std::invalid_argument);
    // |A| = odd and |i| = 2, so the coefficient must be odd.
    REQUIRE_THROWS_AS(A.set_coefficient(MultiIndex({1, 1}), SuperFunction::x()), ParityError);
    REQUIRE_NOTHROW(A.set_coefficient(MultiIndex({1, 1}), SuperFunction::theta()));
    REQUIRE_NOTHROW(A.set_coefficient(MultiIndex({1, 0}), SuperFunction::x()));

    // Setting a coefficient to zero erases it.
    A.set_coefficient(MultiIndex({1, 1}), SuperFunction());
    REQUIRE(A.coefficients().size() == 1);
    REQUIRE(A.coefficient(MultiIndex({1, 1})).is_zero());
}

TEST_CASE("slot composition") {
    // compose_slot(i, f, lambda) expands Dbar^i o L^lambda_{X_f}; check it
    // against direct composition on probe functions.
    Rng rng(314159);
    std::vector<SuperFunction> hams = {SuperFunction::x(2), SuperFunction::theta(),
                                       SuperFunction::theta_times(Polynomial::monomial(1)),
                                       SuperFunction::x(3)};
    std::vector<SuperFunction> probes = {
        SuperFunction::x(2),
        SuperFunction::theta_times(Polynomial{Rational(1), Rational(2)}),
        random_superfunction(rng, 3, Parity::even),
        random_superfunction(rng, 3, Parity::odd),
    };
    Rational lambda(1, 3);
    for (const auto& h : hams) {
        ContactField f(h);
        for (int i = 0; i <= 3; ++i) {
            auto terms = compose_slot(i, f, lambda);
            for (const auto& G : probes) {
                SuperFunction direct =
                    lie_density(f, WeightedDensity{G, lambda}).coefficient.dbar_power(i);
                SuperFunction expanded;
                for (const auto& [j, b] : terms) expanded += b * G.dbar_power(j);
                REQUIRE(expanded == direct);
            }
        }
    }
}

TEST_CASE("module action against its definition") {
    // apply(L(A), phis) = L^mu(apply(A, phis)) - (-1)^{|A||f|} apply(A, L(phis)),
    // with both implementations of L(A).
    Rng rng(271828);
    std::vector<SuperFunction> hams;
    for (const auto& nh : test_hamiltonians()) hams.push_back(nh.value);

    for (int n = 1; n <= 2; ++n) {
        for (int order2 = 0; order2 <= 3; ++order2) {
            std::vector<Rational> lam;
            for (int t = 0; t < n; ++t) lam.push_back(random_rational(rng));
            Rational mu = random_rational(rng);
            for (int rep = 0; rep < 3; ++rep) {
                NaryOperator A = random_operator(rng, n, order2, lam, mu, 2);
                if (A.is_zero()) continue;
                int pA = parity_int(A.parity());
                std::vector<WeightedDensity> phis;
                for (int t = 0; t < n; ++t)
                    phis.push_back(random_density(rng, lam[static_cast<std::size_t>(t)], 2));

                for (const auto& h : hams) {
                    ContactField f(h);
                    int sgn = parity_sign(static_cast<long long>(pA) * parity_int(f.parity()));
                    SuperFunction rhs = lie_density(f, superquant::apply(A, phis)).coefficient;
                    for (const auto& tup : lie_tensor(f, lam, phis))
                        rhs -= Rational(sgn) * superquant::apply(A, tup.factors).coefficient;

                    NaryOperator LA = lie_operator_closed(f, A);
                    REQUIRE(superquant::apply(LA, phis).coefficient == rhs);
                    REQUIRE(lie_operator_oracle(f, A) == LA);
                }
            }
        }
    }
}

TEST_CASE("top order cancellation") {
    // The composition route transiently exceeds the order filtration; the
    // overshoot must cancel identically, for non-osp Hamiltonians too.
    Rng rng(999331);
    std::vector<Rational> lam{Rational(-1, 2), Rational(2)};
    NaryOperator A = random_operator(rng, 2, 3, lam, Rational(1, 3), 3);
    for (const auto& nh : test_hamiltonians()) {
        REQUIRE_NOTHROW(lie_operator_oracle(ContactField(nh.value), A));
    }
}
