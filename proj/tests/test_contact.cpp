#include <catch2/catch_amalgamated.hpp>

#include "superquant/contact.hpp"

using namespace superquant;

namespace {

SuperFunction xtheta() { return SuperFunction::theta_times(Polynomial::monomial(1)); }

} // namespace

TEST_CASE("contact field action") {
    ContactField Xx(SuperFunction::x());
    // X_x = x d/dx + (1/2) theta d/dtheta.
    REQUIRE(Xx.apply(SuperFunction::x(3)) == Rational(3) * SuperFunction::x(3));
    REQUIRE(Xx.apply(SuperFunction::theta()) == Rational(1, 2) * SuperFunction::theta());
    REQUIRE(Xx.apply(SuperFunction::one()).is_zero());

    ContactField Xth(SuperFunction::theta());
    REQUIRE(Xth.apply(SuperFunction::x()) == Rational(1, 2) * SuperFunction::theta());
    REQUIRE(Xth.apply(SuperFunction::theta()) == Rational(1, 2) * SuperFunction::one());
}

TEST_CASE("contact field parity") {
    REQUIRE(ContactField(SuperFunction::x()).parity() == Parity::even);
    REQUIRE(ContactField(SuperFunction::theta()).parity() == Parity::odd);
    REQUIRE(ContactField(SuperFunction(), Parity::odd).parity() == Parity::odd);
    REQUIRE_THROWS_AS(ContactField(SuperFunction::theta(), Parity::even), ParityError);
}

TEST_CASE("contact bracket relations") {
    SuperFunction one = SuperFunction::one();
    SuperFunction x = SuperFunction::x();
    SuperFunction x2 = SuperFunction::x(2);
    SuperFunction th = SuperFunction::theta();
    SuperFunction xth = xtheta();

    REQUIRE(contact_bracket(one, x) == one);
    REQUIRE(contact_bracket(one, x2) == Rational(2) * x);
    REQUIRE(contact_bracket(one, th).is_zero());
    REQUIRE(contact_bracket(one, xth) == th);
    REQUIRE(contact_bracket(x, x2) == x2);
    REQUIRE(contact_bracket(x, th) == Rational(-1, 2) * th);
    REQUIRE(contact_bracket(x, xth) == Rational(1, 2) * xth);
    REQUIRE(contact_bracket(x2, th) == -xth);
    REQUIRE(contact_bracket(x2, xth).is_zero());
    REQUIRE(contact_bracket(th, th) == Rational(1, 2) * one);
    REQUIRE(contact_bracket(th, xth) == Rational(1, 2) * x);
    REQUIRE(contact_bracket(xth, xth) == Rational(1, 2) * x2);
}

TEST_CASE("bracket matches commutator of fields") {
    // [X_f, X_g] = X_{f,g} tested on a probe, including an odd/odd pair where
    // the commutator is the anticommutator.
    SuperFunction probe(Polynomial{Rational(1), Rational(2)}, Polynomial{Rational(0), Rational(1), Rational(3)});
    auto gens = osp_generators();
    for (const auto& Xf : gens) {
        for (const auto& Xg : gens) {
            int sgn = parity_sign(static_cast<long long>(parity_int(Xf.parity())) * parity_int(Xg.parity()));
            SuperFunction lhs = Xf.apply(Xg.apply(probe)) - Rational(sgn) * Xg.apply(Xf.apply(probe));
            ContactField Xfg(contact_bracket(Xf.hamiltonian(), Xg.hamiltonian()),
                             parity_add(Xf.parity(), Xg.parity()));
            REQUIRE(lhs == Xfg.apply(probe));
        }
    }
}

TEST_CASE("contact distribution membership") {
    // X_x has components (x, theta/2); dropping the theta/2 breaks contact.
    REQUIRE(is_contact(SuperFunction::x(), Rational(1, 2) * SuperFunction::theta()));
    REQUIRE(!is_contact(SuperFunction::x(), SuperFunction()));

    // 2 X_theta = theta d/dx + d/dtheta; halving only the d/dtheta part breaks it.
    REQUIRE(is_contact(SuperFunction::theta(), SuperFunction::one()));
    REQUIRE(!is_contact(SuperFunction::theta(), Rational(1, 2) * SuperFunction::one()));

    REQUIRE(is_contact(SuperFunction::x(2), xtheta()));
}

TEST_CASE("density action and weights") {
    WeightedDensity G{SuperFunction::x(), Rational(1, 3)};
    ContactField Xx(SuperFunction::x());
    WeightedDensity out = lie_density(Xx, G);
    REQUIRE(out.weight == Rational(1, 3));
    // x * 1 + (1/3) * 1 * x = (4/3) x.
    REQUIRE(out.coefficient == Rational(4, 3) * SuperFunction::x());

    WeightedDensity H{SuperFunction::theta(), Rational(1, 2)};
    REQUIRE_THROWS_AS(G + H, WeightMismatch);
    REQUIRE((G + WeightedDensity{SuperFunction::theta(), Rational(1, 3)}).coefficient ==
            SuperFunction::x() + SuperFunction::theta());
}
