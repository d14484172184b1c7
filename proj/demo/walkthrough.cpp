// A small tour: build a binary operator, act on a pair of densities, move to
// the symbol side and come back.  Everything is exact, so the final
// comparison is plain equality.

#include <iostream>

#include "superquant/superquant.hpp"

using namespace superquant;

int main() {
    std::vector<Rational> lambdas{Rational(1, 3), Rational(-1, 2)};
    Rational mu(1);
    Rational delta = mu - lambdas[0] - lambdas[1]; // 7/6

    // A = theta (1 + x) Dbar (x) Dbar  +  (1 + x) Dbar (x) 1, an odd operator
    // of doubled order 2.
    NaryOperator A(2, 2, lambdas, mu, Parity::odd);
    A.set_coefficient(MultiIndex({1, 1}), SuperFunction(Polynomial(), Polynomial{Rational(1), Rational(1)}));
    A.set_coefficient(MultiIndex({1, 0}), SuperFunction(Polynomial{Rational(1), Rational(1)}));
    std::cout << "operator coefficients:\n";
    for (const auto& [idx, fn] : A.coefficients())
        std::cout << "  a" << idx.to_string() << " = " << fn.to_string() << "\n";

    WeightedDensity phi1{SuperFunction::x(), lambdas[0]};
    WeightedDensity phi2{SuperFunction::x(2), lambdas[1]};
    std::cout << "A(x, x^2) = " << apply(A, {phi1, phi2}).coefficient.to_string() << "\n";

    // The action of a conformal generator on A, then the symbol of A.
    ContactField Xxth(SuperFunction::theta_times(Polynomial::monomial(1)));
    NaryOperator moved = lie_operator_closed(Xxth, A);
    std::cout << "L_{x theta}(A) coefficients:\n";
    for (const auto& [idx, fn] : moved.coefficients())
        std::cout << "  a" << idx.to_string() << " = " << fn.to_string() << "\n";

    std::cout << "delta = " << delta.to_string() << "\n";
    Symbol sigma = symbol_map(A);
    std::cout << "symbol components:\n";
    for (const auto& [idx, fn] : sigma.coefficients())
        std::cout << "  sigma" << idx.to_string() << " = " << fn.to_string()
                  << "  (weight " << sigma.component_weight(idx).to_string() << ")\n";

    NaryOperator back = quantize(sigma, lambdas, mu);
    std::cout << "quantize(symbol(A)) == A: " << (back == A ? "yes" : "no") << "\n";
    return back == A ? 0 : 1;
}
