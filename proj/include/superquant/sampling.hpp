#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "superquant/contact.hpp"
#include "superquant/equivariant.hpp"
#include "superquant/nary_operator.hpp"

namespace superquant {

/// Seeded generator with a hand-rolled uniform draw, so that the same seed
/// yields the same stream on every platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t raw() { return gen_(); }

    /// Uniform integer in [lo, hi], rejection-sampled to avoid modulo bias.
    long long uniform(long long lo, long long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
        std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % span;
        std::uint64_t draw;
        do {
            draw = gen_();
        } while (draw >= limit);
        return lo + static_cast<long long>(draw % span);
    }

    bool flip() { return uniform(0, 1) == 1; }

private:
    std::mt19937_64 gen_;
};

inline Rational random_rational(Rng& rng, long long num_range = 4, long long den_max = 2) {
    return Rational(rng.uniform(-num_range, num_range), rng.uniform(1, den_max));
}

inline Polynomial random_polynomial(Rng& rng, int max_degree) {
    std::vector<Rational> coeffs;
    for (int d = 0; d <= max_degree; ++d) coeffs.push_back(Rational(rng.uniform(-4, 4)));
    return Polynomial(std::move(coeffs));
}

inline SuperFunction random_superfunction(Rng& rng, int max_degree, Parity p) {
    Polynomial body = random_polynomial(rng, max_degree);
    if (p == Parity::even) return SuperFunction(body, Polynomial());
    return SuperFunction(Polynomial(), body);
}

inline WeightedDensity random_density(Rng& rng, const Rational& weight, int max_degree) {
    Parity p = rng.flip() ? Parity::odd : Parity::even;
    return {random_superfunction(rng, max_degree, p), weight};
}

inline NaryOperator random_operator(Rng& rng, int n, int order2, std::vector<Rational> lambdas,
                                    Rational mu, int max_degree) {
    Parity p = rng.flip() ? Parity::odd : Parity::even;
    NaryOperator A(n, order2, std::move(lambdas), std::move(mu), p);
    for (const auto& idx : multi_indices_up_to(n, order2)) {
        if (rng.uniform(0, 3) == 0) continue; // leave some coefficients zero
        A.set_coefficient(idx, random_superfunction(rng, max_degree, A.coefficient_parity(idx)));
    }
    return A;
}

/// Weights (lambda_1..lambda_n, mu) redrawn until the induced delta avoids
/// the resonance locus of the given order.
inline std::pair<std::vector<Rational>, Rational> random_weights_nonresonant(Rng& rng, int n,
                                                                             int order2) {
    for (;;) {
        std::vector<Rational> lambdas;
        for (int t = 0; t < n; ++t) lambdas.push_back(random_rational(rng));
        Rational mu = random_rational(rng);
        Rational delta = mu;
        for (const auto& l : lambdas) delta -= l;
        if (!is_resonant(delta, order2)) return {std::move(lambdas), mu};
    }
}

struct NamedHamiltonian {
    std::string name;
    SuperFunction value;
};

/// Contact Hamiltonians used in the verification sweeps: the five spanning
/// the conformal subalgebra plus two outside it.
inline std::vector<NamedHamiltonian> test_hamiltonians() {
    return {
        {"1", SuperFunction::one()},
        {"x", SuperFunction::x()},
        {"x^2", SuperFunction::x(2)},
        {"theta", SuperFunction::theta()},
        {"x*theta", SuperFunction::theta_times(Polynomial::monomial(1))},
        {"x^3", SuperFunction::x(3)},
        {"x^2*theta", SuperFunction::theta_times(Polynomial::monomial(2))},
    };
}

} // namespace superquant
