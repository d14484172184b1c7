#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "superquant/superfunction.hpp"

namespace superquant {

/// Contact vector field X_f = -f Dbar^2 + (1/2) D(f) Dbar attached to a
/// homogeneous Hamiltonian superfunction f.  Its parity is the parity of f
/// and is kept explicitly so that a zero Hamiltonian still composes
/// consistently.
class ContactField {
public:
    explicit ContactField(SuperFunction hamiltonian)
        : f_(std::move(hamiltonian)), parity_(f_.parity()) {}
    ContactField(SuperFunction hamiltonian, Parity parity) : f_(std::move(hamiltonian)), parity_(parity) {
        if (!f_.is_zero() && f_.parity() != parity)
            throw ParityError("contact field parity disagrees with its Hamiltonian");
    }

    const SuperFunction& hamiltonian() const noexcept { return f_; }
    Parity parity() const noexcept { return parity_; }

    /// X_f(G) = f G' + (1/2) D(f) Dbar(G).
    SuperFunction apply(const SuperFunction& G) const {
        return f_ * G.d_x() + Rational(1, 2) * (f_.D() * G.Dbar());
    }

private:
    SuperFunction f_;
    Parity parity_;
};

/// Contact bracket {f,g} = f g' - f' g + (1/2)(-1)^{|f|(|g|+1)} D(f) D(g)
/// for homogeneous arguments.
inline SuperFunction contact_bracket(const SuperFunction& f, const SuperFunction& g) {
    int pf = parity_int(f.parity());
    int pg = parity_int(g.parity());
    int sign = parity_sign(static_cast<long long>(pf) * (pg + 1));
    return f * g.d_x() - f.d_x() * g + Rational(sign, 2) * (f.D() * g.D());
}

/// Density of weight `weight`: the coefficient superfunction of F alpha^weight.
struct WeightedDensity {
    SuperFunction coefficient;
    Rational weight;

    friend bool operator==(const WeightedDensity&, const WeightedDensity&) = default;
};

inline WeightedDensity operator+(const WeightedDensity& a, const WeightedDensity& b) {
    if (!(a.weight == b.weight)) throw WeightMismatch("adding densities of different weights");
    return {a.coefficient + b.coefficient, a.weight};
}

inline WeightedDensity operator*(const Rational& s, const WeightedDensity& d) {
    return {s * d.coefficient, d.weight};
}

/// Action on weighted densities: X_f + weight * f'.
inline WeightedDensity lie_density(const ContactField& f, const WeightedDensity& G) {
    SuperFunction out = f.apply(G.coefficient) + G.weight * (f.hamiltonian().d_x() * G.coefficient);
    return {out, G.weight};
}

/// The five generators of osp(1|2), by Hamiltonian: 1, x, x^2, theta, x*theta.
inline std::vector<ContactField> osp_generators() {
    std::vector<ContactField> gen;
    gen.emplace_back(SuperFunction::one());
    gen.emplace_back(SuperFunction::x());
    gen.emplace_back(SuperFunction::x(2));
    gen.emplace_back(SuperFunction::theta());
    gen.emplace_back(SuperFunction::theta_times(Polynomial::monomial(1)));
    return gen;
}

namespace detail {

/// Action of the first-order operator F0 d/dx + F1 d/dtheta.
inline SuperFunction first_order_apply(const SuperFunction& F0, const SuperFunction& F1,
                                       const SuperFunction& G) {
    return F0 * G.d_x() + F1 * SuperFunction(G.odd_part());
}

inline bool is_contact_homogeneous(const SuperFunction& F0, const SuperFunction& F1, Parity pv) {
    const int max_deg =
        std::max(std::max(F0.even_part().degree(), F0.odd_part().degree()),
                 std::max(F1.even_part().degree(), F1.odd_part().degree())) + 3;
    auto bracket = [&](const SuperFunction& G) {
        return first_order_apply(F0, F1, G.Dbar()) -
               Rational(parity_sign(parity_int(pv))) * first_order_apply(F0, F1, G).Dbar();
    };
    // A multiple H * Dbar is pinned down by the value on theta (Dbar(theta) = 1).
    SuperFunction H = bracket(SuperFunction::theta());
    std::vector<SuperFunction> probes;
    probes.push_back(SuperFunction::one());
    for (int a = 1; a <= max_deg; ++a) probes.push_back(SuperFunction::x(a));
    for (int a = 0; a <= max_deg; ++a)
        probes.push_back(SuperFunction::theta_times(Polynomial::monomial(a)));
    for (const auto& G : probes) {
        if (!(bracket(G) == H * G.Dbar())) return false;
    }
    return true;
}

} // namespace detail

/// Whether the vector field V = F0 d/dx + F1 d/dtheta preserves the contact
/// distribution, i.e. [V, Dbar] is a superfunction multiple of Dbar.
/// Non-homogeneous fields are split into parity components, both of which
/// must be contact.
inline bool is_contact(const SuperFunction& F0, const SuperFunction& F1) {
    // Even part of V: even component of F0 with odd component of F1 (d/dtheta is odd).
    SuperFunction F0e = F0.even_component(), F0o = F0.odd_component();
    SuperFunction F1e = F1.even_component(), F1o = F1.odd_component();
    bool even_ok = (F0e.is_zero() && F1o.is_zero()) ||
                   detail::is_contact_homogeneous(F0e, F1o, Parity::even);
    bool odd_ok = (F0o.is_zero() && F1e.is_zero()) ||
                  detail::is_contact_homogeneous(F0o, F1e, Parity::odd);
    return even_ok && odd_ok;
}

} // namespace superquant
