#pragma once

#include <string>
#include <utility>

#include "superquant/errors.hpp"
#include "superquant/polynomial.hpp"
#include "superquant/supermath.hpp"

namespace superquant {

enum class Parity : int { even = 0, odd = 1 };

inline Parity parity_add(Parity a, Parity b) noexcept {
    return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) % 2);
}
inline Parity parity_of(long long degree) noexcept {
    return (degree % 2 != 0) ? Parity::odd : Parity::even;
}
inline int parity_int(Parity p) noexcept { return static_cast<int>(p); }

/// Superfunction on the supercircle: F = f0(x) + theta * f1(x) with an even
/// coordinate x and one odd coordinate theta (theta^2 = 0).
class SuperFunction {
public:
    SuperFunction() = default;
    SuperFunction(Polynomial even_part) : even_(std::move(even_part)) {} // NOLINT
    SuperFunction(Polynomial even_part, Polynomial odd_part)
        : even_(std::move(even_part)), odd_(std::move(odd_part)) {}

    static SuperFunction one() { return SuperFunction(Polynomial(Rational(1))); }
    static SuperFunction x(int power = 1) { return SuperFunction(Polynomial::monomial(power)); }
    static SuperFunction theta() { return SuperFunction(Polynomial(), Polynomial(Rational(1))); }
    /// theta * p(x).
    static SuperFunction theta_times(Polynomial p) { return SuperFunction(Polynomial(), std::move(p)); }

    const Polynomial& even_part() const noexcept { return even_; }
    /// Coefficient of theta.
    const Polynomial& odd_part() const noexcept { return odd_; }

    bool is_zero() const noexcept { return even_.is_zero() && odd_.is_zero(); }
    bool is_homogeneous() const noexcept { return even_.is_zero() || odd_.is_zero(); }

    /// Parity of a homogeneous value; the zero superfunction counts as even.
    /// Throws ParityError when both components are present.
    Parity parity() const {
        if (!is_homogeneous())
            throw ParityError("parity of non-homogeneous superfunction: " + to_string());
        return even_.is_zero() && !odd_.is_zero() ? Parity::odd : Parity::even;
    }

    SuperFunction even_component() const { return SuperFunction(even_); }
    SuperFunction odd_component() const { return SuperFunction(Polynomial(), odd_); }

    SuperFunction& operator+=(const SuperFunction& o) {
        even_ += o.even_;
        odd_ += o.odd_;
        return *this;
    }
    SuperFunction& operator-=(const SuperFunction& o) {
        even_ -= o.even_;
        odd_ -= o.odd_;
        return *this;
    }
    SuperFunction& operator*=(const Rational& s) {
        even_ *= s;
        odd_ *= s;
        return *this;
    }
    SuperFunction operator-() const { return SuperFunction(even_ * Rational(-1), odd_ * Rational(-1)); }

    friend SuperFunction operator+(SuperFunction a, const SuperFunction& b) { return a += b; }
    friend SuperFunction operator-(SuperFunction a, const SuperFunction& b) { return a -= b; }
    friend SuperFunction operator*(SuperFunction a, const Rational& s) { return a *= s; }
    friend SuperFunction operator*(const Rational& s, SuperFunction a) { return a *= s; }

    /// Graded product; the theta^2 term vanishes, which encodes the sign rule.
    friend SuperFunction operator*(const SuperFunction& a, const SuperFunction& b) {
        return SuperFunction(a.even_ * b.even_, a.even_ * b.odd_ + a.odd_ * b.even_);
    }

    /// d/dx, acting on both components.
    SuperFunction d_x() const { return SuperFunction(even_.derivative(), odd_.derivative()); }

    /// D = d/dtheta + theta d/dx.
    SuperFunction D() const { return SuperFunction(odd_, even_.derivative()); }

    /// Dbar = d/dtheta - theta d/dx; Dbar^2 = -d/dx.
    SuperFunction Dbar() const { return SuperFunction(odd_, even_.derivative() * Rational(-1)); }

    SuperFunction dbar_power(int j) const {
        SuperFunction r = *this;
        for (int k = 0; k < j; ++k) r = r.Dbar();
        return r;
    }
    SuperFunction d_power(int j) const {
        SuperFunction r = *this;
        for (int k = 0; k < j; ++k) r = r.D();
        return r;
    }

    friend bool operator==(const SuperFunction&, const SuperFunction&) = default;

    /// Canonical rendering "f0(x) + theta*(f1(x))".
    std::string to_string() const {
        if (odd_.is_zero()) return even_.to_string();
        std::string odd = "theta*(" + odd_.to_string() + ")";
        if (even_.is_zero()) return odd;
        return even_.to_string() + " + " + odd;
    }

private:
    Polynomial even_;
    Polynomial odd_;
};

} // namespace superquant
