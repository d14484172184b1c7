#pragma once

#include <cstdint>

#include "superquant/rational.hpp"

namespace superquant {

/// Floor division for possibly negative numerators (b > 0).
inline long long floor_div(long long a, long long b) {
    long long q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

/// (-1)^e for an integer exponent of either sign.
inline int parity_sign(long long e) noexcept { return (e % 2 != 0) ? -1 : 1; }

/// Generalized binomial coefficient nu*(nu-1)*...*(nu-q+1) / q! for a
/// rational (possibly negative or non-integer) upper argument.  q < 0
/// yields 0 by convention.
inline Rational gen_binomial(const Rational& nu, long long q) {
    if (q < 0) return Rational(0);
    Rational result(1);
    Rational factor = nu;
    for (long long u = 1; u <= q; ++u) {
        result *= factor;
        result /= Rational(u);
        factor -= Rational(1);
    }
    return result;
}

/// Ordinary binomial coefficient with integer arguments; 0 when k < 0 or k > n >= 0.
inline Rational binomial(long long n, long long k) { return gen_binomial(Rational(n), k); }

/// Super binomial coefficient: binom(floor(j/2), floor(i/2)) when i is even
/// or j is odd, and 0 otherwise.  Vanishes whenever i > j or i < 0.
inline Rational super_binomial(long long j, long long i) {
    if (i < 0) return Rational(0);
    if (i % 2 == 0 || j % 2 != 0)
        return binomial(floor_div(j, 2), floor_div(i, 2));
    return Rational(0);
}

/// Upsilon(lambda, m) = (floor(m/2) + (1 - (-1)^m) * lambda) / 2.
inline Rational upsilon(const Rational& lambda, long long m) {
    Rational v(floor_div(m, 2));
    if (m % 2 != 0) v += Rational(2) * lambda;
    return v / Rational(2);
}

/// Xi_{s,i}(lambda), the single-slot building block of the symbol tables:
/// binom(floor(s/2), floor(i/2)) * genbinom(2*lambda + floor((s-1)/2), floor((2(s-i)+1+(-1)^i)/4)).
inline Rational xi(long long s, long long i, const Rational& lambda) {
    Rational left = binomial(floor_div(s, 2), floor_div(i, 2));
    if (left.is_zero()) return left;
    Rational top = Rational(2) * lambda + Rational(floor_div(s - 1, 2));
    long long q = floor_div(2 * (s - i) + 1 + ((i % 2 == 0) ? 1 : -1), 4);
    return left * gen_binomial(top, q);
}

} // namespace superquant
