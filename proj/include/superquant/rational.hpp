#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "superquant/errors.hpp"

namespace superquant {

/// Exact rational number kept in lowest terms with positive denominator.
///
/// Backed by 64-bit integers with 128-bit intermediates; every result is
/// range-checked, so arithmetic either succeeds exactly or throws
/// RationalOverflow.  The quantities produced by the calculus in this
/// library stay far below the limit in practice.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : num_(n) {} // NOLINT: implicit by design
    Rational(std::int64_t n, std::int64_t d) { assign(n, d); }

    /// Parses "p", "-p" or "p/q" (q > 0 after normalization).
    static Rational parse(std::string_view text);

    std::int64_t numerator() const noexcept { return num_; }
    std::int64_t denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_integer() const noexcept { return den_ == 1; }
    bool is_negative() const noexcept { return num_ < 0; }

    /// Largest integer not exceeding the value.
    std::int64_t floor() const noexcept {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational& operator+=(const Rational& o) {
        assign(w(num_) * o.den_ + w(o.num_) * den_, w(den_) * o.den_);
        return *this;
    }
    Rational& operator-=(const Rational& o) { return *this += -o; }
    Rational& operator*=(const Rational& o) {
        assign(w(num_) * o.num_, w(den_) * o.den_);
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0) throw std::domain_error("rational division by zero");
        assign(w(num_) * o.den_, w(den_) * o.num_);
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
        return w(a.num_) * b.den_ <=> w(b.num_) * a.den_;
    }

    std::string to_string() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

private:
    using wide = __int128;
    static wide w(std::int64_t v) noexcept { return static_cast<wide>(v); }

    // Keeping magnitudes below 2^62 guarantees that any cross product or
    // two-term sum of cross products fits a signed 128-bit intermediate.
    static constexpr std::int64_t kLimit = std::int64_t{1} << 62;

    void assign(wide n, wide d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        wide a = n < 0 ? -n : n;
        wide b = d;
        while (b != 0) {
            wide t = a % b;
            a = b;
            b = t;
        }
        if (a > 1) {
            n /= a;
            d /= a;
        }
        if (n >= kLimit || n <= -kLimit || d >= kLimit)
            throw RationalOverflow("rational out of range after reduction");
        num_ = static_cast<std::int64_t>(n);
        den_ = static_cast<std::int64_t>(d);
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline Rational Rational::parse(std::string_view text) {
    auto fail = [&] { throw std::invalid_argument("bad rational: '" + std::string(text) + "'"); };
    std::size_t pos = 0;
    auto read_int = [&]() -> std::int64_t {
        bool neg = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            neg = text[pos] == '-';
            ++pos;
        }
        if (pos >= text.size() || text[pos] < '0' || text[pos] > '9') fail();
        std::int64_t v = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            v = v * 10 + (text[pos] - '0');
            if (v >= kLimit) throw RationalOverflow("rational literal out of range");
            ++pos;
        }
        return neg ? -v : v;
    };
    std::int64_t n = read_int();
    std::int64_t d = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        d = read_int();
    }
    if (pos != text.size()) fail();
    return Rational(n, d);
}

} // namespace superquant
