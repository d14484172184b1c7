#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "superquant/rational.hpp"

namespace superquant {

/// Dense polynomial in one even variable over Rational, coefficients stored
/// by ascending power with no trailing zeros.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(Rational constant) { // NOLINT: implicit by design
        if (!constant.is_zero()) c_.push_back(constant);
    }
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static Polynomial monomial(int degree, Rational coeff = Rational(1)) {
        std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
        c.back() = std::move(coeff);
        return Polynomial(std::move(c));
    }

    /// Degree as usual; -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }

    Rational coeff(int power) const {
        if (power < 0 || power >= static_cast<int>(c_.size())) return Rational(0);
        return c_[static_cast<std::size_t>(power)];
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    Polynomial& operator*=(const Rational& s) {
        if (s.is_zero()) {
            c_.clear();
            return *this;
        }
        for (auto& v : c_) v *= s;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(c));
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Rational> c(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) c[k - 1] = Rational(static_cast<std::int64_t>(k)) * c_[k];
        return Polynomial(std::move(c));
    }

    const std::vector<Rational>& coefficients() const noexcept { return c_; }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    std::string to_string(const char* var = "x") const {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            const Rational& v = c_[k];
            if (v.is_zero()) continue;
            std::string term;
            if (k == 0) {
                term = v.to_string();
            } else {
                if (!(v == Rational(1))) {
                    if (v == Rational(-1))
                        term = "-";
                    else
                        term = v.to_string() + "*";
                }
                term += var;
                if (k > 1) term += "^" + std::to_string(k);
            }
            if (out.empty()) {
                out = term;
            } else if (!term.empty() && term[0] == '-') {
                out += " - " + term.substr(1);
            } else {
                out += " + " + term;
            }
        }
        return out.empty() ? "0" : out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

} // namespace superquant
