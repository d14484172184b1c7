#pragma once

#include <map>
#include <utility>
#include <vector>

#include "superquant/contact.hpp"
#include "superquant/multi_index.hpp"
#include "superquant/nary_operator.hpp"
#include "superquant/supermath.hpp"

namespace superquant {

/// Element of the graded space of symbols attached to operators of doubled
/// order 2k and weight gap delta = mu - (lambda_1 + ... + lambda_n).  The
/// component at multi-index s is a density of weight delta - |s|/2; the
/// contact action is diagonal in s.
class Symbol {
public:
    Symbol(int arity, int order2, Rational delta, Parity parity)
        : arity_(arity), order2_(order2), delta_(std::move(delta)), parity_(parity) {
        if (arity_ < 1) throw ArityMismatch("symbol arity must be at least 1");
        if (order2_ < 0) throw std::invalid_argument("doubled order must be non-negative");
    }

    int arity() const noexcept { return arity_; }
    int order2() const noexcept { return order2_; }
    const Rational& delta() const noexcept { return delta_; }
    Parity parity() const noexcept { return parity_; }

    Rational component_weight(const MultiIndex& s) const { return delta_ - Rational(s.total(), 2); }

    Parity coefficient_parity(const MultiIndex& s) const {
        return parity_add(parity_, parity_of(s.total()));
    }

    const std::map<MultiIndex, SuperFunction>& coefficients() const noexcept { return coeffs_; }

    SuperFunction coefficient(const MultiIndex& s) const {
        auto it = coeffs_.find(s);
        return it == coeffs_.end() ? SuperFunction() : it->second;
    }

    void set_coefficient(const MultiIndex& s, SuperFunction value) {
        if (s.size() != arity_) throw ArityMismatch("multi-index arity mismatch");
        if (s.total() > order2_)
            throw std::invalid_argument("multi-index " + s.to_string() + " exceeds doubled order");
        for (int t = 0; t < s.size(); ++t)
            if (s[t] < 0) throw std::invalid_argument("negative multi-index entry");
        if (value.is_zero()) {
            coeffs_.erase(s);
            return;
        }
        if (value.parity() != coefficient_parity(s))
            throw ParityError("component at " + s.to_string() + " has the wrong parity");
        coeffs_[s] = std::move(value);
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }

    Symbol& operator-=(const Symbol& o) {
        for (const auto& [idx, fn] : o.coeffs_) set_coefficient(idx, coefficient(idx) - fn);
        return *this;
    }

    friend bool operator==(const Symbol& a, const Symbol& b) {
        return a.arity_ == b.arity_ && a.order2_ == b.order2_ && a.delta_ == b.delta_ &&
               a.coeffs_ == b.coeffs_;
    }

private:
    int arity_;
    int order2_;
    Rational delta_;
    Parity parity_;
    std::map<MultiIndex, SuperFunction> coeffs_;
};

/// Contact action on symbols: each component transforms as a density of its
/// own weight, nothing mixes.
inline Symbol lie_symbol(const ContactField& f, const Symbol& sigma) {
    Symbol out(sigma.arity(), sigma.order2(), sigma.delta(), parity_add(sigma.parity(), f.parity()));
    for (const auto& [idx, fn] : sigma.coefficients()) {
        WeightedDensity moved = lie_density(f, {fn, sigma.component_weight(idx)});
        out.set_coefficient(idx, moved.coefficient);
    }
    return out;
}

/// Top-order part of an operator, viewed in the symbol space.  This is the
/// piece every total symbol must agree with in degree 2k.
inline Symbol principal_symbol(const NaryOperator& A) {
    Symbol out(A.arity(), A.order2(), A.delta(), A.parity());
    for (const auto& [idx, fn] : A.coefficients())
        if (idx.total() == A.order2()) out.set_coefficient(idx, fn);
    return out;
}

/// Number of multi-indices with n slots and total l.
inline long long component_count(int n, int l) {
    if (n < 1 || l < 0) return 0;
    return binomial(l + n - 1, n - 1).numerator();
}

} // namespace superquant
