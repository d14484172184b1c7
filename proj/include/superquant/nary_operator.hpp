#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "superquant/contact.hpp"
#include "superquant/multi_index.hpp"
#include "superquant/superfunction.hpp"

namespace superquant {

/// n-ary differential operator from a tensor product of weighted density
/// modules F_{lambda_1} x ... x F_{lambda_n} to F_mu:
///
///   A = sum_{|i| <= order2} a_i Dbar^{i_1} (x) ... (x) Dbar^{i_n},
///
/// where order2 is the doubled order 2k.  The operator carries a parity;
/// each coefficient a_i must be homogeneous of parity |A| + |i| (mod 2).
/// Coefficients are stored sparsely, absent means zero.
class NaryOperator {
public:
    NaryOperator(int arity, int order2, std::vector<Rational> lambdas, Rational mu, Parity parity)
        : arity_(arity), order2_(order2), lambdas_(std::move(lambdas)), mu_(std::move(mu)), parity_(parity) {
        if (arity_ < 1) throw ArityMismatch("operator arity must be at least 1");
        if (order2_ < 0) throw std::invalid_argument("doubled order must be non-negative");
        if (static_cast<int>(lambdas_.size()) != arity_)
            throw ArityMismatch("expected one lambda per slot");
    }

    int arity() const noexcept { return arity_; }
    int order2() const noexcept { return order2_; }
    const std::vector<Rational>& lambdas() const noexcept { return lambdas_; }
    const Rational& mu() const noexcept { return mu_; }
    Parity parity() const noexcept { return parity_; }

    Rational delta() const {
        Rational d = mu_;
        for (const auto& l : lambdas_) d -= l;
        return d;
    }

    /// Parity every stored coefficient at index i must have.
    Parity coefficient_parity(const MultiIndex& i) const {
        return parity_add(parity_, parity_of(i.total()));
    }

    const std::map<MultiIndex, SuperFunction>& coefficients() const noexcept { return coeffs_; }

    SuperFunction coefficient(const MultiIndex& i) const {
        auto it = coeffs_.find(i);
        return it == coeffs_.end() ? SuperFunction() : it->second;
    }

    void set_coefficient(const MultiIndex& i, SuperFunction value) {
        if (i.size() != arity_) throw ArityMismatch("multi-index arity mismatch");
        if (i.total() > order2_)
            throw std::invalid_argument("multi-index " + i.to_string() + " exceeds doubled order");
        for (int t = 0; t < i.size(); ++t)
            if (i[t] < 0) throw std::invalid_argument("negative multi-index entry");
        if (value.is_zero()) {
            coeffs_.erase(i);
            return;
        }
        if (value.parity() != coefficient_parity(i))
            throw ParityError("coefficient at " + i.to_string() + " has the wrong parity");
        coeffs_[i] = std::move(value);
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }

    NaryOperator& operator-=(const NaryOperator& o) {
        for (const auto& [idx, fn] : o.coeffs_) set_coefficient(idx, coefficient(idx) - fn);
        return *this;
    }

    /// Equality of shape, weights and coefficients (parity of a nonzero
    /// operator is recoverable from any coefficient, so it is not compared).
    friend bool operator==(const NaryOperator& a, const NaryOperator& b) {
        return a.arity_ == b.arity_ && a.order2_ == b.order2_ && a.lambdas_ == b.lambdas_ &&
               a.mu_ == b.mu_ && a.coeffs_ == b.coeffs_;
    }

private:
    int arity_;
    int order2_;
    std::vector<Rational> lambdas_;
    Rational mu_;
    Parity parity_;
    std::map<MultiIndex, SuperFunction> coeffs_;
};

/// Evaluation of A on a tuple of homogeneous densities of the expected
/// weights.  The sign rule moves each Dbar^{i_s} past the arguments in the
/// slots before it: (-1)^{sum_{p<s} |f_p| i_s}.
inline WeightedDensity apply(const NaryOperator& A, const std::vector<WeightedDensity>& phis) {
    if (static_cast<int>(phis.size()) != A.arity()) throw ArityMismatch("argument tuple arity mismatch");
    std::vector<int> arg_parity(phis.size());
    for (std::size_t t = 0; t < phis.size(); ++t) {
        if (!(phis[t].weight == A.lambdas()[t]))
            throw WeightMismatch("slot " + std::to_string(t + 1) + " weight mismatch");
        arg_parity[t] = parity_int(phis[t].coefficient.parity());
    }
    SuperFunction total;
    for (const auto& [idx, coeff] : A.coefficients()) {
        long long sign_exp = 0;
        for (int p = 0; p + 1 < A.arity(); ++p)
            sign_exp += static_cast<long long>(arg_parity[static_cast<std::size_t>(p)]) * idx.suffix_total(p);
        SuperFunction term = coeff;
        for (int t = 0; t < A.arity(); ++t)
            term = term * phis[static_cast<std::size_t>(t)].coefficient.dbar_power(idx[t]);
        total += Rational(parity_sign(sign_exp)) * term;
    }
    return {total, A.mu()};
}

/// One term of the action on a decomposable tensor; the Koszul sign is
/// absorbed into the modified slot.
struct DensityTuple {
    std::vector<WeightedDensity> factors;
};

/// Action of X_f on phi_1 (x) ... (x) phi_n: one tuple per slot, the p-th
/// carrying (-1)^{|f| (|phi_1|+...+|phi_{p-1}|)} L^{lambda_p}_{X_f}(phi_p).
inline std::vector<DensityTuple> lie_tensor(const ContactField& f, const std::vector<Rational>& lambdas,
                                            const std::vector<WeightedDensity>& phis) {
    if (phis.size() != lambdas.size()) throw ArityMismatch("tensor factor count mismatch");
    for (std::size_t t = 0; t < phis.size(); ++t)
        if (!(phis[t].weight == lambdas[t]))
            throw WeightMismatch("slot " + std::to_string(t + 1) + " weight mismatch");
    std::vector<DensityTuple> out;
    long long parity_before = 0;
    for (std::size_t p = 0; p < phis.size(); ++p) {
        DensityTuple term{phis};
        int sign = parity_sign(static_cast<long long>(parity_int(f.parity())) * parity_before);
        term.factors[p] = Rational(sign) * lie_density(f, phis[p]);
        out.push_back(std::move(term));
        parity_before += parity_int(phis[p].coefficient.parity());
    }
    return out;
}

namespace detail {

struct SlotTerm {
    int dbar_power;
    SuperFunction coeff;
    int coeff_parity;
};

/// The one-slot operator L^lambda_{X_f} = -f Dbar^2 + (1/2) D(f) Dbar + lambda f',
/// as (power, coefficient, formal parity) triples.  Formal parities come from
/// the parity of f so that vanishing coefficients stay consistent.
inline std::vector<SlotTerm> one_slot_action(const ContactField& f, const Rational& lambda) {
    int pf = parity_int(f.parity());
    const SuperFunction& F = f.hamiltonian();
    return {
        {2, -F, pf},
        {1, Rational(1, 2) * F.D(), (pf + 1) % 2},
        {0, lambda * F.d_x(), pf},
    };
}

/// Coefficients of (Dbar_1 + ... + Dbar_n)^j in normal slot order, where the
/// slot derivations pairwise anticommute.  Left multiplication by Dbar_p
/// crosses the earlier slots, picking up (-1)^{j_1+...+j_{p-1}}.
inline std::map<MultiIndex, int> sum_dbar_power(int slots, int j) {
    std::map<MultiIndex, int> words;
    words[MultiIndex(std::vector<int>(static_cast<std::size_t>(slots), 0))] = 1;
    for (int step = 0; step < j; ++step) {
        std::map<MultiIndex, int> next;
        for (const auto& [w, c] : words) {
            for (int p = 0; p < slots; ++p) {
                int sign = parity_sign(w.prefix_total(p));
                next[w.with_added(p, 1)] += sign * c;
            }
        }
        for (auto it = next.begin(); it != next.end();)
            it = it->second == 0 ? next.erase(it) : std::next(it);
        words = std::move(next);
    }
    return words;
}

} // namespace detail

/// Coefficients b_j of the slot composition Dbar^i o L^lambda_{X_f} = sum_j b_j Dbar^j,
/// obtained from the operator super-Leibniz rule.  The formal parity of b_j
/// is |f| + i + j (mod 2).
inline std::map<int, SuperFunction> compose_slot(int i, const ContactField& f, const Rational& lambda) {
    std::map<int, SuperFunction> out;
    for (const auto& term : detail::one_slot_action(f, lambda)) {
        for (int m = 0; m <= i; ++m) {
            Rational sb = super_binomial(i, m);
            if (sb.is_zero()) continue;
            int sign = parity_sign(static_cast<long long>(term.coeff_parity) * (i - m));
            out[i - m + term.dbar_power] += (sb * Rational(sign)) * term.coeff.dbar_power(m);
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

/// Action of X_f on the operator module, computed by symbolic operator
/// composition straight from the definition
///   L(A) = L^mu_{X_f} o A - (-1)^{|A||f|} A o L^{lambdas}_{X_f}.
/// Both compositions transiently raise the Dbar-degree by two; those top
/// layers must cancel identically, and this is asserted rather than assumed.
inline NaryOperator lie_operator_oracle(const ContactField& f, const NaryOperator& A) {
    const int n = A.arity();
    const int k2 = A.order2();
    const int pF = parity_int(f.parity());
    const int pA = parity_int(A.parity());

    std::map<MultiIndex, SuperFunction> acc;

    // L^mu_{X_f} o A.  Push each term M_c Dbar^{j0} of the output action
    // through the coefficient (super-Leibniz), then through the product map
    // (Dbar^{j} o m = m o (sum_p Dbar_p)^j), then onto the exponents.
    for (const auto& out_term : detail::one_slot_action(f, A.mu())) {
        for (const auto& [idx, a] : A.coefficients()) {
            int pa = parity_int(A.coefficient_parity(idx));
            for (int m = 0; m <= out_term.dbar_power; ++m) {
                Rational sb = super_binomial(out_term.dbar_power, m);
                if (sb.is_zero()) continue;
                int sign1 = parity_sign(static_cast<long long>(pa) * (out_term.dbar_power - m));
                SuperFunction fn = out_term.coeff * a.dbar_power(m);
                if (fn.is_zero()) continue;
                auto words = detail::sum_dbar_power(n, out_term.dbar_power - m);
                for (const auto& [w, wc] : words) {
                    long long cross = 0; // Dbar^{w} o Dbar^{idx}
                    MultiIndex target = idx;
                    for (int p = 0; p < n; ++p) {
                        cross += static_cast<long long>(idx[p]) * w.suffix_total(p);
                        if (w[p] != 0) target = target.with_added(p, w[p]);
                    }
                    Rational scale = sb * Rational(sign1 * wc * parity_sign(cross));
                    acc[target] += scale * fn;
                }
            }
        }
    }

    // - (-1)^{|A||f|} A o L^{lambdas}_{X_f}, slot by slot.
    int outer = -parity_sign(static_cast<long long>(pA) * pF);
    for (int p = 0; p < n; ++p) {
        std::map<int, std::map<int, SuperFunction>> slot_cache;
        for (const auto& [idx, a] : A.coefficients()) {
            int ip = idx[p];
            auto cached = slot_cache.find(ip);
            if (cached == slot_cache.end())
                cached = slot_cache.emplace(ip, compose_slot(ip, f, A.lambdas()[static_cast<std::size_t>(p)])).first;
            int sign1 = parity_sign(static_cast<long long>(pF) * idx.suffix_total(p));
            for (const auto& [j, b] : cached->second) {
                int pb = (pF + ip + j) % 2;
                int sign2 = parity_sign(static_cast<long long>(pb) * idx.prefix_total(p));
                acc[idx.with_slot(p, j)] += Rational(outer * sign1 * sign2) * (a * b);
            }
        }
    }

    NaryOperator out(n, k2, A.lambdas(), A.mu(), parity_add(A.parity(), f.parity()));
    for (const auto& [idx, fn] : acc) {
        if (fn.is_zero()) continue;
        if (idx.total() > k2)
            throw std::logic_error("operator action left the order filtration at " + idx.to_string());
        out.set_coefficient(idx, fn);
    }
    return out;
}

/// Same action through the closed one-line formula: for each index i,
///
///   a^X_i = L^{delta - |i|/2}_{X_f}(a_i)
///         - sum_{t,r} (-1)^{r(|f|+|a_{i+r e_t}| + i_1+...+i_{t-1})}
///           [ (r+i_t : r+2)_s - (1/2)(-1)^{i_t} (r+i_t : r+1)_s + lambda_t (r+i_t : r)_s ]
///           Dbar^r(f') a_{i + r e_t},
/// with the prefix sum absent for t = 1.
inline NaryOperator lie_operator_closed(const ContactField& f, const NaryOperator& A) {
    const int n = A.arity();
    const int k2 = A.order2();
    const int pF = parity_int(f.parity());
    const Rational delta = A.delta();
    const SuperFunction fp = f.hamiltonian().d_x();

    NaryOperator out(n, k2, A.lambdas(), A.mu(), parity_add(A.parity(), f.parity()));
    for (const auto& idx : multi_indices_up_to(n, k2)) {
        SuperFunction a = A.coefficient(idx);
        Rational weight = delta - Rational(idx.total(), 2);
        SuperFunction val = f.apply(a) + weight * (fp * a);
        for (int t = 0; t < n; ++t) {
            const Rational& lt = A.lambdas()[static_cast<std::size_t>(t)];
            for (int r = 1; r <= k2 - idx.total(); ++r) {
                MultiIndex shifted = idx.with_added(t, r);
                SuperFunction a2 = A.coefficient(shifted);
                if (a2.is_zero()) continue;
                Rational bracket = super_binomial(r + idx[t], r + 2) -
                                   Rational(parity_sign(idx[t]), 2) * super_binomial(r + idx[t], r + 1) +
                                   lt * super_binomial(r + idx[t], r);
                if (bracket.is_zero()) continue;
                int pa2 = parity_int(A.coefficient_parity(shifted));
                long long exp = static_cast<long long>(r) * (pF + pa2);
                if (t > 0) exp += static_cast<long long>(r) * idx.prefix_total(t);
                val -= Rational(parity_sign(exp)) * bracket * (fp.dbar_power(r) * a2);
            }
        }
        if (!val.is_zero()) out.set_coefficient(idx, val);
    }
    return out;
}

} // namespace superquant
