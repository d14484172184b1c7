#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "superquant/contact.hpp"
#include "superquant/equivariant.hpp"
#include "superquant/nary_operator.hpp"
#include "superquant/sampling.hpp"
#include "superquant/symbol_space.hpp"

namespace superquant {

struct CheckResult {
    explicit CheckResult(std::string n) : name(std::move(n)) {}

    std::string name;
    bool passed = true;
    bool skipped = false;
    long long cases = 0;
    std::string detail;
};

struct VerifyOptions {
    std::uint64_t seed = 20240917;
    int max_arity = 2;
    int max_order2 = 2;
    int ops_per_shape = 8;
    int weights_per_shape = 5;
    int leibniz_cases = 40;
    int resonance_max_order2 = 4;
    bool mutate_sign = false;
};

inline VerifyOptions acceptance_profile(std::uint64_t seed) {
    VerifyOptions o;
    o.seed = seed;
    o.max_arity = 3;
    o.max_order2 = 4;
    o.ops_per_shape = 50;
    o.weights_per_shape = 20;
    o.leibniz_cases = 100;
    o.resonance_max_order2 = 6;
    return o;
}

namespace detail {

inline void record_failure(CheckResult& r, const std::string& what) {
    if (r.passed) {
        r.passed = false;
        r.detail = what;
    }
}

inline std::vector<ContactField> conformal_generators() { return osp_generators(); }

inline SuperFunction probe(int b, int eta) {
    return eta == 0 ? SuperFunction::x(b) : SuperFunction::theta_times(Polynomial::monomial(b));
}

} // namespace detail

/// Structure relations of the conformal algebra, plus the homomorphism
/// property of f -> X_f over a grid of monomial Hamiltonians.
inline CheckResult check_osp_commutation(const VerifyOptions&) {
    CheckResult r{"osp-commutation"};

    auto gens = detail::conformal_generators();
    const SuperFunction one = SuperFunction::one();
    const SuperFunction x = SuperFunction::x();
    const SuperFunction x2 = SuperFunction::x(2);
    const SuperFunction th = SuperFunction::theta();
    const SuperFunction xth = SuperFunction::theta_times(Polynomial::monomial(1));

    struct Relation {
        int a, b;
        SuperFunction expected;
    };
    const Rational half(1, 2);
    const std::vector<Relation> table = {
        {0, 1, one},
        {0, 2, Rational(2) * x},
        {0, 3, SuperFunction()},
        {0, 4, th},
        {1, 2, x2},
        {1, 3, -half * th},
        {1, 4, half * xth},
        {2, 3, -xth},
        {2, 4, SuperFunction()},
        {3, 3, half * one},
        {3, 4, half * x},
        {4, 4, half * x2},
    };
    for (const auto& rel : table) {
        ++r.cases;
        SuperFunction got = contact_bracket(gens[static_cast<std::size_t>(rel.a)].hamiltonian(),
                                            gens[static_cast<std::size_t>(rel.b)].hamiltonian());
        if (!(got == rel.expected))
            detail::record_failure(r, "structure relation " + std::to_string(rel.a) + "," +
                                          std::to_string(rel.b) + " gave " + got.to_string());
    }

    // [X_f, X_g] = X_{{f,g}} checked on monomial probes.
    for (int af = 0; af <= 3; ++af) {
        for (int ef = 0; ef <= 1; ++ef) {
            for (int ag = 0; ag <= 3; ++ag) {
                for (int eg = 0; eg <= 1; ++eg) {
                    ++r.cases;
                    SuperFunction hf = detail::probe(af, ef);
                    SuperFunction hg = detail::probe(ag, eg);
                    ContactField Xf(hf), Xg(hg);
                    ContactField Xfg(contact_bracket(hf, hg), parity_add(Xf.parity(), Xg.parity()));
                    int sign = parity_sign(static_cast<long long>(parity_int(Xf.parity())) *
                                           parity_int(Xg.parity()));
                    bool ok = true;
                    for (int b = 0; b <= 4 && ok; ++b) {
                        for (int eta = 0; eta <= 1 && ok; ++eta) {
                            SuperFunction G = detail::probe(b, eta);
                            SuperFunction lhs =
                                Xf.apply(Xg.apply(G)) - Rational(sign) * Xg.apply(Xf.apply(G));
                            if (!(lhs == Xfg.apply(G))) ok = false;
                        }
                    }
                    if (!ok)
                        detail::record_failure(r, "bracket mismatch for f=" + hf.to_string() +
                                                      ", g=" + hg.to_string());
                }
            }
        }
    }
    return r;
}

/// Dbar squares to -d/dx, and the operator Leibniz rule for its powers.
inline CheckResult check_super_calculus(const VerifyOptions& opt) {
    CheckResult r{"super-calculus"};
    Rng rng(opt.seed ^ 0x5ca1ab1eULL);

    for (int rep = 0; rep < opt.leibniz_cases; ++rep) {
        Parity pf = rng.flip() ? Parity::odd : Parity::even;
        Parity pg = rng.flip() ? Parity::odd : Parity::even;
        SuperFunction F = random_superfunction(rng, 4, pf);
        SuperFunction G = random_superfunction(rng, 4, pg);

        for (int j = 1; j <= 3; ++j) {
            ++r.cases;
            SuperFunction pow = F.dbar_power(2 * j);
            SuperFunction ref = F;
            for (int u = 0; u < j; ++u) ref = ref.d_x();
            if (!(pow == Rational(parity_sign(j)) * ref))
                detail::record_failure(r, "Dbar^{2j} disagreed with (-1)^j d^j/dx^j at j=" +
                                              std::to_string(j));
        }

        for (int j = 0; j <= 4; ++j) {
            ++r.cases;
            SuperFunction lhs = (F * G).dbar_power(j);
            SuperFunction rhs;
            for (int m = 0; m <= j; ++m) {
                Rational c = super_binomial(j, m);
                if (c.is_zero()) continue;
                int sign = parity_sign(static_cast<long long>(parity_int(pf)) * (j - m));
                rhs += (c * Rational(sign)) * (F.dbar_power(m) * G.dbar_power(j - m));
            }
            if (!(lhs == rhs))
                detail::record_failure(r, "super Leibniz failed at j=" + std::to_string(j));
        }
    }
    return r;
}

/// The one-line coefficient formula for the module action against an
/// independent computation by operator composition.
inline CheckResult check_action_closed_vs_oracle(const VerifyOptions& opt) {
    CheckResult r{"action-closed-vs-oracle"};
    Rng rng(opt.seed ^ 0x0dd5eedULL);
    auto hams = test_hamiltonians();

    for (int n = 1; n <= opt.max_arity; ++n) {
        for (int order2 = 0; order2 <= opt.max_order2; ++order2) {
            for (int rep = 0; rep < opt.ops_per_shape; ++rep) {
                std::vector<Rational> lambdas;
                for (int t = 0; t < n; ++t) lambdas.push_back(random_rational(rng));
                Rational mu = random_rational(rng);
                NaryOperator A = random_operator(rng, n, order2, lambdas, mu, 3);
                for (const auto& h : hams) {
                    ++r.cases;
                    ContactField f(h.value);
                    NaryOperator closed = lie_operator_closed(f, A);
                    NaryOperator oracle = lie_operator_oracle(f, A);
                    if (!(closed == oracle))
                        detail::record_failure(
                            r, "n=" + std::to_string(n) + " order2=" + std::to_string(order2) +
                                   " f=" + h.name + " rep=" + std::to_string(rep));
                }
            }
        }
    }
    return r;
}

/// The symbol map intertwines the conformal action on operators with the
/// diagonal density action on symbols.
inline CheckResult check_equivariance(const VerifyOptions& opt) {
    CheckResult r{"equivariance"};
    Rng rng(opt.seed ^ 0xe9a11febULL);
    auto gens = detail::conformal_generators();

    for (int n = 1; n <= opt.max_arity; ++n) {
        for (int order2 = 0; order2 <= opt.max_order2; ++order2) {
            for (int rep = 0; rep < opt.weights_per_shape; ++rep) {
                auto [lambdas, mu] = random_weights_nonresonant(rng, n, order2);
                Rational delta = mu;
                for (const auto& l : lambdas) delta -= l;
                CoefficientTable table = build_gamma_table(n, order2, lambdas, delta);
                if (opt.mutate_sign) {
                    for (auto& [key, value] : table.entries) {
                        if (key.first.total() > key.second.total()) {
                            value = -value;
                            break;
                        }
                    }
                }
                NaryOperator A = random_operator(rng, n, order2, lambdas, mu, 3);
                for (const auto& f : gens) {
                    ++r.cases;
                    Symbol lhs = symbol_map(lie_operator_closed(f, A), table);
                    Symbol rhs = lie_symbol(f, symbol_map(A, table));
                    if (!(lhs == rhs))
                        detail::record_failure(
                            r, "n=" + std::to_string(n) + " order2=" + std::to_string(order2) +
                                   " f=" + f.hamiltonian().to_string() + " rep=" + std::to_string(rep));
                }
            }
        }
    }
    return r;
}

/// The recursion solver and the closed form build the same table, and the
/// low corank entries match their expected values.
inline CheckResult check_recursion_vs_closed(const VerifyOptions& opt) {
    CheckResult r{"recursion-vs-closed-form"};
    Rng rng(opt.seed ^ 0xcafef00dULL);

    for (int n = 1; n <= opt.max_arity; ++n) {
        for (int order2 = 0; order2 <= opt.max_order2; ++order2) {
            for (int rep = 0; rep < opt.weights_per_shape; ++rep) {
                ++r.cases;
                auto [lambdas, mu] = random_weights_nonresonant(rng, n, order2);
                Rational delta = mu;
                for (const auto& l : lambdas) delta -= l;
                CoefficientTable closed = build_gamma_table(n, order2, lambdas, delta);
                CoefficientTable solved = solve_varpi(n, order2, lambdas, delta);
                if (closed.entries != solved.entries)
                    detail::record_failure(r, "tables differ for n=" + std::to_string(n) +
                                                  " order2=" + std::to_string(order2) + " rep=" +
                                                  std::to_string(rep));
            }
        }
    }

    // Spot values at arity two, doubled order one.
    for (int rep = 0; rep < opt.weights_per_shape; ++rep) {
        ++r.cases;
        auto [lambdas, mu] = random_weights_nonresonant(rng, 2, 1);
        Rational delta = mu - lambdas[0] - lambdas[1];
        Rational den = Rational(2) * delta - Rational(1);
        Rational g10 = gamma(MultiIndex{1, 0}, MultiIndex{0, 0}, lambdas, delta);
        Rational g01 = gamma(MultiIndex{0, 1}, MultiIndex{0, 0}, lambdas, delta);
        if (!(g10 == Rational(-2) * lambdas[0] / den) || !(g01 == Rational(-2) * lambdas[1] / den))
            detail::record_failure(r, "first-level entries disagree with -2*lambda_t/(2*delta-1)");
    }
    return r;
}

/// Quantize-then-symbol and symbol-then-quantize are both the identity.
/// Also reports how often the closed-form candidate for the inverse table
/// agrees with the exact inversion (it is known to drift at corank three).
inline CheckResult check_roundtrip(const VerifyOptions& opt) {
    CheckResult r{"roundtrip"};
    Rng rng(opt.seed ^ 0xb0a7100fULL);
    long long beta_checked = 0, beta_agreed = 0;

    for (int n = 1; n <= opt.max_arity; ++n) {
        for (int order2 = 0; order2 <= opt.max_order2; ++order2) {
            for (int rep = 0; rep < opt.weights_per_shape; ++rep) {
                auto [lambdas, mu] = random_weights_nonresonant(rng, n, order2);
                Rational delta = mu;
                for (const auto& l : lambdas) delta -= l;
                CoefficientTable g = build_gamma_table(n, order2, lambdas, delta);
                CoefficientTable b = invert_gamma(g);

                ++r.cases;
                NaryOperator A = random_operator(rng, n, order2, lambdas, mu, 3);
                if (!(quantize(symbol_map(A, g), lambdas, mu, b) == A))
                    detail::record_failure(r, "operator roundtrip failed, n=" + std::to_string(n) +
                                                  " order2=" + std::to_string(order2));

                ++r.cases;
                Parity ps = rng.flip() ? Parity::odd : Parity::even;
                Symbol sigma(n, order2, delta, ps);
                for (const auto& idx : multi_indices_up_to(n, order2)) {
                    if (rng.uniform(0, 3) == 0) continue;
                    sigma.set_coefficient(idx, random_superfunction(rng, 3, sigma.coefficient_parity(idx)));
                }
                if (!(symbol_map(quantize(sigma, lambdas, mu, b), g) == sigma))
                    detail::record_failure(r, "symbol roundtrip failed, n=" + std::to_string(n) +
                                                  " order2=" + std::to_string(order2));

                for (const auto& i : multi_indices_up_to(n, order2)) {
                    for (const auto& s : multi_indices_up_to(n, order2)) {
                        if (s.total() <= i.total()) continue;
                        try {
                            Rational candidate = beta_closed_form(s, i, lambdas, delta);
                            ++beta_checked;
                            if (candidate == b.value(s, i)) ++beta_agreed;
                        } catch (const ResonantDelta&) {
                        }
                    }
                }
            }
        }
    }
    std::ostringstream note;
    note << "closed-form inverse candidate agreed on " << beta_agreed << "/" << beta_checked
         << " off-diagonal entries";
    if (r.passed) r.detail = note.str();
    return r;
}

/// Resonant weight gaps are rejected with the pivot location predicted from
/// the scan order, and the first gap past the locus succeeds.
inline CheckResult check_resonance(const VerifyOptions& opt) {
    CheckResult r{"resonance-detection"};

    for (int n = 1; n <= std::min(2, opt.max_arity); ++n) {
        std::vector<Rational> lambdas;
        for (int t = 0; t < n; ++t) lambdas.push_back(Rational(1, 3) + Rational(t, 7));
        for (int order2 = 1; order2 <= opt.resonance_max_order2; ++order2) {
            for (int v = 1; v <= order2; ++v) {
                Rational delta(v, 2);
                int p_star = std::max(0, 2 * v - 1 - order2);
                int l_star = 2 * v - 1 - p_star;
                ++r.cases;
                if (!is_resonant(delta, order2))
                    detail::record_failure(r, "locus membership missed at 2delta=" + std::to_string(v));
                for (int method = 0; method < 2; ++method) {
                    ++r.cases;
                    bool threw = false;
                    try {
                        if (method == 0)
                            build_gamma_table(n, order2, lambdas, delta);
                        else
                            solve_varpi(n, order2, lambdas, delta);
                    } catch (const ResonantDelta& e) {
                        threw = true;
                        if (e.level() != l_star || e.degree() != p_star)
                            detail::record_failure(
                                r, "wrong pivot location (" + std::to_string(e.level()) + "," +
                                       std::to_string(e.degree()) + ") at 2delta=" + std::to_string(v) +
                                       " order2=" + std::to_string(order2) +
                                       (method == 0 ? " [closed]" : " [recursion]"));
                    }
                    if (!threw)
                        detail::record_failure(r, "resonant gap accepted at 2delta=" +
                                                      std::to_string(v) +
                                                      " order2=" + std::to_string(order2));
                }
            }
            ++r.cases;
            Rational past(order2 + 1, 2);
            if (is_resonant(past, order2))
                detail::record_failure(r, "locus overshoot at 2delta=" + std::to_string(order2 + 1));
            try {
                build_gamma_table(n, order2, lambdas, past);
                solve_varpi(n, order2, lambdas, past);
            } catch (const ResonantDelta&) {
                detail::record_failure(r, "gap just past the locus rejected, order2=" +
                                              std::to_string(order2));
            }
        }
    }
    return r;
}

/// A deliberately wrong symbol map (plain top-order truncation) must break
/// equivariance for at least one conformal generator on every shape.
inline CheckResult check_negative_control(const VerifyOptions& opt) {
    CheckResult r{"negative-control"};
    auto gens = detail::conformal_generators();

    for (int n = 1; n <= opt.max_arity; ++n) {
        for (int order2 = 1; order2 <= opt.max_order2; ++order2) {
            ++r.cases;
            std::vector<Rational> lambdas(static_cast<std::size_t>(n), Rational(1, 3));
            Rational delta(1, 5);
            Rational mu = delta;
            for (const auto& l : lambdas) mu += l;

            CoefficientTable truncated{TableKind::gamma, n, order2, lambdas, delta, {}};
            for (const auto& i : multi_indices_up_to(n, order2)) truncated.set(i, i, Rational(1));

            NaryOperator A(n, order2, lambdas, mu, Parity::even);
            for (const auto& idx : multi_indices_up_to(n, order2)) {
                Polynomial body = Polynomial::monomial(1) + Polynomial(Rational(1));
                if (A.coefficient_parity(idx) == Parity::even)
                    A.set_coefficient(idx, SuperFunction(body, Polynomial()));
                else
                    A.set_coefficient(idx, SuperFunction(Polynomial(), body));
            }

            bool violated = false;
            for (const auto& f : gens) {
                Symbol lhs = symbol_map(lie_operator_closed(f, A), truncated);
                Symbol rhs = lie_symbol(f, symbol_map(A, truncated));
                if (!(lhs == rhs)) {
                    violated = true;
                    break;
                }
            }
            if (!violated)
                detail::record_failure(r, "truncated map stayed equivariant at n=" + std::to_string(n) +
                                              " order2=" + std::to_string(order2));
        }
    }
    return r;
}

inline std::vector<CheckResult> run_all_checks(const VerifyOptions& opt) {
    return {
        check_osp_commutation(opt),     check_super_calculus(opt),
        check_action_closed_vs_oracle(opt), check_equivariance(opt),
        check_recursion_vs_closed(opt), check_roundtrip(opt),
        check_resonance(opt),           check_negative_control(opt),
    };
}

/// Suite variant pinned to one shape and one set of weights, as driven by
/// the command line.  Weight-gap resonance downgrades the delta-dependent
/// suites to an explicit skip instead of an error.
inline std::vector<CheckResult> run_fixed_checks(int n, int order2,
                                                 const std::vector<Rational>& lambdas,
                                                 const Rational& mu, std::uint64_t seed, int reps,
                                                 bool mutate_sign = false) {
    std::vector<CheckResult> out;
    VerifyOptions base;
    base.seed = seed;
    out.push_back(check_osp_commutation(base));

    Rational delta = mu;
    for (const auto& l : lambdas) delta -= l;

    CheckResult recursion("recursion-vs-closed-form");
    CheckResult equiv("equivariance");
    CheckResult round("roundtrip");

    if (is_resonant(delta, order2)) {
        std::string why = "resonant: 2*delta = " + (Rational(2) * delta).to_string() +
                          " lies in [1, " + std::to_string(order2) + "]";
        for (auto* r : {&recursion, &equiv, &round}) {
            r->skipped = true;
            r->detail = why;
        }
        out.push_back(recursion);
        out.push_back(equiv);
        out.push_back(round);
        return out;
    }

    CoefficientTable g = build_gamma_table(n, order2, lambdas, delta);

    ++recursion.cases;
    if (build_gamma_table(n, order2, lambdas, delta).entries != solve_varpi(n, order2, lambdas, delta).entries)
        detail::record_failure(recursion, "recursion solution differs from the closed form");
    out.push_back(recursion);

    CoefficientTable used = g;
    if (mutate_sign) {
        for (auto& [key, value] : used.entries) {
            if (key.first.total() > key.second.total()) {
                value = -value;
                break;
            }
        }
    }
    Rng erng(seed ^ 0xf1de5ULL);
    auto gens = detail::conformal_generators();
    for (int rep = 0; rep < reps; ++rep) {
        NaryOperator A = random_operator(erng, n, order2, lambdas, mu, 3);
        for (const auto& f : gens) {
            ++equiv.cases;
            Symbol lhs = symbol_map(lie_operator_closed(f, A), used);
            Symbol rhs = lie_symbol(f, symbol_map(A, used));
            if (!(lhs == rhs) && equiv.passed) {
                std::string where;
                for (const auto& idx : multi_indices_up_to(n, order2)) {
                    if (!(lhs.coefficient(idx) == rhs.coefficient(idx))) {
                        where = " at index " + idx.to_string() + ": " +
                                lhs.coefficient(idx).to_string() + " vs " +
                                rhs.coefficient(idx).to_string();
                        break;
                    }
                }
                detail::record_failure(equiv, "generator " + f.hamiltonian().to_string() +
                                                  ", rep " + std::to_string(rep) + where);
            }
        }
    }
    out.push_back(equiv);

    CoefficientTable b = invert_gamma(g);
    Rng rrng(seed ^ 0x0c7a1ULL);
    for (int rep = 0; rep < reps; ++rep) {
        ++round.cases;
        NaryOperator A = random_operator(rrng, n, order2, lambdas, mu, 3);
        NaryOperator back = quantize(symbol_map(A, g), lambdas, mu, b);
        if (!(back == A) && round.passed) {
            for (const auto& idx : multi_indices_up_to(n, order2)) {
                if (!(back.coefficient(idx) == A.coefficient(idx))) {
                    detail::record_failure(round, "rep " + std::to_string(rep) + ", index " +
                                                      idx.to_string() + ": " +
                                                      back.coefficient(idx).to_string() + " vs " +
                                                      A.coefficient(idx).to_string());
                    break;
                }
            }
        }
    }
    out.push_back(round);
    return out;
}

} // namespace superquant
