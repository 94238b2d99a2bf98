#pragma once

#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "specon/terms.hpp"

namespace specon {

struct ExpandOptions {
    double epsilon_order = 6.0;  // keep rewriting while the factor decay order is below this
    int max_degree = 3;          // and the factor degree is below this
    int max_depth = 0;           // 0 means no generation cap
};

struct RewriteResult {
    std::vector<ConstantTerm> constants;
    std::vector<SymbolicTerm> terms;
};

struct Expansion {
    double a;
    ExpandOptions options;
    std::vector<ConstantTerm> constants;
    std::vector<SymbolicTerm> residual;
    std::set<Rational> excluded_mu;
    int rewrite_count = 0;
    int folded_count = 0;  // resonant cos terms folded into boundary constants
    int generations = 0;

    std::set<DerivativeProduct> residual_factors() const {
        std::set<DerivativeProduct> out;
        for (const auto& t : residual) out.insert(t.factor);
        return out;
    }

    std::set<Divisor> divisor_set() const {
        std::set<Divisor> out;
        for (const auto& t : residual)
            out.insert(t.coeff.divisors.begin(), t.coeff.divisors.end());
        for (const auto& t : constants)
            out.insert(t.coeff.divisors.begin(), t.coeff.divisors.end());
        return out;
    }
};

// 2 * integral of q sin 2theta splits into sin(2theta + x) and sin(2theta - x) parts
inline std::vector<SymbolicTerm> seed() {
    SymbolicTerm plus{TermKind::I, {Rational(1, 2), 0, {}}, 2, 1, DerivativeProduct::xi(0), 1};
    SymbolicTerm minus{TermKind::I, {Rational(1, 2), 0, {}}, 2, -1, DerivativeProduct::xi(0), 1};
    return {plus, minus};
}

namespace detail {

inline void push_term(std::vector<SymbolicTerm>& out, SymbolicTerm t) {
    if (t.coeff.r.zero()) return;
    t.normalize();
    if (t.kind == TermKind::I && t.resonant()) return;  // sin of zero phase
    out.push_back(std::move(t));
}

}  // namespace detail

// (alpha s + beta) I(F) = F(0) + J(F') + alpha/s K(F xi), K expanded through phase shifts
inline RewriteResult rewrite_I(const SymbolicTerm& t) {
    if (t.kind != TermKind::I) throw rewrite_error("rewrite_I needs a sin term");
    if (t.resonant()) throw rewrite_error("cannot rewrite a zero-phase term");
    RewriteResult out;
    const CoefficientS base = t.coeff.with_divisor(t.alpha, t.beta);
    out.constants.push_back({base, t.factor});
    for (const auto& [ci, mi] : t.factor.derivative())
        detail::push_term(out.terms,
                          {TermKind::J, base.scaled(Rational(ci)), t.alpha, t.beta, mi,
                           t.generation + 1});
    const CoefficientS kbase = base.scaled(Rational(t.alpha)).with_s_inverse(1);
    const DerivativeProduct fxi = t.factor.times_xi();
    for (const auto& sh : trig_shift_table)
        detail::push_term(out.terms,
                          {TermKind::I, kbase.scaled(Rational(sh.weight, 8)), t.alpha + sh.dalpha,
                           t.beta + sh.dbeta, fxi, t.generation + 1});
    return out;
}

// (alpha s + beta) J(F) = -I(F') + alpha/s L(F xi), L expanded the same way
inline RewriteResult rewrite_J(const SymbolicTerm& t) {
    if (t.kind != TermKind::J) throw rewrite_error("rewrite_J needs a cos term");
    if (t.resonant()) throw rewrite_error("cannot rewrite a zero-phase term");
    RewriteResult out;
    const CoefficientS base = t.coeff.with_divisor(t.alpha, t.beta);
    for (const auto& [ci, mi] : t.factor.derivative())
        detail::push_term(out.terms,
                          {TermKind::I, base.scaled(Rational(-ci)), t.alpha, t.beta, mi,
                           t.generation + 1});
    const CoefficientS lbase = base.scaled(Rational(t.alpha)).with_s_inverse(1);
    const DerivativeProduct fxi = t.factor.times_xi();
    for (const auto& sh : trig_shift_table)
        detail::push_term(out.terms,
                          {TermKind::J, lbase.scaled(Rational(sh.weight, 8)), t.alpha + sh.dalpha,
                           t.beta + sh.dbeta, fxi, t.generation + 1});
    return out;
}

// integral over [0, inf) of an exact-derivative product, as boundary monomials at x = 0
inline std::optional<std::vector<std::pair<Rational, DerivativeProduct>>> integrate_exactly(
    const DerivativeProduct& m, int depth = 0) {
    using Piece = std::pair<Rational, DerivativeProduct>;
    if (depth > 8) return std::nullopt;
    if (m.one() || m.max_order() == 0) return std::nullopt;
    const int k = m.max_order();
    const auto& pw = m.powers();
    if (pw.size() == 1 && pw[0].second == 1)
        return std::vector<Piece>{{Rational(-1), DerivativeProduct::xi(k - 1)}};
    if (pw.size() == 2 && pw[1].second == 1 && pw[1].first == pw[0].first + 1) {
        const int p = pw[0].second;
        return std::vector<Piece>{
            {Rational(-1, p + 1), DerivativeProduct::xi(k - 1, p + 1)}};
    }
    if (m.exponent(k) != 1) return std::nullopt;
    DerivativeProduct g;
    for (const auto& [kk, p] : pw)
        if (kk != k) g = g.times(DerivativeProduct::xi(kk, p));
    std::vector<Piece> acc{{Rational(-1), g.times(DerivativeProduct::xi(k - 1))}};
    Rational self(1);
    for (const auto& [ci, mi] : g.derivative()) {
        const DerivativeProduct child = mi.times(DerivativeProduct::xi(k - 1));
        if (child == m) {
            self = self + Rational(ci);
            continue;
        }
        auto sub = integrate_exactly(child, depth + 1);
        if (!sub) return std::nullopt;
        for (const auto& [ri, bi] : *sub) acc.push_back({Rational(-ci) * ri, bi});
    }
    for (auto& [ri, bi] : acc) ri = ri / self;
    return acc;
}

namespace detail {

inline void merge_terms(std::vector<SymbolicTerm>& terms) {
    using Key = std::tuple<TermKind, int, int, DerivativeProduct, int, std::vector<Divisor>>;
    std::map<Key, SymbolicTerm> merged;
    for (auto& t : terms) {
        Key key{t.kind, t.alpha, t.beta, t.factor, t.coeff.s_inverse, t.coeff.divisors};
        auto [it, fresh] = merged.try_emplace(std::move(key), t);
        if (!fresh) it->second.coeff.r = it->second.coeff.r + t.coeff.r;
    }
    terms.clear();
    for (auto& [key, t] : merged)
        if (!t.coeff.r.zero()) terms.push_back(std::move(t));
}

inline void merge_constants(std::vector<ConstantTerm>& terms) {
    using Key = std::tuple<DerivativeProduct, int, std::vector<Divisor>>;
    std::map<Key, ConstantTerm> merged;
    for (auto& t : terms) {
        Key key{t.factor, t.coeff.s_inverse, t.coeff.divisors};
        auto [it, fresh] = merged.try_emplace(std::move(key), t);
        if (!fresh) it->second.coeff.r = it->second.coeff.r + t.coeff.r;
    }
    terms.clear();
    for (auto& [key, t] : merged)
        if (!t.coeff.r.zero()) terms.push_back(std::move(t));
}

}  // namespace detail

inline Expansion expand(const PotentialSpec& spec, const ExpandOptions& opts = {}) {
    Expansion out;
    out.a = spec.a;
    out.options = opts;
    auto reducible = [&](const SymbolicTerm& t, int gen) {
        if (t.resonant()) return false;
        if (opts.max_depth > 0 && gen > opts.max_depth) return false;
        return t.factor.order(spec.a) < opts.epsilon_order &&
               t.factor.degree() < opts.max_degree;
    };
    std::vector<SymbolicTerm> gen = seed();
    int g = 1;
    while (!gen.empty()) {
        detail::merge_terms(gen);
        std::vector<SymbolicTerm> next;
        for (const auto& t : gen) {
            if (!reducible(t, g)) {
                out.residual.push_back(t);
                continue;
            }
            RewriteResult rr = t.kind == TermKind::I ? rewrite_I(t) : rewrite_J(t);
            ++out.rewrite_count;
            if (t.alpha > 0 && t.beta < 0)
                out.excluded_mu.insert(Rational(static_cast<std::int64_t>(t.beta) * t.beta,
                                                static_cast<std::int64_t>(t.alpha) * t.alpha));
            for (auto& c : rr.constants) out.constants.push_back(std::move(c));
            for (auto& nt : rr.terms) next.push_back(std::move(nt));
        }
        gen = std::move(next);
        ++g;
    }
    out.generations = g - 1;
    std::vector<SymbolicTerm> kept;
    for (auto& t : out.residual) {
        if (t.kind == TermKind::J && t.resonant()) {
            if (auto folded = integrate_exactly(t.factor)) {
                for (const auto& [ri, bi] : *folded)
                    out.constants.push_back({t.coeff.scaled(ri), bi});
                ++out.folded_count;
                continue;
            }
        }
        kept.push_back(std::move(t));
    }
    out.residual = std::move(kept);
    detail::merge_terms(out.residual);
    detail::merge_constants(out.constants);
    return out;
}

inline double evaluate_constant_sum(const Expansion& exp, const PotentialSpec& spec, double s) {
    double v = 0.0;
    for (const auto& t : exp.constants) v += t.value(spec, s);
    return v;
}

}  // namespace specon
