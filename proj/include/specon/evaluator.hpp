#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "specon/expansion.hpp"

namespace specon {

struct EvalOptions {
    double resonance_guard = 1e-3;  // reject evaluation when |alpha*s + beta| falls below this
};

inline void check_admissible(const Expansion& exp, double mu, const EvalOptions& opts = {}) {
    if (!(mu > 0.0)) throw domain_error("mu must be positive");
    for (const auto& q : exp.excluded_mu)
        if (mu == q.to_double())
            throw excluded_value_error(
                "mu = " + q.to_string() + " is excluded from the accelerated representation", mu,
                q.to_double());
    const double s = std::sqrt(mu);
    for (const auto& d : exp.divisor_set()) {
        if (d.alpha == 0) continue;
        if (std::fabs(d.alpha * s + d.beta) < opts.resonance_guard) {
            const double root = static_cast<double>(d.beta) / d.alpha;
            const double at = root * root;
            throw excluded_value_error("mu = " + std::to_string(mu) +
                                           " is within the resonance guard of excluded value " +
                                           Rational(static_cast<std::int64_t>(d.beta) * d.beta,
                                                    static_cast<std::int64_t>(d.alpha) * d.alpha)
                                               .to_string(),
                                       mu, at);
        }
    }
}

// per-mu compiled form of an expansion: coefficients frozen to doubles and
// oscillatory terms grouped by phase so each evaluation does one sincos per phase
class FrozenEvaluator {
public:
    FrozenEvaluator(const Expansion& exp, const PotentialSpec& spec, double mu,
                    const EvalOptions& opts = {})
        : spec_(spec), mu_(mu) {
        if (spec.a != exp.a) throw domain_error("expansion was built for a different decay exponent");
        check_admissible(exp, mu, opts);
        s_ = std::sqrt(mu);
        c0_ = evaluate_constant_sum(exp, spec, s_);
        for (const auto& t : exp.residual) {
            Group* g = nullptr;
            for (auto& cand : groups_)
                if (cand.alpha == t.alpha && cand.beta == t.beta) {
                    g = &cand;
                    break;
                }
            if (!g) {
                groups_.push_back({t.alpha, t.beta, {}, {}});
                g = &groups_.back();
            }
            Part part{t.coeff.value(s_), t.factor.powers()};
            if (t.factor.max_order() > max_k_) max_k_ = t.factor.max_order();
            if (t.factor.max_order() > spec.max_order)
                throw unsupported_order_error("expansion needs xi derivatives beyond max_order");
            (t.kind == TermKind::I ? g->sin_parts : g->cos_parts).push_back(std::move(part));
        }
    }

    double mu() const { return mu_; }
    double s() const { return s_; }

    // I0(0), the boundary contribution collected by the rewrites
    double constant() const { return c0_; }

    // integrand of the tail integral at (x, theta)
    double residual(double x, double theta) const {
        std::array<double, 32> xik;
        fill_xik(x, xik);
        double sum = 0.0;
        for (const auto& g : groups_) {
            double amp_sin = 0.0, amp_cos = 0.0;
            for (const auto& p : g.sin_parts) amp_sin += p.coef * prod(xik, p.powers);
            for (const auto& p : g.cos_parts) amp_cos += p.coef * prod(xik, p.powers);
            const double phase = g.alpha * theta + g.beta * x;
            double sp, cp;
            sincos_pair(phase, sp, cp);
            sum += amp_sin * sp + amp_cos * cp;
        }
        return sum;
    }

    // envelope bound: sum of |coef| |F(x)| dominates |residual| at any theta
    double decay_bound(double x) const {
        std::array<double, 32> xik;
        fill_xik(x, xik);
        double sum = 0.0;
        for (const auto& g : groups_) {
            for (const auto& p : g.sin_parts) sum += std::fabs(p.coef * prod(xik, p.powers));
            for (const auto& p : g.cos_parts) sum += std::fabs(p.coef * prod(xik, p.powers));
        }
        return sum;
    }

private:
    struct Part {
        double coef;
        std::vector<std::pair<int, int>> powers;
    };
    struct Group {
        int alpha;
        int beta;
        std::vector<Part> sin_parts, cos_parts;
    };

    void fill_xik(double x, std::array<double, 32>& xik) const {
        xik[0] = -spec_.c * std::pow(1.0 + x, -spec_.a);
        for (int k = 1; k <= max_k_; ++k)
            xik[k] = xik[k - 1] * (-(spec_.a + k - 1) / (1.0 + x));
    }

    static double prod(const std::array<double, 32>& xik,
                       const std::vector<std::pair<int, int>>& powers) {
        double v = 1.0;
        for (const auto& [k, p] : powers)
            for (int i = 0; i < p; ++i) v *= xik[k];
        return v;
    }

    static void sincos_pair(double phase, double& sp, double& cp) {
#if defined(__GNUC__)
        __builtin_sincos(phase, &sp, &cp);
#else
        sp = std::sin(phase);
        cp = std::cos(phase);
#endif
    }

    PotentialSpec spec_;
    double mu_;
    double s_ = 0.0;
    double c0_ = 0.0;
    int max_k_ = 0;
    std::vector<Group> groups_;
};

inline double evaluate_constant(const Expansion& exp, const PotentialSpec& spec, double mu,
                                const EvalOptions& opts = {}) {
    return FrozenEvaluator(exp, spec, mu, opts).constant();
}

inline double evaluate_residual(const Expansion& exp, const PotentialSpec& spec, double mu,
                                double x, double theta, const EvalOptions& opts = {}) {
    return FrozenEvaluator(exp, spec, mu, opts).residual(x, theta);
}

}  // namespace specon
