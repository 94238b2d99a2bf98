#pragma once

#include <cmath>
#include <set>
#include <string>

#include "specon/common.hpp"
#include "specon/rational.hpp"

namespace specon {

// q(x) = xi(x) cos x with envelope xi(x) = -c (1+x)^(-a)
struct PotentialSpec {
    double c;
    double a;
    int max_order;

    explicit PotentialSpec(double c_, double a_, int max_order_ = 6)
        : c(c_), a(a_), max_order(max_order_) {
        if (!(c >= 0.0)) throw domain_error("potential amplitude must be nonnegative");
        if (!(a > 0.0)) throw domain_error("decay exponent must be positive");
        if (max_order < 0 || max_order > 30) throw domain_error("bad max derivative order");
    }

    // rising factorial a (a+1) ... (a+k-1)
    double rising(int k) const {
        double r = 1.0;
        for (int i = 0; i < k; ++i) r *= a + i;
        return r;
    }

    // k-th derivative of the envelope: -c (-1)^k (a)_k (1+x)^(-a-k)
    double xi(int k, double x) const {
        if (k < 0 || k > max_order)
            throw unsupported_order_error("xi derivative order " + std::to_string(k) +
                                          " outside supported range [0," +
                                          std::to_string(max_order) + "]");
        const double sign = (k % 2 == 0) ? -1.0 : 1.0;
        return sign * c * rising(k) * std::pow(1.0 + x, -a - k);
    }

    double xi0(int k) const { return xi(k, 0.0); }

    double q(double x) const { return xi(0, x) * std::cos(x); }
};

inline double xi_derivative(const PotentialSpec& spec, int k, double x) { return spec.xi(k, x); }

// where the closed-form density holds and which mu values the representation misses
struct ValidityReport {
    int resonance_depth;               // largest M with a*M <= 1
    std::set<Rational> excluded_mu;    // N^2/4 for harmonics reachable within depth M
    std::string note;
};

inline ValidityReport classify_validity(const PotentialSpec& spec) {
    ValidityReport rep;
    int m = static_cast<int>(std::floor(1.0 / spec.a));
    while (spec.a * (m + 1) <= 1.0) ++m;
    while (m > 0 && spec.a * m > 1.0) --m;
    rep.resonance_depth = m;
    if (m == 0) {
        rep.note = "integrable envelope tail, density formula valid for all mu > 0";
        return rep;
    }
    // powers q^m up to m = M contribute harmonics N <= m of the same parity as m
    for (int mm = 1; mm <= m; ++mm)
        for (int n = mm; n >= 1; n -= 2) rep.excluded_mu.insert(Rational(n * n, 4));
    rep.note = "resonance depth " + std::to_string(m) +
               ", density formula valid for mu > 0 outside the excluded set";
    return rep;
}

}  // namespace specon
