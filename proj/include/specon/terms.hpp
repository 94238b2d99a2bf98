#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "specon/potential.hpp"
#include "specon/rational.hpp"

namespace specon {

// product of envelope derivatives, e.g. {(0,1),(2,1)} is xi * xi''
class DerivativeProduct {
public:
    DerivativeProduct() = default;

    DerivativeProduct(std::initializer_list<std::pair<int, int>> powers) {
        for (const auto& [k, p] : powers) multiply(k, p);
    }

    static DerivativeProduct xi(int order, int exponent = 1) {
        DerivativeProduct m;
        m.multiply(order, exponent);
        return m;
    }

    bool one() const { return p_.empty(); }

    int degree() const {
        int d = 0;
        for (const auto& [k, p] : p_) d += p;
        return d;
    }

    // decay order of the product: each factor xi^(k) decays like (1+x)^(-a-k)
    double order(double a) const {
        double o = 0.0;
        for (const auto& [k, p] : p_) o += p * (a + k);
        return o;
    }

    int max_order() const { return p_.empty() ? -1 : p_.back().first; }

    int exponent(int k) const {
        for (const auto& [kk, p] : p_)
            if (kk == k) return p;
        return 0;
    }

    DerivativeProduct times(const DerivativeProduct& other) const {
        DerivativeProduct m = *this;
        for (const auto& [k, p] : other.p_) m.multiply(k, p);
        return m;
    }

    DerivativeProduct times_xi() const { return times(xi(0)); }

    // product rule: returns (coefficient, monomial) pairs summing to d/dx of this
    std::vector<std::pair<int, DerivativeProduct>> derivative() const {
        std::vector<std::pair<int, DerivativeProduct>> out;
        for (std::size_t i = 0; i < p_.size(); ++i) {
            DerivativeProduct m;
            for (std::size_t j = 0; j < p_.size(); ++j) {
                auto [k, p] = p_[j];
                if (j == i) --p;
                if (p > 0) m.multiply(k, p);
            }
            m.multiply(p_[i].first + 1, 1);
            out.emplace_back(p_[i].second, std::move(m));
        }
        return out;
    }

    double value(const PotentialSpec& spec, double x) const {
        double v = 1.0;
        for (const auto& [k, p] : p_) {
            const double b = spec.xi(k, x);
            for (int i = 0; i < p; ++i) v *= b;
        }
        return v;
    }

    double value_at_zero(const PotentialSpec& spec) const { return value(spec, 0.0); }

    const std::vector<std::pair<int, int>>& powers() const { return p_; }

    friend bool operator==(const DerivativeProduct& a, const DerivativeProduct& b) {
        return a.p_ == b.p_;
    }

    friend bool operator<(const DerivativeProduct& a, const DerivativeProduct& b) {
        return a.p_ < b.p_;
    }

    std::string to_string() const {
        if (p_.empty()) return "1";
        std::string s;
        for (const auto& [k, p] : p_) {
            if (!s.empty()) s += "*";
            std::string base = "xi";
            if (k <= 4)
                base += std::string(static_cast<std::size_t>(k), '\'');
            else
                base += "^(" + std::to_string(k) + ")";
            s += base;
            if (p > 1) s += "^" + std::to_string(p);
        }
        return s;
    }

private:
    void multiply(int k, int p) {
        if (k < 0 || p <= 0) throw domain_error("bad derivative product entry");
        auto it = std::lower_bound(p_.begin(), p_.end(), std::make_pair(k, 0));
        if (it != p_.end() && it->first == k)
            it->second += p;
        else
            p_.insert(it, {k, p});
    }

    std::vector<std::pair<int, int>> p_;  // (order, exponent) sorted by order
};

// linear factor alpha*s + beta appearing in a coefficient denominator
struct Divisor {
    int alpha;
    int beta;

    friend bool operator==(const Divisor&, const Divisor&) = default;
    friend auto operator<=>(const Divisor&, const Divisor&) = default;

    std::string to_string() const {
        std::string s = std::to_string(alpha) + "s";
        if (beta > 0) s += "+" + std::to_string(beta);
        if (beta < 0) s += std::to_string(beta);
        return s;
    }
};

// rational * s^(-s_inverse) / product of divisors
struct CoefficientS {
    Rational r{0};
    int s_inverse = 0;
    std::vector<Divisor> divisors;

    double value(double s) const {
        double v = r.to_double() * std::pow(s, -s_inverse);
        for (const auto& d : divisors) v /= d.alpha * s + d.beta;
        return v;
    }

    CoefficientS scaled(const Rational& f) const {
        CoefficientS c = *this;
        c.r = c.r * f;
        return c;
    }

    CoefficientS with_s_inverse(int add) const {
        CoefficientS c = *this;
        c.s_inverse += add;
        return c;
    }

    // divide by (alpha*s + beta); a pure constant folds into the rational part
    CoefficientS with_divisor(int alpha, int beta) const {
        CoefficientS c = *this;
        if (alpha == 0) {
            c.r = c.r / Rational(beta);
        } else {
            c.divisors.push_back({alpha, beta});
            std::sort(c.divisors.begin(), c.divisors.end());
        }
        return c;
    }

    bool same_shape(const CoefficientS& o) const {
        return s_inverse == o.s_inverse && divisors == o.divisors;
    }

    friend bool operator==(const CoefficientS& a, const CoefficientS& b) {
        return a.r == b.r && a.s_inverse == b.s_inverse && a.divisors == b.divisors;
    }

    std::string to_string() const {
        std::string s = r.to_string();
        if (s_inverse == 1) s += " s^-1";
        if (s_inverse > 1) s += " s^-" + std::to_string(s_inverse);
        if (!divisors.empty()) {
            s += " / (";
            for (std::size_t i = 0; i < divisors.size(); ++i) {
                if (i) s += ")(";
                s += divisors[i].to_string();
            }
            s += ")";
        }
        return s;
    }
};

enum class TermKind { I, J };  // sin / cos integrand

// coeff * integral over [0, inf) of F(x) {sin|cos}(alpha*theta + beta*x) dx
struct SymbolicTerm {
    TermKind kind;
    CoefficientS coeff;
    int alpha;
    int beta;
    DerivativeProduct factor;
    int generation = 0;

    // canonical phase sign: alpha > 0, or alpha == 0 with beta >= 0
    void normalize() {
        if (alpha < 0 || (alpha == 0 && beta < 0)) {
            alpha = -alpha;
            beta = -beta;
            if (kind == TermKind::I) coeff.r = -coeff.r;
        }
    }

    bool resonant() const { return alpha == 0 && beta == 0; }

    double integrand(const PotentialSpec& spec, double x, double theta) const {
        const double phase = alpha * theta + beta * x;
        const double osc = kind == TermKind::I ? std::sin(phase) : std::cos(phase);
        return factor.value(spec, x) * osc;
    }

    std::string to_string() const {
        std::string s = kind == TermKind::I ? "I[" : "J[";
        s += factor.to_string() + "](" + std::to_string(alpha) + "," + std::to_string(beta) +
             ") * " + coeff.to_string();
        return s;
    }
};

// boundary constant: coeff * factor evaluated at x = 0
struct ConstantTerm {
    CoefficientS coeff;
    DerivativeProduct factor;

    double value(const PotentialSpec& spec, double s) const {
        return coeff.value(s) * factor.value_at_zero(spec);
    }

    std::string to_string() const {
        return factor.to_string() + "(0) * " + coeff.to_string();
    }
};

struct PhaseShift {
    int dalpha;
    int dbeta;
    int weight;  // over a common denominator of 8
};

// cos x sin^2(theta) sin(P) = sum of w/8 sin(P + dalpha*theta + dbeta*x), same with cos
inline constexpr std::array<PhaseShift, 6> trig_shift_table = {{
    {0, 1, 2},
    {0, -1, 2},
    {2, 1, -1},
    {-2, -1, -1},
    {2, -1, -1},
    {-2, 1, -1},
}};

inline double trig_shift_sum_sin(double theta, double x, int alpha, int beta) {
    double v = 0.0;
    for (const auto& sh : trig_shift_table)
        v += sh.weight * std::sin((alpha + sh.dalpha) * theta + (beta + sh.dbeta) * x);
    return v / 8.0;
}

inline double trig_shift_sum_cos(double theta, double x, int alpha, int beta) {
    double v = 0.0;
    for (const auto& sh : trig_shift_table)
        v += sh.weight * std::cos((alpha + sh.dalpha) * theta + (beta + sh.dbeta) * x);
    return v / 8.0;
}

}  // namespace specon
