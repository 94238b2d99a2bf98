#pragma once

#include <cmath>
#include <vector>

#include "specon/evaluator.hpp"
#include "specon/ode.hpp"
#include "specon/potential.hpp"

namespace specon {

struct SolverConfig {
    double x_max = 100.0;
    double rel_tol = 1e-9;
    double abs_tol = 1e-11;
    double max_step = 0.1;

    StepControl control() const { return {rel_tol, abs_tol, max_step, 0.0, 200'000'000}; }
};

// rotation angle of the condition at x = 0; zero is the Dirichlet case
struct Boundary {
    double alpha = 0.0;

    bool dirichlet() const { return alpha == 0.0; }

    double theta0(double s) const {
        if (dirichlet()) return 0.0;
        return -std::atan2(s * std::sin(alpha), std::cos(alpha));
    }

    // density prefactor: collapses to s in the Dirichlet case
    double prefactor(double s) const {
        const double sa = std::sin(alpha), ca = std::cos(alpha);
        return s / (s * s * sa * sa + ca * ca);
    }
};

struct PruferTrace {
    double mu = 0.0;
    double s = 0.0;
    std::vector<double> x;
    std::vector<double> theta;
};

struct SpectralSample {
    double mu = 0.0;
    double s = 0.0;
    double rho_prime = 0.0;
    double integral_value = 0.0;  // phase integral fed into the exponential
};

namespace detail {

inline void require_positive_mu(double mu) {
    if (!(mu > 0.0)) throw domain_error("mu must be positive");
}

}  // namespace detail

// theta' = s - q(x) sin^2(theta) / s along the given output grid
inline PruferTrace solve_theta(const PotentialSpec& spec, double mu, const SolverConfig& cfg,
                               const std::vector<double>& grid, const Boundary& bc = {}) {
    detail::require_positive_mu(mu);
    const double s = std::sqrt(mu);
    auto rhs = [&](double x, const std::array<double, 1>& y, std::array<double, 1>& dy) {
        const double st = std::sin(y[0]);
        dy[0] = s - spec.q(x) * st * st / s;
    };
    PruferTrace trace;
    trace.mu = mu;
    trace.s = s;
    trace.x = grid;
    const double x_end = grid.empty() ? cfg.x_max : grid.back();
    std::vector<std::array<double, 1>> at_grid;
    Dopri5<1>::integrate(rhs, 0.0, {bc.theta0(s)}, x_end, cfg.control(), grid, &at_grid);
    trace.theta.reserve(at_grid.size());
    for (const auto& y : at_grid) trace.theta.push_back(y[0]);
    return trace;
}

inline PruferTrace solve_theta(const PotentialSpec& spec, double mu, const SolverConfig& cfg,
                               const Boundary& bc = {}) {
    std::vector<double> grid(1001);
    for (std::size_t i = 0; i < grid.size(); ++i)
        grid[i] = cfg.x_max * static_cast<double>(i) / (grid.size() - 1);
    return solve_theta(spec, mu, cfg, grid, bc);
}

/// truncated classical form: rho' = prefactor/pi * exp(-1/s * int_0^X q sin 2theta)
inline SpectralSample rho_prime_direct(const PotentialSpec& spec, double mu, double x_trunc,
                                       const SolverConfig& cfg, const Boundary& bc = {}) {
    detail::require_positive_mu(mu);
    if (!(x_trunc > 0.0)) throw domain_error("truncation point must be positive");
    const double s = std::sqrt(mu);
    auto rhs = [&](double x, const std::array<double, 2>& y, std::array<double, 2>& dy) {
        const double st = std::sin(y[0]);
        const double q = spec.q(x);
        dy[0] = s - q * st * st / s;
        dy[1] = q * std::sin(2.0 * y[0]);
    };
    const auto yend =
        Dopri5<2>::integrate(rhs, 0.0, {bc.theta0(s), 0.0}, x_trunc, cfg.control());
    SpectralSample out;
    out.mu = mu;
    out.s = s;
    out.integral_value = yend[1];
    out.rho_prime = bc.prefactor(s) / pi * std::exp(-yend[1] / s);
    return out;
}

// coupled accelerated form: I0' = residual(x, theta), I0(0) = boundary constant;
// theta values at probe_x (sorted, within [0, x_max]) are captured from the same pass
inline SpectralSample rho_prime_accelerated(const FrozenEvaluator& eval,
                                            const PotentialSpec& spec, const SolverConfig& cfg,
                                            const std::vector<double>& probe_x = {},
                                            std::vector<double>* theta_at_probe = nullptr) {
    const double s = eval.s();
    auto rhs = [&](double x, const std::array<double, 2>& y, std::array<double, 2>& dy) {
        const double st = std::sin(y[0]);
        dy[0] = s - spec.q(x) * st * st / s;
        dy[1] = eval.residual(x, y[0]);
    };
    std::vector<std::array<double, 2>> at_grid;
    const auto yend = Dopri5<2>::integrate(rhs, 0.0, {0.0, eval.constant()}, cfg.x_max,
                                           cfg.control(), probe_x,
                                           theta_at_probe ? &at_grid : nullptr);
    if (theta_at_probe) {
        theta_at_probe->clear();
        theta_at_probe->reserve(at_grid.size());
        for (const auto& y : at_grid) theta_at_probe->push_back(y[0]);
    }
    SpectralSample out;
    out.mu = eval.mu();
    out.s = s;
    out.integral_value = yend[1];
    out.rho_prime = s / pi * std::exp(-yend[1] / s);
    return out;
}

inline SpectralSample rho_prime_accelerated(const Expansion& exp, const PotentialSpec& spec,
                                            double mu, const SolverConfig& cfg,
                                            const EvalOptions& opts = {}) {
    FrozenEvaluator eval(exp, spec, mu, opts);
    return rho_prime_accelerated(eval, spec, cfg);
}

}  // namespace specon
