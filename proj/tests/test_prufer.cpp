#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "specon/prufer.hpp"

using Catch::Approx;
using specon::Boundary;
using specon::PotentialSpec;
using specon::SolverConfig;

TEST_CASE("a free potential gives the linear phase and the free density", "[prufer]") {
    const PotentialSpec spec(0.0, 2.0);
    SolverConfig cfg;
    cfg.x_max = 50.0;
    for (const double mu : {0.3, 1.7, 4.0}) {
        const double s = std::sqrt(mu);
        const auto tr = specon::solve_theta(spec, mu, cfg);
        REQUIRE(tr.x.size() == tr.theta.size());
        for (std::size_t i = 0; i < tr.x.size(); i += 100)
            CHECK(tr.theta[i] == Approx(s * tr.x[i]).margin(1e-9));

        const auto sample = specon::rho_prime_direct(spec, mu, 200.0, cfg);
        CHECK(sample.rho_prime == Approx(s / specon::pi).margin(1e-10));
        CHECK(sample.integral_value == Approx(0.0).margin(1e-10));
        CHECK(sample.s == Approx(s));
    }
}

TEST_CASE("theta starts at the boundary rotation", "[prufer]") {
    const Boundary dirichlet;
    CHECK(dirichlet.dirichlet());
    CHECK(dirichlet.theta0(1.3) == 0.0);
    CHECK(dirichlet.prefactor(1.3) == Approx(1.3));

    Boundary rotated;
    rotated.alpha = specon::pi / 2.0;
    CHECK_FALSE(rotated.dirichlet());
    CHECK(rotated.theta0(2.0) == Approx(-std::atan2(2.0, 0.0)));
    CHECK(rotated.prefactor(2.0) == Approx(0.5));  // s / (s^2 sin^2 + cos^2)

    const PotentialSpec spec(1.0, 2.0);
    const SolverConfig cfg;
    const std::vector<double> grid{0.0, 1.0};
    const auto tr = specon::solve_theta(spec, 2.0, cfg, grid, rotated);
    CHECK(tr.theta[0] == Approx(rotated.theta0(std::sqrt(2.0))));
}

TEST_CASE("invalid arguments are rejected", "[prufer]") {
    const PotentialSpec spec(1.0, 2.0);
    const SolverConfig cfg;
    CHECK_THROWS_AS(specon::solve_theta(spec, 0.0, cfg), specon::domain_error);
    CHECK_THROWS_AS(specon::solve_theta(spec, -2.0, cfg), specon::domain_error);
    CHECK_THROWS_AS(specon::rho_prime_direct(spec, 1.0, 0.0, cfg), specon::domain_error);
    CHECK_THROWS_AS(specon::rho_prime_direct(spec, -1.0, 10.0, cfg), specon::domain_error);
}

TEST_CASE("the accelerated and direct densities agree away from holes", "[prufer]") {
    const PotentialSpec spec(1.0, 3.0, 8);
    const auto exp = specon::expand(spec);
    SolverConfig cfg;
    cfg.x_max = 100.0;
    for (const double mu : {0.7, 2.0}) {
        const auto acc = specon::rho_prime_accelerated(exp, spec, mu, cfg);
        const auto dir = specon::rho_prime_direct(spec, mu, 4000.0, cfg);
        CHECK(acc.rho_prime == Approx(dir.rho_prime).epsilon(1e-5));
        CHECK(acc.rho_prime > 0.0);
    }
}

TEST_CASE("probe capture returns theta from the same pass", "[prufer]") {
    const PotentialSpec spec(2.0, 2.0);
    const auto exp = specon::expand(spec);
    SolverConfig cfg;
    const double mu = 0.8;
    const std::vector<double> probes{1.0, 5.0, 12.5, 40.0};

    const specon::FrozenEvaluator eval(exp, spec, mu);
    std::vector<double> captured;
    const auto sample = specon::rho_prime_accelerated(eval, spec, cfg, probes, &captured);
    REQUIRE(captured.size() == probes.size());

    const auto tr = specon::solve_theta(spec, mu, cfg, probes);
    for (std::size_t i = 0; i < probes.size(); ++i)
        CHECK(captured[i] == Approx(tr.theta[i]).margin(1e-7));

    // the sample reassembles from its own fields
    CHECK(sample.rho_prime ==
          Approx(sample.s / specon::pi * std::exp(-sample.integral_value / sample.s)));
}

TEST_CASE("the phase integral links the two density forms", "[prufer]") {
    const PotentialSpec spec(1.0, 2.5, 8);
    const SolverConfig cfg;
    const double mu = 1.3, s = std::sqrt(mu);
    const auto dir = specon::rho_prime_direct(spec, mu, 500.0, cfg);
    CHECK(dir.rho_prime == Approx(s / specon::pi * std::exp(-dir.integral_value / s)));
}
