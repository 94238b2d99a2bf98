#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "specon/concentrate.hpp"

using Catch::Approx;
using namespace specon;

TEST_CASE("interval landmarks sit at the half-integer multiples of pi", "[concentrate]") {
    const auto p0 = interval_probes(0);
    CHECK(p0.x1 == Approx(0.5 * pi));
    CHECK(p0.xmid == Approx(pi));
    CHECK(p0.x2 == Approx(1.5 * pi));
    const auto p2 = interval_probes(2);
    CHECK(p2.x1 == Approx(4.5 * pi));
    CHECK(p2.x2 == Approx(5.5 * pi));
}

TEST_CASE("points are labelled by interval and oscillation count", "[concentrate]") {
    ConcentrationPoint p;
    p.r = 0;
    p.N = 2;
    CHECK(p.label() == "mu(2)");
    p.r = 1;
    p.N = 3;
    CHECK(p.label() == "nu(3)");
    p.r = 2;
    p.N = 0;
    CHECK(p.label() == "xi(0)");
    p.r = 3;
    p.N = 1;
    CHECK(p.label() == "w3(1)");
}

TEST_CASE("a strong potential produces a detectable phase transition", "[concentrate]") {
    const PotentialSpec spec(49.26, 2.0);
    ScanConfig sc;
    sc.r_max = 0;
    const SolverConfig cfg;
    const auto hit = detect_transition(spec, 0.25, sc, cfg);
    REQUIRE(hit.has_value());
    CHECK(hit->r == 0);
    CHECK(hit->N == 1);
    CHECK(hit->mu == Approx(0.25).margin(5e-3));
    CHECK(hit->jump > 0.5 * pi);
    CHECK(hit->jump < 2.0 * pi);
    CHECK(hit->probe_width >= sc.probe_width_min);
}

TEST_CASE("the free potential has no transitions", "[concentrate]") {
    const PotentialSpec spec(0.0, 2.0);
    ScanConfig sc;
    sc.r_max = 0;
    CHECK_FALSE(detect_transition(spec, 0.5, sc, SolverConfig{}).has_value());
}

TEST_CASE("a density maximum is attributed to the first interval", "[concentrate]") {
    const PotentialSpec spec(2.0, 2.0);
    const ScanConfig sc;
    const auto classes = classify_maximum(spec, 0.553, sc, SolverConfig{});
    REQUIRE(classes.size() == 3);  // one reading per interval up to r_max
    CHECK(classes.front().r == 0);
    CHECK(classes.front().N == 0);
    CHECK(classes.front().slope > classes[1].slope);
    CHECK(classes[1].slope > classes[2].slope);
}

TEST_CASE("a scan across a resonance hole reports the hole and the point", "[concentrate]") {
    const PotentialSpec spec(49.26, 2.0);
    const auto exp = expand(spec);
    ScanConfig sc;
    sc.mu_min = 0.2;
    sc.mu_max = 0.3;
    sc.mu_step = 0.005;
    sc.r_max = 0;
    const auto res = scan_concentration(exp, spec, sc, SolverConfig{});

    CHECK(res.grid_mu.size() == 21);
    REQUIRE(res.hole_mu.size() == 1);
    CHECK(res.hole_mu.front() == Approx(0.25).margin(1e-9));
    int nan_count = 0;
    for (const double v : res.grid_rho) nan_count += std::isnan(v) ? 1 : 0;
    CHECK(nan_count == 1);

    REQUIRE(res.points.size() == 1);
    const auto& p = res.points.front();
    CHECK(p.r == 0);
    CHECK(p.N == 1);
    CHECK(p.mu == Approx(0.2494).margin(5e-3));
    CHECK(p.confirmed_by.count(Confirmation::theta_transition) == 1);
    CHECK(p.label() == "mu(1)");

    // grid maxima exist on both flanks but nothing backs them up
    CHECK(res.maxima.size() == 2);
    CHECK(res.rejected_maxima.size() == 2);
}

TEST_CASE("a weak potential yields a quiet scan", "[concentrate]") {
    const PotentialSpec spec(0.5, 2.0);
    const auto exp = expand(spec);
    ScanConfig sc;
    sc.mu_min = 0.3;
    sc.mu_max = 0.6;
    sc.mu_step = 0.01;
    sc.r_max = 0;
    const auto res = scan_concentration(exp, spec, sc, SolverConfig{});
    CHECK(res.points.empty());
    CHECK(res.maxima.empty());
    CHECK(res.rejected_maxima.empty());
    CHECK(res.hole_mu.empty());
    for (const double v : res.grid_rho) CHECK(std::isfinite(v));
}

TEST_CASE("grid maxima are refined below the grid resolution", "[concentrate]") {
    const PotentialSpec spec(2.0, 2.0);
    const auto exp = expand(spec);
    ScanConfig sc;
    sc.mu_min = 0.4;
    sc.mu_max = 0.7;
    sc.mu_step = 0.01;
    sc.r_max = 0;
    const auto maxima = find_rho_maxima(exp, spec, sc, SolverConfig{});
    REQUIRE(maxima.size() == 1);
    CHECK(maxima.front().first == Approx(0.552968).margin(1e-3));
    CHECK(maxima.front().second == Approx(0.554922).margin(1e-4));
}

TEST_CASE("a point can be followed across amplitudes", "[concentrate]") {
    const PotentialSpec base(1.0, 2.0);
    ScanConfig sc;
    sc.mu_min = 0.4;
    sc.mu_max = 0.7;
    sc.mu_step = 0.01;
    sc.r_max = 0;
    const auto rows = trace_point(base, {2.0, 2.2}, 0, 0, sc, SolverConfig{});
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].c == 2.0);
    REQUIRE(rows[0].point.has_value());
    CHECK(rows[0].point->mu == Approx(0.552968).margin(2e-3));
    REQUIRE(rows[1].point.has_value());
    CHECK(rows[1].point->mu == Approx(0.506180).margin(2e-3));
    CHECK(rows[1].point->mu < rows[0].point->mu);  // stronger coupling pulls it down
}
