#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cmath>
#include <vector>

#include "specon/ode.hpp"

using Catch::Approx;
using specon::Dopri5;
using specon::StepControl;

TEST_CASE("exponential growth integrates to machine-level accuracy", "[ode]") {
    auto rhs = [](double, const std::array<double, 1>& y, std::array<double, 1>& dy) {
        dy[0] = y[0];
    };
    StepControl ctl;
    ctl.max_step = 0.5;
    const auto y = Dopri5<1>::integrate(rhs, 0.0, {1.0}, 1.0, ctl);
    CHECK(y[0] == Approx(std::exp(1.0)).epsilon(1e-9));
}

TEST_CASE("circular motion returns to the start", "[ode]") {
    auto rhs = [](double, const std::array<double, 2>& y, std::array<double, 2>& dy) {
        dy[0] = -y[1];
        dy[1] = y[0];
    };
    const double two_pi = 2.0 * specon::pi;
    const auto y = Dopri5<2>::integrate(rhs, 0.0, {1.0, 0.0}, two_pi, StepControl{});
    CHECK(y[0] == Approx(1.0).margin(1e-8));
    CHECK(y[1] == Approx(0.0).margin(1e-8));
}

TEST_CASE("dense output interpolates interior grid points", "[ode]") {
    auto rhs = [](double x, const std::array<double, 1>&, std::array<double, 1>& dy) {
        dy[0] = std::cos(x);
    };
    std::vector<double> grid;
    for (int i = 0; i <= 100; ++i) grid.push_back(0.1 * i);
    std::vector<std::array<double, 1>> at_grid;
    StepControl ctl;
    ctl.max_step = 0.7;  // force interpolation between accepted steps
    Dopri5<1>::integrate(rhs, 0.0, {0.0}, 10.0, ctl, grid, &at_grid);
    REQUIRE(at_grid.size() == grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        CHECK(at_grid[i][0] == Approx(std::sin(grid[i])).margin(1e-8));
}

TEST_CASE("grid points outside the integration span copy the endpoints", "[ode]") {
    auto rhs = [](double, const std::array<double, 1>& y, std::array<double, 1>& dy) {
        dy[0] = y[0];
    };
    const std::vector<double> grid{-1.0, 0.0, 5.0, 7.0};
    std::vector<std::array<double, 1>> at_grid;
    Dopri5<1>::integrate(rhs, 0.0, {1.0}, 1.0, StepControl{}, grid, &at_grid);
    REQUIRE(at_grid.size() == 4);
    CHECK(at_grid[0][0] == 1.0);  // before the start: initial value
    CHECK(at_grid[1][0] == 1.0);
    CHECK(at_grid[2][0] == Approx(std::exp(1.0)));  // past the end: final value
    CHECK(at_grid[3][0] == Approx(std::exp(1.0)));
}

TEST_CASE("a backwards or empty span returns the initial state", "[ode]") {
    auto rhs = [](double, const std::array<double, 1>& y, std::array<double, 1>& dy) {
        dy[0] = y[0];
    };
    const auto y = Dopri5<1>::integrate(rhs, 2.0, {3.0}, 2.0, StepControl{});
    CHECK(y[0] == 3.0);
    const auto z = Dopri5<1>::integrate(rhs, 2.0, {3.0}, 1.0, StepControl{});
    CHECK(z[0] == 3.0);
}

TEST_CASE("the step budget is enforced", "[ode]") {
    auto rhs = [](double, const std::array<double, 1>& y, std::array<double, 1>& dy) {
        dy[0] = y[0];
    };
    StepControl ctl;
    ctl.max_step = 1e-4;
    ctl.max_steps = 100;
    CHECK_THROWS_AS(Dopri5<1>::integrate(rhs, 0.0, {1.0}, 10.0, ctl), specon::solver_error);
}

TEST_CASE("tolerances steer the local error", "[ode]") {
    // error estimator must keep a rapidly oscillating solution accurate
    auto rhs = [](double x, const std::array<double, 2>& y, std::array<double, 2>& dy) {
        dy[0] = y[1];
        dy[1] = -25.0 * y[0] + std::sin(x);
    };
    StepControl tight;
    tight.rel_tol = 1e-11;
    tight.abs_tol = 1e-13;
    const auto y = Dopri5<2>::integrate(rhs, 0.0, {1.0, 0.0}, 3.0, tight);
    // closed form: cos(5x) + (sin x)/24 - (sin 5x)/120
    const double exact = std::cos(15.0) + std::sin(3.0) / 24.0 - std::sin(15.0) / 120.0;
    CHECK(y[0] == Approx(exact).margin(1e-9));
}
