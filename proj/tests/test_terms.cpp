#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "specon/terms.hpp"

using Catch::Approx;
using specon::CoefficientS;
using specon::DerivativeProduct;
using specon::Divisor;
using specon::PotentialSpec;
using specon::Rational;
using specon::SymbolicTerm;
using specon::TermKind;

TEST_CASE("derivative products hold sorted merged powers", "[terms]") {
    const DerivativeProduct m{{2, 1}, {0, 1}, {2, 1}};
    CHECK(m.powers() == std::vector<std::pair<int, int>>{{0, 1}, {2, 2}});
    CHECK(m.degree() == 3);
    CHECK(m.max_order() == 2);
    CHECK(m.exponent(2) == 2);
    CHECK(m.exponent(1) == 0);
    CHECK(m.order(2.0) == Approx(2.0 + 2 * 4.0));

    CHECK(DerivativeProduct{}.one());
    CHECK(DerivativeProduct{}.max_order() == -1);
    CHECK(DerivativeProduct::xi(0).times(DerivativeProduct::xi(0)) ==
          DerivativeProduct::xi(0, 2));
    CHECK(DerivativeProduct::xi(1).times_xi() == DerivativeProduct({{0, 1}, {1, 1}}));
}

TEST_CASE("derivative product formatting", "[terms]") {
    CHECK(DerivativeProduct{}.to_string() == "1");
    CHECK(DerivativeProduct::xi(0).to_string() == "xi");
    CHECK(DerivativeProduct::xi(2).to_string() == "xi''");
    CHECK(DerivativeProduct::xi(4).to_string() == "xi''''");
    CHECK(DerivativeProduct::xi(5).to_string() == "xi^(5)");
    CHECK(DerivativeProduct::xi(0, 3).to_string() == "xi^3");
    CHECK(DerivativeProduct({{0, 1}, {2, 1}}).to_string() == "xi*xi''");
    CHECK(DerivativeProduct({{1, 2}}).to_string() == "xi'^2");
}

TEST_CASE("product rule differentiates products", "[terms]") {
    // d/dx (xi xi'') = xi' xi'' + xi xi'''
    const auto d = DerivativeProduct({{0, 1}, {2, 1}}).derivative();
    REQUIRE(d.size() == 2);
    CHECK(d[0].first == 1);
    CHECK(d[0].second == DerivativeProduct({{1, 1}, {2, 1}}));
    CHECK(d[1].first == 1);
    CHECK(d[1].second == DerivativeProduct({{0, 1}, {3, 1}}));

    // d/dx (xi^3) = 3 xi^2 xi'
    const auto cube = DerivativeProduct::xi(0, 3).derivative();
    REQUIRE(cube.size() == 1);
    CHECK(cube[0].first == 3);
    CHECK(cube[0].second == DerivativeProduct({{0, 2}, {1, 1}}));
}

TEST_CASE("product rule agrees with finite differences", "[terms]") {
    const PotentialSpec spec(2.5, 1.5, 8);
    const DerivativeProduct m{{0, 2}, {1, 1}, {3, 1}};
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> ux(0.0, 10.0);
    const double h = 1e-5;
    for (int rep = 0; rep < 20; ++rep) {
        const double x = ux(rng);
        double sum = 0.0;
        for (const auto& [ci, mi] : m.derivative()) sum += ci * mi.value(spec, x);
        const double fd = (m.value(spec, x + h) - m.value(spec, x - h)) / (2.0 * h);
        CHECK(sum == Approx(fd).epsilon(1e-6).margin(1e-10));
    }
}

TEST_CASE("coefficients evaluate their s dependence", "[terms]") {
    CoefficientS c{Rational(3, 4), 0, {}};
    CHECK(c.value(2.0) == Approx(0.75));
    CHECK(c.with_s_inverse(2).value(2.0) == Approx(0.75 / 4.0));
    CHECK(c.scaled(Rational(-2)).value(2.0) == Approx(-1.5));

    const auto d = c.with_divisor(2, -1);
    REQUIRE(d.divisors.size() == 1);
    CHECK(d.value(2.0) == Approx(0.75 / 3.0));

    // a constant divisor folds into the rational part instead
    const auto folded = c.with_divisor(0, 3);
    CHECK(folded.divisors.empty());
    CHECK(folded.r == Rational(1, 4));

    CHECK(d.same_shape(d.scaled(Rational(7))));
    CHECK_FALSE(d.same_shape(c));
    CHECK(d.to_string() == "3/4 / (2s-1)");
    CHECK(c.with_s_inverse(1).to_string() == "3/4 s^-1");
}

TEST_CASE("divisors order and format", "[terms]") {
    CHECK(Divisor{2, 1} == Divisor{2, 1});
    CHECK(Divisor{2, -1} < Divisor{2, 1});
    CHECK(Divisor{2, 1}.to_string() == "2s+1");
    CHECK(Divisor{2, -3}.to_string() == "2s-3");
    CHECK(Divisor{1, 0}.to_string() == "1s");
}

TEST_CASE("term normalization fixes the phase sign", "[terms]") {
    SymbolicTerm t{TermKind::I, {Rational(1, 2), 0, {}}, -2, 1, DerivativeProduct::xi(0), 1};
    t.normalize();
    CHECK(t.alpha == 2);
    CHECK(t.beta == -1);
    CHECK(t.coeff.r == Rational(-1, 2));  // sin flips sign with the phase

    SymbolicTerm u{TermKind::J, {Rational(1, 2), 0, {}}, -2, 1, DerivativeProduct::xi(0), 1};
    u.normalize();
    CHECK(u.alpha == 2);
    CHECK(u.coeff.r == Rational(1, 2));  // cos is even

    SymbolicTerm v{TermKind::J, {Rational(1), 0, {}}, 0, -3, DerivativeProduct::xi(0), 1};
    v.normalize();
    CHECK(v.beta == 3);

    CHECK(SymbolicTerm{TermKind::J, {Rational(1), 0, {}}, 0, 0, {}, 1}.resonant());
    CHECK_FALSE(SymbolicTerm{TermKind::J, {Rational(1), 0, {}}, 0, 2, {}, 1}.resonant());
}

TEST_CASE("integrands pair the factor with the oscillation", "[terms]") {
    const PotentialSpec spec(3.0, 2.0);
    const SymbolicTerm t{TermKind::I, {Rational(1), 0, {}}, 2, -1, DerivativeProduct::xi(1), 1};
    const SymbolicTerm u{TermKind::J, {Rational(1), 0, {}}, 2, -1, DerivativeProduct::xi(1), 1};
    const double x = 1.3, theta = 0.7;
    CHECK(t.integrand(spec, x, theta) ==
          Approx(spec.xi(1, x) * std::sin(2 * theta - x)).margin(1e-15));
    CHECK(u.integrand(spec, x, theta) ==
          Approx(spec.xi(1, x) * std::cos(2 * theta - x)).margin(1e-15));
}

TEST_CASE("constant terms evaluate at the origin", "[terms]") {
    const PotentialSpec spec(3.0, 2.0);
    const specon::ConstantTerm t{{Rational(1, 2), 1, {{2, 1}}}, DerivativeProduct::xi(0, 2)};
    const double s = 2.0;
    // (1/2) s^-1 / (2s+1) * xi(0)^2
    CHECK(t.value(spec, s) == Approx(0.5 / s / (2 * s + 1) * 9.0));
}

TEST_CASE("phase shift table resolves the modulation product", "[terms]") {
    std::mt19937_64 rng(902140);
    std::uniform_real_distribution<double> uth(-8.0, 8.0), ux(0.0, 60.0);
    std::uniform_int_distribution<int> uab(-4, 4);
    for (int rep = 0; rep < 500; ++rep) {
        const double theta = uth(rng), x = ux(rng);
        const int alpha = uab(rng), beta = uab(rng);
        const double target = std::sin(theta) * std::sin(theta) * std::cos(x);
        CHECK(specon::trig_shift_sum_sin(theta, x, alpha, beta) ==
              Approx(std::sin(alpha * theta + beta * x) * target).margin(1e-12));
        CHECK(specon::trig_shift_sum_cos(theta, x, alpha, beta) ==
              Approx(std::cos(alpha * theta + beta * x) * target).margin(1e-12));
    }
}
