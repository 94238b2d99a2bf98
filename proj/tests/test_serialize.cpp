#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include "specon/serialize.hpp"

using namespace specon;
using nlohmann::json;

TEST_CASE("rationals and coefficients serialize losslessly", "[serialize]") {
    const auto jr = rational_to_json(Rational(3, -6));
    CHECK(jr["num"] == -1);
    CHECK(jr["den"] == 2);
    CHECK(jr["value"] == -0.5);

    CoefficientS c{Rational(3, 4), 0, {}};
    c = c.with_s_inverse(1).with_divisor(2, -1);
    const auto jc = coefficient_to_json(c);
    CHECK(jc["rational"]["num"] == 3);
    CHECK(jc["s_inverse"] == 1);
    REQUIRE(jc["divisors"].size() == 1);
    CHECK(jc["divisors"][0]["alpha"] == 2);
    CHECK(jc["divisors"][0]["beta"] == -1);
    CHECK(jc["text"].get<std::string>().find("2s-1") != std::string::npos);
}

TEST_CASE("factors and terms carry their structure and text", "[serialize]") {
    const DerivativeProduct f{{0, 1}, {2, 1}};
    const auto jf = factor_to_json(f);
    CHECK(jf["text"] == "xi*xi''");
    REQUIRE(jf["powers"].size() == 2);
    CHECK(jf["powers"][0][0] == 0);
    CHECK(jf["powers"][0][1] == 1);

    SymbolicTerm t;
    t.kind = TermKind::J;
    t.alpha = 2;
    t.beta = -1;
    t.factor = f;
    t.coeff = CoefficientS{Rational(1, 2), 0, {}};
    t.generation = 3;
    const auto jt = term_to_json(t);
    CHECK(jt["kind"] == "J");
    CHECK(jt["alpha"] == 2);
    CHECK(jt["beta"] == -1);
    CHECK(jt["generation"] == 3);
    CHECK(jt["factor"]["text"] == "xi*xi''");

    SymbolicTerm ti;
    ti.kind = TermKind::I;
    CHECK(term_to_json(ti)["kind"] == "I");
}

TEST_CASE("an expansion round-trips its catalog into the schema", "[serialize]") {
    const PotentialSpec spec(1.0, 2.0);
    const auto exp = expand(spec);
    const auto j = expansion_to_json(exp);
    CHECK(j["schema"] == "specon.expansion/1");
    CHECK(j["a"] == 2.0);
    CHECK(j["options"]["epsilon_order"] == 6.0);
    CHECK(j["options"]["max_degree"] == 3);
    CHECK(j["residual"].size() == exp.residual.size());
    CHECK(j["constants"].size() == exp.constants.size());
    REQUIRE(j["excluded_mu"].size() == exp.excluded_mu.size());
    CHECK(j["excluded_mu"][0]["value"] == 0.25);
    CHECK(j["rewrite_count"] == exp.rewrite_count);

    const auto text = pretty_expansion(exp);
    CHECK(text.find("expansion for a = 2") != std::string::npos);
    CHECK(text.find("boundary constants (") != std::string::npos);
    CHECK(text.find("residual terms (") != std::string::npos);
    CHECK(text.find("excluded mu: 1/4 1") != std::string::npos);
    CHECK(text.find("unbounded") != std::string::npos);
}

TEST_CASE("points omit unset optionals", "[serialize]") {
    ConcentrationPoint p;
    p.mu = 0.25;
    p.r = 1;
    p.N = 4;
    p.confirmed_by.insert(Confirmation::theta_transition);
    p.probe_width = 1e-3;

    auto j = point_to_json(p);
    CHECK(j["label"] == "nu(4)");
    CHECK_FALSE(j.contains("rho_prime"));  // NaN means no density reading
    CHECK_FALSE(j.contains("coalesced_with"));
    REQUIRE(j["confirmed_by"].size() == 1);
    CHECK(j["confirmed_by"][0] == "theta_transition");

    p.rho_prime = 0.7;
    p.coalesced_with = 2;
    p.confirmed_by.insert(Confirmation::rho_maximum);
    j = point_to_json(p);
    CHECK(j["rho_prime"] == 0.7);
    CHECK(j["coalesced_with"] == 2);
    CHECK(j["confirmed_by"].size() == 2);
}

TEST_CASE("scan results serialize points, maxima, and holes", "[serialize]") {
    ScanResult res;
    ConcentrationPoint p;
    p.mu = 0.5;
    res.points.push_back(p);
    res.maxima.push_back({0.5, 0.8});
    res.rejected_maxima.push_back({0.9, 0.1});
    res.hole_mu = {0.25, 1.0};

    const auto j = scan_to_json(res);
    CHECK(j["schema"] == "specon.scan/1");
    CHECK(j["points"].size() == 1);
    CHECK(j["maxima"][0]["mu"] == 0.5);
    CHECK(j["maxima"][0]["rho_prime"] == 0.8);
    CHECK(j["rejected_maxima"].size() == 1);
    REQUIRE(j["holes"].size() == 2);
    CHECK(j["holes"][0] == 0.25);
}
