#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <set>
#include <string>

#include "specon/cli_config.hpp"

using namespace specon;
using nlohmann::json;

TEST_CASE("config merging honors command-line precedence", "[cli]") {
    RunConfig rc;
    rc.c = 7.0;  // as if set by a flag
    const json j = {{"a", 1.0}, {"c", 3.0}, {"mu", {0.5, 0.9}}, {"r_max", 1}};
    const auto provided = merge_config_json(rc, j, {"c"});
    CHECK(rc.a == 1.0);
    CHECK(rc.c == 7.0);
    REQUIRE(rc.mu.size() == 2);
    CHECK(rc.mu[1] == 0.9);
    CHECK(rc.r_max == 1);
    CHECK(provided.count("a") == 1);
    CHECK(provided.count("c") == 1);
    CHECK(provided.count("mu_min") == 0);
}

TEST_CASE("scalars are accepted where lists are expected", "[cli]") {
    RunConfig rc;
    merge_config_json(rc, {{"mu", 0.7}, {"c_values", 2.5}}, {});
    REQUIRE(rc.mu.size() == 1);
    CHECK(rc.mu[0] == 0.7);
    REQUIRE(rc.c_values.size() == 1);
    CHECK(rc.c_values[0] == 2.5);
}

TEST_CASE("bad config input is rejected with a reason", "[cli]") {
    RunConfig rc;
    CHECK_THROWS_AS(merge_config_json(rc, {{"typo_key", 1}}, {}), domain_error);
    CHECK_THROWS_AS(merge_config_json(rc, {{"a", "fast"}}, {}), domain_error);
    CHECK_THROWS_AS(merge_config_json(rc, json::array(), {}), domain_error);
    CHECK_THROWS_WITH(merge_config_json(rc, {{"typo_key", 1}}, {}),
                      "unknown config key: typo_key");
}

TEST_CASE("config files load or fail loudly", "[cli]") {
    const std::string good = "/tmp/specon_test_config.json";
    {
        std::ofstream f(good);
        f << "{\"a\": 0.5, \"depth\": 2}";
    }
    const auto j = load_config_file(good);
    RunConfig rc;
    merge_config_json(rc, j, {});
    CHECK(rc.a == 0.5);
    CHECK(rc.depth == 2);
    std::remove(good.c_str());

    CHECK_THROWS_AS(load_config_file("/tmp/does_not_exist_specon.json"), domain_error);

    const std::string bad = "/tmp/specon_test_bad.json";
    {
        std::ofstream f(bad);
        f << "{not json";
    }
    CHECK_THROWS_AS(load_config_file(bad), domain_error);
    std::remove(bad.c_str());
}

TEST_CASE("point designations parse strictly", "[cli]") {
    CHECK(parse_point("1,4") == std::pair<int, int>{1, 4});
    CHECK(parse_point("0,0") == std::pair<int, int>{0, 0});
    CHECK_THROWS_AS(parse_point("1"), domain_error);
    CHECK_THROWS_AS(parse_point("1,"), domain_error);
    CHECK_THROWS_AS(parse_point("a,2"), domain_error);
    CHECK_THROWS_AS(parse_point("1,2x"), domain_error);
    CHECK_THROWS_AS(parse_point("-1,2"), domain_error);
    CHECK_THROWS_AS(parse_point("1,-2"), domain_error);
}

TEST_CASE("a depth bound alone lifts the cost caps", "[cli]") {
    RunConfig rc;
    rc.depth = 2;
    const auto lifted = resolve_expand_options(rc, {"depth"});
    CHECK(lifted.max_depth == 2);
    CHECK(lifted.epsilon_order == 1e9);
    CHECK(lifted.max_degree == (1 << 20));

    const auto pinned = resolve_expand_options(rc, {"depth", "epsilon_order"});
    CHECK(pinned.epsilon_order == 6.0);
    CHECK(pinned.max_degree == 3);

    rc.depth = 0;
    const auto flat = resolve_expand_options(rc, {});
    CHECK(flat.max_depth == 0);
    CHECK(flat.epsilon_order == 6.0);
}

TEST_CASE("run settings map onto the engine configs", "[cli]") {
    RunConfig rc;
    rc.x_max = 80.0;
    rc.rel_tol = 1e-7;
    rc.mu_min = 0.1;
    rc.mu_max = 2.0;
    rc.r_max = 1;
    rc.workers = 3;
    rc.resonance_guard = 0.5;

    const auto cfg = solver_config(rc);
    CHECK(cfg.x_max == 80.0);
    CHECK(cfg.rel_tol == 1e-7);
    CHECK(cfg.abs_tol == rc.abs_tol);

    const auto sc = scan_config(rc);
    CHECK(sc.mu_min == 0.1);
    CHECK(sc.mu_max == 2.0);
    CHECK(sc.r_max == 1);
    CHECK(sc.workers == 3);

    CHECK(eval_options(rc).resonance_guard == 0.5);
}

TEST_CASE("fingerprints are stable and settings-sensitive", "[cli]") {
    RunConfig rc;
    const auto fp = config_fingerprint("scan", rc);
    CHECK(fp.size() == 16);
    CHECK(fp == config_fingerprint("scan", rc));
    CHECK(fp != config_fingerprint("rho", rc));
    RunConfig other = rc;
    other.c = rc.c + 1e-12;
    CHECK(fp != config_fingerprint("scan", other));
}

TEST_CASE("the echoed config carries every decision", "[cli]") {
    RunConfig rc;
    rc.point = "1,3";
    rc.c_values = {2.0, 4.0};
    const auto j = config_to_json("trace", rc);
    CHECK(j["command"] == "trace");
    CHECK(j["a"] == 2.0);
    CHECK(j["point"] == "1,3");
    CHECK(j["c_values"].size() == 2);
    CHECK(j["fingerprint"] == config_fingerprint("trace", rc));
    CHECK_FALSE(j.contains("mu"));

    RunConfig plain;
    CHECK_FALSE(config_to_json("rho", plain).contains("point"));
}
