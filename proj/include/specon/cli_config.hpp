#pragma once

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "specon/concentrate.hpp"
#include "specon/emit.hpp"
#include "specon/expansion.hpp"
#include "specon/prufer.hpp"

namespace specon {

// one flat bag of knobs shared by every subcommand; a config file mirrors it
struct RunConfig {
    double a = 2.0;
    double c = 1.0;
    std::vector<double> mu;  // explicit evaluation points, overrides the grid
    double mu_min = 0.05;
    double mu_max = 5.0;
    double mu_step = 0.01;
    double x_max = 100.0;
    double x_trunc = 1e4;
    double rel_tol = 1e-9;
    double abs_tol = 1e-11;
    double max_step = 0.1;
    double epsilon_order = 6.0;
    int max_degree = 3;
    int depth = 0;
    double refine_tol = 5e-3;
    double delta_mu = 1e-3;
    int r_max = 2;
    int workers = 0;
    double boundary_alpha = 0.0;
    double resonance_guard = 1e-3;
    std::string method = "accelerated";
    std::string format;  // empty means the subcommand default
    std::string out;
    std::string level = "full";
    std::vector<double> c_values;
    std::string point;  // "r,N"
};

inline nlohmann::json load_config_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw domain_error("cannot read config file: " + path);
    nlohmann::json j;
    try {
        f >> j;
    } catch (const std::exception& e) {
        throw domain_error(std::string("config parse: ") + e.what());
    }
    return j;
}

// fills rc from JSON for every key the command line did not set; returns the
// union of keys set by either source
inline std::set<std::string> merge_config_json(RunConfig& rc, const nlohmann::json& j,
                                               const std::set<std::string>& cli_set) {
    if (!j.is_object()) throw domain_error("config root must be a JSON object");
    std::set<std::string> provided = cli_set;
    auto want = [&](const std::string& key) {
        provided.insert(key);
        return cli_set.count(key) == 0;
    };
    auto as_list = [](const nlohmann::json& v) {
        std::vector<double> out;
        if (v.is_array())
            for (const auto& e : v) out.push_back(e.get<double>());
        else
            out.push_back(v.get<double>());
        return out;
    };
    try {
        for (const auto& [key, value] : j.items()) {
            if (key == "a") {
                if (want(key)) rc.a = value.get<double>();
            } else if (key == "c") {
                if (want(key)) rc.c = value.get<double>();
            } else if (key == "mu") {
                if (want(key)) rc.mu = as_list(value);
            } else if (key == "mu_min") {
                if (want(key)) rc.mu_min = value.get<double>();
            } else if (key == "mu_max") {
                if (want(key)) rc.mu_max = value.get<double>();
            } else if (key == "mu_step") {
                if (want(key)) rc.mu_step = value.get<double>();
            } else if (key == "x_max") {
                if (want(key)) rc.x_max = value.get<double>();
            } else if (key == "x_trunc") {
                if (want(key)) rc.x_trunc = value.get<double>();
            } else if (key == "rel_tol") {
                if (want(key)) rc.rel_tol = value.get<double>();
            } else if (key == "abs_tol") {
                if (want(key)) rc.abs_tol = value.get<double>();
            } else if (key == "max_step") {
                if (want(key)) rc.max_step = value.get<double>();
            } else if (key == "epsilon_order") {
                if (want(key)) rc.epsilon_order = value.get<double>();
            } else if (key == "max_degree") {
                if (want(key)) rc.max_degree = value.get<int>();
            } else if (key == "depth") {
                if (want(key)) rc.depth = value.get<int>();
            } else if (key == "refine_tol") {
                if (want(key)) rc.refine_tol = value.get<double>();
            } else if (key == "delta_mu") {
                if (want(key)) rc.delta_mu = value.get<double>();
            } else if (key == "r_max") {
                if (want(key)) rc.r_max = value.get<int>();
            } else if (key == "workers") {
                if (want(key)) rc.workers = value.get<int>();
            } else if (key == "boundary_alpha") {
                if (want(key)) rc.boundary_alpha = value.get<double>();
            } else if (key == "resonance_guard") {
                if (want(key)) rc.resonance_guard = value.get<double>();
            } else if (key == "method") {
                if (want(key)) rc.method = value.get<std::string>();
            } else if (key == "format") {
                if (want(key)) rc.format = value.get<std::string>();
            } else if (key == "out") {
                if (want(key)) rc.out = value.get<std::string>();
            } else if (key == "level") {
                if (want(key)) rc.level = value.get<std::string>();
            } else if (key == "c_values") {
                if (want(key)) rc.c_values = as_list(value);
            } else if (key == "point") {
                if (want(key)) rc.point = value.get<std::string>();
            } else {
                throw domain_error("unknown config key: " + key);
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw domain_error(std::string("config value: ") + e.what());
    }
    return provided;
}

inline std::pair<int, int> parse_point(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw domain_error("point must be \"r,N\"");
    std::size_t used_r = 0, used_n = 0;
    int r = 0, n = 0;
    try {
        r = std::stoi(text.substr(0, comma), &used_r);
        n = std::stoi(text.substr(comma + 1), &used_n);
    } catch (const std::exception&) {
        throw domain_error("point must be \"r,N\"");
    }
    if (used_r != comma || comma + 1 + used_n != text.size() || r < 0 || n < 0)
        throw domain_error("point must be \"r,N\" with nonnegative integers");
    return {r, n};
}

// a depth bound without explicit cost caps means explore every branch to that depth
inline ExpandOptions resolve_expand_options(const RunConfig& rc,
                                            const std::set<std::string>& provided) {
    ExpandOptions o;
    o.epsilon_order = rc.epsilon_order;
    o.max_degree = rc.max_degree;
    o.max_depth = rc.depth;
    if (rc.depth > 0 && !provided.count("epsilon_order") && !provided.count("max_degree")) {
        o.epsilon_order = 1e9;
        o.max_degree = 1 << 20;
    }
    return o;
}

inline SolverConfig solver_config(const RunConfig& rc) {
    SolverConfig cfg;
    cfg.x_max = rc.x_max;
    cfg.rel_tol = rc.rel_tol;
    cfg.abs_tol = rc.abs_tol;
    cfg.max_step = rc.max_step;
    return cfg;
}

inline ScanConfig scan_config(const RunConfig& rc) {
    ScanConfig sc;
    sc.mu_min = rc.mu_min;
    sc.mu_max = rc.mu_max;
    sc.mu_step = rc.mu_step;
    sc.delta_mu = rc.delta_mu;
    sc.refine_tol = rc.refine_tol;
    sc.r_max = rc.r_max;
    sc.workers = rc.workers;
    return sc;
}

inline EvalOptions eval_options(const RunConfig& rc) {
    EvalOptions o;
    o.resonance_guard = rc.resonance_guard;
    return o;
}

inline std::string config_text(const std::string& cmd, const RunConfig& rc) {
    std::ostringstream os;
    os.precision(17);
    auto list = [&](const std::vector<double>& v) {
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "|" : "") << v[i];
    };
    os << "cmd=" << cmd << ";a=" << rc.a << ";c=" << rc.c << ";mu=";
    list(rc.mu);
    os << ";mu_min=" << rc.mu_min << ";mu_max=" << rc.mu_max << ";mu_step=" << rc.mu_step
       << ";x_max=" << rc.x_max << ";x_trunc=" << rc.x_trunc << ";rel_tol=" << rc.rel_tol
       << ";abs_tol=" << rc.abs_tol << ";max_step=" << rc.max_step
       << ";epsilon_order=" << rc.epsilon_order << ";max_degree=" << rc.max_degree
       << ";depth=" << rc.depth << ";refine_tol=" << rc.refine_tol
       << ";delta_mu=" << rc.delta_mu << ";r_max=" << rc.r_max << ";workers=" << rc.workers
       << ";boundary_alpha=" << rc.boundary_alpha
       << ";resonance_guard=" << rc.resonance_guard << ";method=" << rc.method
       << ";level=" << rc.level << ";c_values=";
    list(rc.c_values);
    os << ";point=" << rc.point;
    return os.str();
}

inline std::string config_fingerprint(const std::string& cmd, const RunConfig& rc) {
    return hex64(fnv1a64(config_text(cmd, rc)));
}

inline nlohmann::json config_to_json(const std::string& cmd, const RunConfig& rc) {
    nlohmann::json j;
    j["command"] = cmd;
    j["a"] = rc.a;
    j["c"] = rc.c;
    if (!rc.mu.empty()) j["mu"] = rc.mu;
    j["mu_min"] = rc.mu_min;
    j["mu_max"] = rc.mu_max;
    j["mu_step"] = rc.mu_step;
    j["x_max"] = rc.x_max;
    j["x_trunc"] = rc.x_trunc;
    j["rel_tol"] = rc.rel_tol;
    j["abs_tol"] = rc.abs_tol;
    j["max_step"] = rc.max_step;
    j["epsilon_order"] = rc.epsilon_order;
    j["max_degree"] = rc.max_degree;
    j["depth"] = rc.depth;
    j["refine_tol"] = rc.refine_tol;
    j["delta_mu"] = rc.delta_mu;
    j["r_max"] = rc.r_max;
    j["workers"] = rc.workers;
    j["boundary_alpha"] = rc.boundary_alpha;
    j["resonance_guard"] = rc.resonance_guard;
    j["method"] = rc.method;
    if (!rc.c_values.empty()) j["c_values"] = rc.c_values;
    if (!rc.point.empty()) j["point"] = rc.point;
    j["fingerprint"] = config_fingerprint(cmd, rc);
    return j;
}

}  // namespace specon
