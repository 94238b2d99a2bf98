#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "specon/cli_config.hpp"
#include "specon/parallel.hpp"
#include "specon/serialize.hpp"
#include "specon/verify.hpp"

namespace {

using namespace specon;

void write_out(const RunConfig& rc, const std::string& content) {
    if (rc.out.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(rc.out);
    if (!f) throw specon::error("cannot open output file: " + rc.out);
    f << content;
}

std::string pick_format(const RunConfig& rc, const std::string& fallback) {
    return rc.format.empty() ? fallback : rc.format;
}

// long option names of a parsed subcommand that were actually given
std::set<std::string> cli_keys(const CLI::App* sub) {
    std::set<std::string> keys;
    for (const CLI::Option* opt : sub->get_options()) {
        if (opt->count() == 0) continue;
        std::string name = opt->get_lnames().empty() ? "" : opt->get_lnames().front();
        if (name.empty() || name == "config" || name == "help") continue;
        for (auto& ch : name)
            if (ch == '-') ch = '_';
        keys.insert(name);
    }
    return keys;
}

int run_expand(const RunConfig& rc, const std::set<std::string>& provided) {
    const PotentialSpec spec(rc.c, rc.a);
    const Expansion e = expand(spec, resolve_expand_options(rc, provided));
    const std::string fmt = pick_format(rc, "text");
    if (fmt == "json") {
        nlohmann::json j = expansion_to_json(e);
        j["config"] = config_to_json("expand", rc);
        write_out(rc, j.dump(2) + "\n");
    } else if (fmt == "text") {
        write_out(rc, pretty_expansion(e));
    } else {
        throw domain_error("expand supports formats: text, json");
    }
    return 0;
}

int run_rho(const RunConfig& rc, const std::set<std::string>& provided) {
    const PotentialSpec spec(rc.c, rc.a);
    const bool explicit_mu = !rc.mu.empty();
    std::vector<double> grid = rc.mu;
    if (!explicit_mu) {
        if (!(rc.mu_step > 0.0) || rc.mu_max < rc.mu_min)
            throw domain_error("grid needs mu_min <= mu_max and mu_step > 0");
        for (std::size_t i = 0;; ++i) {
            const double m = rc.mu_min + static_cast<double>(i) * rc.mu_step;
            if (m > rc.mu_max + rc.mu_step * 0.5) break;
            grid.push_back(m);
        }
    }
    const bool use_acc = rc.method == "accelerated" || rc.method == "both";
    const bool use_dir = rc.method == "direct" || rc.method == "both";
    if (!use_acc && !use_dir) throw domain_error("method must be accelerated, direct or both");
    if (use_acc && rc.boundary_alpha != 0.0)
        throw domain_error("boundary rotation is supported by the direct method only");

    const SolverConfig cfg = solver_config(rc);
    const EvalOptions eopts = eval_options(rc);
    const Boundary bc{rc.boundary_alpha};
    const double nan = std::numeric_limits<double>::quiet_NaN();

    struct Row {
        double rho;
        std::string note;
    };
    std::vector<Row> acc(grid.size(), {nan, ""}), dir(grid.size(), {nan, ""});
    std::optional<Expansion> exp;
    if (use_acc) exp = expand(spec, resolve_expand_options(rc, provided));

    std::exception_ptr excluded_hit;
    parallel_for(grid.size(), rc.workers, [&](std::size_t i) {
        if (use_acc) {
            try {
                acc[i].rho = rho_prime_accelerated(*exp, spec, grid[i], cfg, eopts).rho_prime;
            } catch (const excluded_value_error& e) {
                if (explicit_mu) throw;
                acc[i].note = "excluded near " + format_g6(e.excluded_at);
            }
        }
        if (use_dir) dir[i].rho = rho_prime_direct(spec, grid[i], rc.x_trunc, cfg, bc).rho_prime;
    });

    const std::string fmt = pick_format(rc, "csv");
    if (fmt == "csv") {
        std::ostringstream os;
        CsvWriter w{os};
        w.comment("specon.rho/1");
        w.comment("config " + config_text("rho", rc) + " fp=" +
                  config_fingerprint("rho", rc));
        w.row({"mu", "s", "rho_prime", "method", "note"});
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const std::string mu_s = format_g6(grid[i]), ss = format_g6(std::sqrt(grid[i]));
            if (use_acc)
                w.row({mu_s, ss, format_g6(acc[i].rho), "accelerated", acc[i].note});
            if (use_dir) w.row({mu_s, ss, format_g6(dir[i].rho), "direct", dir[i].note});
        }
        write_out(rc, os.str());
    } else if (fmt == "json") {
        nlohmann::json samples = nlohmann::json::array();
        auto push = [&](double mu, const Row& row, const char* method) {
            nlohmann::json s;
            s["mu"] = mu;
            s["s"] = std::sqrt(mu);
            if (std::isnan(row.rho))
                s["rho_prime"] = nullptr;
            else
                s["rho_prime"] = row.rho;
            s["method"] = method;
            if (!row.note.empty()) s["note"] = row.note;
            samples.push_back(std::move(s));
        };
        for (std::size_t i = 0; i < grid.size(); ++i) {
            if (use_acc) push(grid[i], acc[i], "accelerated");
            if (use_dir) push(grid[i], dir[i], "direct");
        }
        nlohmann::json j;
        j["schema"] = "specon.rho/1";
        j["config"] = config_to_json("rho", rc);
        j["samples"] = std::move(samples);
        write_out(rc, j.dump(2) + "\n");
    } else if (fmt == "svg") {
        SvgPlot plot("spectral density derivative", "mu", "rho'");
        if (use_acc) {
            SvgSeries s;
            for (std::size_t i = 0; i < grid.size(); ++i)
                s.points.push_back({grid[i], acc[i].rho});
            s.color = palette(0);
            s.label = "accelerated";
            plot.add(std::move(s));
        }
        if (use_dir) {
            SvgSeries s;
            for (std::size_t i = 0; i < grid.size(); ++i)
                s.points.push_back({grid[i], dir[i].rho});
            s.color = palette(1);
            s.label = "direct";
            plot.add(std::move(s));
        }
        plot.set_metadata(config_to_json("rho", rc).dump());
        std::ostringstream os;
        plot.render(os);
        write_out(rc, os.str());
    } else {
        throw domain_error("rho supports formats: csv, json, svg");
    }
    return 0;
}

int run_theta(const RunConfig& rc) {
    const PotentialSpec spec(rc.c, rc.a);
    const std::vector<double> mus = rc.mu.empty() ? std::vector<double>{1.0} : rc.mu;
    const SolverConfig cfg = solver_config(rc);
    const Boundary bc{rc.boundary_alpha};
    std::vector<double> xs(2001);
    for (std::size_t i = 0; i < xs.size(); ++i)
        xs[i] = cfg.x_max * static_cast<double>(i) / (xs.size() - 1);

    std::vector<PruferTrace> traces(mus.size());
    parallel_for(mus.size(), rc.workers,
                 [&](std::size_t i) { traces[i] = solve_theta(spec, mus[i], cfg, xs, bc); });

    const std::string fmt = pick_format(rc, "csv");
    if (fmt == "csv") {
        std::ostringstream os;
        CsvWriter w{os};
        w.comment("specon.theta/1");
        w.comment("config " + config_text("theta", rc) + " fp=" +
                  config_fingerprint("theta", rc));
        w.row({"mu", "x", "theta"});
        for (const auto& tr : traces)
            for (std::size_t i = 0; i < tr.x.size(); ++i)
                w.row({format_g6(tr.mu), format_g6(tr.x[i]), format_g6(tr.theta[i])});
        write_out(rc, os.str());
    } else if (fmt == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& tr : traces) {
            nlohmann::json t;
            t["mu"] = tr.mu;
            t["x"] = tr.x;
            t["theta"] = tr.theta;
            arr.push_back(std::move(t));
        }
        nlohmann::json j;
        j["schema"] = "specon.theta/1";
        j["config"] = config_to_json("theta", rc);
        j["traces"] = std::move(arr);
        write_out(rc, j.dump(2) + "\n");
    } else if (fmt == "svg") {
        SvgPlot plot("phase angle modulo pi", "x", "theta mod pi");
        const double nan = std::numeric_limits<double>::quiet_NaN();
        for (std::size_t k = 0; k < traces.size(); ++k) {
            const auto& tr = traces[k];
            SvgSeries s;
            double prev = nan;
            for (std::size_t i = 0; i < tr.x.size(); ++i) {
                const double y = tr.theta[i] - pi * std::floor(tr.theta[i] / pi);
                if (!std::isnan(prev) && y < prev - pi * 0.5)
                    s.points.push_back({tr.x[i], nan});
                s.points.push_back({tr.x[i], y});
                prev = y;
            }
            s.color = palette(k);
            s.label = "mu=" + format_g6(tr.mu);
            plot.add(std::move(s));
        }
        plot.set_metadata(config_to_json("theta", rc).dump());
        std::ostringstream os;
        plot.render(os);
        write_out(rc, os.str());
    } else {
        throw domain_error("theta supports formats: csv, json, svg");
    }
    return 0;
}

int run_scan(const RunConfig& rc, const std::set<std::string>& provided) {
    const PotentialSpec spec(rc.c, rc.a);
    const Expansion e = expand(spec, resolve_expand_options(rc, provided));
    const ScanResult res = scan_concentration(e, spec, scan_config(rc), solver_config(rc));

    const std::string fmt = pick_format(rc, "csv");
    if (fmt == "csv") {
        std::ostringstream os;
        CsvWriter w{os};
        w.comment("specon.scan/1");
        w.comment("config " + config_text("scan", rc) + " fp=" +
                  config_fingerprint("scan", rc));
        w.row({"label", "r", "N", "mu", "rho_prime", "probe_width", "theta_transition",
               "rho_maximum", "coalesced_with"});
        for (const auto& p : res.points)
            w.row({p.label(), std::to_string(p.r), std::to_string(p.N), format_g6(p.mu),
                   format_g6(p.rho_prime), format_g6(p.probe_width),
                   p.confirmed_by.count(Confirmation::theta_transition) ? "yes" : "no",
                   p.confirmed_by.count(Confirmation::rho_maximum) ? "yes" : "no",
                   p.coalesced_with ? std::to_string(*p.coalesced_with) : ""});
        write_out(rc, os.str());
    } else if (fmt == "json") {
        nlohmann::json j = scan_to_json(res);
        j["config"] = config_to_json("scan", rc);
        write_out(rc, j.dump(2) + "\n");
    } else if (fmt == "svg") {
        SvgPlot plot("concentration scan", "mu", "rho'");
        SvgSeries s;
        for (std::size_t i = 0; i < res.grid_mu.size(); ++i)
            s.points.push_back({res.grid_mu[i], res.grid_rho[i]});
        s.color = palette(0);
        s.label = "rho'";
        plot.add(std::move(s));
        for (const auto& p : res.points)
            plot.vertical_marker(p.mu, palette(1 + p.r), p.label());
        plot.set_metadata(config_to_json("scan", rc).dump());
        std::ostringstream os;
        plot.render(os);
        write_out(rc, os.str());
    } else {
        throw domain_error("scan supports formats: csv, json, svg");
    }
    return 0;
}

int run_trace(const RunConfig& rc, const std::set<std::string>& provided) {
    if (rc.c_values.empty()) throw domain_error("trace requires --c-values");
    if (rc.point.empty()) throw domain_error("trace requires --point \"r,N\"");
    const auto [r, n] = parse_point(rc.point);
    const PotentialSpec base(1.0, rc.a);
    const auto rows = trace_point(base, rc.c_values, r, n, scan_config(rc), solver_config(rc),
                                  resolve_expand_options(rc, provided));

    const std::string fmt = pick_format(rc, "csv");
    if (fmt == "csv") {
        std::ostringstream os;
        CsvWriter w{os};
        w.comment("specon.trace/1");
        w.comment("config " + config_text("trace", rc) + " fp=" +
                  config_fingerprint("trace", rc));
        w.row({"c", "found", "mu", "rho_prime", "probe_width", "theta_transition"});
        for (const auto& row : rows) {
            if (row.point) {
                const auto& p = *row.point;
                w.row({format_g6(row.c), "yes", format_g6(p.mu), format_g6(p.rho_prime),
                       format_g6(p.probe_width),
                       p.confirmed_by.count(Confirmation::theta_transition) ? "yes" : "no"});
            } else {
                w.row({format_g6(row.c), "no", "", "", "", ""});
            }
        }
        write_out(rc, os.str());
    } else if (fmt == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& row : rows) {
            nlohmann::json item;
            item["c"] = row.c;
            if (row.point)
                item["point"] = point_to_json(*row.point);
            else
                item["point"] = nullptr;
            arr.push_back(std::move(item));
        }
        nlohmann::json j;
        j["schema"] = "specon.trace/1";
        j["config"] = config_to_json("trace", rc);
        j["rows"] = std::move(arr);
        write_out(rc, j.dump(2) + "\n");
    } else if (fmt == "svg") {
        SvgPlot plot("concentration point versus amplitude", "c", "mu");
        SvgSeries s;
        const double nan = std::numeric_limits<double>::quiet_NaN();
        for (const auto& row : rows)
            s.points.push_back({row.c, row.point ? row.point->mu : nan});
        s.color = palette(0);
        s.label = "point (" + std::to_string(r) + "," + std::to_string(n) + ")";
        s.markers = true;
        plot.add(std::move(s));
        plot.set_metadata(config_to_json("trace", rc).dump());
        std::ostringstream os;
        plot.render(os);
        write_out(rc, os.str());
    } else {
        throw domain_error("trace supports formats: csv, json, svg");
    }
    return 0;
}

int run_verify(const RunConfig& rc) {
    const auto results = run_verification(rc.level == "full");
    std::ostringstream os;
    bool ok = true;
    for (const auto& r : results) {
        if (!r.pass && r.gating) ok = false;
        char secs[32];
        std::snprintf(secs, sizeof secs, "%.1f", r.seconds);
        os << (r.pass ? "[PASS]" : "[FAIL]") << (r.gating ? " " : " (informational) ")
           << r.id << ": " << r.detail << " (" << secs << "s)\n";
    }
    os << (ok ? "VERIFY PASS" : "VERIFY FAIL") << " (" << results.size() << " checks)\n";
    std::cout << os.str();
    if (!rc.out.empty()) {
        std::ofstream f(rc.out);
        if (!f) throw specon::error("cannot open output file: " + rc.out);
        f << os.str();
    }
    return ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral density derivative and concentration analysis for decaying "
                 "oscillatory potentials"};
    app.require_subcommand(1);

    RunConfig rc;
    std::string config_path;

    auto add_potential = [&](CLI::App* s) {
        s->add_option("--a", rc.a, "decay exponent, a > 0");
        s->add_option("--c", rc.c, "amplitude, c >= 0");
    };
    auto add_expansion = [&](CLI::App* s) {
        s->add_option("--epsilon-order", rc.epsilon_order, "stop rewriting at this decay order");
        s->add_option("--max-degree", rc.max_degree, "stop rewriting at this factor degree");
        s->add_option("--depth", rc.depth,
                      "rewrite generation bound; alone it lifts the order and degree caps");
    };
    auto add_solver = [&](CLI::App* s) {
        s->add_option("--x-max", rc.x_max, "integration endpoint");
        s->add_option("--rel-tol", rc.rel_tol, "solver relative tolerance");
        s->add_option("--abs-tol", rc.abs_tol, "solver absolute tolerance");
        s->add_option("--max-step", rc.max_step, "solver step ceiling");
    };
    auto add_grid = [&](CLI::App* s) {
        s->add_option("--mu-min", rc.mu_min, "grid start");
        s->add_option("--mu-max", rc.mu_max, "grid end");
        s->add_option("--mu-step", rc.mu_step, "grid spacing");
    };
    auto add_scan_knobs = [&](CLI::App* s) {
        s->add_option("--delta-mu", rc.delta_mu, "starting half-width of transition probes");
        s->add_option("--refine-tol", rc.refine_tol, "transition location resolution");
        s->add_option("--r-max", rc.r_max, "largest oscillation well index to watch");
        s->add_option("--resonance-guard", rc.resonance_guard,
                      "half-width of the excluded-value guard on alpha*s+beta");
    };
    auto add_output = [&](CLI::App* s, const std::string& formats) {
        s->add_option("--format", rc.format, "output format: " + formats);
        s->add_option("--out", rc.out, "output file (default stdout)");
        s->add_option("--workers", rc.workers, "worker threads (0 = hardware)");
        s->add_option("--config", config_path, "JSON file of defaults; flags win");
    };

    CLI::App* cmd_expand = app.add_subcommand("expand", "run the integration-by-parts rewrite");
    add_potential(cmd_expand);
    add_expansion(cmd_expand);
    add_output(cmd_expand, "text, json");

    CLI::App* cmd_rho = app.add_subcommand("rho", "evaluate the spectral density derivative");
    add_potential(cmd_rho);
    add_expansion(cmd_rho);
    add_solver(cmd_rho);
    add_grid(cmd_rho);
    cmd_rho->add_option("--mu", rc.mu, "explicit mu values instead of the grid");
    cmd_rho->add_option("--method", rc.method, "accelerated, direct or both")
        ->check(CLI::IsMember({"accelerated", "direct", "both"}));
    cmd_rho->add_option("--x-trunc", rc.x_trunc, "truncation point for the direct method");
    cmd_rho->add_option("--boundary-alpha", rc.boundary_alpha,
                        "boundary rotation angle (direct method)");
    cmd_rho->add_option("--resonance-guard", rc.resonance_guard,
                        "half-width of the excluded-value guard on alpha*s+beta");
    add_output(cmd_rho, "csv, json, svg");

    CLI::App* cmd_theta = app.add_subcommand("theta", "record phase angle traces");
    add_potential(cmd_theta);
    add_solver(cmd_theta);
    cmd_theta->add_option("--mu", rc.mu, "mu values to trace");
    cmd_theta->add_option("--boundary-alpha", rc.boundary_alpha, "boundary rotation angle");
    add_output(cmd_theta, "csv, json, svg");

    CLI::App* cmd_scan = app.add_subcommand("scan", "locate spectral concentration points");
    add_potential(cmd_scan);
    add_expansion(cmd_scan);
    add_solver(cmd_scan);
    add_grid(cmd_scan);
    add_scan_knobs(cmd_scan);
    add_output(cmd_scan, "csv, json, svg");

    CLI::App* cmd_trace = app.add_subcommand("trace", "follow one point across amplitudes");
    add_potential(cmd_trace);
    add_expansion(cmd_trace);
    add_solver(cmd_trace);
    add_grid(cmd_trace);
    add_scan_knobs(cmd_trace);
    cmd_trace->add_option("--c-values", rc.c_values, "amplitudes to sweep")->delimiter(',');
    cmd_trace->add_option("--point", rc.point, "point to follow, as \"r,N\"");
    add_output(cmd_trace, "csv, json, svg");

    CLI::App* cmd_verify = app.add_subcommand("verify", "run the built-in checks");
    cmd_verify->add_option("--level", rc.level, "quick or full")
        ->check(CLI::IsMember({"quick", "full"}));
    cmd_verify->add_option("--out", rc.out, "also write the report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        CLI::App* sub = app.get_subcommands().front();
        std::set<std::string> provided = cli_keys(sub);
        if (!config_path.empty())
            provided = merge_config_json(rc, load_config_file(config_path), provided);

        if (sub == cmd_expand) return run_expand(rc, provided);
        if (sub == cmd_rho) return run_rho(rc, provided);
        if (sub == cmd_theta) return run_theta(rc);
        if (sub == cmd_scan) return run_scan(rc, provided);
        if (sub == cmd_trace) return run_trace(rc, provided);
        if (sub == cmd_verify) return run_verify(rc);
        throw specon::error("unhandled subcommand");
    } catch (const specon::excluded_value_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
