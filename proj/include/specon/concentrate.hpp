#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "specon/parallel.hpp"
#include "specon/prufer.hpp"

namespace specon {

struct ScanConfig {
    double mu_min = 0.05;
    double mu_max = 5.0;
    double mu_step = 0.01;
    double delta_mu = 1e-3;    // starting half-width of transition probes
    double refine_tol = 5e-3;  // bisection resolution for transition locations
    int r_max = 2;
    double feature_tol = 0.3;      // radians, distance from the expected pi multiples
    double pair_tol = 0.2;         // radians, closeness of the two probes below the jump
    double probe_width_min = 1e-8;
    double probe_width_max = 0.08;
    int workers = 0;
};

/// forbidden-interval landmarks: entry, midpoint, exit
struct IntervalProbes {
    double x1;
    double xmid;
    double x2;
};

inline IntervalProbes interval_probes(int r) {
    return {(2 * r + 0.5) * pi, (2 * r + 1.0) * pi, (2 * r + 1.5) * pi};
}

struct TransitionHit {
    int r = 0;
    int N = 0;
    double mu = 0.0;
    double probe_width = 0.0;  // half-width that validated the features
    double jump = 0.0;         // measured phase gain across the probe pair
};

enum class Confirmation { rho_maximum, theta_transition };

struct ConcentrationPoint {
    double mu = 0.0;
    int r = 0;
    int N = 0;
    std::set<Confirmation> confirmed_by;
    double rho_prime = std::numeric_limits<double>::quiet_NaN();
    double probe_width = 0.0;
    std::optional<std::size_t> coalesced_with;

    std::string label() const {
        static const char* names[] = {"mu", "nu", "xi"};
        std::string base = r <= 2 ? names[r] : "w" + std::to_string(r);
        return base + "(" + std::to_string(N) + ")";
    }
};

/// interval attribution of a rho' maximum by its phase response
struct MaximumClass {
    int r = 0;
    int N = 0;
    double slope = 0.0;  // phase gained across the interval as mu crosses the maximum
};

struct ScanResult {
    std::vector<ConcentrationPoint> points;
    std::vector<std::pair<double, double>> maxima;           // refined (mu, rho')
    std::vector<std::pair<double, double>> rejected_maxima;  // no transition backed them up
    std::vector<double> grid_mu;
    std::vector<double> grid_rho;  // NaN inside resonance holes
    std::vector<double> hole_mu;
};

namespace detail {

// theta sampling and transition tests shared by detect_transition and the scanner
class TransitionScanner {
public:
    TransitionScanner(const PotentialSpec& spec, const ScanConfig& sc, const SolverConfig& cfg)
        : spec_(spec), sc_(sc), cfg_(cfg) {
        for (int r = 0; r <= sc.r_max; ++r) {
            const auto ip = interval_probes(r);
            for (int k = 0; k <= 8; ++k) probe_xs_.push_back(ip.x1 + k * pi / 8.0);
            for (int j = 0; j <= 7; ++j)
                probe_xs_.push_back(ip.x2 + pi / 2.0 + j * pi / 14.0);
        }
        theta_cfg_ = cfg;
        theta_cfg_.x_max = probe_xs_.back();
    }

    const std::vector<double>& probe_xs() const { return probe_xs_; }

    // per interval: entry..exit in pi/8 steps, then a trailing window
    // [exit + pi/2, exit + pi] where the jump has settled
    static constexpr int stride = 17;
    static constexpr int mid_idx = 4;
    static constexpr int exit_idx = 8;
    static constexpr int trail_idx = 9;

    std::vector<double> trace(double mu) const {
        return solve_theta(spec_, mu, theta_cfg_, probe_xs_).theta;
    }

    // phase gained across interval r, measured to half a period past the exit;
    // jumps at lower intervals shift entry and exit alike and cancel here
    static double gain(const std::vector<double>& th, int r) {
        return th[r * stride + trail_idx] - th[r * stride + 0];
    }

    std::optional<TransitionHit> probe_window(int r, double lo, double hi,
                                              const std::vector<TransitionHit>& lower) const {
        auto located = locate_jump(r, lo, hi);
        if (!located) return std::nullopt;
        return validate(r, *located, lower);
    }

    std::optional<double> locate_jump(int r, double lo, double hi) const {
        if (!(lo > 0.0) || !(hi > lo)) return std::nullopt;
        auto g_lo = trace(lo), g_hi = trace(hi);
        const double drift = (probe_xs_[r * stride + trail_idx] - probe_xs_[r * stride]) *
                             (std::sqrt(hi) - std::sqrt(lo));
        const double jump = gain(g_hi, r) - gain(g_lo, r) - drift;
        if (jump < 0.5 * pi || jump > 2.0 * pi - sc_.feature_tol) return std::nullopt;
        const double target = gain(g_lo, r) + (gain(g_hi, r) - gain(g_lo, r)) / 2.0;
        double a = lo, b = hi;
        while (b - a > sc_.refine_tol * 0.5) {
            const double mid = 0.5 * (a + b);
            if (gain(trace(mid), r) > target)
                b = mid;
            else
                a = mid;
        }
        return 0.5 * (a + b);
    }

    std::optional<TransitionHit> validate(int r, double mu0,
                                          const std::vector<TransitionHit>& lower) const {
        // the interior crossing depends on the transition point alone, so pin
        // it first, allowing the location estimate its bisection resolution
        const auto mu_cross = crossing_point(r, mu0);
        if (!mu_cross) return std::nullopt;
        double dv = std::min(sc_.delta_mu, mu0 * 0.5);
        for (int tries = 0; tries < 48; ++tries) {
            const double mu_m = mu0 - dv, mu_p = mu0 + dv;
            if (!(mu_m > 0.0)) return std::nullopt;
            std::vector<double> thm = trace(mu_m), thp = trace(mu_p);
            const double raw_level = thm[r * stride];
            for (const auto& h : lower) {
                if (h.r >= r) continue;
                if (mu_m < h.mu && h.mu <= mu0)
                    for (int idx = 0; idx < stride; ++idx) thm[r * stride + idx] += pi;
                else if (mu0 < h.mu && h.mu < mu_p)
                    for (int idx = 0; idx < stride; ++idx) thp[r * stride + idx] -= pi;
            }
            const double srate = std::sqrt(mu_p) - std::sqrt(mu_m);
            const int base = r * stride;
            double best = std::numeric_limits<double>::infinity(), dsum = 0.0;
            for (int j = trail_idx; j < stride; ++j) {
                const int idx = base + j;
                const double d = thp[idx] - thm[idx] - probe_xs_[idx] * srate;
                if (std::fabs(d - pi) < std::fabs(best - pi)) best = d;
                dsum += d;
            }
            const bool samples_ok = std::fabs(best - pi) < sc_.feature_tol;
            if (samples_ok) {
                auto hit = check_features(r, *mu_cross, thm, thp, raw_level, srate, dv, best);
                if (hit) return hit;
            }
            const bool widen = !samples_ok && dsum / (stride - trail_idx) < pi;
            dv = widen ? dv * 2.0 : dv * 0.5;
            if (dv > probe_cap(mu0) || dv < sc_.probe_width_min) return std::nullopt;
        }
        return std::nullopt;
    }

    // phase response of each interval to crossing mu_hat, ordered by interval
    std::vector<double> slopes(double mu_hat, double h) const {
        h = std::min(h, 0.45 * mu_hat);
        const auto thm = trace(mu_hat - h), thp = trace(mu_hat + h);
        const double srate = std::sqrt(mu_hat + h) - std::sqrt(mu_hat - h);
        std::vector<double> out;
        for (int r = 0; r <= sc_.r_max; ++r) {
            const int base = r * stride;
            const double span = probe_xs_[base + trail_idx] - probe_xs_[base];
            out.push_back(std::fabs(gain(thp, r) - gain(thm, r) - span * srate));
        }
        return out;
    }

    std::vector<MaximumClass> classes(double mu_hat, double h) const {
        h = std::min(h, 0.45 * mu_hat);
        const auto thm = trace(mu_hat - h);
        const auto sl = slopes(mu_hat, h);
        std::vector<MaximumClass> out;
        for (int r = 0; r <= sc_.r_max; ++r) {
            MaximumClass mc;
            mc.r = r;
            mc.N = std::max(
                0, static_cast<int>(std::lround(thm[r * stride] / pi - 0.5)));
            mc.slope = sl[r];
            out.push_back(mc);
        }
        std::sort(out.begin(), out.end(),
                  [](const MaximumClass& a, const MaximumClass& b) { return a.slope > b.slope; });
        return out;
    }

private:
    double probe_cap(double mu0) const { return std::min(sc_.probe_width_max, mu0 * 0.5); }

    // point within bisection resolution of mu0 where the phase passes the top
    // of its band strictly inside the interval
    std::optional<double> crossing_point(int r, double mu0) const {
        const int base = r * stride;
        for (const double shift : {0.0, sc_.refine_tol, -sc_.refine_tol}) {
            const double cand = mu0 + shift;
            if (!(cand > 0.0)) continue;
            const auto th0 = trace(cand);
            const int band = static_cast<int>(std::lround(th0[base] / pi - 0.5));
            for (int k = 1; k < exit_idx; ++k)
                if (std::fabs(th0[base + k] - (band + 1) * pi) < sc_.feature_tol) return cand;
        }
        return std::nullopt;
    }

    std::optional<TransitionHit> check_features(int r, double mu_at,
                                                const std::vector<double>& thm,
                                                const std::vector<double>& thp, double raw_level,
                                                double srate, double dv, double jump) const {
        const int base = r * stride;
        const double x1 = probe_xs_[base];
        const double pair_gap = thp[base] - thm[base] - x1 * srate;
        if (std::fabs(pair_gap) > sc_.pair_tol) return std::nullopt;
        const int n = static_cast<int>(std::lround(raw_level / pi - 0.5));
        if (n < 0) return std::nullopt;
        if (raw_level - (n + 0.5) * pi < -sc_.feature_tol) return std::nullopt;
        TransitionHit hit;
        hit.r = r;
        hit.N = n;
        hit.mu = mu_at;
        hit.probe_width = dv;
        hit.jump = jump;
        return hit;
    }

    PotentialSpec spec_;
    ScanConfig sc_;
    SolverConfig cfg_;
    SolverConfig theta_cfg_;
    std::vector<double> probe_xs_;
};

}  // namespace detail

// all transitions crossing mu_c within the configured probe window, ascending r
inline std::vector<TransitionHit> detect_transitions(const PotentialSpec& spec, double mu_c,
                                                     const ScanConfig& sc,
                                                     const SolverConfig& cfg) {
    detail::TransitionScanner scanner(spec, sc, cfg);
    std::vector<TransitionHit> hits;
    for (int r = 0; r <= sc.r_max; ++r) {
        for (double w = sc.delta_mu; w <= 64.0 * sc.delta_mu + 1e-15; w *= 4.0) {
            auto hit = scanner.probe_window(r, mu_c - w, mu_c + w, hits);
            if (hit) {
                hits.push_back(*hit);
                break;
            }
        }
    }
    return hits;
}

inline std::optional<TransitionHit> detect_transition(const PotentialSpec& spec, double mu_c,
                                                      const ScanConfig& sc,
                                                      const SolverConfig& cfg) {
    auto hits = detect_transitions(spec, mu_c, sc, cfg);
    if (hits.empty()) return std::nullopt;
    return hits.front();
}

// interval attribution of a rho' maximum: every interval's phase response to
// crossing mu_hat, strongest first; lower-interval jumps cancel in each reading
inline std::vector<MaximumClass> classify_maximum(const PotentialSpec& spec, double mu_hat,
                                                  const ScanConfig& sc,
                                                  const SolverConfig& cfg) {
    detail::TransitionScanner scanner(spec, sc, cfg);
    const double h = std::max(2.0 * sc.mu_step, 4.0 * sc.refine_tol);
    return scanner.classes(mu_hat, h);
}

namespace detail {

struct GridData {
    std::vector<double> mu;
    std::vector<double> rho;
    std::vector<std::vector<double>> probes;
    std::vector<char> hole;
};

inline GridData evaluate_grid(const Expansion& exp, const PotentialSpec& spec,
                              const ScanConfig& sc, const SolverConfig& cfg,
                              const TransitionScanner& scanner) {
    GridData grid;
    for (std::size_t i = 0;; ++i) {
        const double m = sc.mu_min + static_cast<double>(i) * sc.mu_step;
        if (m > sc.mu_max + 1e-12) break;
        grid.mu.push_back(m);
    }
    const std::size_t n = grid.mu.size();
    grid.rho.assign(n, std::numeric_limits<double>::quiet_NaN());
    grid.probes.assign(n, {});
    grid.hole.assign(n, 0);
    parallel_for(n, sc.workers, [&](std::size_t i) {
        const double mu = grid.mu[i];
        try {
            FrozenEvaluator eval(exp, spec, mu);
            std::vector<double> th;
            const auto sample =
                rho_prime_accelerated(eval, spec, cfg, scanner.probe_xs(), &th);
            grid.rho[i] = sample.rho_prime;
            grid.probes[i] = std::move(th);
        } catch (const excluded_value_error&) {
            grid.hole[i] = 1;
            grid.probes[i] = scanner.trace(mu);
        }
    });
    return grid;
}

// golden-section maximum of rho' inside [lo, hi]; inadmissible evaluations count as -inf
inline std::pair<double, double> refine_maximum(const Expansion& exp, const PotentialSpec& spec,
                                                const SolverConfig& cfg, double lo, double hi,
                                                double tol) {
    auto value = [&](double mu) {
        try {
            return rho_prime_accelerated(exp, spec, mu, cfg).rho_prime;
        } catch (const excluded_value_error&) {
            return -std::numeric_limits<double>::infinity();
        }
    };
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double c1 = b - gr * (b - a), c2 = a + gr * (b - a);
    double f1 = value(c1), f2 = value(c2);
    while (b - a > tol) {
        if (f1 < f2) {
            a = c1;
            c1 = c2;
            f1 = f2;
            c2 = a + gr * (b - a);
            f2 = value(c2);
        } else {
            b = c2;
            c2 = c1;
            f2 = f1;
            c1 = b - gr * (b - a);
            f1 = value(c1);
        }
    }
    const double mu_hat = 0.5 * (a + b);
    return {mu_hat, value(mu_hat)};
}

}  // namespace detail

inline std::vector<std::pair<double, double>> find_rho_maxima(const Expansion& exp,
                                                              const PotentialSpec& spec,
                                                              const ScanConfig& sc,
                                                              const SolverConfig& cfg) {
    detail::TransitionScanner scanner(spec, sc, cfg);
    const auto grid = detail::evaluate_grid(exp, spec, sc, cfg, scanner);
    std::vector<std::pair<double, double>> maxima;
    for (std::size_t i = 1; i + 1 < grid.mu.size(); ++i) {
        if (grid.hole[i - 1] || grid.hole[i] || grid.hole[i + 1]) continue;
        if (!(grid.rho[i] > grid.rho[i - 1] && grid.rho[i] >= grid.rho[i + 1])) continue;
        maxima.push_back(detail::refine_maximum(exp, spec, cfg, grid.mu[i - 1], grid.mu[i + 1],
                                                sc.mu_step * 0.02));
    }
    return maxima;
}

inline ScanResult scan_concentration(const Expansion& exp, const PotentialSpec& spec,
                                     const ScanConfig& sc, const SolverConfig& cfg) {
    detail::TransitionScanner scanner(spec, sc, cfg);
    const auto grid = detail::evaluate_grid(exp, spec, sc, cfg, scanner);
    const std::size_t n = grid.mu.size();

    ScanResult out;
    out.grid_mu = grid.mu;
    out.grid_rho = grid.rho;
    for (std::size_t i = 0; i < n; ++i)
        if (grid.hole[i]) out.hole_mu.push_back(grid.mu[i]);

    std::vector<std::pair<double, double>> maxima;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (grid.hole[i - 1] || grid.hole[i] || grid.hole[i + 1]) continue;
        if (!(grid.rho[i] > grid.rho[i - 1] && grid.rho[i] >= grid.rho[i + 1])) continue;
        maxima.push_back(detail::refine_maximum(exp, spec, cfg, grid.mu[i - 1], grid.mu[i + 1],
                                                sc.mu_step * 0.02));
    }
    out.maxima = maxima;

    std::vector<TransitionHit> hits;
    auto already_found = [&](int r, double mu) {
        for (const auto& h : hits)
            if (h.r == r && std::fabs(h.mu - mu) <= sc.refine_tol) return true;
        return false;
    };
    for (int r = 0; r <= sc.r_max; ++r) {
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const double dg = detail::TransitionScanner::gain(grid.probes[i + 1], r) -
                              detail::TransitionScanner::gain(grid.probes[i], r);
            if (dg < 0.5 * pi) continue;
            auto hit = scanner.probe_window(r, grid.mu[i], grid.mu[i + 1], hits);
            if (hit && !already_found(r, hit->mu)) hits.push_back(*hit);
        }
        for (const auto& [mu_hat, rho_hat] : maxima) {
            for (double w = sc.mu_step; w <= 4.0 * sc.mu_step + 1e-15; w *= 2.0) {
                auto hit = scanner.probe_window(r, mu_hat - w, mu_hat + w, hits);
                if (hit) {
                    if (!already_found(r, hit->mu)) hits.push_back(*hit);
                    break;
                }
            }
        }
    }
    std::sort(hits.begin(), hits.end(),
              [](const TransitionHit& a, const TransitionHit& b) {
                  return a.mu == b.mu ? a.r < b.r : a.mu < b.mu;
              });

    const double attach_radius = std::max(2.0 * sc.mu_step, 4.0 * sc.refine_tol);
    std::vector<char> max_used(maxima.size(), 0);
    for (const auto& h : hits) {
        ConcentrationPoint p;
        p.mu = h.mu;
        p.r = h.r;
        p.N = h.N;
        p.probe_width = h.probe_width;
        p.confirmed_by.insert(Confirmation::theta_transition);
        std::size_t best = maxima.size();
        double best_gap = attach_radius;
        for (std::size_t m = 0; m < maxima.size(); ++m) {
            const double gap = std::fabs(maxima[m].first - h.mu);
            if (gap <= best_gap) {
                best_gap = gap;
                best = m;
            }
        }
        if (best < maxima.size()) {
            p.confirmed_by.insert(Confirmation::rho_maximum);
            p.rho_prime = maxima[best].second;
            max_used[best] = 1;
        }
        out.points.push_back(std::move(p));
    }

    // attribute the remaining response of each maximum; below a = 2 an
    // unconfirmed maximum stays rejected rather than reported, and near an
    // excluded value the phase response is resonance tail, not attribution
    auto near_hole = [&](double mu_hat) {
        for (const double hm : out.hole_mu)
            if (std::fabs(mu_hat - hm) <= 2.0 * attach_radius) return true;
        return false;
    };
    for (std::size_t m = 0; m < maxima.size(); ++m) {
        const double mu_hat = maxima[m].first;
        if (spec.a >= 2.0 && !near_hole(mu_hat)) {
            const auto classes = scanner.classes(mu_hat, attach_radius);
            const double top = classes.empty() ? 0.0 : classes.front().slope;
            for (const auto& mc : classes) {
                if (mc.slope < 0.4 * top) break;
                bool represented = false;
                for (const auto& p : out.points)
                    if (p.r == mc.r &&
                        p.confirmed_by.count(Confirmation::theta_transition) &&
                        std::fabs(p.mu - mu_hat) <= attach_radius) {
                        represented = true;
                        break;
                    }
                if (represented) continue;
                ConcentrationPoint p;
                p.mu = mu_hat;
                p.r = mc.r;
                p.N = mc.N;
                p.rho_prime = maxima[m].second;
                p.confirmed_by.insert(Confirmation::rho_maximum);
                out.points.push_back(std::move(p));
                max_used[m] = 1;
            }
        }
        if (!max_used[m]) out.rejected_maxima.push_back(maxima[m]);
    }

    std::sort(out.points.begin(), out.points.end(),
              [](const ConcentrationPoint& a, const ConcentrationPoint& b) {
                  return a.mu == b.mu ? a.r < b.r : a.mu < b.mu;
              });
    for (std::size_t i = 0; i < out.points.size(); ++i)
        for (std::size_t j = i + 1; j < out.points.size(); ++j) {
            if (out.points[j].mu - out.points[i].mu > 2.0 * sc.refine_tol) break;
            if (out.points[i].r == out.points[j].r) continue;
            if (out.points[i].coalesced_with || out.points[j].coalesced_with) continue;
            out.points[i].coalesced_with = j;
            out.points[j].coalesced_with = i;
        }
    return out;
}

struct TracePointRow {
    double c = 0.0;
    std::optional<ConcentrationPoint> point;
};

// follows the (r, N) point across a family of amplitudes at fixed decay exponent
inline std::vector<TracePointRow> trace_point(const PotentialSpec& base,
                                              const std::vector<double>& c_values, int r, int N,
                                              const ScanConfig& sc, const SolverConfig& cfg,
                                              const ExpandOptions& opts = {}) {
    const Expansion exp = expand(base, opts);
    std::vector<TracePointRow> rows;
    for (const double c : c_values) {
        PotentialSpec spec(c, base.a, base.max_order);
        TracePointRow row;
        row.c = c;
        const auto res = scan_concentration(exp, spec, sc, cfg);
        for (const auto& p : res.points)
            if (p.r == r && p.N == N) {
                row.point = p;
                break;
            }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace specon
