#include <fstream>
#include <iostream>

#include "specon/concentrate.hpp"
#include "specon/emit.hpp"

// sweeps rho' for a potential with a resonance hole inside the window and
// writes the curve plus the detected concentration points as an SVG
int main() {
    using namespace specon;
    const PotentialSpec spec(49.26, 2.0);
    const Expansion e = expand(spec);

    ScanConfig sc;
    sc.mu_min = 0.05;
    sc.mu_max = 0.60;
    const SolverConfig cfg;
    const ScanResult res = scan_concentration(e, spec, sc, cfg);

    SvgPlot plot("spectral density derivative near a resonance hole", "mu", "rho'");
    SvgSeries s;
    for (std::size_t i = 0; i < res.grid_mu.size(); ++i)
        s.points.push_back({res.grid_mu[i], res.grid_rho[i]});
    s.color = palette(0);
    s.label = "rho'";
    plot.add(std::move(s));
    for (const auto& p : res.points) plot.vertical_marker(p.mu, palette(1 + p.r), p.label());

    std::ofstream f("rho_curve.svg");
    plot.render(f);

    for (const auto& p : res.points)
        std::cout << p.label() << " at mu=" << format_g6(p.mu)
                  << (p.confirmed_by.count(Confirmation::theta_transition)
                          ? " (transition confirmed)"
                          : "")
                  << "\n";
    for (const double h : res.hole_mu) std::cout << "hole at mu=" << format_g6(h) << "\n";
    std::cout << "wrote rho_curve.svg\n";
    return 0;
}
