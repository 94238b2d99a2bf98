#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "specon/concentrate.hpp"
#include "specon/expansion.hpp"

namespace specon {

inline nlohmann::json rational_to_json(const Rational& r) {
    return {{"num", r.num}, {"den", r.den}, {"value", r.to_double()}};
}

inline nlohmann::json coefficient_to_json(const CoefficientS& c) {
    nlohmann::json divisors = nlohmann::json::array();
    for (const auto& d : c.divisors) divisors.push_back({{"alpha", d.alpha}, {"beta", d.beta}});
    return {{"rational", rational_to_json(c.r)},
            {"s_inverse", c.s_inverse},
            {"divisors", divisors},
            {"text", c.to_string()}};
}

inline nlohmann::json factor_to_json(const DerivativeProduct& f) {
    nlohmann::json powers = nlohmann::json::array();
    for (const auto& [k, p] : f.powers()) powers.push_back({k, p});
    return {{"text", f.to_string()}, {"powers", powers}};
}

inline nlohmann::json term_to_json(const SymbolicTerm& t) {
    return {{"kind", t.kind == TermKind::I ? "I" : "J"},
            {"alpha", t.alpha},
            {"beta", t.beta},
            {"factor", factor_to_json(t.factor)},
            {"coefficient", coefficient_to_json(t.coeff)},
            {"generation", t.generation}};
}

inline nlohmann::json constant_to_json(const ConstantTerm& t) {
    return {{"factor", factor_to_json(t.factor)}, {"coefficient", coefficient_to_json(t.coeff)}};
}

inline nlohmann::json expansion_to_json(const Expansion& e) {
    nlohmann::json constants = nlohmann::json::array();
    for (const auto& t : e.constants) constants.push_back(constant_to_json(t));
    nlohmann::json residual = nlohmann::json::array();
    for (const auto& t : e.residual) residual.push_back(term_to_json(t));
    nlohmann::json excluded = nlohmann::json::array();
    for (const auto& q : e.excluded_mu) excluded.push_back(rational_to_json(q));
    return {{"schema", "specon.expansion/1"},
            {"a", e.a},
            {"options",
             {{"epsilon_order", e.options.epsilon_order},
              {"max_degree", e.options.max_degree},
              {"max_depth", e.options.max_depth}}},
            {"constants", constants},
            {"residual", residual},
            {"excluded_mu", excluded},
            {"rewrite_count", e.rewrite_count},
            {"folded_count", e.folded_count},
            {"generations", e.generations}};
}

inline std::string pretty_expansion(const Expansion& e) {
    std::ostringstream os;
    os << "expansion for a = " << e.a << " (epsilon_order " << e.options.epsilon_order
       << ", max_degree " << e.options.max_degree << ", max_depth ";
    if (e.options.max_depth > 0)
        os << e.options.max_depth;
    else
        os << "unbounded";
    os << ")\n";
    os << "boundary constants (" << e.constants.size() << "):\n";
    for (const auto& t : e.constants) os << "  " << t.to_string() << "\n";
    os << "residual terms (" << e.residual.size() << "):\n";
    for (const auto& t : e.residual) os << "  " << t.to_string() << "\n";
    os << "excluded mu:";
    if (e.excluded_mu.empty()) os << " none";
    for (const auto& q : e.excluded_mu) os << " " << q.to_string();
    os << "\n";
    os << "rewrites " << e.rewrite_count << ", folded " << e.folded_count << ", generations "
       << e.generations << "\n";
    return os.str();
}

inline nlohmann::json point_to_json(const ConcentrationPoint& p) {
    nlohmann::json confirmed = nlohmann::json::array();
    for (const auto c : p.confirmed_by)
        confirmed.push_back(c == Confirmation::rho_maximum ? "rho_maximum"
                                                           : "theta_transition");
    nlohmann::json j{{"mu", p.mu},          {"r", p.r},
                     {"N", p.N},            {"label", p.label()},
                     {"confirmed_by", confirmed}, {"probe_width", p.probe_width}};
    if (std::isfinite(p.rho_prime)) j["rho_prime"] = p.rho_prime;
    if (p.coalesced_with) j["coalesced_with"] = *p.coalesced_with;
    return j;
}

inline nlohmann::json scan_to_json(const ScanResult& r) {
    nlohmann::json points = nlohmann::json::array();
    for (const auto& p : r.points) points.push_back(point_to_json(p));
    nlohmann::json maxima = nlohmann::json::array();
    for (const auto& [mu, rho] : r.maxima) maxima.push_back({{"mu", mu}, {"rho_prime", rho}});
    nlohmann::json rejected = nlohmann::json::array();
    for (const auto& [mu, rho] : r.rejected_maxima)
        rejected.push_back({{"mu", mu}, {"rho_prime", rho}});
    return {{"schema", "specon.scan/1"},
            {"points", points},
            {"maxima", maxima},
            {"rejected_maxima", rejected},
            {"holes", r.hole_mu}};
}

}  // namespace specon
