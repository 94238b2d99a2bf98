#include <iostream>

#include "specon/serialize.hpp"

// prints the rewrite system produced for a few decay exponents
int main() {
    using namespace specon;
    for (const double a : {0.5, 1.0, 2.0}) {
        const Expansion e = expand(PotentialSpec(1.0, a));
        std::cout << pretty_expansion(e) << "\n";
    }

    ExpandOptions deep;
    deep.epsilon_order = 1e9;
    deep.max_degree = 1 << 20;
    deep.max_depth = 3;
    const Expansion e3 = expand(PotentialSpec(1.0, 2.0), deep);
    std::cout << "exhaustive depth 3 at a=2 excludes:";
    for (const auto& q : e3.excluded_mu) std::cout << " " << q.to_string();
    std::cout << "\n";
    return 0;
}
