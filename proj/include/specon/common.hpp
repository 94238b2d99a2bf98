#pragma once

#include <stdexcept>
#include <string>

namespace specon {

inline constexpr double pi = 3.14159265358979323846;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// invalid construction parameters or out-of-domain arguments
struct domain_error : error {
    using error::error;
};

// xi derivative order above the configured maximum
struct unsupported_order_error : error {
    using error::error;
};

// evaluation requested at or near a resonant mu value
struct excluded_value_error : error {
    double mu;
    double excluded_at;

    excluded_value_error(const std::string& msg, double mu_, double at)
        : error(msg), mu(mu_), excluded_at(at) {}
};

// adaptive step size underflow or step budget exhausted
struct solver_error : error {
    using error::error;
};

// a rewrite was requested for a term it cannot apply to
struct rewrite_error : error {
    using error::error;
};

}  // namespace specon
