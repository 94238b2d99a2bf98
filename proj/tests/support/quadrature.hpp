#pragma once

#include <cstddef>
#include <vector>

namespace test_support {

// composite Simpson on a uniform grid; n panels (rounded up to even)
template <class Fn>
double simpson(Fn&& f, double a, double b, std::size_t n = 2000) {
    if (n % 2) ++n;
    const double h = (b - a) / static_cast<double>(n);
    double odd = 0.0, even = 0.0;
    for (std::size_t i = 1; i < n; i += 2) odd += f(a + h * static_cast<double>(i));
    for (std::size_t i = 2; i < n; i += 2) even += f(a + h * static_cast<double>(i));
    return h / 3.0 * (f(a) + f(b) + 4.0 * odd + 2.0 * even);
}

inline std::vector<double> linspace(double a, double b, std::size_t count) {
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i)
        out[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1);
    return out;
}

}  // namespace test_support
