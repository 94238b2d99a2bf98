#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "specon/common.hpp"

namespace specon {

struct StepControl {
    double rel_tol = 1e-9;
    double abs_tol = 1e-11;
    double max_step = 0.1;
    double initial_step = 0.0;  // 0 picks a conservative default
    std::int64_t max_steps = 200'000'000;
};

// Dormand-Prince 5(4) with FSAL and quartic dense output
template <int N>
class Dopri5 {
public:
    using State = std::array<double, N>;

    // integrates y' = f(x, y) from x0 to x_end; grid points (sorted, within [x0, x_end])
    // are filled via dense interpolation into at_grid when provided
    template <class RHS>
    static State integrate(RHS&& f, double x0, State y, double x_end, const StepControl& ctl,
                           const std::vector<double>& grid = {},
                           std::vector<State>* at_grid = nullptr) {
        static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
        static constexpr double a21 = 1.0 / 5;
        static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
        static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
        static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                                a53 = 64448.0 / 6561, a54 = -212.0 / 729;
        static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                                a64 = 49.0 / 176, a65 = -5103.0 / 18656;
        static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                                b5 = -2187.0 / 6784, b6 = 11.0 / 84;
        static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                                e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
        static constexpr double d1 = -12715105075.0 / 11282082432.0,
                                d3 = 87487479700.0 / 32700410799.0,
                                d4 = -10690763975.0 / 1880347072.0,
                                d5 = 701980252875.0 / 199316789632.0,
                                d6 = -1453857185.0 / 822651844.0,
                                d7 = 69997945.0 / 29380423.0;

        if (at_grid) at_grid->assign(grid.size(), State{});
        std::size_t gi = 0;
        while (gi < grid.size() && grid[gi] <= x0) {
            if (at_grid) (*at_grid)[gi] = y;
            ++gi;
        }
        if (x_end <= x0) return y;

        State k1, k2, k3, k4, k5, k6, k7, ytmp, ynew;
        double x = x0;
        double h = ctl.initial_step > 0 ? ctl.initial_step : 1e-3;
        if (h > ctl.max_step) h = ctl.max_step;
        f(x, y, k1);
        std::int64_t steps = 0;
        bool last = false;
        while (!last) {
            if (x + h >= x_end) {
                h = x_end - x;
                last = true;
            }
            for (int i = 0; i < N; ++i) ytmp[i] = y[i] + h * a21 * k1[i];
            f(x + c2 * h, ytmp, k2);
            for (int i = 0; i < N; ++i) ytmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
            f(x + c3 * h, ytmp, k3);
            for (int i = 0; i < N; ++i)
                ytmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
            f(x + c4 * h, ytmp, k4);
            for (int i = 0; i < N; ++i)
                ytmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
            f(x + c5 * h, ytmp, k5);
            for (int i = 0; i < N; ++i)
                ytmp[i] = y[i] +
                          h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] +
                               a65 * k5[i]);
            f(x + h, ytmp, k6);
            for (int i = 0; i < N; ++i)
                ynew[i] = y[i] +
                          h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
            f(x + h, ynew, k7);

            double err = 0.0;
            for (int i = 0; i < N; ++i) {
                const double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                                       e6 * k6[i] + e7 * k7[i]);
                const double sc =
                    ctl.abs_tol +
                    ctl.rel_tol * std::max(std::fabs(y[i]), std::fabs(ynew[i]));
                err += (ei / sc) * (ei / sc);
            }
            err = std::sqrt(err / N);

            if (err <= 1.0) {
                while (gi < grid.size() && grid[gi] <= x + h + 1e-14 * (1.0 + std::fabs(x))) {
                    const double sfrac = (grid[gi] - x) / h;
                    const double s1 = 1.0 - sfrac;
                    if (at_grid) {
                        State& out = (*at_grid)[gi];
                        for (int i = 0; i < N; ++i) {
                            const double ydiff = ynew[i] - y[i];
                            const double bspl = h * k1[i] - ydiff;
                            const double r4 = ydiff - h * k7[i] - bspl;
                            const double r5 = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] +
                                                   d5 * k5[i] + d6 * k6[i] + d7 * k7[i]);
                            out[i] = y[i] +
                                     sfrac * (ydiff + s1 * (bspl + sfrac * (r4 + s1 * r5)));
                        }
                    }
                    ++gi;
                }
                x += h;
                y = ynew;
                k1 = k7;
            } else {
                last = false;
            }

            double fac = 0.9 * std::pow(std::max(err, 1e-30), -0.2);
            fac = std::min(10.0, std::max(0.2, fac));
            h *= fac;
            if (h > ctl.max_step) h = ctl.max_step;
            if (!last && x + h == x) throw solver_error("step size underflow");
            if (++steps > ctl.max_steps) throw solver_error("step budget exhausted");
        }
        while (gi < grid.size()) {
            if (at_grid) (*at_grid)[gi] = y;
            ++gi;
        }
        return y;
    }
};

}  // namespace specon
