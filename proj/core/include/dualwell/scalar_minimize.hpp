// One-dimensional minimization: coarse grid scan to select the basin,
// golden-section contraction, then a parabolic polish step.
#pragma once

#include <cmath>
#include <stdexcept>

namespace dualwell {

struct ScalarMinimum {
    double x;
    double value;
};

/// Minimize f on [lo, hi]. The grid scan guards against multiple interior
/// minima; golden section assumes unimodality only inside the chosen basin.
template <class F>
ScalarMinimum minimize_scalar(F&& f, double lo, double hi, int grid_points = 1001,
                              double x_tol = 1e-10) {
    if (!(hi > lo)) throw std::invalid_argument("minimize_scalar: empty interval");
    if (grid_points < 3) grid_points = 3;

    const double h = (hi - lo) / (grid_points - 1);
    int best = 0;
    double best_val = f(lo);
    for (int i = 1; i < grid_points; ++i) {
        const double v = f(lo + i * h);
        if (v < best_val) {
            best_val = v;
            best = i;
        }
    }
    double a = (best == 0) ? lo : lo + (best - 1) * h;
    double b = (best == grid_points - 1) ? hi : lo + (best + 1) * h;

    constexpr double inv_phi = 0.6180339887498949;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > x_tol) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    double xm = 0.5 * (a + b);
    double fm = f(xm);

    // Parabolic polish through (xm-s, xm, xm+s); accept only if it improves.
    const double s = std::fmax(x_tol, 0.5 * (b - a));
    if (xm - s > lo && xm + s < hi) {
        const double fl = f(xm - s), fr = f(xm + s);
        const double denom = fl - 2.0 * fm + fr;
        if (denom > 0.0) {
            const double xq = xm + 0.5 * s * (fl - fr) / denom;
            const double fq = f(xq);
            if (fq < fm) {
                xm = xq;
                fm = fq;
            }
        }
    }
    return {xm, fm};
}

}  // namespace dualwell
