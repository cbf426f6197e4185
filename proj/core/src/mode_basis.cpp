#include "dualwell/mode_basis.hpp"

#include <cmath>
#include <numbers>

#include "dualwell/quadrature.hpp"

namespace dualwell {
namespace {

constexpr double kPi = std::numbers::pi;

// Pole-free form of the root equation: g(k) = sin k + (2k/gamma) cos k.
// g(pi/2) = 1 > 0 and g(pi) = -2*pi/gamma < 0, so the bracket always holds.
long double root_fn(long double k, long double gamma) {
    return std::sin(k) + (2.0L * k / gamma) * std::cos(k);
}

}  // namespace

double solve_wavenumber(double gamma) {
    if (!(gamma > 0.0)) throw std::domain_error("gamma must be positive");

    const long double g = gamma;
    long double a = kPi / 2 + 1e-9L;
    long double b = kPi - 1e-9L;
    long double fa = root_fn(a, g);
    long double fb = root_fn(b, g);

    // Safeguarded bisection/secant hybrid on the bracket.
    long double x = 0.5L * (a + b);
    for (int it = 0; it < 200 && b - a > 1e-18L; ++it) {
        long double xs = b - fb * (b - a) / (fb - fa);
        if (!(xs > a && xs < b)) xs = 0.5L * (a + b);
        const long double fs = root_fn(xs, g);
        if (fs == 0.0L) {
            x = xs;
            break;
        }
        if ((fa < 0.0L) == (fs < 0.0L)) {
            a = xs;
            fa = fs;
        } else {
            b = xs;
            fb = fs;
        }
        x = 0.5L * (a + b);
    }
    // Newton polish in long double; g'(k) = cos k + (2/gamma)(cos k - k sin k).
    for (int it = 0; it < 4; ++it) {
        const long double fx = root_fn(x, g);
        const long double dfx =
            std::cos(x) + (2.0L / g) * (std::cos(x) - x * std::sin(x));
        if (dfx == 0.0L) break;
        x -= fx / dfx;
    }
    return static_cast<double>(x);
}

ModeBasis::ModeBasis(double gamma)
    : gamma_(gamma),
      k_(solve_wavenumber(gamma)),
      e0_(k_ * k_),
      e1_(kPi * kPi) {
    const double k = k_;
    const auto psi0_raw = [k, gamma](double x) {
        return std::sin(k * std::abs(x)) + (2.0 * k / gamma) * std::cos(k * x);
    };
    const auto sq = [&](double x) {
        const double p = psi0_raw(x);
        return p * p;
    };
    // Split at x = 0 where psi0 has a derivative kink.
    const double norm2 =
        integrate_adaptive(sq, -1.0, 0.0) + integrate_adaptive(sq, 0.0, 1.0);
    norm_a_ = 1.0 / std::sqrt(norm2);

    chi40_ = chi_integral(*this, 4, 0);
    chi04_ = chi_integral(*this, 0, 4);
    chi22_ = chi_integral(*this, 2, 2);
}

ModePair ModeBasis::eval(double x) const {
    if (std::abs(x) > 1.0) throw std::domain_error("position outside the box [-1, 1]");
    const double p0 =
        norm_a_ * (std::sin(k_ * std::abs(x)) + (2.0 * k_ / gamma_) * std::cos(k_ * x));
    const double p1 = std::sin(kPi * x);
    return {p0, p1};
}

double chi_integral(const ModeBasis& basis, int n, int m, double abs_tol) {
    if (n < 0 || m < 0 || n + m < 2) {
        throw std::domain_error("chi_integral requires n, m >= 0 and n + m >= 2");
    }
    if (m % 2 == 1) return 0.0;  // psi0 even, psi1 odd: odd integrand

    const auto integrand = [&basis, n, m](double x) {
        const ModePair p = basis.eval(x);
        double acc = 1.0;
        for (int i = 0; i < n; ++i) acc *= p.psi0;
        for (int i = 0; i < m; ++i) acc *= p.psi1;
        return acc;
    };
    return integrate_adaptive(integrand, -1.0, 0.0, 0.5 * abs_tol) +
           integrate_adaptive(integrand, 0.0, 1.0, 0.5 * abs_tol);
}

}  // namespace dualwell
