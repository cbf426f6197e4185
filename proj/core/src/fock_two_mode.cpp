#include "dualwell/fock_two_mode.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dualwell/gpe_two_mode.hpp"
#include "dualwell/parallel.hpp"
#include "dualwell/tridiagonal.hpp"

namespace dualwell {
namespace {

constexpr double kDegeneracyRelTol = 1e-8;

void check_particles(int n_particles) {
    if (n_particles < 2) throw std::domain_error("need at least two particles");
}

// Gauge: flip the sign so the largest-|C_n| coefficient is positive.
void gauge_positive(std::vector<double>& c) {
    double best = 0.0;
    double best_abs = -1.0;
    for (const double x : c) {
        if (std::abs(x) > best_abs) {
            best_abs = std::abs(x);
            best = x;
        }
    }
    if (best < 0.0) {
        for (double& x : c) x = -x;
    }
}

}  // namespace

FockParity classify_parity(std::span<const double> coeffs, double rel_tol) {
    double max_even = 0.0, max_odd = 0.0, max_all = 0.0;
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        const double a = std::abs(coeffs[n]);
        ((n % 2 == 0) ? max_even : max_odd) = std::max((n % 2 == 0) ? max_even : max_odd, a);
        max_all = std::max(max_all, a);
    }
    if (max_odd <= rel_tol * max_all) return FockParity::even;
    if (max_even <= rel_tol * max_all) return FockParity::odd;
    return FockParity::mixed;
}

double diagonal_energy(const ModeBasis& basis, int n_particles, double eta_n, int n0) {
    check_particles(n_particles);
    if (n0 < 0 || n0 > n_particles) throw std::domain_error("n0 outside 0..N");
    const double N = n_particles;
    const double a = n0;
    const double b = n_particles - n0;
    return basis.e0() * a / N + basis.e1() * b / N +
           0.5 * eta_n / (N * N) *
               (basis.chi40() * a * (a - 1.0) + basis.chi04() * b * (b - 1.0) +
                4.0 * basis.chi22() * a * b);
}

double tunneling_element(const ModeBasis& basis, int n_particles, double eta_n, int n0) {
    check_particles(n_particles);
    if (n0 < 0 || n0 > n_particles - 2) throw std::domain_error("n0 outside 0..N-2");
    const double N = n_particles;
    const double a = n0;
    return 0.5 * eta_n * basis.chi22() / N *
           std::sqrt((a + 1.0) * (a + 2.0) * (N - a) * (N - a - 1.0));
}

FockHamiltonian::FockHamiltonian(const ModeBasis& basis, int n, double eta)
    : n_particles(n), eta_n(eta) {
    check_particles(n);
    diag.resize(n + 1);
    offdiag.resize(n - 1);
    for (int n0 = 0; n0 <= n; ++n0) diag[n0] = diagonal_energy(basis, n, eta, n0);
    for (int n0 = 0; n0 <= n - 2; ++n0) {
        offdiag[n0] = tunneling_element(basis, n, eta, n0) / n;
    }
}

double FockHamiltonian::expectation(std::span<const double> coeffs) const {
    if (coeffs.size() != diag.size()) {
        throw std::invalid_argument("coefficient vector has wrong length");
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) acc += coeffs[i] * coeffs[i] * diag[i];
    for (std::size_t i = 0; i + 2 < coeffs.size(); ++i) {
        acc += 2.0 * coeffs[i] * coeffs[i + 2] * offdiag[i];
    }
    return acc;
}

DiagonalizeResult diagonalize(const ModeBasis& basis, int n_particles, double eta_n) {
    const FockHamiltonian h(basis, n_particles, eta_n);
    const int N = n_particles;

    DiagonalizeResult out;
    out.spectrum.reserve(N + 1);

    for (const int start : {0, 1}) {
        std::vector<double> d, e;
        std::vector<int> labels;
        for (int n0 = start; n0 <= N; n0 += 2) {
            d.push_back(h.diag[n0]);
            labels.push_back(n0);
            if (n0 + 2 <= N) e.push_back(h.offdiag[n0]);
        }
        const TridiagonalEigen eig = tridiagonal_eigen(d, e, true);
        out.spectrum.insert(out.spectrum.end(), eig.values.begin(), eig.values.end());

        FockVector ground;
        ground.n_particles = N;
        ground.coeffs.assign(N + 1, 0.0);
        for (std::size_t i = 0; i < labels.size(); ++i) {
            ground.coeffs[labels[i]] = eig.vectors[0][i];
        }
        gauge_positive(ground.coeffs);
        ground.parity = (start == 0) ? FockParity::even : FockParity::odd;
        ground.energy_per_particle = eig.values[0];
        (start == 0 ? out.ground_even : out.ground_odd) = std::move(ground);
    }

    std::sort(out.spectrum.begin(), out.spectrum.end());
    const double e_even = out.ground_even.energy_per_particle;
    const double e_odd = out.ground_odd.energy_per_particle;
    out.gap_abs = std::abs(e_even - e_odd);
    const double scale = std::abs(std::min(e_even, e_odd));
    out.gap_rel = (scale > 0.0) ? out.gap_abs / scale : out.gap_abs;
    out.degenerate = out.gap_rel < kDegeneracyRelTol;
    return out;
}

std::vector<EnergyCurveRow> energy_curves(const ModeBasis& basis, int n_particles,
                                          const std::vector<double>& eta_grid) {
    if (eta_grid.empty()) throw std::invalid_argument("energy_curves: empty grid");
    std::vector<EnergyCurveRow> rows(eta_grid.size());
    parallel_for(eta_grid.size(), [&](std::size_t i) {
        const double eta = eta_grid[i];
        double diag_min = diagonal_energy(basis, n_particles, eta, 0);
        for (int n0 = 1; n0 <= n_particles; ++n0) {
            diag_min = std::min(diag_min, diagonal_energy(basis, n_particles, eta, n0));
        }
        const DiagonalizeResult d = diagonalize(basis, n_particles, eta);
        rows[i] = {eta,
                   diagonal_energy(basis, n_particles, eta, n_particles),
                   diag_min,
                   d.spectrum.front(),
                   minimize_energy(basis, eta).energy_per_particle,
                   d.gap_abs};
    });
    return rows;
}

double diagonal_crossover(const ModeBasis& basis, int n_particles) {
    check_particles(n_particles);
    const double N = n_particles;
    const double denom =
        (2.0 * N - 1.0) * basis.chi40() + basis.chi04() - 4.0 * N * basis.chi22();
    return 2.0 * N * (basis.e1() - basis.e0()) / denom;
}

double diagonal_crossover_integer(const ModeBasis& basis, int n_particles) {
    check_particles(n_particles);
    const auto dual_preferred = [&](double eta) {
        const double boundary = diagonal_energy(basis, n_particles, eta, n_particles);
        for (int n0 = 0; n0 < n_particles; ++n0) {
            if (diagonal_energy(basis, n_particles, eta, n0) < boundary) return true;
        }
        return false;
    };
    double lo = diagonal_crossover(basis, n_particles) - 2.0;
    double hi = 0.0;
    while (!dual_preferred(lo)) lo -= 2.0;
    for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (dual_preferred(mid)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double exact_crossover(const ModeBasis& basis, int n_particles, double margin) {
    check_particles(n_particles);
    const auto beats_both = [&](double eta) {
        const double sym = diagonal_energy(basis, n_particles, eta, n_particles);
        double diag_min = sym;
        for (int n0 = 0; n0 < n_particles; ++n0) {
            diag_min = std::min(diag_min, diagonal_energy(basis, n_particles, eta, n0));
        }
        const DiagonalizeResult d = diagonalize(basis, n_particles, eta);
        return d.spectrum.front() < std::min(sym, diag_min) - margin;
    };
    double lo = -6.0;
    double hi = -0.5;
    while (!beats_both(lo)) lo -= 2.0;
    for (int it = 0; it < 50; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (beats_both(mid)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace dualwell
