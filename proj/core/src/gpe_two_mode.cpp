#include "dualwell/gpe_two_mode.hpp"

#include <cmath>

#include "dualwell/scalar_minimize.hpp"

namespace dualwell {
namespace {

constexpr double kSymmetricVTol = 1e-8;  // branch label threshold on |v|

}  // namespace

double variational_energy(const ModeBasis& basis, double eta_n, double u) {
    if (!(u >= 0.0 && u <= 1.0)) throw std::domain_error("u must lie in [0, 1]");
    const double u2 = u * u;
    const double v2 = 1.0 - u2;
    return u2 * basis.e0() + v2 * basis.e1() +
           0.5 * eta_n *
               (basis.chi40() * u2 * u2 + basis.chi04() * v2 * v2 +
                6.0 * basis.chi22() * u2 * v2);
}

VariationalResult minimize_energy(const ModeBasis& basis, double eta_n) {
    const auto energy = [&](double u) { return variational_energy(basis, eta_n, u); };

    ScalarMinimum interior = minimize_scalar(energy, 0.0, 1.0, 1001, 1e-10);

    // The interior search cannot converge onto a boundary point exactly;
    // compare the endpoints so the symmetric phase reports u = 1 exactly.
    for (const double ub : {0.0, 1.0}) {
        const double eb = energy(ub);
        if (eb <= interior.value) interior = {ub, eb};
    }

    const double u = interior.x;
    const double v = std::sqrt(std::fmax(0.0, 1.0 - u * u));
    const Branch branch = (v < kSymmetricVTol) ? Branch::symmetric : Branch::asymmetric;
    return {eta_n, u, branch == Branch::symmetric ? 0.0 : v, interior.value, branch};
}

BifurcationPoint bifurcation_point(const ModeBasis& basis) {
    const double closed =
        (basis.e1() - basis.e0()) / (basis.chi40() - 3.0 * basis.chi22());

    // Bisection on the branch label around the closed-form estimate.
    double lo = closed - 1.0;  // asymmetric side
    double hi = closed + 1.0;  // symmetric side
    while (minimize_energy(basis, lo).branch == Branch::symmetric) lo -= 1.0;
    while (minimize_energy(basis, hi).branch == Branch::asymmetric) hi += 1.0;
    for (int it = 0; it < 64 && hi - lo > 1e-9; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (minimize_energy(basis, mid).branch == Branch::asymmetric) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return {0.5 * (lo + hi), closed};
}

double departure_point(const ModeBasis& basis, double margin, double eta_min) {
    const auto gain = [&](double eta) {
        const VariationalResult r = minimize_energy(basis, eta);
        return variational_energy(basis, eta, 1.0) - r.energy_per_particle;
    };
    double lo = eta_min;  // gain > margin side
    double hi = 0.0;
    if (gain(lo) <= margin) return lo;
    for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (gain(mid) > margin) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace dualwell
