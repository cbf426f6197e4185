// Two-mode variational treatment of the Gross-Pitaevskii energy:
// trial state u*psi0 + v*psi1 with u^2 + v^2 = 1 gives
//
//   E(u) = u^2 e0 + v^2 e1 + (etaN/2) (chi40 u^4 + chi04 v^4 + 6 chi22 u^2 v^2),
//
// minimized over the mixing amplitude. For attractive coupling the u = 1
// boundary minimum destabilizes below a critical etaN and a degenerate pair
// of asymmetric minima (v -> -v) takes over.
#pragma once

#include "dualwell/mode_basis.hpp"

namespace dualwell {

enum class Branch { symmetric, asymmetric };

struct VariationalResult {
    double eta_n;
    double u;  ///< amplitude on psi0, in [0, 1]
    double v;  ///< amplitude on psi1, reported >= 0; (u, -v) is the degenerate mirror
    double energy_per_particle;
    Branch branch;
};

/// E(u) per particle with v^2 = 1 - u^2 substituted. Throws std::domain_error
/// for u outside [0, 1].
double variational_energy(const ModeBasis& basis, double eta_n, double u);

/// Global minimum over u in [0, 1]. Boundary candidates are compared exactly,
/// so the symmetric phase reports u = 1, v = 0 bitwise.
VariationalResult minimize_energy(const ModeBasis& basis, double eta_n);

struct BifurcationPoint {
    double eta_scan;         ///< bisection on the branch label of minimize_energy
    double eta_closed_form;  ///< stationarity at the boundary: (e1-e0)/(chi40-3*chi22)
};

/// Critical etaN where the u = 1 minimum destabilizes, by both routes.
BifurcationPoint bifurcation_point(const ModeBasis& basis);

/// Largest etaN at which the asymmetric branch undercuts the symmetric one by
/// more than `margin` per particle. This is what an energy plot (or a table
/// rounded to ~margin) shows as the onset; it lags the stationarity point
/// because the pitchfork opens quadratically.
double departure_point(const ModeBasis& basis, double margin, double eta_min = -8.0);

}  // namespace dualwell
