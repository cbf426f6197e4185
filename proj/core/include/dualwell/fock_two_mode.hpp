// Two-mode Fock Hamiltonian in the occupation basis |n0, n1 = N - n0>.
//
// Per-particle diagonal part:
//
//   H0(n0)/N = e0 n0/N + e1 n1/N
//            + (etaN/2) (1/N^2) [chi40 n0(n0-1) + chi04 n1(n1-1) + 4 chi22 n0 n1]
//
// The quartic tunneling term (etaN/2)(chi22/N^2)(a0+^2 a1^2 + a1+^2 a0^2)
// moves particles in pairs, so it couples only n0 <-> n0 + 2 and the matrix
// splits into decoupled even-n and odd-n tridiagonal blocks.
#pragma once

#include <span>
#include <vector>

#include "dualwell/mode_basis.hpp"

namespace dualwell {

enum class FockParity { even, odd, mixed };

struct FockVector {
    int n_particles = 0;
    std::vector<double> coeffs;  ///< C_n over n0 = 0..N, unit norm
    FockParity parity = FockParity::mixed;
    double energy_per_particle = 0.0;
};

/// Classify the support of a coefficient vector (even n, odd n, or both).
FockParity classify_parity(std::span<const double> coeffs, double rel_tol = 1e-12);

/// H0(n0)/N as written above. Throws std::domain_error for n0 outside 0..N.
double diagonal_energy(const ModeBasis& basis, int n_particles, double eta_n, int n0);

/// Matrix element <n0+2, n1-2| H' |n0, n1> of the tunneling operator itself
/// (the per-particle form times N):
///   (etaN/2)(chi22/N) sqrt((n0+1)(n0+2)(N-n0)(N-n0-1)).
/// Throws std::domain_error for n0 outside 0..N-2.
double tunneling_element(const ModeBasis& basis, int n_particles, double eta_n, int n0);

/// Assembled per-particle Hamiltonian: diagonal H0(n)/N and the n <-> n+2
/// couplings H'(n)/N. Eigenvalues of this matrix are energies per particle.
struct FockHamiltonian {
    int n_particles;
    double eta_n;
    std::vector<double> diag;     ///< size N+1, H0(n)/N
    std::vector<double> offdiag;  ///< size N-1, coupling n <-> n+2 per particle

    FockHamiltonian(const ModeBasis& basis, int n_particles, double eta_n);

    /// <C| H/N |C> for real coefficients C over n0 = 0..N.
    [[nodiscard]] double expectation(std::span<const double> coeffs) const;
};

struct DiagonalizeResult {
    FockVector ground_even;
    FockVector ground_odd;
    std::vector<double> spectrum;  ///< all N+1 per-particle energies, ascending
    double gap_abs;                ///< |E_even - E_odd| of the block grounds
    double gap_rel;                ///< gap_abs / |min(E_even, E_odd)|
    bool degenerate;               ///< gap_rel < 1e-8

    [[nodiscard]] const FockVector& ground() const {
        return ground_even.energy_per_particle <= ground_odd.energy_per_particle
                   ? ground_even
                   : ground_odd;
    }
};

/// Solve the even-n and odd-n tridiagonal blocks separately; the lowest state
/// of each comes back with exact structural zeros on the opposite parity and
/// the largest-|C_n| coefficient gauged positive.
DiagonalizeResult diagonalize(const ModeBasis& basis, int n_particles, double eta_n);

struct EnergyCurveRow {
    double eta_n;
    double e_symmetric;      ///< single condensate, H0(N)/N
    double e_diagonal_dual;  ///< min over integer n0 of H0(n0)/N
    double e_exact;          ///< full ground energy per particle
    double e_gpe;            ///< two-mode GPE variational minimum
    double gap_even_odd;     ///< |E_even - E_odd| of the block grounds
};

/// One row per grid point, computed in parallel and returned in grid order.
std::vector<EnergyCurveRow> energy_curves(const ModeBasis& basis, int n_particles,
                                          const std::vector<double>& eta_grid);

/// etaN below which the diagonal-only energy prefers a dual condensate, with
/// the occupation treated as a continuous variational parameter (the interior
/// minimum detaches from the n0 = N boundary):
///   etaN_c = 2N (e1-e0) / [(2N-1) chi40 + chi04 - 4N chi22].
double diagonal_crossover(const ModeBasis& basis, int n_particles);

/// Same preference expressed over integer occupations: largest etaN at which
/// some n0 < N strictly beats n0 = N. Lags the continuous threshold by the
/// discreteness of n0.
double diagonal_crossover_integer(const ModeBasis& basis, int n_particles);

/// Largest etaN at which the exact ground energy undercuts both the symmetric
/// single-condensate value and the diagonal-only dual value by more than
/// `margin` per particle.
double exact_crossover(const ModeBasis& basis, int n_particles, double margin = 0.005);

}  // namespace dualwell
