// Two lowest single-particle states of the box-delta double well and the
// scalar constants derived from them.
//
// The trap is an infinite box on |x| < 1 with a delta barrier of strength
// gamma at x = 0 (lengths in units of the half width a, energies in units of
// hbar^2 / (2 m a^2)). The ground state is the even mode
//
//     psi0(x) = A (sin k|x| + (2k/gamma) cos kx),   tan k = -2k/gamma,
//
// with k the first root above pi/2, and the first excited state is the odd
// mode psi1(x) = sin(pi x). Both vanish at x = +-1. Mode overlap moments
// chi_nm = integral of psi0^n psi1^m over the box feed every downstream
// energy expression.
#pragma once

#include <stdexcept>

namespace dualwell {

/// Root of tan k = -2k/gamma in (pi/2, pi), polished in extended precision so
/// the returned double is correctly rounded. Throws std::domain_error for
/// gamma <= 0.
double solve_wavenumber(double gamma);

struct ModePair {
    double psi0;
    double psi1;
};

class ModeBasis {
public:
    /// Builds the basis for barrier strength gamma > 0: solves the wave
    /// number, normalizes psi0 by quadrature, and tabulates chi40, chi04,
    /// chi22.
    explicit ModeBasis(double gamma);

    [[nodiscard]] double gamma() const { return gamma_; }
    [[nodiscard]] double wave_number() const { return k_; }
    [[nodiscard]] double norm_a() const { return norm_a_; }
    [[nodiscard]] double e0() const { return e0_; }  ///< ground energy k^2
    [[nodiscard]] double e1() const { return e1_; }  ///< excited energy pi^2
    [[nodiscard]] double chi40() const { return chi40_; }
    [[nodiscard]] double chi04() const { return chi04_; }
    [[nodiscard]] double chi22() const { return chi22_; }

    /// Mode values at x in [-1, 1]; throws std::domain_error outside the box.
    [[nodiscard]] ModePair eval(double x) const;

private:
    double gamma_;
    double k_;
    double norm_a_;
    double e0_;
    double e1_;
    double chi40_, chi04_, chi22_;
};

inline ModePair eval_modes(const ModeBasis& basis, double x) { return basis.eval(x); }

/// chi_nm = integral over [-1,1] of psi0^n psi1^m, by adaptive Gauss-Legendre
/// split at the x = 0 kink of psi0. Exactly zero for odd m (odd integrand).
/// Requires n, m >= 0 and n + m >= 2.
double chi_integral(const ModeBasis& basis, int n, int m, double abs_tol = 1e-12);

}  // namespace dualwell
