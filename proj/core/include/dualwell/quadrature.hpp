// Composite Gauss-Legendre quadrature with adaptive panel refinement.
#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace dualwell {

/// Gauss-Legendre nodes and weights on [-1, 1], computed once per order.
class GaussLegendre {
public:
    explicit GaussLegendre(int order);

    [[nodiscard]] const std::vector<double>& nodes() const { return nodes_; }
    [[nodiscard]] const std::vector<double>& weights() const { return weights_; }

    /// Single-panel integral of f over [a, b].
    template <class F>
    [[nodiscard]] double panel(F&& f, double a, double b) const {
        const double mid = 0.5 * (a + b);
        const double half = 0.5 * (b - a);
        double acc = 0.0;
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            acc += weights_[i] * f(mid + half * nodes_[i]);
        }
        return half * acc;
    }

    /// Composite integral over [a, b] split into `panels` equal panels.
    template <class F>
    [[nodiscard]] double composite(F&& f, double a, double b, int panels) const {
        const double h = (b - a) / panels;
        double acc = 0.0;
        for (int p = 0; p < panels; ++p) {
            acc += panel(f, a + p * h, a + (p + 1) * h);
        }
        return acc;
    }

private:
    std::vector<double> nodes_;
    std::vector<double> weights_;
};

inline const GaussLegendre& gauss_legendre_16() {
    static const GaussLegendre rule(16);
    return rule;
}

/// Integrate f over [a, b], doubling the panel count until two successive
/// composite rules agree to abs_tol. Throws if the refinement stalls.
template <class F>
double integrate_adaptive(F&& f, double a, double b, double abs_tol = 1e-12,
                          int order = 16, int max_doublings = 16) {
    std::optional<GaussLegendre> custom;
    const GaussLegendre& rule = (order == 16) ? gauss_legendre_16() : custom.emplace(order);

    double prev = rule.composite(f, a, b, 1);
    int panels = 2;
    for (int d = 0; d < max_doublings; ++d, panels *= 2) {
        const double cur = rule.composite(f, a, b, panels);
        if (std::abs(cur - prev) < abs_tol) return cur;
        prev = cur;
    }
    throw std::runtime_error("integrate_adaptive: no convergence to requested tolerance");
}

}  // namespace dualwell
