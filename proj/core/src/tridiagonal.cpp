#include "dualwell/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dualwell {

// QL iteration with implicit Wilkinson shifts. The rotation sequence is the
// classical one (Bowdler-Martin-Reinsch-Wilkinson); eigenvectors accumulate
// in z, stored row-major with z[r*n + c] = component r of eigenvector c.
TridiagonalEigen tridiagonal_eigen(const std::vector<double>& diag,
                                   const std::vector<double>& offdiag,
                                   bool want_vectors) {
    const std::size_t n = diag.size();
    if (n == 0) throw std::invalid_argument("tridiagonal_eigen: empty matrix");
    if (offdiag.size() + 1 != n) {
        throw std::invalid_argument("tridiagonal_eigen: offdiag must have size n-1");
    }

    std::vector<double> d = diag;
    std::vector<double> e(n, 0.0);
    std::copy(offdiag.begin(), offdiag.end(), e.begin());  // e[0..n-2], e[n-1] spare

    std::vector<double> z;
    if (want_vectors) {
        z.assign(n * n, 0.0);
        for (std::size_t i = 0; i < n; ++i) z[i * n + i] = 1.0;
    }

    for (std::size_t l = 0; l < n; ++l) {
        int iter = 0;
        std::size_t m;
        do {
            for (m = l; m + 1 < n; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= 1e-300 || std::abs(e[m]) <= 2.3e-16 * dd) break;
            }
            if (m != l) {
                if (++iter == 50) {
                    throw std::runtime_error("tridiagonal_eigen: QL failed to converge");
                }
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                for (std::size_t i = m; i-- > l;) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    if (want_vectors) {
                        for (std::size_t k = 0; k < n; ++k) {
                            f = z[k * n + i + 1];
                            z[k * n + i + 1] = s * z[k * n + i] + c * f;
                            z[k * n + i] = c * z[k * n + i] - s * f;
                        }
                    }
                }
                if (r == 0.0 && m - l > 1) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }

    // Sort ascending, carrying eigenvectors along.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&d](std::size_t a, std::size_t b) { return d[a] < d[b]; });

    TridiagonalEigen out;
    out.values.resize(n);
    for (std::size_t j = 0; j < n; ++j) out.values[j] = d[order[j]];
    if (want_vectors) {
        out.vectors.assign(n, std::vector<double>(n));
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t c = order[j];
            double norm2 = 0.0;
            for (std::size_t r = 0; r < n; ++r) {
                out.vectors[j][r] = z[r * n + c];
                norm2 += out.vectors[j][r] * out.vectors[j][r];
            }
            const double inv = 1.0 / std::sqrt(norm2);
            for (double& x : out.vectors[j]) x *= inv;
        }
    }
    return out;
}

}  // namespace dualwell
