// Symmetric tridiagonal eigensolver (QL with implicit shifts).
#pragma once

#include <vector>

namespace dualwell {

struct TridiagonalEigen {
    std::vector<double> values;                // ascending
    std::vector<std::vector<double>> vectors;  // vectors[j] pairs with values[j]
};

/// All eigenpairs of the symmetric tridiagonal matrix with the given diagonal
/// (size n) and sub/super-diagonal (size n-1). Eigenvectors are normalized;
/// set want_vectors = false to skip accumulating them.
TridiagonalEigen tridiagonal_eigen(const std::vector<double>& diag,
                                   const std::vector<double>& offdiag,
                                   bool want_vectors = true);

}  // namespace dualwell
