#pragma once

#include <optional>
#include <vector>

#include "horochow/rational.hpp"

namespace horochow {

/// Result of exact Gauss-Jordan elimination.
struct Rref {
    MatQ mat;                 ///< reduced row echelon form
    std::vector<int> pivots;  ///< pivot column of each nonzero row, ascending
    int rank = 0;
};

/// Reduced row echelon form over the rationals.  Deterministic: in every
/// column the first nonzero candidate row becomes the pivot, so repeated
/// runs on equal input give identical output.
Rref rref(MatQ m);

int rank(const MatQ& m);

/// Basis of the right kernel of `m`, one column per basis vector, produced
/// from the reduced echelon form (free variables in ascending column order).
MatQ kernel_basis(const MatQ& m);

/// Outcome of solving A x = b exactly.
struct LinearSolution {
    bool consistent = false;
    VecQ particular;   ///< one solution (free variables set to zero)
    MatQ kernel;       ///< basis of solutions of A x = 0, one per column
};

LinearSolution solve(const MatQ& a, const VecQ& b);

/// Exact determinant by fraction-free style elimination on a copy.
Rat determinant(MatQ m);

/// Inverse of a square matrix; std::nullopt when singular.
std::optional<MatQ> inverse(const MatQ& m);

}  // namespace horochow
