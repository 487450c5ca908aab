#include "horochow/linalg.hpp"

namespace horochow {

Rref rref(MatQ m) {
    const int rows = static_cast<int>(m.rows());
    const int cols = static_cast<int>(m.cols());
    Rref out;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot_row = -1;
        for (int i = r; i < rows; ++i) {
            if (!m(i, c).is_zero()) {
                pivot_row = i;
                break;
            }
        }
        if (pivot_row < 0) continue;
        if (pivot_row != r) m.row(r).swap(m.row(pivot_row));
        const Rat lead = m(r, c);
        for (int j = c; j < cols; ++j) m(r, j) /= lead;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const Rat f = m(i, c);
            for (int j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    out.mat = std::move(m);
    return out;
}

int rank(const MatQ& m) { return rref(m).rank; }

MatQ kernel_basis(const MatQ& m) {
    const int cols = static_cast<int>(m.cols());
    Rref e = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int p : e.pivots) is_pivot[p] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    MatQ basis(cols, static_cast<int>(free_cols.size()));
    basis.setConstant(Rat(0));
    for (int k = 0; k < static_cast<int>(free_cols.size()); ++k) {
        const int fc = free_cols[k];
        basis(fc, k) = Rat(1);
        for (int row = 0; row < e.rank; ++row)
            basis(e.pivots[row], k) = -e.mat(row, fc);
    }
    return basis;
}

LinearSolution solve(const MatQ& a, const VecQ& b) {
    const int rows = static_cast<int>(a.rows());
    const int cols = static_cast<int>(a.cols());
    MatQ aug(rows, cols + 1);
    aug.leftCols(cols) = a;
    aug.col(cols) = b;
    Rref e = rref(std::move(aug));

    LinearSolution sol;
    sol.consistent = e.pivots.empty() || e.pivots.back() != cols;
    sol.kernel = kernel_basis(a);
    sol.particular = VecQ(cols);
    sol.particular.setConstant(Rat(0));
    if (!sol.consistent) return sol;
    for (int row = 0; row < e.rank; ++row)
        sol.particular(e.pivots[row]) = e.mat(row, cols);
    return sol;
}

Rat determinant(MatQ m) {
    if (m.rows() != m.cols()) throw Error("determinant of non-square matrix");
    const int n = static_cast<int>(m.rows());
    Rat det(1);
    for (int c = 0; c < n; ++c) {
        int pivot_row = -1;
        for (int i = c; i < n; ++i) {
            if (!m(i, c).is_zero()) {
                pivot_row = i;
                break;
            }
        }
        if (pivot_row < 0) return Rat(0);
        if (pivot_row != c) {
            m.row(c).swap(m.row(pivot_row));
            det = -det;
        }
        det *= m(c, c);
        const Rat inv_lead = Rat(1) / m(c, c);
        for (int i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            const Rat f = m(i, c) * inv_lead;
            for (int j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

std::optional<MatQ> inverse(const MatQ& m) {
    if (m.rows() != m.cols()) throw Error("inverse of non-square matrix");
    const int n = static_cast<int>(m.rows());
    if (n == 0) return MatQ(0, 0);
    MatQ aug(n, 2 * n);
    aug.setConstant(Rat(0));
    aug.leftCols(n) = m;
    for (int i = 0; i < n; ++i) aug(i, n + i) = Rat(1);
    Rref e = rref(std::move(aug));
    // The right block keeps the row rank at n; the left block is invertible
    // exactly when all pivots land inside it.
    if (e.pivots.empty() || e.pivots.back() != n - 1) return std::nullopt;
    return MatQ(e.mat.rightCols(n));
}

}  // namespace horochow
