#include "krall/linsolve.hpp"

#include <stdexcept>

namespace krall {

LinearSolution linsolve(const LinSystem& sys) {
    const int m = sys.a.rows();
    const int n = sys.a.cols();
    if (static_cast<int>(sys.rhs.size()) != m)
        throw std::invalid_argument("linsolve: rhs size does not match row count");

    // Augmented matrix, reduced to RREF by exact Gauss-Jordan elimination.
    Matrix<Rat> aug(m, n + 1);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = sys.a.at(i, j);
        aug.at(i, n) = sys.rhs[static_cast<size_t>(i)];
    }

    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        int piv = -1;
        for (int i = row; i < m; ++i)
            if (!aug.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != row) aug.swap_rows(piv, row);
        Rat inv = Rat(1) / aug.at(row, col);
        for (int j = col; j <= n; ++j) aug.at(row, j) *= inv;
        for (int i = 0; i < m; ++i) {
            if (i == row || aug.at(i, col).is_zero()) continue;
            Rat f = aug.at(i, col);
            for (int j = col; j <= n; ++j) aug.at(i, j) -= f * aug.at(row, j);
        }
        pivot_col.push_back(col);
        ++row;
    }

    LinearSolution out;
    for (int i = row; i < m; ++i) {
        if (!aug.at(i, n).is_zero()) {
            out.kind = SolveKind::Infeasible;
            return out;
        }
    }

    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;

    out.particular.assign(static_cast<size_t>(n), Rat(0));
    for (size_t r = 0; r < pivot_col.size(); ++r)
        out.particular[static_cast<size_t>(pivot_col[r])] = aug.at(static_cast<int>(r), n);

    for (int c = 0; c < n; ++c) {
        if (is_pivot[static_cast<size_t>(c)]) continue;
        std::vector<Rat> v(static_cast<size_t>(n), Rat(0));
        v[static_cast<size_t>(c)] = Rat(1);
        for (size_t r = 0; r < pivot_col.size(); ++r)
            v[static_cast<size_t>(pivot_col[r])] = -aug.at(static_cast<int>(r), c);
        out.nullspace.push_back(std::move(v));
    }

    out.kind = out.nullspace.empty() ? SolveKind::Unique : SolveKind::Affine;
    return out;
}

}  // namespace krall
