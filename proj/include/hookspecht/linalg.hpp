#pragma once

#include "hookspecht/fields.hpp"

#include <vector>

namespace hookspecht {

/// Kernel of an ncols-column matrix by exact Gauss-Jordan elimination.
/// Pivoting is deterministic (first nonzero entry in row-major order), so the
/// returned basis is reproducible across runs. Basis vectors are normalized
/// with a 1 in their free column.
template <CoefficientField F>
std::vector<std::vector<typename F::Elem>>
kernel_basis(const F& field, std::vector<std::vector<typename F::Elem>> rows, int ncols) {
    using Elem = typename F::Elem;
    int nrows = static_cast<int>(rows.size());
    std::vector<int> pivot_col_of_row;
    std::vector<int> pivot_row_of_col(ncols, -1);

    int row = 0;
    for (int col = 0; col < ncols && row < nrows; ++col) {
        int found = -1;
        for (int r = row; r < nrows; ++r)
            if (!field.is_zero(rows[r][col])) {
                found = r;
                break;
            }
        if (found < 0) continue;
        std::swap(rows[row], rows[found]);
        Elem inv = field.inv(rows[row][col]);
        for (int c = col; c < ncols; ++c) rows[row][c] = field.mul(rows[row][c], inv);
        for (int r = 0; r < nrows; ++r) {
            if (r == row || field.is_zero(rows[r][col])) continue;
            Elem factor = rows[r][col];
            for (int c = col; c < ncols; ++c)
                rows[r][c] = field.sub(rows[r][c], field.mul(factor, rows[row][c]));
        }
        pivot_col_of_row.push_back(col);
        pivot_row_of_col[col] = row;
        ++row;
    }

    std::vector<std::vector<Elem>> kernel;
    for (int col = 0; col < ncols; ++col) {
        if (pivot_row_of_col[col] >= 0) continue;
        std::vector<Elem> v(ncols, field.zero());
        v[col] = field.one();
        for (int pc = 0; pc < ncols; ++pc) {
            int pr = pivot_row_of_col[pc];
            if (pr >= 0) v[pc] = field.neg(rows[pr][col]);
        }
        kernel.push_back(std::move(v));
    }
    return kernel;
}

} // namespace hookspecht
