#ifndef SINGVECT_RATIONAL_LINALG_HPP
#define SINGVECT_RATIONAL_LINALG_HPP

#include "singvect/rational.hpp"

#include <vector>

namespace singvect {

using RationalMatrix = std::vector<std::vector<Rational>>;

// In-place reduced row echelon form; returns pivot columns.
inline std::vector<int> rref(RationalMatrix& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    int nrows = static_cast<int>(m.size());
    int ncols = static_cast<int>(m[0].size());
    int row = 0;
    for (int c = 0; c < ncols && row < nrows; ++c) {
        int sel = -1;
        for (int r = row; r < nrows; ++r)
            if (m[r][c] != 0) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(m[row], m[sel]);
        Rational inv = Rational(1) / m[row][c];
        for (auto& v : m[row]) v *= inv;
        for (int r = 0; r < nrows; ++r) {
            if (r == row || m[r][c] == 0) continue;
            Rational f = m[r][c];
            for (int c2 = 0; c2 < ncols; ++c2) m[r][c2] -= f * m[row][c2];
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

inline int rank(RationalMatrix m) { return static_cast<int>(rref(m).size()); }

// Kernel basis of m * x = 0, one vector per free column, RREF-normalized.
inline std::vector<std::vector<Rational>> kernel_basis(RationalMatrix m, int ncols) {
    for (auto& row : m)
        row.resize(ncols);
    auto pivots = rref(m);
    std::vector<bool> is_pivot(ncols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (int f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(ncols, 0);
        v[f] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace singvect

#endif
