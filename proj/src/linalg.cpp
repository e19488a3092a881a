#include "hypercx/linalg.hpp"

namespace hypercx {

Rational det_bareiss(Mat<Rational> m) {
    const int n = m.rows;
    if (n == 0) return 1;
    Rational sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (m(i, k) != 0) { piv = i; break; }
            if (piv < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(k, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

std::vector<RowVec> rref(std::vector<RowVec> rows) {
    if (rows.empty()) return rows;
    const std::size_t cols = rows[0].size();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[sel], rows[pivot_row]);
        Rational inv = rows[pivot_row][col];
        for (std::size_t j = col; j < cols; ++j) rows[pivot_row][j] /= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == pivot_row || rows[i][col] == 0) continue;
            Rational f = rows[i][col];
            for (std::size_t j = col; j < cols; ++j)
                rows[i][j] -= f * rows[pivot_row][j];
        }
        ++pivot_row;
    }
    rows.resize(pivot_row);
    return rows;
}

bool in_row_space(RowVec row, const std::vector<RowVec>& basis) {
    for (const auto& b : basis) {
        std::size_t lead = 0;
        while (lead < b.size() && b[lead] == 0) ++lead;
        if (lead == b.size()) continue;
        if (row[lead] == 0) continue;
        Rational f = row[lead];
        for (std::size_t j = lead; j < b.size(); ++j) row[j] -= f * b[j];
    }
    for (const auto& v : row)
        if (v != 0) return false;
    return true;
}

std::vector<RowVec> left_kernel(const std::vector<RowVec>& m) {
    // Solve c^T m = 0 by row-reducing [m^T | I] and reading off the rows of
    // the identity block where m^T reduced to zero.
    const std::size_t nr = m.size();
    if (nr == 0) return {};
    const std::size_t nc = m[0].size();
    std::vector<RowVec> aug(nr, RowVec(nc + nr, Rational(0)));
    for (std::size_t i = 0; i < nr; ++i) {
        for (std::size_t j = 0; j < nc; ++j) aug[i][j] = m[i][j];
        aug[i][nc + i] = 1;
    }
    // Echelon on the first nc columns only.
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < nc && pivot_row < nr; ++col) {
        std::size_t sel = pivot_row;
        while (sel < nr && aug[sel][col] == 0) ++sel;
        if (sel == nr) continue;
        std::swap(aug[sel], aug[pivot_row]);
        for (std::size_t i = pivot_row + 1; i < nr; ++i) {
            if (aug[i][col] == 0) continue;
            Rational f = aug[i][col] / aug[pivot_row][col];
            for (std::size_t j = col; j < nc + nr; ++j)
                aug[i][j] -= f * aug[pivot_row][j];
        }
        ++pivot_row;
    }
    std::vector<RowVec> kernel;
    for (std::size_t i = pivot_row; i < nr; ++i)
        kernel.push_back(RowVec(aug[i].begin() + nc, aug[i].end()));
    return rref(std::move(kernel));
}

} // namespace hypercx
