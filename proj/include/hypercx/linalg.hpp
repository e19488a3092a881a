#ifndef HYPERCX_LINALG_HPP
#define HYPERCX_LINALG_HPP

#include "hypercx/rational.hpp"

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace hypercx {

/// Row-major dense matrix with runtime size. Small (n <= 8 in this project),
/// so no attempt at blocking or views.
template <class S>
struct Mat {
    int rows = 0, cols = 0;
    std::vector<S> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

    S& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const S& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

inline double pivot_mag(double x) { return std::fabs(x); }
inline double pivot_mag(const std::complex<double>& x) { return std::abs(x); }
inline double pivot_mag(const Rational& x) { return x == 0 ? 0.0 : 1.0; }

/// Fraction-free (Bareiss) determinant; exact for Rational entries.
Rational det_bareiss(Mat<Rational> m);

/// Determinant by Gaussian elimination with partial pivoting.
template <class S>
S det_lu(Mat<S> m) {
    const int n = m.rows;
    S det = S(1);
    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = pivot_mag(m(k, k));
        for (int i = k + 1; i < n; ++i) {
            double cand = pivot_mag(m(i, k));
            if (cand > best) { best = cand; piv = i; }
        }
        if (best == 0.0) return S(0);
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(k, j));
            det = -det;
        }
        det = det * m(k, k);
        for (int i = k + 1; i < n; ++i) {
            S f = m(i, k) / m(k, k);
            for (int j = k; j < n; ++j) m(i, j) = m(i, j) - f * m(k, j);
        }
    }
    return det;
}

/// Solves m x = b in place with partial pivoting. Returns false if the
/// matrix is singular (zero pivot by pivot_mag).
template <class S>
bool solve_lu(Mat<S> m, std::vector<S> b, std::vector<S>& x) {
    const int n = m.rows;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = pivot_mag(m(k, k));
        for (int i = k + 1; i < n; ++i) {
            double cand = pivot_mag(m(i, k));
            if (cand > best) { best = cand; piv = i; }
        }
        if (best == 0.0) return false;
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(k, j));
            std::swap(b[piv], b[k]);
        }
        for (int i = k + 1; i < n; ++i) {
            S f = m(i, k) / m(k, k);
            for (int j = k; j < n; ++j) m(i, j) = m(i, j) - f * m(k, j);
            b[i] = b[i] - f * b[k];
        }
    }
    x.assign(n, S(0));
    for (int i = n - 1; i >= 0; --i) {
        S acc = b[i];
        for (int j = i + 1; j < n; ++j) acc = acc - m(i, j) * x[j];
        x[i] = acc / m(i, i);
    }
    return true;
}

using RowVec = std::vector<Rational>;

/// Reduced row echelon form over the rationals; zero rows dropped, pivots
/// normalized to 1. The result is the canonical basis of the row space.
std::vector<RowVec> rref(std::vector<RowVec> rows);

/// True if `row` lies in the row space spanned by canonical `basis` (RREF).
bool in_row_space(RowVec row, const std::vector<RowVec>& basis);

/// Basis of { c : c^T m = 0 } (left kernel), exact.
std::vector<RowVec> left_kernel(const std::vector<RowVec>& m);

} // namespace hypercx

#endif
