#pragma once

#include <optional>
#include <vector>

#include "polyfree/error.hpp"
#include "polyfree/field.hpp"

namespace polyfree {

/// Row-major dense matrix over an exact field, sized for the small systems
/// this library solves (truncated maps, coefficient fits).
template <FieldElement F>
using Matrix = std::vector<std::vector<F>>;

namespace linalg {

template <FieldElement F>
void check_rectangular(const Matrix<F>& m) {
    for (const auto& row : m)
        if (row.size() != m[0].size()) throw PreconditionError("ragged matrix");
}

/// Gaussian elimination to row echelon form. Returns the rank; `rows` is
/// modified in place. Column order is left to right.
template <FieldElement F>
int echelonize(Matrix<F>& rows) {
    if (rows.empty()) return 0;
    check_rectangular(rows);
    const std::size_t ncols = rows[0].size();
    int rank = 0;
    for (std::size_t col = 0; col < ncols && rank < static_cast<int>(rows.size()); ++col) {
        std::size_t pivot = rows.size();
        for (std::size_t r = static_cast<std::size_t>(rank); r < rows.size(); ++r) {
            if (!rows[r][col].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows.size()) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[pivot]);
        auto& prow = rows[static_cast<std::size_t>(rank)];
        const F inv = one_like(prow[col]) / prow[col];
        for (std::size_t c = col; c < ncols; ++c) prow[c] = prow[c] * inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == static_cast<std::size_t>(rank) || rows[r][col].is_zero()) continue;
            const F factor = rows[r][col];
            for (std::size_t c = col; c < ncols; ++c)
                rows[r][c] = rows[r][c] - factor * prow[c];
        }
        ++rank;
    }
    return rank;
}

template <FieldElement F>
int rank(Matrix<F> m) {
    return echelonize(m);
}

/// Determinant of a square matrix by fraction-friendly elimination.
template <FieldElement F>
F determinant(Matrix<F> m) {
    if (m.empty()) throw PreconditionError("determinant of an empty matrix");
    check_rectangular(m);
    const std::size_t n = m.size();
    if (m[0].size() != n) throw PreconditionError("determinant of a non-square matrix");
    F det = one_like(m[0][0]);
    bool negate = false;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = n;
        for (std::size_t r = col; r < n; ++r) {
            if (!m[r][col].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot == n) return zero_like(det);
        if (pivot != col) {
            std::swap(m[col], m[pivot]);
            negate = !negate;
        }
        det = det * m[col][col];
        const F inv = one_like(det) / m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            const F factor = m[r][col] * inv;
            for (std::size_t c = col; c < n; ++c) m[r][c] = m[r][c] - factor * m[col][c];
        }
    }
    return negate ? -det : det;
}

/// Solves A x = b when the solution is unique. Returns nullopt when the
/// system is inconsistent or underdetermined.
template <FieldElement F>
std::optional<std::vector<F>> solve_unique(const Matrix<F>& A, const std::vector<F>& b) {
    if (A.empty() || A.size() != b.size()) throw PreconditionError("solve: dimension mismatch");
    check_rectangular(A);
    const std::size_t ncols = A[0].size();
    Matrix<F> aug = A;
    for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
    echelonize(aug);

    // Inconsistent: a row 0 ... 0 | nonzero.
    for (const auto& row : aug) {
        bool all_zero = true;
        for (std::size_t c = 0; c < ncols; ++c)
            if (!row[c].is_zero()) {
                all_zero = false;
                break;
            }
        if (all_zero && !row[ncols].is_zero()) return std::nullopt;
    }
    // Unique solution needs a pivot in every column.
    std::vector<F> x(ncols, zero_like(b[0]));
    std::vector<bool> seen(ncols, false);
    for (const auto& row : aug) {
        std::size_t lead = ncols;
        for (std::size_t c = 0; c < ncols; ++c)
            if (!row[c].is_zero()) {
                lead = c;
                break;
            }
        if (lead == ncols) continue;
        seen[lead] = true;
        x[lead] = row[ncols];
    }
    for (bool s : seen)
        if (!s) return std::nullopt;
    return x;
}

template <FieldElement F>
Matrix<F> product(const Matrix<F>& A, const Matrix<F>& B) {
    if (A.empty() || B.empty() || A[0].size() != B.size())
        throw PreconditionError("matrix product: dimension mismatch");
    const F zero = zero_like(A[0][0]);
    Matrix<F> C(A.size(), std::vector<F>(B[0].size(), zero));
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t k = 0; k < B.size(); ++k) {
            if (A[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < B[0].size(); ++j)
                C[i][j] = C[i][j] + A[i][k] * B[k][j];
        }
    return C;
}

} // namespace linalg
} // namespace polyfree
