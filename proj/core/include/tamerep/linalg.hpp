#pragma once

// Exact linear algebra over the rationals: rank, null space, linear solve and
// quotient-space coordinates. Everything is Gaussian elimination with
// normalized rational pivoting; results are exact by construction.
//
// ColumnSpan is the incremental workhorse: an echelonized set of columns that
// supports membership tests and residual (quotient) coordinates against a
// fixed complement basis (the non-pivot coordinates).

#include <optional>
#include <vector>

#include "tamerep/matrix.hpp"

namespace tamerep {

namespace detail {

// Row echelon form in place; returns pivot columns. Rows are combined with
// normalized rational arithmetic (pivot scaled to 1).
template <class S>
std::vector<int> echelonize(MatrixT<S>& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!scalar_is_zero(m(i, c))) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = c; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        S inv = scalar_from_int((const S*)nullptr, 1) / m(r, c);
        for (int j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || scalar_is_zero(m(i, c))) continue;
            S f = m(i, c);
            for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class S>
int rank_of(MatrixT<S> m) {
    return (int)echelonize(m).size();
}

template <class S>
std::vector<std::vector<S>> kernel_of(MatrixT<S> m) {
    const int n = m.cols();
    std::vector<int> pivots = echelonize(m);
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<S>> basis;
    for (int c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        std::vector<S> v(n);
        v[c] = scalar_from_int((const S*)nullptr, 1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m((int)r, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class S>
std::optional<std::vector<S>> solve_in(const MatrixT<S>& m, const std::vector<S>& b) {
    MatrixT<S> aug(m.rows(), m.cols() + 1);
    aug.paste(0, 0, m);
    for (int i = 0; i < m.rows(); ++i) aug(i, m.cols()) = b[i];
    std::vector<int> pivots = echelonize(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt; // inconsistent
    std::vector<S> x(m.cols());
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug((int)r, m.cols());
    return x;
}

} // namespace detail

// Incremental column space with quotient coordinates. Columns live in a fixed
// ambient dimension; pivot positions are rows. reduce() returns the residual
// after subtracting the projection onto the span: zero iff v is in the span.
template <class S>
class ColumnSpanT {
  public:
    explicit ColumnSpanT(int ambient_dim) : dim_(ambient_dim) {}

    int ambient_dim() const { return dim_; }
    int rank() const { return (int)cols_.size(); }

    // Returns true if the column increased the rank.
    bool add(std::vector<S> v) {
        reduce_inplace(v);
        int p = first_nonzero(v);
        if (p < 0) return false;
        S inv = scalar_from_int((const S*)nullptr, 1) / v[p];
        for (auto& x : v) x = x * inv;
        // back-substitute into existing columns to keep reduced form
        for (size_t k = 0; k < cols_.size(); ++k) {
            S f = cols_[k][p];
            if (scalar_is_zero(f)) continue;
            for (int i = 0; i < dim_; ++i) cols_[k][i] -= f * v[i];
        }
        size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
        pivots_.insert(pivots_.begin() + pos, p);
        cols_.insert(cols_.begin() + pos, std::move(v));
        return true;
    }

    bool contains(std::vector<S> v) const {
        reduce_inplace(v);
        return first_nonzero(v) < 0;
    }

    // Residual of v modulo the span; supported on non-pivot coordinates.
    std::vector<S> reduce(std::vector<S> v) const {
        reduce_inplace(v);
        return v;
    }

    // Residual compressed to the complement coordinates (non-pivot rows, in
    // increasing row order). This is the fixed complement basis used for
    // quotient spaces throughout.
    std::vector<S> quotient_coords(std::vector<S> v) const {
        reduce_inplace(v);
        std::vector<S> q;
        q.reserve(dim_ - (int)pivots_.size());
        std::vector<bool> is_pivot(dim_, false);
        for (int p : pivots_) is_pivot[p] = true;
        for (int i = 0; i < dim_; ++i)
            if (!is_pivot[i]) q.push_back(v[i]);
        return q;
    }

    int quotient_dim() const { return dim_ - rank(); }

    const std::vector<int>& pivots() const { return pivots_; }

  private:
    void reduce_inplace(std::vector<S>& v) const {
        for (size_t k = 0; k < cols_.size(); ++k) {
            S f = v[pivots_[k]];
            if (scalar_is_zero(f)) continue;
            const auto& c = cols_[k];
            for (int i = 0; i < dim_; ++i)
                if (!scalar_is_zero(c[i])) v[i] -= f * c[i];
        }
    }
    int first_nonzero(const std::vector<S>& v) const {
        for (int i = 0; i < dim_; ++i)
            if (!scalar_is_zero(v[i])) return i;
        return -1;
    }

    int dim_;
    std::vector<int> pivots_;         // pivot row of each stored column
    std::vector<std::vector<S>> cols_; // reduced columns, pivot entry 1
};

using ColumnSpan = ColumnSpanT<Rational>;

// --- public operations (int64 fast path, BigRational fallback) ---

int rank(const Matrix& m);
std::vector<Vec> kernel_basis(const Matrix& m);
std::optional<Vec> solve(const Matrix& m, const Vec& b);

// Coordinates of the class of v in the quotient of Q^ambient_dim by the span
// of `subspace`, against the fixed complement basis (non-pivot unit vectors).
// Zero vector iff v lies in the span. Throws std::invalid_argument on a
// length mismatch.
Vec quotient_coordinates(int ambient_dim, const std::vector<Vec>& subspace, const Vec& v);

// Solve A X = B columnwise; nullopt if any column is inconsistent.
std::optional<Matrix> solve_matrix(const Matrix& a, const Matrix& b);

} // namespace tamerep
