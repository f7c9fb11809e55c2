#pragma once

// Dense matrices over exact rationals. Row-major. Kernels are templated on
// the scalar so every public operation can fall back to BigRational when the
// int64 fast path overflows.

#include <cassert>
#include <initializer_list>
#include <vector>

#include "tamerep/rational.hpp"

namespace tamerep {

template <class S>
class MatrixT {
  public:
    MatrixT() : rows_(0), cols_(0) {}
    MatrixT(int rows, int cols) : rows_(rows), cols_(cols), a_((size_t)rows * cols) {
        assert(rows >= 0 && cols >= 0);
    }
    MatrixT(std::initializer_list<std::initializer_list<long long>> rows) {
        rows_ = (int)rows.size();
        cols_ = rows_ ? (int)rows.begin()->size() : 0;
        a_.reserve((size_t)rows_ * cols_);
        for (auto& r : rows) {
            assert((int)r.size() == cols_);
            for (long long v : r) a_.push_back(scalar_from_int((const S*)nullptr, v));
        }
    }

    static MatrixT identity(int n) {
        MatrixT m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = scalar_from_int((const S*)nullptr, 1);
        return m;
    }
    static MatrixT zero(int r, int c) { return MatrixT(r, c); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    S& operator()(int r, int c) {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
        return a_[(size_t)r * cols_ + c];
    }
    const S& operator()(int r, int c) const {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
        return a_[(size_t)r * cols_ + c];
    }

    friend MatrixT operator*(const MatrixT& x, const MatrixT& y) {
        assert(x.cols_ == y.rows_);
        MatrixT z(x.rows_, y.cols_);
        for (int i = 0; i < x.rows_; ++i)
            for (int k = 0; k < x.cols_; ++k) {
                const S& v = x(i, k);
                if (scalar_is_zero(v)) continue;
                for (int j = 0; j < y.cols_; ++j) {
                    const S& w = y(k, j);
                    if (!scalar_is_zero(w)) z(i, j) += v * w;
                }
            }
        return z;
    }
    friend MatrixT operator+(const MatrixT& x, const MatrixT& y) {
        assert(x.rows_ == y.rows_ && x.cols_ == y.cols_);
        MatrixT z = x;
        for (size_t i = 0; i < z.a_.size(); ++i) z.a_[i] += y.a_[i];
        return z;
    }
    friend MatrixT operator-(const MatrixT& x, const MatrixT& y) {
        assert(x.rows_ == y.rows_ && x.cols_ == y.cols_);
        MatrixT z = x;
        for (size_t i = 0; i < z.a_.size(); ++i) z.a_[i] -= y.a_[i];
        return z;
    }
    MatrixT operator-() const {
        MatrixT z = *this;
        for (auto& v : z.a_) v = -v;
        return z;
    }
    friend MatrixT operator*(const S& c, const MatrixT& x) {
        MatrixT z = x;
        for (auto& v : z.a_) v = c * v;
        return z;
    }
    friend bool operator==(const MatrixT& x, const MatrixT& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }
    friend bool operator!=(const MatrixT& x, const MatrixT& y) { return !(x == y); }

    bool is_zero() const {
        for (auto& v : a_)
            if (!scalar_is_zero(v)) return false;
        return true;
    }

    MatrixT transposed() const {
        MatrixT t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    std::vector<S> mul_vec(const std::vector<S>& v) const {
        assert((int)v.size() == cols_);
        std::vector<S> r(rows_);
        for (int i = 0; i < rows_; ++i) {
            S acc{};
            for (int j = 0; j < cols_; ++j)
                if (!scalar_is_zero((*this)(i, j))) acc += (*this)(i, j) * v[j];
            r[i] = acc;
        }
        return r;
    }

    std::vector<S> col(int j) const {
        std::vector<S> v(rows_);
        for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    void set_col(int j, const std::vector<S>& v) {
        assert((int)v.size() == rows_);
        for (int i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }

    // Block paste: copies src into this with top-left corner (r0, c0).
    void paste(int r0, int c0, const MatrixT& src) {
        assert(r0 + src.rows_ <= rows_ && c0 + src.cols_ <= cols_);
        for (int i = 0; i < src.rows_; ++i)
            for (int j = 0; j < src.cols_; ++j) (*this)(r0 + i, c0 + j) = src(i, j);
    }

    MatrixT block(int r0, int c0, int nr, int nc) const {
        assert(r0 + nr <= rows_ && c0 + nc <= cols_);
        MatrixT b(nr, nc);
        for (int i = 0; i < nr; ++i)
            for (int j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }

    template <class T2>
    MatrixT<T2> cast() const {
        MatrixT<T2> m(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m(i, j) = convert_scalar<T2>((*this)(i, j));
        return m;
    }

  private:
    template <class T2>
    static T2 convert_scalar(const Rational& r) {
        if constexpr (std::is_same_v<T2, BigRational>)
            return r.big();
        else
            return r;
    }
    template <class T2>
    static T2 convert_scalar(const BigRational& b) {
        if constexpr (std::is_same_v<T2, Rational>)
            return Rational::from_big(b);
        else
            return b;
    }

    int rows_, cols_;
    std::vector<S> a_;
};

using Matrix = MatrixT<Rational>;
using Vec = std::vector<Rational>;

inline Matrix diag_join(const std::vector<Matrix>& blocks) {
    int r = 0, c = 0;
    for (auto& b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    Matrix m(r, c);
    int ro = 0, co = 0;
    for (auto& b : blocks) {
        m.paste(ro, co, b);
        ro += b.rows();
        co += b.cols();
    }
    return m;
}

} // namespace tamerep
