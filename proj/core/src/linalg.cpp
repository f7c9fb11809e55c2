#include "tamerep/linalg.hpp"

#include <stdexcept>

namespace tamerep {

namespace {

template <class F>
auto with_fallback(const Matrix& m, F fast, F big) {
    try {
        return fast(m);
    } catch (const RationalOverflow&) {
        return big(m);
    }
}

Vec narrow(const std::vector<BigRational>& v) {
    Vec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rational::from_big(v[i]);
    return r;
}

} // namespace

int rank(const Matrix& m) {
    try {
        return detail::rank_of(m);
    } catch (const RationalOverflow&) {
        return detail::rank_of(m.cast<BigRational>());
    }
}

std::vector<Vec> kernel_basis(const Matrix& m) {
    try {
        return detail::kernel_of(m);
    } catch (const RationalOverflow&) {
        auto big = detail::kernel_of(m.cast<BigRational>());
        std::vector<Vec> r;
        r.reserve(big.size());
        for (auto& v : big) r.push_back(narrow(v));
        return r;
    }
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if ((int)b.size() != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
    try {
        return detail::solve_in(m, b);
    } catch (const RationalOverflow&) {
        std::vector<BigRational> bb(b.size());
        for (size_t i = 0; i < b.size(); ++i) bb[i] = b[i].big();
        auto big = detail::solve_in(m.cast<BigRational>(), bb);
        if (!big) return std::nullopt;
        return narrow(*big);
    }
}

namespace {

template <class S>
std::vector<S> quotient_coords_in(int ambient_dim, const std::vector<std::vector<S>>& subspace,
                                  const std::vector<S>& v) {
    ColumnSpanT<S> span(ambient_dim);
    for (auto& s : subspace) {
        if ((int)s.size() != ambient_dim)
            throw std::invalid_argument("quotient_coordinates: subspace vector length mismatch");
        span.add(s);
    }
    return span.quotient_coords(v);
}

} // namespace

Vec quotient_coordinates(int ambient_dim, const std::vector<Vec>& subspace, const Vec& v) {
    if ((int)v.size() != ambient_dim)
        throw std::invalid_argument("quotient_coordinates: vector length mismatch");
    try {
        return quotient_coords_in(ambient_dim, subspace, v);
    } catch (const RationalOverflow&) {
        std::vector<std::vector<BigRational>> sb;
        sb.reserve(subspace.size());
        for (auto& s : subspace) {
            std::vector<BigRational> t(s.size());
            for (size_t i = 0; i < s.size(); ++i) t[i] = s[i].big();
            sb.push_back(std::move(t));
        }
        std::vector<BigRational> vb(v.size());
        for (size_t i = 0; i < v.size(); ++i) vb[i] = v[i].big();
        return narrow(quotient_coords_in(ambient_dim, sb, vb));
    }
}

std::optional<Matrix> solve_matrix(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve_matrix: shape mismatch");
    Matrix x(a.cols(), b.cols());
    for (int j = 0; j < b.cols(); ++j) {
        auto xj = solve(a, b.col(j));
        if (!xj) return std::nullopt;
        x.set_col(j, *xj);
    }
    return x;
}

} // namespace tamerep
