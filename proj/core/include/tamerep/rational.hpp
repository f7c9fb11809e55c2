#pragma once

// Exact rational scalar. int64 numerator / positive int64 denominator, always
// normalized (gcd = 1). Arithmetic runs through __int128 and throws
// RationalOverflow if a normalized result does not fit; callers that care
// redo the whole computation over BigRational (see linalg.hpp).

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace tamerep {

using BigRational = boost::multiprecision::cpp_rational;

struct RationalOverflow : std::overflow_error {
    RationalOverflow() : std::overflow_error("rational arithmetic overflow; retry over BigRational") {}
};

namespace detail {
using i128 = __int128;

inline i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

constexpr i128 I64_MAX = 0x7fffffffffffffffLL;
constexpr i128 I64_MIN = -I64_MAX - 1;
} // namespace detail

class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) { assign(n, d); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        using detail::i128;
        i128 n = (i128)a.num_ * b.den_ + (i128)b.num_ * a.den_;
        i128 d = (i128)a.den_ * b.den_;
        return make(n, d);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        using detail::i128;
        i128 n = (i128)a.num_ * b.den_ - (i128)b.num_ * a.den_;
        i128 d = (i128)a.den_ * b.den_;
        return make(n, d);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        using detail::i128;
        return make((i128)a.num_ * b.num_, (i128)a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        using detail::i128;
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return make((i128)a.num_ * b.den_, (i128)a.den_ * b.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        using detail::i128;
        return (i128)a.num_ * b.den_ < (i128)b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational abs() const { return num_ < 0 ? -*this : *this; }
    Rational inv() const {
        if (num_ == 0) throw std::domain_error("inverse of zero");
        return Rational(1) / *this;
    }

    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    BigRational big() const { return BigRational(num_, den_); }

    // Narrows a BigRational back; throws RationalOverflow if it does not fit.
    static Rational from_big(const BigRational& b) {
        using boost::multiprecision::cpp_int;
        cpp_int n = numerator(b), d = denominator(b);
        if (n < detail::I64_MIN || n > detail::I64_MAX || d > detail::I64_MAX)
            throw RationalOverflow();
        Rational r;
        r.num_ = (long long)n;
        r.den_ = (long long)d;
        return r;
    }

  private:
    void assign(long long n, long long d) {
        if (d == 0) throw std::domain_error("zero denominator");
        *this = make((detail::i128)n, (detail::i128)d);
    }
    static Rational make(detail::i128 n, detail::i128 d) {
        using namespace detail;
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n == 0) d = 1;
        i128 g = gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        if (n < I64_MIN || n > I64_MAX || d > I64_MAX) throw RationalOverflow();
        Rational r;
        r.num_ = (long long)n;
        r.den_ = (long long)d;
        return r;
    }

    long long num_;
    long long den_; // > 0
};

// Scalar concept glue so linalg kernels can run over either type.
inline bool scalar_is_zero(const Rational& x) { return x.is_zero(); }
inline bool scalar_is_zero(const BigRational& x) { return x == 0; }
inline Rational scalar_from_int(const Rational*, long long v) { return Rational(v); }
inline BigRational scalar_from_int(const BigRational*, long long v) { return BigRational(v); }

} // namespace tamerep
