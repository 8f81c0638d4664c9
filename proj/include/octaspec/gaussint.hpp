#pragma once

// Gaussian integers and 2x2 matrices over them.
//
// Two component types are used: CheckedInt128, a 128-bit integer whose
// operations throw ArithmeticOverflow instead of wrapping, and BigInt
// (GMP). Both give bit-exact results; the checked type is the fast path.

#include <complex>
#include <cstdint>
#include <ostream>
#include <string>

#include <gmpxx.h>

#include "octaspec/errors.hpp"

namespace octaspec {

using BigInt = mpz_class;

class CheckedInt128 {
public:
    constexpr CheckedInt128() = default;
    constexpr CheckedInt128(long long v) : v_(v) {}  // NOLINT(implicit)
    static constexpr CheckedInt128 from_raw(__int128 v) {
        CheckedInt128 r;
        r.v_ = v;
        return r;
    }

    constexpr __int128 raw() const { return v_; }

    friend CheckedInt128 operator+(CheckedInt128 a, CheckedInt128 b) {
        __int128 r;
        if (__builtin_add_overflow(a.v_, b.v_, &r)) throw ArithmeticOverflow("int128 add");
        return from_raw(r);
    }
    friend CheckedInt128 operator-(CheckedInt128 a, CheckedInt128 b) {
        __int128 r;
        if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw ArithmeticOverflow("int128 sub");
        return from_raw(r);
    }
    friend CheckedInt128 operator*(CheckedInt128 a, CheckedInt128 b) {
        __int128 r;
        if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw ArithmeticOverflow("int128 mul");
        return from_raw(r);
    }
    CheckedInt128 operator-() const { return CheckedInt128{0} - *this; }
    CheckedInt128& operator+=(CheckedInt128 o) { return *this = *this + o; }
    CheckedInt128& operator-=(CheckedInt128 o) { return *this = *this - o; }

    friend constexpr bool operator==(CheckedInt128 a, CheckedInt128 b) { return a.v_ == b.v_; }
    friend constexpr auto operator<=>(CheckedInt128 a, CheckedInt128 b) { return a.v_ <=> b.v_; }

    double to_double() const { return static_cast<double>(v_); }
    BigInt to_big() const;
    std::string to_string() const;

private:
    __int128 v_ = 0;
};

inline double to_double(const CheckedInt128& v) { return v.to_double(); }
inline double to_double(const BigInt& v) { return v.get_d(); }

template <class Int>
struct BasicGaussInt {
    Int re{};
    Int im{};

    BasicGaussInt() = default;
    BasicGaussInt(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}
    BasicGaussInt(long long r) : re(static_cast<long>(r)), im(0L) {}  // NOLINT(implicit)

    friend BasicGaussInt operator+(const BasicGaussInt& a, const BasicGaussInt& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend BasicGaussInt operator-(const BasicGaussInt& a, const BasicGaussInt& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend BasicGaussInt operator*(const BasicGaussInt& a, const BasicGaussInt& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    BasicGaussInt operator-() const { return {Int(0) - re, Int(0) - im}; }
    friend bool operator==(const BasicGaussInt& a, const BasicGaussInt& b) {
        return a.re == b.re && a.im == b.im;
    }

    BasicGaussInt conj() const { return {re, Int(0) - im}; }
    std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }
};

using GaussInt = BasicGaussInt<CheckedInt128>;
using BigGaussInt = BasicGaussInt<BigInt>;

BigGaussInt to_big(const GaussInt& z);
std::string to_string(const GaussInt& z);
std::string to_string(const BigGaussInt& z);
std::ostream& operator<<(std::ostream& os, const GaussInt& z);
std::ostream& operator<<(std::ostream& os, const BigGaussInt& z);

// Row-major [[a, b], [c, d]].
template <class G>
struct BasicMat2 {
    G a{1}, b{0}, c{0}, d{1};

    static BasicMat2 identity() { return {G(1), G(0), G(0), G(1)}; }

    friend BasicMat2 operator*(const BasicMat2& x, const BasicMat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    BasicMat2 operator-() const { return {-a, -b, -c, -d}; }
    friend bool operator==(const BasicMat2& x, const BasicMat2& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }

    G det() const { return a * d - b * c; }
    G trace() const { return a + d; }
};

using Mat2 = BasicMat2<GaussInt>;
using BigMat2 = BasicMat2<BigGaussInt>;

BigMat2 to_big(const Mat2& m);
std::ostream& operator<<(std::ostream& os, const Mat2& m);

}  // namespace octaspec
