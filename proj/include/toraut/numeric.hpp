#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace toraut {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using BigFloat = boost::multiprecision::cpp_bin_float_50;

inline int sign_of(const Int& x) { return x.sign(); }
inline int sign_of(const Rat& x) { return x.sign(); }

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

inline BigFloat to_bigfloat(const Rat& x) {
    return BigFloat(boost::multiprecision::numerator(x)) /
           BigFloat(boost::multiprecision::denominator(x));
}

/// Nearest integer to a/b for b != 0 (ties round toward +infinity).
/// Integer-only on purpose: constructing Rat(a, b) with negative b trips a
/// bounds check in boost::rational that misfires for unbounded integers.
inline Int rounded_div(Int a, Int b) {
    if (b < 0) {
        a = -a;
        b = -b;
    }
    // floor((2a + b) / (2b))
    Int t = 2 * a + b;
    Int d = 2 * b;
    Int q = t / d;
    if (t < 0 && t % d != 0) --q;
    return q;
}

/// Nearest integer to a rational (ties round toward +infinity).
inline Int round_rational(const Rat& x) {
    return rounded_div(boost::multiprecision::numerator(x),
                       boost::multiprecision::denominator(x));
}

/// Complex number over BigFloat; just enough for eigenvector extraction.
struct BigComplex {
    BigFloat re{0};
    BigFloat im{0};

    BigComplex() = default;
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    explicit BigComplex(const BigFloat& r) : re(r), im(0) {}

    BigComplex operator+(const BigComplex& o) const { return {re + o.re, im + o.im}; }
    BigComplex operator-(const BigComplex& o) const { return {re - o.re, im - o.im}; }
    BigComplex operator-() const { return {-re, -im}; }
    BigComplex operator*(const BigComplex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    BigComplex operator/(const BigComplex& o) const {
        BigFloat d = o.re * o.re + o.im * o.im;
        return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
    }
    BigComplex& operator+=(const BigComplex& o) { re += o.re; im += o.im; return *this; }
    BigComplex& operator-=(const BigComplex& o) { re -= o.re; im -= o.im; return *this; }

    BigFloat abs2() const { return re * re + im * im; }
    BigComplex conj() const { return {re, -im}; }
    bool is_zero() const { return re == 0 && im == 0; }
};

}  // namespace toraut
