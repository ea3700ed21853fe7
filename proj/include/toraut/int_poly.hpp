#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "toraut/numeric.hpp"

namespace toraut {

/// Dense univariate polynomial with integer coefficients.
/// Coefficients are stored constant term first, so coeff(i) multiplies x^i.
/// The zero polynomial has an empty coefficient vector and degree -1.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);
    IntPoly(std::initializer_list<long long> coeffs);

    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(Int c);
    static IntPoly monomial(int degree, Int coeff = Int(1));

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of x^i; zero outside the stored range.
    const Int& coeff(int i) const;
    const std::vector<Int>& coeffs() const { return coeffs_; }
    const Int& leading() const;
    bool is_monic() const { return !is_zero() && leading() == 1; }

    Int eval(const Int& x) const;
    Rat eval(const Rat& x) const;
    BigFloat eval(const BigFloat& x) const;

    IntPoly derivative() const;

    /// Coefficient reversal x^deg * p(1/x).  Degree drops if p(0) == 0.
    IntPoly reversed() const;
    bool is_self_reciprocal() const { return !is_zero() && reversed() == *this; }

    /// gcd of all coefficients, always >= 0 (0 only for the zero polynomial).
    Int content() const;
    /// p / content(p), scaled so the leading coefficient is positive.
    IntPoly primitive_part() const;

    IntPoly operator-() const;
    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly operator*(const Int& c) const;
    bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const IntPoly& o) const { return !(*this == o); }

    /// Total order used for canonical factor lists: degree first, then
    /// coefficients from the leading one down.
    bool operator<(const IntPoly& o) const;

    std::string to_string() const;

private:
    void trim();
    std::vector<Int> coeffs_;
};

/// Quotient/remainder of a by b over the rationals, with both results scaled
/// back to integer polynomials by a single positive rational factor each.
/// The remainder keeps its sign pattern (used for Sturm chains); the quotient
/// scale is reported so exact division can be recognized.
struct PolyDivision {
    IntPoly quotient;       // primitive, sign-preserving scale of the true quotient
    IntPoly remainder;      // primitive, sign-preserving scale of the true remainder
    bool exact = false;     // true iff b divides a over the rationals
};
PolyDivision divide_rational(const IntPoly& a, const IntPoly& b);

/// True iff p = g * q for some integer polynomial q; fills *quotient when so.
bool divides(const IntPoly& g, const IntPoly& p, IntPoly* quotient = nullptr);

/// Exact quotient p / g; throws std::logic_error when the division is inexact.
IntPoly exact_divide(const IntPoly& p, const IntPoly& g);

/// Primitive gcd with positive leading coefficient (zero polynomial if both zero).
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

bool is_squarefree(const IntPoly& p);

}  // namespace toraut
