#include "toraut/int_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace toraut {

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPoly IntPoly::constant(Int c) {
    IntPoly p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

IntPoly IntPoly::monomial(int degree, Int coeff) {
    IntPoly p;
    if (coeff != 0) {
        p.coeffs_.assign(degree + 1, Int(0));
        p.coeffs_.back() = std::move(coeff);
    }
    return p;
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Int& IntPoly::coeff(int i) const {
    static const Int kZero(0);
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[i];
}

const Int& IntPoly::leading() const {
    if (is_zero()) throw std::logic_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Int IntPoly::eval(const Int& x) const {
    Int acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rat IntPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rat(*it);
    return acc;
}

BigFloat IntPoly::eval(const BigFloat& x) const {
    BigFloat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + BigFloat(*it);
    return acc;
}

IntPoly IntPoly::derivative() const {
    if (degree() < 1) return IntPoly();
    std::vector<Int> d(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Int(i);
    return IntPoly(std::move(d));
}

IntPoly IntPoly::reversed() const {
    std::vector<Int> r(coeffs_.rbegin(), coeffs_.rend());
    return IntPoly(std::move(r));
}

Int IntPoly::content() const {
    Int g(0);
    for (const Int& c : coeffs_) g = boost::multiprecision::gcd(g, c);
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    Int g = content();
    if (leading() < 0) g = -g;
    std::vector<Int> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] / g;
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-() const {
    std::vector<Int> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
    return IntPoly(std::move(out));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
    return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
    return IntPoly(std::move(out));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Int> out(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const Int& c) const {
    std::vector<Int> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * c;
    return IntPoly(std::move(out));
}

bool IntPoly::operator<(const IntPoly& o) const {
    if (degree() != o.degree()) return degree() < o.degree();
    for (int i = degree(); i >= 0; --i) {
        if (coeff(i) != o.coeff(i)) return coeff(i) < o.coeff(i);
    }
    return false;
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& c = coeff(i);
        if (c == 0) continue;
        Int a = abs_int(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0 || a != 1) os << a.str();
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

namespace {

// Long division over the rationals; returns quotient and remainder.
void rational_divmod(const IntPoly& a, const IntPoly& b,
                     std::vector<Rat>& quot, std::vector<Rat>& rem) {
    const int db = b.degree();
    rem.assign(a.coeffs().begin(), a.coeffs().end());
    quot.assign(std::max(0, a.degree() - db + 1), Rat(0));
    const Rat lead_b{b.leading()};
    for (int k = static_cast<int>(rem.size()) - 1; k >= db; --k) {
        if (rem[k] == 0) continue;
        Rat q = rem[k] / lead_b;
        quot[k - db] = q;
        for (int j = 0; j <= db; ++j) rem[k - db + j] -= q * Rat(b.coeff(j));
        rem[k] = 0;
    }
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
}

// Clears denominators and the content by a positive rational factor.
IntPoly scale_to_primitive(const std::vector<Rat>& v) {
    Int den(1);
    for (const Rat& x : v) {
        den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(x));
    }
    std::vector<Int> ints(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        ints[i] = boost::multiprecision::numerator(v[i]) *
                  (den / boost::multiprecision::denominator(v[i]));
    }
    IntPoly p{std::move(ints)};
    if (p.is_zero()) return p;
    Int g = p.content();
    std::vector<Int> out(p.coeffs().size());
    for (size_t i = 0; i < p.coeffs().size(); ++i) out[i] = p.coeffs()[i] / g;
    return IntPoly(std::move(out));
}

}  // namespace

PolyDivision divide_rational(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::logic_error("polynomial division by zero");
    PolyDivision out;
    if (a.degree() < b.degree()) {
        out.remainder = a.primitive_part();
        if (!a.is_zero() && a.leading() < 0) out.remainder = -out.remainder;
        out.exact = a.is_zero();
        return out;
    }
    std::vector<Rat> quot, rem;
    rational_divmod(a, b, quot, rem);
    out.exact = rem.empty();
    out.quotient = scale_to_primitive(quot);
    out.remainder = scale_to_primitive(rem);
    return out;
}

bool divides(const IntPoly& g, const IntPoly& p, IntPoly* quotient) {
    if (g.is_zero()) return p.is_zero();
    if (p.is_zero()) {
        if (quotient) *quotient = IntPoly();
        return true;
    }
    if (p.degree() < g.degree()) return false;
    std::vector<Rat> quot, rem;
    rational_divmod(p, g, quot, rem);
    if (!rem.empty()) return false;
    // Check the rational quotient is in fact integral.
    std::vector<Int> q(quot.size());
    for (size_t i = 0; i < quot.size(); ++i) {
        if (boost::multiprecision::denominator(quot[i]) != 1) return false;
        q[i] = boost::multiprecision::numerator(quot[i]);
    }
    if (quotient) *quotient = IntPoly(std::move(q));
    return true;
}

IntPoly exact_divide(const IntPoly& p, const IntPoly& g) {
    IntPoly q;
    if (!divides(g, p, &q)) throw std::logic_error("inexact polynomial division");
    return q;
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    IntPoly x = a.primitive_part();
    IntPoly y = b.primitive_part();
    while (!y.is_zero()) {
        IntPoly r = divide_rational(x, y).remainder;
        x = std::move(y);
        y = r.primitive_part();
    }
    if (x.is_zero()) return x;
    return x.leading() < 0 ? -x : x;
}

bool is_squarefree(const IntPoly& p) {
    if (p.degree() < 1) return !p.is_zero();
    return poly_gcd(p, p.derivative()).degree() == 0;
}

}  // namespace toraut
