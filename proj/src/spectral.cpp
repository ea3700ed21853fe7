#include "toraut/spectral.hpp"

#include <complex>

#include "float_roots.hpp"
#include "toraut/error.hpp"
#include "toraut/poly_factor.hpp"

namespace toraut {

SpectrumSplit spectrum_trichotomy(const IntMatrix& a) {
    IntPoly chi = char_poly(a);
    if (!is_squarefree(chi))
        throw Error(ErrorCode::NotSimpleSpectrum, "characteristic polynomial has a repeated root");
    SpectrumSplit split;
    for (const auto& [factor, mult] : factor_over_Q(chi)) {
        (void)mult;  // squarefree: always 1
        CircleCounts counts = unit_circle_root_count(factor);
        split.dim_stable += counts.inside;
        split.dim_center += counts.on;
        split.dim_unstable += counts.outside;
        split.factors.push_back({factor, counts});
    }
    return split;
}

Hyperbolicity is_partially_hyperbolic(const IntMatrix& a) {
    Hyperbolicity h{false, false, spectrum_trichotomy(a)};
    h.partially_hyperbolic = h.split.dim_stable > 0 && h.split.dim_unstable > 0;
    h.anosov = h.partially_hyperbolic && h.split.dim_center == 0;
    return h;
}

bool is_ergodic(const IntMatrix& a) {
    return cyclotomic_divisors(char_poly(a)).empty();
}

namespace {

// log of the root modulus > 1 of x^2 - z x + 1 for real |z| > 2.
BigFloat expansion_log(const BigFloat& z) {
    using boost::multiprecision::abs;
    using boost::multiprecision::log;
    using boost::multiprecision::sqrt;
    BigFloat az = abs(z);
    return log((az + sqrt(az * az - 4)) / 2);
}

// Quotient of a constant-first coefficient vector by (z - r).
std::vector<BigFloat> deflate(const std::vector<BigFloat>& c, const BigFloat& r) {
    const int n = static_cast<int>(c.size()) - 1;
    std::vector<BigFloat> q(n);
    BigFloat acc = c[n];
    for (int i = n - 1; i >= 0; --i) {
        q[i] = acc;
        acc = c[i] + r * acc;
    }
    return q;  // the remainder `acc` is negligible: the root is known tightly
}

BigComplex eval_poly(const std::vector<BigFloat>& c, const BigComplex& z) {
    BigComplex acc;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
        acc = acc * z + BigComplex(c[i]);
    return acc;
}

BigComplex eval_poly_derivative(const std::vector<BigFloat>& c, const BigComplex& z) {
    BigComplex acc;
    for (int i = static_cast<int>(c.size()) - 1; i >= 1; --i)
        acc = acc * z + BigComplex(c[i] * i);
    return acc;
}

struct PairUV {
    BigFloat u, v;       // root u + iv, v > 0
    double error = 0.0;  // declared accuracy of the pair
};

// Conjugate root pairs of a polynomial known to have no real roots.
std::vector<PairUV> complex_root_pairs(const std::vector<BigFloat>& c) {
    using boost::multiprecision::sqrt;
    const int n = static_cast<int>(c.size()) - 1;
    std::vector<PairUV> pairs;
    if (n <= 0) return pairs;
    if (n == 2) {
        BigFloat p = c[1] / c[2];
        BigFloat q = c[0] / c[2];
        BigFloat u = -p / 2;
        BigFloat disc = q - u * u;  // positive: the roots are complex
        pairs.push_back({u, sqrt(disc), 1e-30});
        return pairs;
    }
    // Double-precision seeds, then Newton in extended precision.
    std::vector<double> cd(n + 1);
    for (int i = 0; i <= n; ++i) cd[i] = c[i].convert_to<double>();
    for (const auto& z : detail::float_roots(cd)) {
        if (z.imag() <= 0) continue;  // one representative per conjugate pair
        BigComplex root{BigFloat(z.real()), BigFloat(z.imag())};
        for (int it = 0; it < 10; ++it) {
            BigComplex f = eval_poly(c, root);
            BigComplex df = eval_poly_derivative(c, root);
            if (df.is_zero()) break;
            root -= f / df;
        }
        pairs.push_back({root.re, root.im, 1e-25});
    }
    return pairs;
}

// Entropy contribution 2 log rho of the off-circle quadruple belonging to a
// complex pair z = u + iv of the reduced polynomial: with S = u^2 + v^2 and
// D = u^2 - v^2, the quantity s = rho^2 + rho^-2 solves
// s^2 - S s + (2D - 4) = 0, and rho^2 = (s + sqrt(s^2 - 4)) / 2.
BigFloat quadruple_log(const PairUV& pair) {
    using boost::multiprecision::log;
    using boost::multiprecision::sqrt;
    BigFloat S = pair.u * pair.u + pair.v * pair.v;
    BigFloat D = pair.u * pair.u - pair.v * pair.v;
    BigFloat s = (S + sqrt(S * S - 4 * (2 * D - 4))) / 2;
    BigFloat rho2 = (s + sqrt(s * s - 4)) / 2;
    return log(rho2);
}

EntropyResult::Term entropy_term(const IntPoly& f) {
    EntropyResult::Term term{f, 0.0, 0.0};
    const int d = f.degree();
    BigFloat value(0), error(0);

    if (d == 1) {
        Int num = abs_int(f.coeff(0));
        Int den = abs_int(f.coeff(1));
        if (num > den) {
            using boost::multiprecision::log;
            value = log(BigFloat(num) / BigFloat(den));
            error = 1e-40;
        }
    } else if (d % 2 == 0 && f.is_self_reciprocal()) {
        IntPoly reduced = reciprocal_reduce(f);
        RootIsolation iso = isolate_real_roots(reduced);
        const Rat two(2), minus_two(-2);
        const Rat width(Int(1), Int(1) << 130);
        std::vector<BigFloat> real_roots;
        for (auto& [lo, hi] : iso.intervals) {
            // z = +-2 is impossible here (it would force a repeated root +-1
            // of f), so the interval can always be pushed off those marks.
            refine_off_point(reduced, lo, hi, minus_two);
            refine_off_point(reduced, lo, hi, two);
            refine_root(reduced, lo, hi, width);
            BigFloat zl = to_bigfloat(lo), zh = to_bigfloat(hi);
            real_roots.push_back((zl + zh) / 2);
            if (hi <= minus_two || lo >= two) {
                using boost::multiprecision::abs;
                BigFloat at_lo = expansion_log(zl);
                BigFloat at_hi = expansion_log(zh);
                value += (at_lo + at_hi) / 2;
                error += abs(at_hi - at_lo) + BigFloat(1e-44);
            }
            // real z in [-2, 2]: a conjugate pair on the circle, contributing 0
        }
        if (iso.complex_pairs > 0) {
            std::vector<BigFloat> coeffs;
            for (const Int& c : reduced.coeffs()) coeffs.push_back(BigFloat(c));
            for (const BigFloat& r : real_roots) coeffs = deflate(coeffs, r);
            const double deflation_error = real_roots.empty() ? 0.0 : 1e-30;
            for (const PairUV& pair : complex_root_pairs(coeffs)) {
                value += quadruple_log(pair);
                error += BigFloat(pair.error) + BigFloat(deflation_error);
            }
        }
    } else {
        // An irreducible factor of degree >= 2 with a root on the unit
        // circle is self-reciprocal, so this branch never sees circle roots
        // and summing floating moduli above 1 is safe.
        for (const auto& z : detail::float_roots(f)) {
            double m = std::abs(z);
            if (m > 1.0) {
                value += BigFloat(std::log(m));
                error += BigFloat(1e-11);
            }
        }
    }

    term.value = value.convert_to<double>();
    term.error_bound = error.convert_to<double>();
    return term;
}

}  // namespace

EntropyResult bowen_entropy(const IntMatrix& a) {
    IntPoly chi = char_poly(a);
    if (!is_squarefree(chi))
        throw Error(ErrorCode::NotSimpleSpectrum, "characteristic polynomial has a repeated root");
    EntropyResult result;
    BigFloat total(0), err(0);
    for (const auto& [factor, mult] : factor_over_Q(chi)) {
        (void)mult;
        EntropyResult::Term term = entropy_term(factor);
        total += BigFloat(term.value);
        err += BigFloat(term.error_bound);
        result.terms.push_back(std::move(term));
    }
    result.value = total.convert_to<double>();
    result.error_bound = err.convert_to<double>();
    return result;
}

}  // namespace toraut
