#include "toraut/poly_roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "float_roots.hpp"
#include "toraut/error.hpp"

namespace toraut {

namespace {

// p / content(p) with the sign of the leading coefficient kept.
IntPoly primitive_keep_sign(const IntPoly& p) {
    if (p.is_zero()) return p;
    Int g = p.content();
    std::vector<Int> out(p.coeffs().size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = p.coeffs()[i] / g;
    return IntPoly(std::move(out));
}

int variations_at(const std::vector<IntPoly>& chain, const Rat& x) {
    int changes = 0;
    int last = 0;
    for (const IntPoly& s : chain) {
        int sg = sign_of(s.eval(x));
        if (sg == 0) continue;
        if (last != 0 && sg != last) ++changes;
        last = sg;
    }
    return changes;
}

// Strictly larger than the absolute value of every root (Cauchy bound).
Rat root_bound(const IntPoly& p) {
    Int m(0);
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, abs_int(p.coeff(i)));
    return Rat(1) + Rat(m, abs_int(p.leading()));
}

struct RootCounter {
    const IntPoly& p;
    std::vector<IntPoly> chain;

    explicit RootCounter(const IntPoly& poly) : p(poly), chain(sturm_chain(poly)) {}

    int count(const Rat& lo, const Rat& hi) const {
        return variations_at(chain, lo) - variations_at(chain, hi);
    }

    // Splits (lo, hi) holding `total` roots into isolating intervals,
    // appended left to right.
    void isolate(const Rat& lo, const Rat& hi, int total,
                 std::vector<std::pair<Rat, Rat>>& out) const {
        if (total == 0) return;
        if (total == 1) {
            out.emplace_back(lo, hi);
            return;
        }
        Rat mid = (lo + hi) / 2;
        if (p.eval(mid) == 0) {
            // Exact rational root at the split point: carve out a small open
            // interval around it whose endpoints are not roots.
            Rat d = (hi - lo) / 4;
            while (p.eval(mid - d) == 0 || p.eval(mid + d) == 0 ||
                   count(mid - d, mid + d) != 1) {
                d /= 2;
            }
            isolate(lo, mid - d, count(lo, mid - d), out);
            out.emplace_back(mid - d, mid + d);
            isolate(mid + d, hi, count(mid + d, hi), out);
        } else {
            int left = count(lo, mid);
            isolate(lo, mid, left, out);
            isolate(mid, hi, total - left, out);
        }
    }

    // One bisection step on an isolating interval.
    void shrink(Rat& lo, Rat& hi) const {
        Rat mid = (lo + hi) / 2;
        if (p.eval(mid) == 0) {
            Rat d = (hi - lo) / 8;
            while (p.eval(mid - d) == 0 || p.eval(mid + d) == 0) d /= 2;
            lo = mid - d;
            hi = mid + d;
        } else if (count(lo, mid) == 1) {
            hi = mid;
        } else {
            lo = mid;
        }
    }

    // Shrinks the interval until it no longer straddles t (root != t needed).
    void avoid(Rat& lo, Rat& hi, const Rat& t) const {
        while (lo < t && t < hi) shrink(lo, hi);
    }
};

}  // namespace

std::vector<IntPoly> sturm_chain(const IntPoly& p) {
    std::vector<IntPoly> chain;
    if (p.degree() < 1) {
        if (!p.is_zero()) chain.push_back(primitive_keep_sign(p));
        return chain;
    }
    chain.push_back(primitive_keep_sign(p));
    chain.push_back(primitive_keep_sign(p.derivative()));
    while (chain.back().degree() >= 1) {
        IntPoly r = divide_rational(chain[chain.size() - 2], chain.back()).remainder;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

int sturm_count(const IntPoly& p, const Rat& lo, const Rat& hi) {
    if (!is_squarefree(p)) throw Error(ErrorCode::RepeatedRoots, "polynomial has a repeated root");
    if (lo >= hi) throw std::invalid_argument("sturm_count: empty interval");
    if (p.eval(lo) == 0 || p.eval(hi) == 0)
        throw Error(ErrorCode::EndpointRoot, "interval endpoint is a root");
    std::vector<IntPoly> chain = sturm_chain(p);
    return variations_at(chain, lo) - variations_at(chain, hi);
}

RootIsolation isolate_real_roots(const IntPoly& p) {
    if (!is_squarefree(p)) throw Error(ErrorCode::RepeatedRoots, "polynomial has a repeated root");
    RootIsolation iso;
    if (p.degree() < 1) return iso;
    RootCounter rc(p);
    Rat bound = root_bound(p);
    int total = rc.count(-bound, bound);
    rc.isolate(-bound, bound, total, iso.intervals);
    iso.complex_pairs = (p.degree() - total) / 2;

    const Rat one(1), minus_one(-1);
    for (auto& [lo, hi] : iso.intervals) {
        if (lo < one && one < hi && p.eval(one) == 0) {
            iso.circle_sides.push_back(CircleSide::On);
            continue;
        }
        if (lo < minus_one && minus_one < hi && p.eval(minus_one) == 0) {
            iso.circle_sides.push_back(CircleSide::On);
            continue;
        }
        rc.avoid(lo, hi, minus_one);
        rc.avoid(lo, hi, one);
        if (hi <= minus_one || lo >= one) {
            iso.circle_sides.push_back(CircleSide::Outside);
        } else {
            iso.circle_sides.push_back(CircleSide::Inside);
        }
    }
    return iso;
}

void refine_root(const IntPoly& p, Rat& lo, Rat& hi, const Rat& width) {
    RootCounter rc(p);
    while (hi - lo > width) rc.shrink(lo, hi);
}

void refine_off_point(const IntPoly& p, Rat& lo, Rat& hi, const Rat& point) {
    RootCounter rc(p);
    rc.avoid(lo, hi, point);
}

IntPoly reciprocal_reduce(const IntPoly& p) {
    if (p.is_zero() || p.degree() % 2 != 0)
        throw Error(ErrorCode::NotSelfReciprocal, "degree must be even and positive");
    if (!p.is_self_reciprocal())
        throw Error(ErrorCode::NotSelfReciprocal, "coefficients are not palindromic");
    const int m = p.degree() / 2;
    // p(x) / x^m = c_m + sum_{j=1..m} c_{m+j} (x^j + x^-j) and
    // x^j + x^-j = T_j(x + 1/x) with T_0 = 2, T_1 = z, T_{j+1} = z T_j - T_{j-1}.
    IntPoly out = IntPoly::constant(p.coeff(m));
    IntPoly t_prev = IntPoly::constant(2);
    IntPoly t_cur{0, 1};
    const IntPoly z{0, 1};
    for (int j = 1; j <= m; ++j) {
        out = out + t_cur * p.coeff(m + j);
        IntPoly t_next = z * t_cur - t_prev;
        t_prev = std::move(t_cur);
        t_cur = std::move(t_next);
    }
    return out;
}

IntPoly lift_cubic(const Int& a, const Int& b, const Int& c) {
    return IntPoly(std::vector<Int>{Int(1), a, Int(3) + b, 2 * a + c, Int(3) + b, a, Int(1)});
}

CircleCounts unit_circle_root_count(const IntPoly& p) {
    if (!is_squarefree(p)) throw Error(ErrorCode::RepeatedRoots, "polynomial has a repeated root");
    CircleCounts counts;
    IntPoly r = p.primitive_part();
    if (r.degree() < 1) return counts;

    if (r.eval(Int(0)) == 0) {
        counts.inside += 1;
        r = exact_divide(r, IntPoly{0, 1});
    }
    if (!r.is_zero() && r.eval(Int(1)) == 0) {
        counts.on += 1;
        r = exact_divide(r, IntPoly{-1, 1});
    }
    if (!r.is_zero() && r.eval(Int(-1)) == 0) {
        counts.on += 1;
        r = exact_divide(r, IntPoly{1, 1});
    }
    if (r.degree() < 1) return counts;

    // Roots on the circle pair up with their reciprocals, so they all live in
    // the self-reciprocal part g below; the cofactor h provably has none.
    IntPoly g = poly_gcd(r, r.reversed());
    IntPoly h = r;
    if (g.degree() >= 1) {
        h = exact_divide(r, g);
        IntPoly reduced = reciprocal_reduce(g);
        RootIsolation iso = isolate_real_roots(reduced);
        RootCounter rc(reduced);
        const Rat two(2), minus_two(-2);
        for (auto& [lo, hi] : iso.intervals) {
            // z = +-2 would force a repeated root +-1 upstream, so the root
            // is strictly off those marks and the refinement terminates.
            rc.avoid(lo, hi, minus_two);
            rc.avoid(lo, hi, two);
            if (minus_two <= lo && hi <= two) {
                counts.on += 2;  // conjugate pair e^{+-i t} with z = 2 cos t
            } else {
                counts.inside += 1;  // real pair lambda, 1/lambda
                counts.outside += 1;
            }
        }
        counts.inside += 2 * iso.complex_pairs;  // quadruples lam, 1/lam, conj
        counts.outside += 2 * iso.complex_pairs;
    }
    if (h.degree() >= 1) {
        // h provably has no roots on the circle, so the margin test below is
        // a numerical safety net rather than a mathematical boundary case.
        for (const auto& root : detail::float_roots(h)) {
            double m = std::abs(root);
            if (std::abs(m - 1.0) <= 1e-12)
                throw Error(ErrorCode::CircleBoundaryUnresolved,
                            "floating root modulus within 1e-12 of the unit circle");
            if (m < 1.0)
                counts.inside += 1;
            else
                counts.outside += 1;
        }
    }
    return counts;
}

}  // namespace toraut
