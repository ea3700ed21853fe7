#include "toraut/poly_factor.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

#include "toraut/error.hpp"

namespace toraut {

namespace {

// ---------------------------------------------------------------------------
// Polynomial arithmetic over F_p for small primes, used only to prune the
// factor degree search.  Coefficients are stored constant term first.
// ---------------------------------------------------------------------------

using FpPoly = std::vector<long long>;

void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly fp_from(const IntPoly& p, long long m) {
    FpPoly out(p.degree() + 1);
    for (int i = 0; i <= p.degree(); ++i) {
        out[i] = static_cast<long long>(p.coeff(i) % m);
        if (out[i] < 0) out[i] += m;
    }
    fp_trim(out);
    return out;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, long long m) {
    if (a.empty() || b.empty()) return {};
    FpPoly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % m;
    fp_trim(out);
    return out;
}

long long fp_inv(long long a, long long m) {
    long long r = 1;
    long long e = m - 2;  // Fermat; m prime
    a %= m;
    while (e > 0) {
        if (e & 1) r = r * a % m;
        a = a * a % m;
        e >>= 1;
    }
    return r;
}

// Remainder of a modulo b (b nonzero).
FpPoly fp_mod(FpPoly a, const FpPoly& b, long long m) {
    const long long inv_lead = fp_inv(b.back(), m);
    while (a.size() >= b.size()) {
        long long q = a.back() * inv_lead % m;
        size_t off = a.size() - b.size();
        if (q != 0) {
            for (size_t j = 0; j < b.size(); ++j)
                a[off + j] = ((a[off + j] - q * b[j]) % m + m) % m;
        }
        a.pop_back();  // leading term cancelled by construction
        fp_trim(a);
    }
    return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, long long m) {
    while (!b.empty()) {
        FpPoly r = fp_mod(a, b, m);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        long long inv = fp_inv(a.back(), m);
        for (auto& c : a) c = c * inv % m;
    }
    return a;
}

FpPoly fp_derivative(const FpPoly& a, long long m) {
    if (a.size() <= 1) return {};
    FpPoly out(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) out[i - 1] = a[i] * static_cast<long long>(i % m) % m;
    fp_trim(out);
    return out;
}

FpPoly fp_powmod(FpPoly base, long long e, const FpPoly& mod, long long m) {
    FpPoly result{1};
    base = fp_mod(std::move(base), mod, m);
    while (e > 0) {
        if (e & 1) result = fp_mod(fp_mul(result, base, m), mod, m);
        base = fp_mod(fp_mul(base, base, m), mod, m);
        e >>= 1;
    }
    return result;
}

// Degrees (with multiplicity) of the irreducible factors of f over F_p,
// via distinct-degree factorization.  Requires f squarefree mod p.
std::vector<int> fp_factor_degrees(const FpPoly& f, long long m) {
    std::vector<int> degs;
    FpPoly v = f;
    {
        long long inv = fp_inv(v.back(), m);
        for (auto& c : v) c = c * inv % m;
    }
    FpPoly h{0, 1};  // x
    int d = 0;
    while (static_cast<int>(v.size()) - 1 > 0) {
        ++d;
        if (2 * d > static_cast<int>(v.size()) - 1) {
            degs.push_back(static_cast<int>(v.size()) - 1);
            break;
        }
        h = fp_powmod(std::move(h), m, f, m);  // x^(p^d) mod f
        FpPoly diff = h;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = ((diff[1] - 1) % m + m) % m;
        fp_trim(diff);
        FpPoly g = diff.empty() ? v : fp_gcd(v, diff, m);
        if (static_cast<int>(g.size()) - 1 > 0) {
            int count = (static_cast<int>(g.size()) - 1) / d;
            for (int i = 0; i < count; ++i) degs.push_back(d);
            // v /= g
            FpPoly q;
            {
                FpPoly num = v;
                q.assign(num.size() - g.size() + 1, 0);
                long long inv = fp_inv(g.back(), m);
                for (int k = static_cast<int>(num.size()) - 1;
                     k >= static_cast<int>(g.size()) - 1; --k) {
                    long long c = num[k] * inv % m;
                    q[k - (g.size() - 1)] = c;
                    for (size_t j = 0; j < g.size(); ++j)
                        num[k - (g.size() - 1) + j] =
                            ((num[k - (g.size() - 1) + j] - c * g[j]) % m + m) % m;
                }
                fp_trim(num);
            }
            v = std::move(q);
            fp_trim(v);
        }
    }
    return degs;
}

// ---------------------------------------------------------------------------
// Rational factorization helpers
// ---------------------------------------------------------------------------

std::vector<Int> positive_divisors(const Int& n) {
    Int a = abs_int(n);
    std::vector<Int> small, large;
    for (Int d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            small.push_back(d);
            if (d * d != a) large.push_back(a / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// Subset of {0..n} of degrees realizable as sums of the given factor degrees.
std::vector<bool> achievable_degree_sums(const std::vector<int>& degs, int n) {
    std::vector<bool> dp(n + 1, false);
    dp[0] = true;
    for (int d : degs) {
        for (int s = n; s >= d; --s)
            if (dp[s - d]) dp[s] = true;
    }
    return dp;
}

// Uniform coefficient bound for degree-d factors of q (Mignotte-style):
// every coefficient of a factor is at most 2^(d-1) (||q||_2 + |lc q|) in
// absolute value, after accounting for leading-coefficient scaling.
Int factor_coeff_bound(const IntPoly& q, int d) {
    Int sum(0);
    for (const Int& c : q.coeffs()) sum += c * c;
    Int norm = boost::multiprecision::sqrt(sum) + 1;
    return (Int(1) << std::max(0, d - 1)) * (norm + abs_int(q.leading()));
}

}  // namespace

IntPoly cyclotomic(int k) {
    if (k < 1) throw std::invalid_argument("cyclotomic index must be >= 1");
    // x^k - 1 divided by the proper cyclotomic divisors.
    std::vector<Int> c(k + 1, Int(0));
    c[0] = -1;
    c[k] = 1;
    IntPoly num{std::move(c)};
    for (int d = 1; d < k; ++d) {
        if (k % d == 0) num = exact_divide(num, cyclotomic(d));
    }
    return num;
}

std::vector<int> cyclotomic_divisors(const IntPoly& p) {
    std::vector<int> out;
    const int n = p.degree();
    if (n < 1) return out;
    auto totient = [](int k) {
        int result = k;
        for (int q = 2; q * q <= k; ++q) {
            if (k % q == 0) {
                while (k % q == 0) k /= q;
                result -= result / q;
            }
        }
        if (k > 1) result -= result / k;
        return result;
    };
    // phi(k) >= sqrt(k/2), so phi(k) <= n forces k <= 2 n^2.
    for (int k = 1; k <= 2 * n * n; ++k) {
        if (totient(k) > n) continue;
        if (divides(cyclotomic(k), p)) out.push_back(k);
    }
    return out;
}

namespace {

// Forward declaration; factors a primitive squarefree polynomial with
// positive leading coefficient and degree >= 1.
void factor_squarefree(IntPoly q, std::vector<IntPoly>& out);

// Finds and removes all rational roots of q (as primitive linear factors).
void remove_rational_roots(IntPoly& q, std::vector<IntPoly>& out) {
    bool progress = true;
    while (progress && q.degree() >= 1) {
        progress = false;
        if (q.eval(Int(0)) == 0) {
            IntPoly x{0, 1};
            q = exact_divide(q, x);
            out.push_back(std::move(x));
            progress = true;
            continue;
        }
        for (const Int& num : positive_divisors(q.coeff(0))) {
            for (const Int& den : positive_divisors(q.leading())) {
                if (boost::multiprecision::gcd(num, den) != 1) continue;
                for (int sign : {+1, -1}) {
                    Rat r(sign * num, den);
                    if (q.eval(r) != 0) continue;
                    IntPoly lin{std::vector<Int>{-sign * num, den}};
                    q = exact_divide(q, lin);
                    out.push_back(std::move(lin));
                    progress = true;
                    break;
                }
                if (progress) break;
            }
            if (progress) break;
        }
    }
}

struct ModularPruner {
    long long prime = 0;
    FpPoly reduced;
    std::vector<bool> feasible;  // feasible[d]: some product of mod-p factors has degree d

    bool usable() const { return prime != 0; }

    bool divisible(const IntPoly& g) const {
        FpPoly gm = fp_from(g, prime);
        if (gm.empty()) return true;  // degenerate reduction; no information
        if (static_cast<int>(gm.size()) - 1 != g.degree()) return true;
        return fp_mod(reduced, gm, prime).empty();
    }
};

std::vector<ModularPruner> build_pruners(const IntPoly& q) {
    static const std::array<long long, 11> kPrimes{3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    std::vector<ModularPruner> pruners;
    for (long long m : kPrimes) {
        if (pruners.size() == 2) break;
        if (q.leading() % m == 0) continue;
        FpPoly f = fp_from(q, m);
        FpPoly d = fp_derivative(f, m);
        if (d.empty()) continue;
        if (fp_gcd(f, d, m).size() != 1) continue;  // not squarefree mod m
        ModularPruner pr;
        pr.prime = m;
        pr.reduced = f;
        pr.feasible = achievable_degree_sums(fp_factor_degrees(f, m), q.degree());
        pruners.push_back(std::move(pr));
    }
    return pruners;
}

void factor_squarefree(IntPoly q, std::vector<IntPoly>& out) {
    remove_rational_roots(q, out);
    if (q.degree() < 1) return;
    if (q.degree() <= 3) {
        // No rational roots and degree <= 3 means irreducible.
        out.push_back(std::move(q));
        return;
    }

    const auto pruners = build_pruners(q);
    const int n = q.degree();
    const Int q_at_1 = q.eval(Int(1));
    const Int q_at_m1 = q.eval(Int(-1));
    const auto lead_divs = positive_divisors(q.leading());
    const auto const_divs = positive_divisors(q.coeff(0));
    const auto sum_divs = positive_divisors(q_at_1);  // q(1) != 0: no root 1 left

    for (int d = 2; 2 * d <= n; ++d) {
        bool feasible = true;
        for (const auto& pr : pruners) {
            if (!pr.feasible[d]) {
                feasible = false;
                break;
            }
        }
        if (!feasible) continue;

        const Int bound = factor_coeff_bound(q, d);
        // Candidate g = l x^d + c_{d-1} x^{d-1} + ... + c_1 x + c0.  The
        // coefficient c_{d-1} is not enumerated directly: g(1) must divide
        // q(1), so c_{d-1} runs over {s - (sum of the rest) : s | q(1)}.
        std::vector<Int> middle(std::max(0, d - 2), -bound);  // c_1 .. c_{d-2}
        for (const Int& lead : lead_divs) {
            for (const Int& c0_abs : const_divs) {
                for (int c0_sign : {+1, -1}) {
                    const Int c0 = c0_sign * c0_abs;
                    bool more = true;
                    if (!middle.empty()) std::fill(middle.begin(), middle.end(), -bound);
                    while (more) {
                        Int partial = lead + c0;
                        for (const Int& c : middle) partial += c;
                        for (const Int& s_abs : sum_divs) {
                            for (int s_sign : {+1, -1}) {
                                const Int top = s_sign * s_abs - partial;  // c_{d-1}
                                if (abs_int(top) > bound) continue;
                                std::vector<Int> gc(d + 1);
                                gc[0] = c0;
                                for (int i = 0; i < d - 2; ++i) gc[i + 1] = middle[i];
                                gc[d - 1] = top;
                                gc[d] = lead;
                                IntPoly g{std::move(gc)};
                                if (g.degree() != d) continue;
                                Int g1 = g.eval(Int(-1));
                                if (g1 == 0 || q_at_m1 % g1 != 0) continue;
                                bool mod_ok = true;
                                for (const auto& pr : pruners) {
                                    if (!pr.divisible(g)) {
                                        mod_ok = false;
                                        break;
                                    }
                                }
                                if (!mod_ok) continue;
                                IntPoly cofactor;
                                if (!divides(g, q, &cofactor)) continue;
                                // Degrees below d are exhausted, so g is
                                // irreducible; recurse on the cofactor.
                                out.push_back(g.primitive_part());
                                factor_squarefree(std::move(cofactor), out);
                                return;
                            }
                        }
                        // Advance the middle coefficients lexicographically.
                        more = false;
                        for (size_t i = 0; i < middle.size(); ++i) {
                            if (middle[i] < bound) {
                                ++middle[i];
                                for (size_t j = 0; j < i; ++j) middle[j] = -bound;
                                more = true;
                                break;
                            }
                        }
                    }
                }
            }
        }
    }
    out.push_back(std::move(q));  // no factor of degree <= n/2: irreducible
}

}  // namespace

std::vector<std::pair<IntPoly, int>> factor_over_Q(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("factor_over_Q: zero polynomial");
    std::vector<std::pair<IntPoly, int>> result;
    if (p.degree() < 1) return result;

    // Yun's squarefree decomposition: p ~ prod s_i^i with s_i squarefree
    // and pairwise coprime.
    IntPoly f = p.primitive_part();
    std::vector<std::pair<IntPoly, int>> squarefree_parts;
    IntPoly c = poly_gcd(f, f.derivative());
    if (c.degree() == 0) {
        squarefree_parts.emplace_back(f, 1);
    } else {
        IntPoly w = exact_divide(f, c);
        IntPoly y = exact_divide(f.derivative(), c);
        int i = 1;
        while (w.degree() > 0) {
            IntPoly z = y - w.derivative();
            IntPoly g = poly_gcd(w, z);  // primitive, so constant g is 1
            if (g.degree() > 0) squarefree_parts.emplace_back(g, i);
            w = exact_divide(w, g);
            y = exact_divide(z, g);
            ++i;
        }
    }

    for (auto& [part, mult] : squarefree_parts) {
        std::vector<IntPoly> factors;
        factor_squarefree(part.primitive_part(), factors);
        for (auto& fac : factors) result.emplace_back(fac.primitive_part(), mult);
    }
    std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        return a.first < b.first;
    });
    // Merge any equal factors (possible only defensively; Yun parts are coprime).
    std::vector<std::pair<IntPoly, int>> merged;
    for (auto& fm : result) {
        if (!merged.empty() && merged.back().first == fm.first) {
            merged.back().second += fm.second;
        } else {
            merged.push_back(std::move(fm));
        }
    }
    return merged;
}

bool is_irreducible_over_Q(const IntPoly& p) {
    if (p.degree() < 1) throw Error(ErrorCode::DegreeTooSmall, "constants are not classified");
    auto factors = factor_over_Q(p);
    return factors.size() == 1 && factors[0].second == 1;
}

}  // namespace toraut
