// Acceptance suite: one check per shipped guarantee, one PASS/FAIL line each.
// Exits nonzero if any criterion fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "toraut/conjugacy.hpp"
#include "toraut/dynamics.hpp"
#include "toraut/fixtures.hpp"
#include "toraut/foliation.hpp"
#include "toraut/invariant_form.hpp"
#include "toraut/io.hpp"
#include "toraut/lattice.hpp"
#include "toraut/poly_factor.hpp"
#include "toraut/poly_roots.hpp"
#include "toraut/spectral.hpp"

using namespace toraut;

namespace {

constexpr double TIGHT_TOL = 1e-12;     // exact-arithmetic results, float-compared
constexpr double ENTROPY_TOL = 1e-9;    // entropy vs. 50-digit closed form
constexpr double IDENTITY_TOL = 2e-9;   // h(A) = h(A^-1), h(A^2) = 2 h(A)
constexpr double LEAF_TOL = 1e-9;       // confined leaf coordinates
constexpr double KRONECKER_EPS = 0.05;  // approximation radius for witnesses

std::string g_detail;  // set by a failing criterion, printed after FAIL

bool fail(const std::string& detail) {
    g_detail = detail;
    return false;
}

const IntMatrix& fixture_matrix(const char* name) { return find_fixture(name)->matrix; }

const char* kAutomorphisms[] = {
    "companion-2re", "companion-2com-1", "companion-2com-2",
    "S1", "S2-transitive", "S2-decomposable", "S3",
};

// Word in the elementary matrices I + c E_ij: unimodular by construction.
IntMatrix random_unimodular(std::mt19937& rng, int n, int word_length) {
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::uniform_int_distribution<int> coef(-2, 2);
    auto m = IntMatrix::identity(n);
    for (int step = 0; step < word_length; ++step) {
        int i = pick(rng), j = pick(rng);
        if (i == j) continue;
        auto e = IntMatrix::identity(n);
        e.at(i, j) = coef(rng);
        m = m * e;
    }
    return m;
}

// Word in the symplectic transvections x -> x + c (x^T J v) v for the
// standard form J: every factor satisfies T^T J T = J exactly.
IntMatrix random_symplectic(std::mt19937& rng, const IntMatrix& j, int word_length) {
    const int n = j.rows();
    std::uniform_int_distribution<int> entry(-1, 1);
    std::uniform_int_distribution<int> coef_pick(0, 3);
    const int coefs[4] = {-2, -1, 1, 2};
    auto m = IntMatrix::identity(n);
    for (int step = 0; step < word_length; ++step) {
        std::vector<Int> v(n);
        bool nonzero = false;
        for (auto& x : v) {
            x = entry(rng);
            if (x != 0) nonzero = true;
        }
        if (!nonzero) continue;
        auto jv = j.apply(v);
        auto t = IntMatrix::identity(n);
        Int c = coefs[coef_pick(rng)];
        for (int r = 0; r < n; ++r) {
            for (int col = 0; col < n; ++col) t.at(r, col) += c * v[r] * jv[col];
        }
        m = m * t;
    }
    return m;
}

// --------------------------------------------------------------------------

bool criterion_lift_reduce() {
    if (lift_cubic(-2, -8, 1) != IntPoly{1, -2, -5, -3, -5, -2, 1}) {
        return fail("lift_cubic(-2,-8,1) mismatch");
    }
    if (reciprocal_reduce(lift_cubic(-2, -8, 1)) != IntPoly{1, -8, -2, 1}) {
        return fail("reciprocal_reduce does not invert the lift");
    }
    // The inversion holds across a small lattice of cubics, not just one.
    for (long long a = -4; a <= 4; a += 2) {
        for (long long b = -9; b <= 9; b += 3) {
            for (long long c = -5; c <= 5; c += 5) {
                if (reciprocal_reduce(lift_cubic(a, b, c)) != IntPoly{c, b, a, 1}) {
                    return fail("lift/reduce round trip broke at a=" + std::to_string(a));
                }
            }
        }
    }
    return true;
}

bool criterion_nonstandard_form() {
    auto form = nonstandard_symplectic_form(-2, -5, -3);
    if (form.degenerate) return fail("J(-2,-5,-3) flagged degenerate");
    if (det(form.matrix) != 36) return fail("det J(-2,-5,-3) != 36");
    if (!is_symplectic(companion(lift_cubic(-2, -8, 1)), form.matrix)) {
        return fail("companion(2re) is not symplectic for J(-2,-5,-3)");
    }
    for (long long a = -5; a <= 5; ++a) {
        for (long long b = -5; b <= 5; ++b) {
            for (long long c = -5; c <= 5; ++c) {
                auto j = nonstandard_symplectic_form(a, b, c);
                Int expected = (Int(a) + b - c - 2) * (Int(a) + b - c - 2);
                if (det(j.matrix) != expected) {
                    return fail("det formula failed at (" + std::to_string(a) + "," +
                                std::to_string(b) + "," + std::to_string(c) + ")");
                }
                if (j.degenerate != (a + b - c == 2)) {
                    return fail("degeneracy flag wrong in the sweep");
                }
            }
        }
    }
    return true;
}

bool criterion_block_char_polys() {
    struct Row {
        const char* name;
        std::vector<IntPoly> printed_factors;
        IntPoly expanded;
    };
    const Row rows[] = {
        {"S1", {IntPoly{1, 4, -12, 4, 1}, IntPoly{1, -1, 1}}, IntPoly{1, 3, -15, 20, -15, 3, 1}},
        {"S2-transitive",
         {IntPoly{1, -4, 1, -4, 1}, IntPoly{1, -3, 1}},
         IntPoly{1, -7, 14, -11, 14, -7, 1}},
        {"S2-decomposable",
         {IntPoly{1, -5, 9, -5, 1}, IntPoly{1, -1, 1}},
         IntPoly{1, -6, 15, -19, 15, -6, 1}},
        {"S3",
         {IntPoly{1, -3, 1}, IntPoly{1, -7, 1}, IntPoly{1, -1, 1}},
         IntPoly{1, -11, 34, -43, 34, -11, 1}},
    };
    for (const auto& row : rows) {
        IntPoly product{1};
        for (const auto& factor : row.printed_factors) product = product * factor;
        if (product != row.expanded) {
            return fail(std::string(row.name) + ": factored form does not expand as frozen");
        }
        if (char_poly(fixture_matrix(row.name)) != row.expanded) {
            return fail(std::string(row.name) + ": char_poly mismatch");
        }
    }
    return true;
}

bool criterion_trichotomy() {
    for (const char* name : kAutomorphisms) {
        auto split = spectrum_trichotomy(fixture_matrix(name));
        if (split.dim_stable != 2 || split.dim_center != 2 || split.dim_unstable != 2) {
            return fail(std::string(name) + ": dims (" + std::to_string(split.dim_stable) +
                        "," + std::to_string(split.dim_center) + "," +
                        std::to_string(split.dim_unstable) + ") != (2,2,2)");
        }
    }
    return true;
}

bool criterion_foliation() {
    struct Row {
        const char* name;
        FoliationKind kind;
        int closure_dim;
    };
    const Row rows[] = {
        {"companion-2re", FoliationKind::Transitive, 6},
        {"companion-2com-1", FoliationKind::Transitive, 6},
        {"companion-2com-2", FoliationKind::Transitive, 6},
        {"S2-transitive", FoliationKind::Transitive, 6},
        {"S1", FoliationKind::Decomposable, 4},
        {"S2-decomposable", FoliationKind::Decomposable, 4},
        {"S3", FoliationKind::Decomposable, 4},
    };
    for (const auto& row : rows) {
        auto verdict = classify_foliation(fixture_matrix(row.name));
        if (verdict.kind != row.kind || verdict.closure_dim != row.closure_dim) {
            return fail(std::string(row.name) + ": wrong verdict or closure dim " +
                        std::to_string(verdict.closure_dim));
        }
    }
    return true;
}

bool criterion_ergodicity() {
    if (!is_ergodic(fixture_matrix("companion-2re"))) return fail("companion-2re not ergodic");
    for (const char* name : {"S1", "S2-decomposable", "S3"}) {
        const auto& a = fixture_matrix(name);
        if (is_ergodic(a)) return fail(std::string(name) + " reported ergodic");
        auto divisors = cyclotomic_divisors(char_poly(a));
        if (divisors != std::vector<int>{6}) {
            return fail(std::string(name) + ": expected exactly the 6th cyclotomic divisor");
        }
    }
    return true;
}

bool criterion_entropy() {
    // S3 closed form at 50-digit precision.
    BigFloat s5 = sqrt(BigFloat(5));
    BigFloat closed = log((BigFloat(3) + s5) / 2) + log((BigFloat(7) + 3 * s5) / 2);
    auto s3 = bowen_entropy(fixture_matrix("S3"));
    if (std::abs(s3.value - double(closed)) > ENTROPY_TOL) {
        return fail("S3 entropy " + std::to_string(s3.value) + " off the closed form");
    }
    // Inverse and square identities across every automorphism fixture.
    for (const char* name : kAutomorphisms) {
        const auto& a = fixture_matrix(name);
        double h = bowen_entropy(a).value;
        auto inverse = inverse_unimodular(a);
        if (!inverse) return fail(std::string(name) + " has no unimodular inverse");
        if (std::abs(bowen_entropy(*inverse).value - h) > IDENTITY_TOL) {
            return fail(std::string(name) + ": entropy(A^-1) != entropy(A)");
        }
        if (std::abs(bowen_entropy(a.pow(2)).value - 2 * h) > IDENTITY_TOL) {
            return fail(std::string(name) + ": entropy(A^2) != 2 entropy(A)");
        }
    }
    return true;
}

bool criterion_golden_roots() {
    // x^2 - 3x + 1 must appear among the S2-transitive factors, and its
    // Sturm-refined roots must match (3 +- sqrt 5)/2 to 1e-12.
    auto factors = factor_over_Q(char_poly(fixture_matrix("S2-transitive")));
    bool found = false;
    for (const auto& [factor, mult] : factors) found = found || factor == IntPoly{1, -3, 1};
    if (!found) return fail("factor x^2 - 3x + 1 missing");

    auto iso = isolate_real_roots(IntPoly{1, -3, 1});
    if (iso.intervals.size() != 2) return fail("expected two isolated real roots");
    BigFloat s5 = sqrt(BigFloat(5));
    const BigFloat expected[2] = {(BigFloat(3) - s5) / 2, (BigFloat(3) + s5) / 2};
    for (int i = 0; i < 2; ++i) {
        auto [lo, hi] = iso.intervals[i];
        refine_root(IntPoly{1, -3, 1}, lo, hi, Rat(1, 100000000000000LL));  // 1e-14
        Rat mid = (lo + hi) / 2;
        BigFloat approx = BigFloat(boost::multiprecision::numerator(mid).str()) /
                          BigFloat(boost::multiprecision::denominator(mid).str());
        BigFloat delta = approx - expected[i];
        if (delta < 0) delta = -delta;
        if (delta > BigFloat(TIGHT_TOL)) {
            return fail("root " + std::to_string(i) + " off by more than 1e-12");
        }
    }
    return true;
}

bool criterion_symplectic_property() {
    std::mt19937 rng(2026);
    auto j3 = standard_symplectic_form(3);
    for (int trial = 0; trial < 100; ++trial) {
        auto a = random_symplectic(rng, j3, 5);
        Int d = det(a);
        if (d != 1 && d != -1) return fail("trial " + std::to_string(trial) + ": not unimodular");
        auto forms = solve_invariant_form(a);
        if (!forms.nondegenerate) {
            return fail("trial " + std::to_string(trial) + ": no nondegenerate form found");
        }
        if (!is_symplectic(a, *forms.nondegenerate)) {
            return fail("trial " + std::to_string(trial) + ": found form not preserved");
        }
        auto p = char_poly(a);
        if (!p.is_self_reciprocal()) {
            return fail("trial " + std::to_string(trial) + ": char poly not self-reciprocal");
        }
        // Stable and unstable dimensions agree, summed over irreducible
        // factors with multiplicity (the spectrum need not be simple).
        int dim_s = 0, dim_u = 0;
        for (const auto& [factor, mult] : factor_over_Q(p)) {
            auto counts = unit_circle_root_count(factor);
            dim_s += mult * counts.inside;
            dim_u += mult * counts.outside;
        }
        if (dim_s != dim_u) {
            return fail("trial " + std::to_string(trial) + ": dim Ws " + std::to_string(dim_s) +
                        " != dim Wu " + std::to_string(dim_u));
        }
    }
    return true;
}

bool criterion_conjugacy_soundness() {
    std::mt19937 rng(404);
    for (int trial = 0; trial < 100; ++trial) {
        auto a = random_unimodular(rng, 6, 14);
        auto h = random_unimodular(rng, 6, 14);
        auto hi = inverse_unimodular(h);
        if (!hi) return fail("random H not unimodular");
        auto b = h * a * *hi;
        auto verdict = decide_conjugacy(a, b);
        if (verdict.status == ConjugacyStatus::Distinct) {
            return fail("trial " + std::to_string(trial) + ": conjugate pair called DISTINCT");
        }
        if (verdict.status == ConjugacyStatus::Conjugate) {
            if (!verdict.witness) return fail("CONJUGATE without witness");
            if (!verify_conjugacy(a, b, *verdict.witness)) {
                return fail("trial " + std::to_string(trial) + ": witness does not replay");
            }
        }
    }
    auto verdict = decide_conjugacy(fixture_matrix("companion-2re"), fixture_matrix("S3"));
    if (verdict.status != ConjugacyStatus::Distinct) {
        return fail("companion-2re vs S3 not DISTINCT");
    }
    return true;
}

bool criterion_dynamics_oracles() {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> size(2, 4);
    std::uniform_int_distribution<int> power(1, 3);
    for (int trial = 0; trial < 50; ++trial) {
        int n = size(rng);
        auto a = random_unimodular(rng, n, 6);
        int k = power(rng);
        auto m = a.pow(unsigned(k)) - IntMatrix::identity(n);
        Int d = det(m);
        if (d < 0) d = -d;
        Int product = 1;
        for (const auto& di : smith_normal_form(m).diagonal()) product *= di;
        if (product != d) return fail("SNF product != |det| on trial " + std::to_string(trial));
        auto counted = count_fixed_points(a, k);
        if (d == 0) {
            if (counted.has_value()) return fail("singular case not reported INFINITE");
        } else if (!counted || *counted != d) {
            return fail("count_fixed_points mismatch on trial " + std::to_string(trial));
        }
    }

    // period_of on the cat map at (1/2, 1/2), with a literal replay.
    auto cat = IntMatrix::from_rows({{2, 1}, {1, 1}});
    RationalPoint half{{Int(1), Int(1)}, Int(2), false};
    if (period_of(cat, half) != 3) return fail("period_of cat (1/2,1/2) != 3");
    std::vector<Int> x = {1, 1};
    int steps = 0;
    do {
        x = cat.apply(x);
        for (auto& c : x) {
            c %= 2;
            if (c < 0) c += 2;
        }
        ++steps;
    } while (!(x[0] == 1 && x[1] == 1));
    if (steps != 3) return fail("direct iteration disagrees with period_of");

    auto scan = leaf_density_scan(fixture_matrix("companion-2re"), 2, 100000, 0);
    if (scan.coverage != 1.0) {
        return fail("companion-2re coverage " + std::to_string(scan.coverage) + " != 1.0");
    }

    std::vector<std::vector<double>> points;
    leaf_density_scan(fixture_matrix("S1"), 2, 100000, 0, &points);
    for (const auto& pt : points) {
        for (int i = 4; i < 6; ++i) {
            double d = std::min(pt[i], 1.0 - pt[i]);
            if (d > LEAF_TOL) return fail("S1 leaf sample leaves the subtorus");
        }
    }
    return true;
}

bool criterion_kronecker() {
    std::vector<double> center(6, 0.5);
    auto witness = kronecker_witness(fixture_matrix("companion-2re"), center, KRONECKER_EPS);
    if (witness.obstructed) return fail("transitive fixture reported obstructed");
    auto frame = unstable_frame(fixture_matrix("companion-2re"));
    double worst = 0.0;
    for (int i = 0; i < 6; ++i) {
        double v = witness.t1 * frame.gamma1[i] + witness.t2 * frame.gamma2[i] -
                   double(witness.shift[i]) - center[i];
        worst = std::max(worst, std::abs(v));
    }
    if (worst > KRONECKER_EPS + 1e-12) {
        return fail("replayed residual " + std::to_string(worst) + " exceeds eps");
    }

    std::vector<double> off = {0.0, 0.0, 0.0, 0.0, 0.5, 0.0};
    auto obstruction = kronecker_witness(fixture_matrix("S1"), off, KRONECKER_EPS);
    if (!obstruction.obstructed) return fail("S1 off-subtorus target not obstructed");
    if (obstruction.obstruction != std::vector<Int>{0, 0, 0, 0, 1, 0}) {
        return fail("obstruction is not e5");
    }
    return true;
}

}  // namespace

int main() {
    struct Criterion {
        const char* label;
        std::function<bool()> run;
    };
    const Criterion criteria[] = {
        {"lift_cubic(-2,-8,1) and reciprocal_reduce round trip", criterion_lift_reduce},
        {"nonstandard form: det 36, preserved, det formula on [-5,5]^3", criterion_nonstandard_form},
        {"block fixtures: characteristic polynomials match expansions", criterion_block_char_polys},
        {"spectrum trichotomy (2,2,2) on every automorphism fixture", criterion_trichotomy},
        {"foliation verdicts: 4 transitive, 3 decomposable with dim 4", criterion_foliation},
        {"ergodicity flags and the 6th-cyclotomic obstruction", criterion_ergodicity},
        {"entropy: S3 closed form, inverse and square identities", criterion_entropy},
        {"x^2 - 3x + 1 roots match (3 +- sqrt 5)/2 to 1e-12", criterion_golden_roots},
        {"100 random symplectic words: reciprocal char, dim Ws = dim Wu", criterion_symplectic_property},
        {"100 random conjugate pairs: never DISTINCT, witnesses replay", criterion_conjugacy_soundness},
        {"fixed points vs SNF, cat period 3, leaf coverage and confinement", criterion_dynamics_oracles},
        {"Kronecker: witness within eps, obstruction e5 on S1", criterion_kronecker},
    };

    int passed = 0;
    int index = 0;
    for (const auto& criterion : criteria) {
        ++index;
        bool ok = false;
        g_detail.clear();
        try {
            ok = criterion.run();
        } catch (const std::exception& e) {
            g_detail = std::string("exception: ") + e.what();
        }
        std::printf("criterion %2d: %-62s %s\n", index, criterion.label, ok ? "PASS" : "FAIL");
        if (!ok && !g_detail.empty()) std::printf("              %s\n", g_detail.c_str());
        if (ok) ++passed;
    }
    std::printf("Passed: %d/12 %s\n", passed, passed == 12 ? "\xe2\x9c\x93" : "\xe2\x9c\x97");
    return passed == 12 ? 0 : 1;
}
