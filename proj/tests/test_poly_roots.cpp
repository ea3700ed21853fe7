#include <doctest.h>

#include "toraut/error.hpp"
#include "toraut/poly_roots.hpp"

using namespace toraut;

namespace {

// z^3 - 2z^2 - 8z + 1: three real roots near -2.079, 0.121, 3.958.
const IntPoly kCubic{1, -8, -2, 1};

}  // namespace

TEST_CASE("sturm_chain keeps remainder signs") {
    std::vector<IntPoly> chain = sturm_chain(kCubic);
    REQUIRE(chain.size() == 4);
    CHECK(chain[0] == kCubic);
    CHECK(chain[1] == IntPoly{-8, -4, 3});
    CHECK(chain[2] == IntPoly{1, 8});  // 8x + 1, the negated scaled remainder
    CHECK(chain[3] == IntPoly{1});
}

TEST_CASE("sturm_count finds all three real roots of the cubic") {
    CHECK(sturm_count(kCubic, Rat(-9), Rat(9)) == 3);
    CHECK(sturm_count(kCubic, Rat(-3), Rat(0)) == 1);
    CHECK(sturm_count(kCubic, Rat(0), Rat(1)) == 1);
    CHECK(sturm_count(kCubic, Rat(3), Rat(4)) == 1);
    CHECK(sturm_count(kCubic, Rat(1), Rat(3)) == 0);
    CHECK_THROWS_AS(sturm_count(IntPoly{1, -2, 1}, Rat(0), Rat(2)), Error);   // repeated root
    CHECK_THROWS_AS(sturm_count(IntPoly{-1, 1}, Rat(1), Rat(2)), Error);      // endpoint root
}

TEST_CASE("isolate_real_roots separates the cubic's roots") {
    RootIsolation iso = isolate_real_roots(kCubic);
    REQUIRE(iso.intervals.size() == 3);
    CHECK(iso.complex_pairs == 0);
    // Intervals sorted left to right, each containing exactly one sign change.
    for (size_t i = 0; i < 3; ++i) {
        auto [lo, hi] = iso.intervals[i];
        CHECK(lo < hi);
        CHECK(sign_of(kCubic.eval(lo)) * sign_of(kCubic.eval(hi)) == -1);
        if (i > 0) CHECK(iso.intervals[i - 1].second <= lo);
    }
    CHECK(iso.circle_sides[0] == CircleSide::Outside);  // root near -2.079
    CHECK(iso.circle_sides[1] == CircleSide::Inside);   // root near 0.121
    CHECK(iso.circle_sides[2] == CircleSide::Outside);  // root near 3.958
}

TEST_CASE("isolate_real_roots counts complex pairs") {
    RootIsolation iso = isolate_real_roots(IntPoly{1, 0, 0, 0, 1});  // x^4 + 1
    CHECK(iso.intervals.empty());
    CHECK(iso.complex_pairs == 2);
}

TEST_CASE("refine_root shrinks without losing the root") {
    RootIsolation iso = isolate_real_roots(kCubic);
    auto [lo, hi] = iso.intervals[2];
    refine_root(kCubic, lo, hi, Rat(1, 1000000));
    CHECK(hi - lo <= Rat(1, 1000000));
    CHECK(sign_of(kCubic.eval(lo)) * sign_of(kCubic.eval(hi)) == -1);
    // Root near 3.958: the refined interval must be consistent with that.
    CHECK(lo > Rat(39, 10));
    CHECK(hi < Rat(4));
}

TEST_CASE("refine_off_point moves an interval off a mark") {
    RootIsolation iso = isolate_real_roots(kCubic);
    auto [lo, hi] = iso.intervals[1];  // the root near 0.121
    refine_off_point(kCubic, lo, hi, Rat(0));
    CHECK((hi <= 0 || lo >= 0));
    CHECK(sign_of(kCubic.eval(lo)) * sign_of(kCubic.eval(hi)) == -1);
}

TEST_CASE("lift_cubic reproduces the self-reciprocal sextic exactly") {
    CHECK(lift_cubic(Int(-2), Int(-8), Int(1)) == IntPoly{1, -2, -5, -3, -5, -2, 1});
    CHECK(lift_cubic(Int(-3), Int(6), Int(-1)) == IntPoly{1, -3, 9, -7, 9, -3, 1});
    CHECK(lift_cubic(Int(0), Int(-1), Int(-1)) == IntPoly{1, 0, 2, -1, 2, 0, 1});
}

TEST_CASE("reciprocal_reduce inverts lift_cubic") {
    for (long long a = -4; a <= 4; a += 2)
        for (long long b = -9; b <= 9; b += 3)
            for (long long c = -5; c <= 5; c += 5) {
                IntPoly lifted = lift_cubic(Int(a), Int(b), Int(c));
                CHECK(reciprocal_reduce(lifted) == IntPoly{c, b, a, 1});
            }
}

TEST_CASE("reciprocal_reduce rejects bad input") {
    CHECK_THROWS_AS(reciprocal_reduce(IntPoly{1, 1}), Error);           // odd degree
    CHECK_THROWS_AS(reciprocal_reduce(IntPoly{1, 2, 3}), Error);        // not palindromic
    CHECK(reciprocal_reduce(IntPoly{1, -3, 1}) == IntPoly{-3, 1});      // x^2-3x+1 -> z-3
}

TEST_CASE("unit_circle_root_count on the lifted fixtures") {
    auto counts = [](const IntPoly& p) { return unit_circle_root_count(p); };
    CircleCounts c = counts(IntPoly{1, -2, -5, -3, -5, -2, 1});
    CHECK(c.inside == 2);
    CHECK(c.on == 2);
    CHECK(c.outside == 2);
    c = counts(IntPoly{1, -3, 9, -7, 9, -3, 1});
    CHECK(c.inside == 2);
    CHECK(c.on == 2);
    CHECK(c.outside == 2);
    c = counts(IntPoly{1, 0, 2, -1, 2, 0, 1});
    CHECK(c.inside == 2);
    CHECK(c.on == 2);
    CHECK(c.outside == 2);
}

TEST_CASE("unit_circle_root_count building blocks") {
    CircleCounts c = unit_circle_root_count(IntPoly{1, -3, 1});  // x^2 - 3x + 1
    CHECK(c.inside == 1);
    CHECK(c.on == 0);
    CHECK(c.outside == 1);
    c = unit_circle_root_count(IntPoly{1, -1, 1});  // 6th cyclotomic
    CHECK(c.on == 2);
    CHECK(c.inside == 0);
    CHECK(c.outside == 0);
    c = unit_circle_root_count(IntPoly{1, 3, -15, 20, -15, 3, 1});  // quartic * Phi_6
    CHECK(c.inside == 2);
    CHECK(c.on == 2);
    CHECK(c.outside == 2);
    // Roots at +-1 are detected exactly.
    c = unit_circle_root_count(IntPoly{-2, 1, 1});  // (x+2)(x-1)
    CHECK(c.on == 1);
    CHECK(c.outside == 1);
}

TEST_CASE("unit_circle_root_count handles non-reciprocal parts") {
    IntPoly p = IntPoly{-2, 1} * IntPoly{-3, 1};  // roots 2, 3
    CircleCounts c = unit_circle_root_count(p);
    CHECK(c.inside == 0);
    CHECK(c.on == 0);
    CHECK(c.outside == 2);
    p = IntPoly{0, 1} * IntPoly{-5, 1};  // root 0 counts inside
    c = unit_circle_root_count(p);
    CHECK(c.inside == 1);
    CHECK(c.outside == 1);
    CHECK_THROWS_AS(unit_circle_root_count(IntPoly{1, -2, 1}), Error);  // repeated root
}
