#pragma once

#include <utility>
#include <vector>

#include "toraut/int_poly.hpp"

namespace toraut {

/// Sturm chain of a squarefree-or-not polynomial: the standard negated
/// remainder sequence, each member scaled to a primitive integer polynomial
/// with its sign preserved.
std::vector<IntPoly> sturm_chain(const IntPoly& p);

/// Number of real roots of p in the open interval (lo, hi).
/// Errors: RepeatedRoots if p is not squarefree, EndpointRoot if p vanishes
/// at lo or hi.
int sturm_count(const IntPoly& p, const Rat& lo, const Rat& hi);

/// Which side of the unit circle a real root lies on.
enum class CircleSide { Inside, On, Outside };

/// Isolation data for the real roots of a squarefree polynomial: disjoint
/// open rational intervals with non-root endpoints, one root each, sorted
/// left to right.  Complex roots are only counted (as conjugate pairs).
struct RootIsolation {
    std::vector<std::pair<Rat, Rat>> intervals;
    std::vector<CircleSide> circle_sides;  // per interval, relative to |x| = 1
    int complex_pairs = 0;
};

/// Errors: RepeatedRoots if p is not squarefree.
RootIsolation isolate_real_roots(const IntPoly& p);

/// Shrinks an isolating interval of p by bisection until hi - lo <= width,
/// keeping the root strictly inside and the endpoints off the root set.
void refine_root(const IntPoly& p, Rat& lo, Rat& hi, const Rat& width);

/// Shrinks an isolating interval until it no longer straddles the given
/// point.  The enclosed root must differ from the point, or this loops
/// forever; callers use it at points that are provably not roots.
void refine_off_point(const IntPoly& p, Rat& lo, Rat& hi, const Rat& point);

/// Root counts of a squarefree polynomial relative to the unit circle.
struct CircleCounts {
    int on = 0;
    int inside = 0;
    int outside = 0;
};

/// Exact for self-reciprocal input (and for the self-reciprocal part of any
/// input, split off by gcd with the coefficient reversal); the remaining
/// part is handled by a floating root finder with a 1e-12 boundary margin.
/// Errors: RepeatedRoots if p is not squarefree; CircleBoundaryUnresolved if
/// a floating root lands within the margin of the circle.
CircleCounts unit_circle_root_count(const IntPoly& p);

/// For self-reciprocal p of even degree 2m, the degree-m polynomial P with
/// p(x) = x^m * P(x + 1/x).  Errors: NotSelfReciprocal for odd degree or a
/// non-palindromic coefficient vector.
IntPoly reciprocal_reduce(const IntPoly& p);

/// The monic self-reciprocal sextic whose reciprocal_reduce is
/// z^3 + a z^2 + b z + c, namely
/// x^6 + a x^5 + (3+b) x^4 + (2a+c) x^3 + (3+b) x^2 + a x + 1.
IntPoly lift_cubic(const Int& a, const Int& b, const Int& c);

}  // namespace toraut
