#pragma once

#include <optional>
#include <vector>

#include "toraut/int_matrix.hpp"
#include "toraut/poly_roots.hpp"

namespace toraut {

/// Selector for one part of the spectrum relative to the unit circle.
enum class SpectrumPart { Stable, Center, Unstable };

/// The smallest A-invariant rational subspace containing the eigenspaces of
/// the selected spectral part: the sum over Q of ker f(A) for each
/// irreducible characteristic factor f with at least one root in the part.
/// The basis rows form a primitive (saturated), Hermite-reduced lattice
/// basis.  Errors: NotSimpleSpectrum; EmptyPart when no factor has a root in
/// the selected part.
struct RationalHull {
    int dim = 0;
    std::vector<std::vector<Int>> basis;
};
RationalHull rational_hull(const IntMatrix& a, SpectrumPart part);

/// Primitive basis of the lattice of integer vectors r orthogonal to every
/// vector of the hull of the selected part; each r satisfies (r, v) = 0
/// exactly for every hull basis vector v.  Errors: as rational_hull.
std::vector<std::vector<Int>> resonance_relations(const IntMatrix& a, SpectrumPart part);

enum class FoliationKind { Transitive, Decomposable };

/// Verdict on the unstable foliation of the torus automorphism induced by A:
/// the closure of the leaf through the fixed point is the subtorus spanned by
/// the rational hull of the unstable subspace, so the foliation is transitive
/// exactly when that hull is everything.
struct FoliationVerdict {
    FoliationKind kind = FoliationKind::Transitive;
    int closure_dim = 0;
    std::vector<std::vector<Int>> hull_basis;
    std::vector<std::vector<Int>> resonance_basis;
    /// Set when dim W^u != 2: the verdict is computed the same way but the
    /// input falls outside the two-dimensional-unstable class studied in
    /// detail, so downstream interpretation differs.
    bool outside_paper_class = false;
};

/// Errors: NotSimpleSpectrum; NotPartiallyHyperbolic when the spectrum has
/// no contracting or no expanding part.
FoliationVerdict classify_foliation(const IntMatrix& a);

/// Role of one irreducible characteristic factor in the invariant splitting.
enum class FactorRole { Anosov, Center, Mixed };

/// Per-factor invariant sublattices ker f(A) with circle root counts and a
/// role tag: ANOSOV when no root lies on the circle, CENTER when all do,
/// MIXED otherwise.  center_order is the least k in {1,...,12} with the
/// restriction of A to the direct sum of the CENTER sublattices equal to the
/// identity; nullopt when there is no CENTER factor or no such k (the
/// bounded search is recorded in the report).  Errors: NotSimpleSpectrum.
struct DecompositionReport {
    struct Factor {
        IntPoly poly;
        CircleCounts counts;
        FactorRole role = FactorRole::Mixed;
        std::vector<std::vector<Int>> sublattice;
    };
    std::vector<Factor> factors;
    std::optional<int> center_order;
};
DecompositionReport decomposition_report(const IntMatrix& a);

/// Polar form rho * exp(i alpha) of the eigenvalue pair attached to a
/// genuinely complex root z = u + iv of the reduced (z = x + 1/x)
/// polynomial: solves s^2 - (u^2+v^2) s + 2(u^2-v^2) - 4 = 0 for s > 2,
/// then rho = sqrt((s + sqrt(s^2-4))/2) > 1 and alpha in (0, pi) from
/// u = (rho + 1/rho) cos alpha, |v| = (rho - 1/rho) sin alpha.
/// Errors: RealRoot when v = 0 (the real-branch formula applies instead).
struct PolarParameters {
    BigFloat rho;
    BigFloat alpha;
};
PolarParameters polar_parameters(const BigFloat& u, const BigFloat& v);

}  // namespace toraut
