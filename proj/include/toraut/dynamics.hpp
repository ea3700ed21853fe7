#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "toraut/int_matrix.hpp"

namespace toraut {

/// A point of the torus with rational coordinates numerators[i]/denominator,
/// each in [0, 1).
struct RationalPoint {
    std::vector<Int> numerators;
    Int denominator = 1;  // positive
    bool reduced = false;

    /// Coordinates folded into [0, 1) and the common factor with the
    /// denominator divided out (sets reduced).
    RationalPoint normalized() const;
};

/// Least k >= 1 with A^k x = x on the torus, computed exactly on residues
/// modulo the denominator q.  Errors: MayBeNonPeriodic when A is not ergodic
/// (finiteness of the period is then not guaranteed by the rationality
/// argument); DenominatorTooLarge when q > 10^6; BudgetExhausted if the
/// orbit walk exceeds 2e7 steps.
long long period_of(const IntMatrix& a, const RationalPoint& x);

/// Number of fixed points of A^k on the torus: |det(A^k - I)|, cross-checked
/// against the product of the Smith invariant factors of A^k - I; nullopt
/// means infinitely many (det = 0).
std::optional<Int> count_fixed_points(const IntMatrix& a, int k);

/// Spanning pair for the unstable plane: normalized eigenvectors of the two
/// real expanding eigenvalues, or normalized real and imaginary parts of the
/// complex expanding eigenvector.  residual is ||A v - lambda v|| of the
/// unit eigenvector(s) before splitting, <= 1e-9 by contract.
/// Errors: WrongUnstableDim unless the unstable dimension is exactly 2.
struct UnstableFrame {
    enum class Kind { RealPair, ComplexPair };
    Kind kind = Kind::RealPair;
    std::vector<double> gamma1;
    std::vector<double> gamma2;
    double residual = 0.0;
};
UnstableFrame unstable_frame(const IntMatrix& a);

/// Deterministic sampling of the unstable leaf through the origin:
/// t1 gamma1 + t2 gamma2 mod 1 for pseudo-random (t1, t2) from the seed,
/// counting which of the resolution^n congruence boxes are hit.
/// Errors: WrongUnstableDim; invalid_argument when resolution < 2,
/// samples < resolution^n, or resolution^n > 2^26.
struct DensityScan {
    double coverage = 0.0;
    long long boxes_hit = 0;
    long long total_boxes = 0;
    int resolution = 0;
    long long samples = 0;
    std::uint64_t seed = 0;
};
/// collect, when given, receives every sampled point folded into [0,1)^n.
DensityScan leaf_density_scan(const IntMatrix& a, int resolution, long long samples,
                              std::uint64_t seed,
                              std::vector<std::vector<double>>* collect = nullptr);

/// Kronecker approximation on the unstable leaf: either a resonance relation
/// r whose pairing with the target is farther than eps from every integer
/// (the leaf closure misses the target), or parameters (t1, t2) and an
/// integer shift p with ||t1 gamma1 + t2 gamma2 - p - target||_inf <= eps,
/// found by a deterministic coarse-to-fine grid search.
/// Errors: WrongUnstableDim; invalid_argument when eps < 1e-3 or the target
/// size differs from n; BudgetExhausted when 8e7 evaluations find neither.
struct KroneckerResult {
    bool obstructed = false;
    std::vector<Int> obstruction;  // violated relation when obstructed
    double t1 = 0.0;
    double t2 = 0.0;
    std::vector<long long> shift;  // nearest-integer vector p
    double residual = 0.0;         // max-norm of the replayed combination
};
KroneckerResult kronecker_witness(const IntMatrix& a, const std::vector<double>& target,
                                  double eps);

}  // namespace toraut
