#pragma once

#include <vector>

#include "toraut/int_matrix.hpp"
#include "toraut/poly_roots.hpp"

namespace toraut {

/// Unit-circle root counts per irreducible factor of the characteristic
/// polynomial, with totals: dim_stable (inside), dim_center (on),
/// dim_unstable (outside).
struct SpectrumSplit {
    struct Factor {
        IntPoly poly;
        CircleCounts counts;
    };
    std::vector<Factor> factors;
    int dim_stable = 0;
    int dim_center = 0;
    int dim_unstable = 0;
};

/// Errors: NotSimpleSpectrum if the characteristic polynomial has a repeated
/// root; CircleBoundaryUnresolved propagates from the circle counting.
SpectrumSplit spectrum_trichotomy(const IntMatrix& a);

struct Hyperbolicity {
    bool partially_hyperbolic;  // contracting and expanding parts both nontrivial
    bool anosov;                // additionally no eigenvalue on the circle
    SpectrumSplit split;
};
Hyperbolicity is_partially_hyperbolic(const IntMatrix& a);

/// True when no eigenvalue is a root of unity, i.e. the characteristic
/// polynomial has no cyclotomic divisor.
bool is_ergodic(const IntMatrix& a);

/// Topological entropy: the sum of log |lambda| over eigenvalues outside the
/// unit circle.  Factors whose roots admit exact treatment (linear, or
/// self-reciprocal via the x + 1/x reduction) are evaluated in extended
/// precision with certified-style interval error bounds; anything else falls
/// back to floating root finding with a declared 1e-11 per-root bound.
struct EntropyResult {
    double value = 0.0;
    double error_bound = 0.0;
    struct Term {
        IntPoly factor;
        double value;
        double error_bound;
    };
    std::vector<Term> terms;
};

/// Errors: NotSimpleSpectrum, CircleBoundaryUnresolved (as above).
EntropyResult bowen_entropy(const IntMatrix& a);

}  // namespace toraut
