#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toraut/int_matrix.hpp"

namespace toraut {

/// Exact similarity invariants over the integers: equal bundles are
/// necessary (not sufficient) for integral similarity.
struct SimilarityInvariants {
    IntPoly characteristic;
    /// Per irreducible characteristic factor (sorted), the Smith diagonal of
    /// f(A).
    std::vector<std::pair<IntPoly, std::vector<Int>>> factor_smith;
    /// Smith diagonals of A - kI for k = -2..2.
    std::vector<std::pair<int, std::vector<Int>>> shift_smith;
    /// Traces of A^j for j = 1..6.
    std::vector<Int> power_traces;
};
SimilarityInvariants similarity_invariants(const IntMatrix& a);

/// Name of the first invariant on which the bundles differ, in bundle order;
/// empty when the bundles agree.
std::optional<std::string> first_invariant_difference(const SimilarityInvariants& lhs,
                                                      const SimilarityInvariants& rhs);

/// Integer basis of the lattice of matrices H with HA = BH (the Sylvester
/// kernel, saturated).  Empty when no nonzero intertwiner exists.
std::vector<IntMatrix> conjugator_lattice(const IntMatrix& a, const IntMatrix& b);

/// Exact check that H conjugates A to B: HA = BH and |det H| = 1.
bool verify_conjugacy(const IntMatrix& a, const IntMatrix& b, const IntMatrix& h);

enum class ConjugacyStatus { Conjugate, Distinct, Unknown };

/// Tri-state semi-decision of integral similarity (equivalently, topological
/// conjugacy of the induced torus automorphisms).
struct ConjugacyVerdict {
    ConjugacyStatus status = ConjugacyStatus::Unknown;
    std::optional<IntMatrix> witness;                 // unimodular, HA = BH
    std::optional<std::string> separating_invariant;  // set when Distinct
    int search_bound = 0;
};

/// DISTINCT when the invariant bundles differ (first difference named) or
/// the conjugator lattice is empty; otherwise searches coordinate vectors of
/// max-norm <= bound over a size-reduced lattice basis, in lexicographic
/// order, for a determinant +-1 combination, returning the first hit as the
/// witness; UNKNOWN when the search exhausts (the box is additionally capped
/// at 2e6 candidates for high-rank lattices).
/// Errors: NotUnimodular when either input has |det| != 1.
ConjugacyVerdict decide_conjugacy(const IntMatrix& a, const IntMatrix& b, int bound = 3);

}  // namespace toraut
