#pragma once

#include <optional>
#include <vector>

#include "toraut/int_matrix.hpp"

namespace toraut {

/// The lattice of integer skew-symmetric solutions J of A^T J A = J,
/// described in the coordinates J_{ij}, i < j.
struct SkewFormLattice {
    std::vector<IntMatrix> basis;  // skew matrices, saturated lattice basis
    int rank = 0;
    /// First element with nonzero determinant found by the documented
    /// search (shells of increasing max-norm, small supports first).
    std::optional<IntMatrix> nondegenerate;
    /// False when the candidate cap cut the search short without a find.
    bool search_complete = true;
};

/// Solves A^T J A = J over the integer skew-symmetric matrices.
/// The nondegenerate representative search enumerates coordinate vectors in
/// the basis by max-norm shell m = 1..5, within a shell by support size and
/// then lexicographically, capped at 200000 candidates.
SkewFormLattice solve_invariant_form(const IntMatrix& a);

}  // namespace toraut
