#pragma once

#include <optional>
#include <vector>

#include "toraut/int_matrix.hpp"

namespace toraut {

/// Smith normal form U * M * V = D with U, V unimodular and D diagonal with
/// nonnegative entries d_1 | d_2 | ... .
struct SmithResult {
    IntMatrix u;
    IntMatrix d;
    IntMatrix v;
    std::vector<Int> diagonal() const;           // all min(rows, cols) entries
    std::vector<Int> invariant_factors() const;  // the nonzero ones
};
SmithResult smith_normal_form(const IntMatrix& m);

/// Row-style Hermite normal form: an upper staircase basis of the row span,
/// pivots positive, entries above each pivot reduced into [0, pivot).
/// Zero rows are dropped.
IntMatrix hermite_rows(const IntMatrix& m);

/// Basis (as rows, Hermite-reduced) of the saturated lattice
/// {x integer : M x = 0}; saturated means no integer vector outside the
/// span maps into it under scaling.
std::vector<std::vector<Int>> kernel_lattice(const IntMatrix& m);

/// Saturation of the lattice spanned by the given rows: all integer vectors
/// some nonzero multiple of which lies in the span.  Hermite-reduced rows.
std::vector<std::vector<Int>> saturate_rows(const std::vector<std::vector<Int>>& rows);

/// Rank over the rationals.
int rational_rank(const IntMatrix& m);

/// Integer coordinates of v in the given (independent) basis rows, if any.
std::optional<std::vector<Int>> coordinates_in_lattice(
    const std::vector<std::vector<Int>>& basis, const std::vector<Int>& v);

bool lattice_contains(const std::vector<std::vector<Int>>& basis, const std::vector<Int>& v);

/// Unique solution R of B * R = C where B has full column rank, when the
/// solution exists and is integral (used to restrict a matrix to an
/// invariant sublattice whose basis vectors are the columns of B).
std::optional<IntMatrix> solve_integer_right(const IntMatrix& b, const IntMatrix& c);

}  // namespace toraut
