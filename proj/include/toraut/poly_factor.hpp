#pragma once

#include <utility>
#include <vector>

#include "toraut/int_poly.hpp"

namespace toraut {

/// Irreducible factorization over Q of a nonzero integer polynomial,
/// returned as primitive integer polynomials with positive leading
/// coefficient, sorted by degree and then lexicographically, with
/// multiplicities.  The overall content/sign is dropped.
std::vector<std::pair<IntPoly, int>> factor_over_Q(const IntPoly& p);

/// Errors: DegreeTooSmall for constants.
bool is_irreducible_over_Q(const IntPoly& p);

/// k-th cyclotomic polynomial (k >= 1), computed by the recurrence
/// x^k - 1 = prod_{d | k} Phi_d.
IntPoly cyclotomic(int k);

/// Sorted list of indices k with Phi_k dividing p.  Every candidate k with
/// phi(k) <= deg p satisfies k <= 2 deg(p)^2, which bounds the search.
std::vector<int> cyclotomic_divisors(const IntPoly& p);

}  // namespace toraut
