#pragma once

#include <complex>
#include <vector>

#include "toraut/int_poly.hpp"

namespace toraut::detail {

/// All complex roots of p in double precision (Durand-Kerner iteration).
/// Adequate for the well-separated, desk-scale polynomials this library
/// meets; callers needing more accuracy polish the results themselves.
std::vector<std::complex<double>> float_roots(const IntPoly& p);

std::vector<std::complex<double>> float_roots(const std::vector<double>& coeffs);

}  // namespace toraut::detail
