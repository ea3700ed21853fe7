#include "float_roots.hpp"

#include <algorithm>
#include <cmath>

namespace toraut::detail {

std::vector<std::complex<double>> float_roots(const std::vector<double>& coeffs) {
    const int n = static_cast<int>(coeffs.size()) - 1;
    std::vector<std::complex<double>> c(n + 1);
    const double lead = coeffs[n];
    for (int i = 0; i <= n; ++i) c[i] = coeffs[i] / lead;
    auto eval = [&](std::complex<double> x) {
        std::complex<double> acc = 0;
        for (int i = n; i >= 0; --i) acc = acc * x + c[i];
        return acc;
    };
    double radius = 1;
    for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(c[i]));
    radius += 1;
    std::vector<std::complex<double>> z(n);
    const std::complex<double> seed(0.4, 0.9);
    std::complex<double> w = seed;
    for (int i = 0; i < n; ++i) {
        z[i] = radius * w;
        w *= seed;
    }
    for (int iter = 0; iter < 1000; ++iter) {
        double worst = 0;
        for (int i = 0; i < n; ++i) {
            std::complex<double> denom = 1;
            for (int j = 0; j < n; ++j)
                if (j != i) denom *= z[i] - z[j];
            std::complex<double> step = eval(z[i]) / denom;
            z[i] -= step;
            worst = std::max(worst, std::abs(step));
        }
        if (worst < 1e-14) break;
    }
    return z;
}

std::vector<std::complex<double>> float_roots(const IntPoly& p) {
    std::vector<double> coeffs(p.degree() + 1);
    for (int i = 0; i <= p.degree(); ++i) coeffs[i] = p.coeff(i).convert_to<double>();
    return float_roots(coeffs);
}

}  // namespace toraut::detail
