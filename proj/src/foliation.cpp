#include "toraut/foliation.hpp"

#include <utility>

#include "toraut/error.hpp"
#include "toraut/lattice.hpp"
#include "toraut/poly_factor.hpp"
#include "toraut/spectral.hpp"

namespace toraut {

namespace {

bool part_selects(SpectrumPart part, const CircleCounts& counts) {
    switch (part) {
        case SpectrumPart::Stable:
            return counts.inside > 0;
        case SpectrumPart::Center:
            return counts.on > 0;
        case SpectrumPart::Unstable:
            return counts.outside > 0;
    }
    return false;
}

/// Stacks the saturated kernels ker f(A) of the selected factors and
/// saturates the sum (a sum of saturated sublattices need not be saturated).
RationalHull hull_of_factors(const IntMatrix& a, const SpectrumSplit& split, SpectrumPart part) {
    std::vector<std::vector<Int>> stacked;
    bool any = false;
    for (const auto& factor : split.factors) {
        if (!part_selects(part, factor.counts)) continue;
        any = true;
        auto kernel = kernel_lattice(poly_at_matrix(factor.poly, a));
        for (auto& row : kernel) stacked.push_back(std::move(row));
    }
    if (!any) throw Error(ErrorCode::EmptyPart, "no eigenvalue in the selected spectral part");
    RationalHull hull;
    hull.basis = saturate_rows(stacked);
    hull.dim = static_cast<int>(hull.basis.size());
    return hull;
}

std::vector<std::vector<Int>> orthogonal_lattice(const std::vector<std::vector<Int>>& basis,
                                                 int n) {
    if (basis.empty()) {
        // Orthogonal complement of the zero lattice: everything.
        std::vector<std::vector<Int>> all(n, std::vector<Int>(n, 0));
        for (int i = 0; i < n; ++i) all[i][i] = 1;
        return all;
    }
    return kernel_lattice(IntMatrix::from_rows(basis));
}

}  // namespace

RationalHull rational_hull(const IntMatrix& a, SpectrumPart part) {
    return hull_of_factors(a, spectrum_trichotomy(a), part);
}

std::vector<std::vector<Int>> resonance_relations(const IntMatrix& a, SpectrumPart part) {
    RationalHull hull = rational_hull(a, part);
    return orthogonal_lattice(hull.basis, a.cols());
}

FoliationVerdict classify_foliation(const IntMatrix& a) {
    Hyperbolicity hyp = is_partially_hyperbolic(a);
    if (!hyp.partially_hyperbolic) {
        throw Error(ErrorCode::NotPartiallyHyperbolic,
                    "unstable foliation undefined without an expanding part");
    }
    FoliationVerdict verdict;
    RationalHull hull = hull_of_factors(a, hyp.split, SpectrumPart::Unstable);
    verdict.closure_dim = hull.dim;
    verdict.hull_basis = std::move(hull.basis);
    verdict.resonance_basis = orthogonal_lattice(verdict.hull_basis, a.cols());
    verdict.kind = verdict.closure_dim == a.cols() ? FoliationKind::Transitive
                                                  : FoliationKind::Decomposable;
    verdict.outside_paper_class = hyp.split.dim_unstable != 2;
    return verdict;
}

DecompositionReport decomposition_report(const IntMatrix& a) {
    SpectrumSplit split = spectrum_trichotomy(a);
    DecompositionReport report;
    std::vector<std::vector<Int>> center_rows;
    for (const auto& factor : split.factors) {
        DecompositionReport::Factor entry;
        entry.poly = factor.poly;
        entry.counts = factor.counts;
        if (factor.counts.on == 0) {
            entry.role = FactorRole::Anosov;
        } else if (factor.counts.inside == 0 && factor.counts.outside == 0) {
            entry.role = FactorRole::Center;
        } else {
            entry.role = FactorRole::Mixed;
        }
        entry.sublattice = kernel_lattice(poly_at_matrix(factor.poly, a));
        if (entry.role == FactorRole::Center) {
            for (const auto& row : entry.sublattice) center_rows.push_back(row);
        }
        report.factors.push_back(std::move(entry));
    }

    if (!center_rows.empty()) {
        // Restriction R of A to the center sublattice: with the basis vectors
        // as the columns of B, solve B R = A B.  The sublattice is invariant
        // and saturated, so an integer R exists.
        IntMatrix bt = IntMatrix::from_rows(center_rows).transposed();
        auto restricted = solve_integer_right(bt, a * bt);
        if (!restricted) {
            throw std::logic_error("center sublattice not invariant under A");
        }
        int r = static_cast<int>(center_rows.size());
        IntMatrix identity = IntMatrix::identity(r);
        IntMatrix power = *restricted;
        for (int k = 1; k <= 12; ++k) {
            if (power == identity) {
                report.center_order = k;
                break;
            }
            power = power * *restricted;
        }
    }
    return report;
}

PolarParameters polar_parameters(const BigFloat& u, const BigFloat& v) {
    if (v == 0) {
        throw Error(ErrorCode::RealRoot,
                    "polar parameters need a genuinely complex reduced root");
    }
    // s = rho^2 + rho^-2 solves s^2 - (u^2+v^2) s + 2(u^2-v^2) - 4 = 0; the
    // larger branch is the one with rho != 1 (v != 0 rules out rho = 1).
    BigFloat uu = u * u;
    BigFloat vv = v * v;
    BigFloat sum = uu + vv;
    BigFloat s = (sum + sqrt(sum * sum - 8 * (uu - vv) + 16)) / 2;
    PolarParameters out;
    out.rho = sqrt((s + sqrt(s * s - 4)) / 2);
    BigFloat inv = 1 / out.rho;
    out.alpha = atan2(abs(v) / (out.rho - inv), u / (out.rho + inv));
    return out;
}

}  // namespace toraut
