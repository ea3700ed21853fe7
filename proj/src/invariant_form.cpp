#include "toraut/invariant_form.hpp"

#include <stdexcept>

#include "toraut/lattice.hpp"

namespace toraut {

namespace {

constexpr int kMaxShell = 5;
constexpr long long kCandidateCap = 200000;

// Skew matrix from its upper-triangle coordinates (row-major i < j order).
IntMatrix skew_from_coords(int n, const std::vector<Int>& coords) {
    IntMatrix j(n, n);
    int idx = 0;
    for (int r = 0; r < n; ++r)
        for (int c = r + 1; c < n; ++c) {
            j.at(r, c) = coords[idx];
            j.at(c, r) = -coords[idx];
            ++idx;
        }
    return j;
}

struct Search {
    const std::vector<IntMatrix>& basis;
    int n;
    long long tried = 0;
    bool truncated = false;
    std::optional<IntMatrix> found;

    // Tries J = sum coeff_i basis_i for every assignment of the chosen
    // support positions with entries in [-m, m] \ {0}, at least one of
    // absolute value m (so shells do not repeat earlier work).
    void try_support(const std::vector<int>& support, int m, std::vector<Int>& coeffs,
                     size_t pos, bool hit_shell) {
        if (found || truncated) return;
        if (pos == support.size()) {
            if (!hit_shell) return;
            if (++tried > kCandidateCap) {
                truncated = true;
                return;
            }
            IntMatrix j(n, n);
            for (size_t i = 0; i < support.size(); ++i)
                j = j + basis[support[i]] * coeffs[i];
            if (det(j) != 0) found = j;
            return;
        }
        for (long long v = -m; v <= m; ++v) {
            if (v == 0) continue;
            coeffs[pos] = v;
            try_support(support, m, coeffs, pos + 1, hit_shell || v == m || v == -m);
            if (found || truncated) return;
        }
    }

    void run() {
        const int r = static_cast<int>(basis.size());
        for (int m = 1; m <= kMaxShell && !found && !truncated; ++m) {
            for (int s = 1; s <= r && !found && !truncated; ++s) {
                // All supports of size s in lexicographic order.
                std::vector<int> support(s);
                for (int i = 0; i < s; ++i) support[i] = i;
                for (;;) {
                    std::vector<Int> coeffs(s);
                    try_support(support, m, coeffs, 0, false);
                    if (found || truncated) break;
                    int i = s - 1;
                    while (i >= 0 && support[i] == r - s + i) --i;
                    if (i < 0) break;
                    ++support[i];
                    for (int j2 = i + 1; j2 < s; ++j2) support[j2] = support[j2 - 1] + 1;
                }
            }
        }
    }
};

}  // namespace

SkewFormLattice solve_invariant_form(const IntMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("solve_invariant_form: non-square matrix");
    const int n = a.rows();
    const int ncoords = n * (n - 1) / 2;

    // Linear system over the coordinates J_{ij} (i < j): for each matrix
    // position (p, q), the entry of A^T J A - J is
    //   sum_{i<j} (A_{ip} A_{jq} - A_{jp} A_{iq}) J_{ij} - [J]_{pq}.
    IntMatrix system(n * n, ncoords);
    int row = 0;
    for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q, ++row) {
            int idx = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j, ++idx) {
                    Int coeff = a.at(i, p) * a.at(j, q) - a.at(j, p) * a.at(i, q);
                    if (p < q && i == p && j == q) coeff -= 1;
                    if (p > q && i == q && j == p) coeff += 1;
                    system.at(row, idx) = coeff;
                }
        }
    }

    SkewFormLattice out;
    for (const auto& coords : kernel_lattice(system)) out.basis.push_back(skew_from_coords(n, coords));
    out.rank = static_cast<int>(out.basis.size());
    if (out.rank > 0) {
        Search search{out.basis, n};
        search.run();
        out.nondegenerate = search.found;
        out.search_complete = !search.truncated;
    }
    return out;
}

}  // namespace toraut
