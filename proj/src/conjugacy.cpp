#include "toraut/conjugacy.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>

#include "toraut/error.hpp"
#include "toraut/lattice.hpp"
#include "toraut/poly_factor.hpp"

namespace toraut {

namespace {

/// Bareiss determinant in 128-bit arithmetic; safe while every intermediate
/// k x k minor fits, which the caller guarantees via an entry bound.
__int128 det_small(std::vector<__int128> m, int n) {
    __int128 sign = 1;
    __int128 prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[size_t(k) * n + k] == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i) {
                if (m[size_t(i) * n + k] != 0) {
                    pivot = i;
                    break;
                }
            }
            if (pivot < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m[size_t(k) * n + j], m[size_t(pivot) * n + j]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                m[size_t(i) * n + j] = (m[size_t(i) * n + j] * m[size_t(k) * n + k] -
                                        m[size_t(i) * n + k] * m[size_t(k) * n + j]) /
                                       prev;
            }
            m[size_t(i) * n + k] = 0;
        }
        prev = m[size_t(k) * n + k];
    }
    return sign * m[size_t(n) * n - 1];
}

std::vector<Int> vectorize(const IntMatrix& m) {
    std::vector<Int> v;
    v.reserve(size_t(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
    }
    return v;
}

IntMatrix devectorize(const std::vector<Int>& v, int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m.at(i, j) = v[size_t(i) * n + j];
    }
    return m;
}

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// Integer pair reduction: repeatedly subtract rounded projections while the
/// squared norm strictly drops.  A cheap stand-in for a full reduction
/// algorithm; only candidate ordering depends on it, not correctness.
void size_reduce(std::vector<std::vector<Int>>& basis) {
    bool changed = true;
    for (int pass = 0; changed && pass < 100; ++pass) {
        changed = false;
        for (size_t i = 0; i < basis.size(); ++i) {
            for (size_t j = 0; j < basis.size(); ++j) {
                if (i == j) continue;
                Int nj = dot(basis[j], basis[j]);
                if (nj == 0) continue;
                Int t = rounded_div(dot(basis[i], basis[j]), nj);
                if (t == 0) continue;
                std::vector<Int> candidate = basis[i];
                for (size_t k = 0; k < candidate.size(); ++k) candidate[k] -= t * basis[j][k];
                if (dot(candidate, candidate) < dot(basis[i], basis[i])) {
                    basis[i] = std::move(candidate);
                    changed = true;
                }
            }
        }
    }
    std::sort(basis.begin(), basis.end(), [](const std::vector<Int>& a, const std::vector<Int>& b) {
        Int na = dot(a, a);
        Int nb = dot(b, b);
        if (na != nb) return na < nb;
        return a < b;
    });
}

}  // namespace

SimilarityInvariants similarity_invariants(const IntMatrix& a) {
    SimilarityInvariants inv;
    inv.characteristic = char_poly(a);
    auto factors = factor_over_Q(inv.characteristic);
    std::sort(factors.begin(), factors.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [factor, mult] : factors) {
        (void)mult;
        inv.factor_smith.emplace_back(factor,
                                      smith_normal_form(poly_at_matrix(factor, a)).diagonal());
    }
    int n = a.rows();
    for (int k = -2; k <= 2; ++k) {
        IntMatrix shifted = a - IntMatrix::identity(n) * Int(k);
        inv.shift_smith.emplace_back(k, smith_normal_form(shifted).diagonal());
    }
    IntMatrix power = a;
    for (int j = 1; j <= 6; ++j) {
        inv.power_traces.push_back(trace(power));
        if (j < 6) power = power * a;
    }
    return inv;
}

std::optional<std::string> first_invariant_difference(const SimilarityInvariants& lhs,
                                                      const SimilarityInvariants& rhs) {
    if (lhs.characteristic != rhs.characteristic) return "char_poly";
    // Characteristic polynomials agree, so the sorted factor lists do too.
    for (size_t i = 0; i < lhs.factor_smith.size(); ++i) {
        if (lhs.factor_smith[i].second != rhs.factor_smith[i].second) {
            return "factor_smith:" + lhs.factor_smith[i].first.to_string();
        }
    }
    for (size_t i = 0; i < lhs.shift_smith.size(); ++i) {
        if (lhs.shift_smith[i].second != rhs.shift_smith[i].second) {
            return "shift_smith:" + std::to_string(lhs.shift_smith[i].first);
        }
    }
    for (size_t j = 0; j < lhs.power_traces.size(); ++j) {
        if (lhs.power_traces[j] != rhs.power_traces[j]) {
            return "power_trace:" + std::to_string(int(j) + 1);
        }
    }
    return std::nullopt;
}

std::vector<IntMatrix> conjugator_lattice(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
        throw std::invalid_argument("conjugator_lattice needs square matrices of equal size");
    }
    int n = a.rows();
    // The linear map H -> HA - BH in the E_ij basis, rows indexed by the
    // output entry (p,q), columns by the input entry (i,j):
    //   (E_ij A)_pq = [p==i] A_jq,   (B E_ij)_pq = B_pi [j==q].
    IntMatrix system(n * n, n * n);
    for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    Int value = 0;
                    if (p == i) value += a.at(j, q);
                    if (j == q) value -= b.at(p, i);
                    system.at(p * n + q, i * n + j) = value;
                }
            }
        }
    }
    auto kernel = kernel_lattice(system);
    std::vector<IntMatrix> basis;
    basis.reserve(kernel.size());
    for (const auto& row : kernel) basis.push_back(devectorize(row, n));
    return basis;
}

bool verify_conjugacy(const IntMatrix& a, const IntMatrix& b, const IntMatrix& h) {
    if (h.rows() != a.rows() || h.cols() != a.cols() || a.rows() != b.rows() ||
        a.cols() != b.cols()) {
        return false;
    }
    if (h * a != b * h) return false;
    Int d = det(h);
    return d == 1 || d == -1;
}

ConjugacyVerdict decide_conjugacy(const IntMatrix& a, const IntMatrix& b, int bound) {
    auto check_unimodular = [](const IntMatrix& m) {
        Int d = det(m);
        if (d != 1 && d != -1) {
            throw Error(ErrorCode::NotUnimodular, "conjugacy is defined for |det| = 1 matrices");
        }
    };
    check_unimodular(a);
    check_unimodular(b);

    ConjugacyVerdict verdict;
    verdict.search_bound = bound;

    if (a == b) {
        verdict.status = ConjugacyStatus::Conjugate;
        verdict.witness = IntMatrix::identity(a.rows());
        return verdict;
    }

    SimilarityInvariants ia = similarity_invariants(a);
    SimilarityInvariants ib = similarity_invariants(b);
    if (auto difference = first_invariant_difference(ia, ib)) {
        verdict.status = ConjugacyStatus::Distinct;
        verdict.separating_invariant = difference;
        return verdict;
    }

    auto lattice = conjugator_lattice(a, b);
    if (lattice.empty()) {
        // No nonzero intertwiner at all, so certainly no unimodular one.
        verdict.status = ConjugacyStatus::Distinct;
        verdict.separating_invariant = "conjugator_lattice_rank";
        return verdict;
    }

    int n = a.rows();
    std::vector<std::vector<Int>> basis;
    basis.reserve(lattice.size());
    for (const auto& m : lattice) basis.push_back(vectorize(m));
    size_reduce(basis);

    const int r = static_cast<int>(basis.size());
    const long long kCandidateCap = 2'000'000;

    // Entry bound that keeps every Bareiss intermediate of an n x n
    // combination within 128 bits for n <= 6 (Hadamard: (sqrt(n) m)^n).
    Int max_entry = 0;
    for (const auto& v : basis) {
        for (const auto& e : v) {
            Int m = abs(e);
            if (m > max_entry) max_entry = m;
        }
    }
    bool fast = n <= 6 && max_entry * r * bound <= 900'000;

    // Lexicographic odometer over coordinates c in [-bound, bound]^r with
    // prefix sums: prefix[k] = sum of c_i * basis_i for i < k.
    std::vector<long long> coords(r, -bound);
    std::vector<std::vector<Int>> prefix(r + 1, std::vector<Int>(size_t(n) * n, 0));
    std::vector<std::vector<long long>> fast_basis;
    std::vector<std::vector<long long>> fast_prefix;
    if (fast) {
        fast_basis.resize(r);
        for (int i = 0; i < r; ++i) {
            fast_basis[i].resize(size_t(n) * n);
            for (size_t k = 0; k < basis[i].size(); ++k) {
                fast_basis[i][k] = basis[i][k].convert_to<long long>();
            }
        }
        fast_prefix.assign(r + 1, std::vector<long long>(size_t(n) * n, 0));
    }
    auto rebuild_from = [&](int k) {
        for (int i = k; i < r; ++i) {
            if (fast) {
                for (size_t e = 0; e < fast_prefix[i].size(); ++e) {
                    fast_prefix[i + 1][e] = fast_prefix[i][e] + coords[i] * fast_basis[i][e];
                }
            } else {
                for (size_t e = 0; e < prefix[i].size(); ++e) {
                    prefix[i + 1][e] = prefix[i][e] + Int(coords[i]) * basis[i][e];
                }
            }
        }
    };
    rebuild_from(0);

    long long tried = 0;
    while (true) {
        if (++tried > kCandidateCap) break;
        bool unimodular_hit = false;
        if (fast) {
            std::vector<__int128> entries(fast_prefix[r].begin(), fast_prefix[r].end());
            __int128 d = det_small(std::move(entries), n);
            unimodular_hit = d == 1 || d == -1;
        } else {
            Int d = det(devectorize(prefix[r], n));
            unimodular_hit = d == 1 || d == -1;
        }
        if (unimodular_hit) {
            std::vector<Int> combined(size_t(n) * n, 0);
            for (int i = 0; i < r; ++i) {
                for (size_t e = 0; e < combined.size(); ++e) {
                    combined[e] += Int(coords[i]) * basis[i][e];
                }
            }
            IntMatrix h = devectorize(combined, n);
            if (verify_conjugacy(a, b, h)) {
                verdict.status = ConjugacyStatus::Conjugate;
                verdict.witness = std::move(h);
                return verdict;
            }
            throw std::logic_error("conjugator candidate failed exact replay");
        }
        // Advance the odometer (last coordinate fastest).
        int k = r - 1;
        while (k >= 0 && coords[k] == bound) --k;
        if (k < 0) break;
        ++coords[k];
        for (int i = k + 1; i < r; ++i) coords[i] = -bound;
        rebuild_from(k);
    }

    verdict.status = ConjugacyStatus::Unknown;
    return verdict;
}

}  // namespace toraut
