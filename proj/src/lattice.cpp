#include "toraut/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace toraut {

namespace {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

RatMat to_rat(const IntMatrix& m) {
    RatMat out(m.rows(), RatVec(m.cols(), Rat(0)));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out[i][j] = Rat(m.at(i, j));
    return out;
}

// In-place reduced row echelon form; returns the pivot columns.
std::vector<int> rref(RatMat& a) {
    std::vector<int> pivots;
    if (a.empty()) return pivots;
    const int rows = static_cast<int>(a.size());
    const int cols = static_cast<int>(a[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(a[r], a[p]);
        Rat inv = Rat(1) / a[r][c];
        for (int j = c; j < cols; ++j) a[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<Int> scale_to_primitive_vector(const RatVec& v) {
    Int den(1);
    for (const Rat& x : v) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(x));
    std::vector<Int> out(v.size());
    Int content(0);
    for (size_t i = 0; i < v.size(); ++i) {
        out[i] = boost::multiprecision::numerator(v[i]) *
                 (den / boost::multiprecision::denominator(v[i]));
        content = boost::multiprecision::gcd(content, out[i]);
    }
    if (content > 1)
        for (Int& x : out) x /= content;
    return out;
}

// Smith normal form with optional transform tracking.  The inverse of V is
// tracked directly so saturation does not need a separate inversion.
void smith_internal(const IntMatrix& m, IntMatrix& d, IntMatrix* u, IntMatrix* v,
                    IntMatrix* vinv) {
    const int rows = m.rows();
    const int cols = m.cols();
    d = m;
    if (u) *u = IntMatrix::identity(rows);
    if (v) *v = IntMatrix::identity(cols);
    if (vinv) *vinv = IntMatrix::identity(cols);

    auto row_axpy = [&](int dst, int src, const Int& q) {  // row_dst += q * row_src
        for (int j = 0; j < cols; ++j) d.at(dst, j) += q * d.at(src, j);
        if (u)
            for (int j = 0; j < rows; ++j) u->at(dst, j) += q * u->at(src, j);
    };
    auto row_swap = [&](int i1, int i2) {
        for (int j = 0; j < cols; ++j) std::swap(d.at(i1, j), d.at(i2, j));
        if (u)
            for (int j = 0; j < rows; ++j) std::swap(u->at(i1, j), u->at(i2, j));
    };
    auto col_axpy = [&](int dst, int src, const Int& q) {  // col_dst += q * col_src
        for (int i = 0; i < rows; ++i) d.at(i, dst) += q * d.at(i, src);
        if (v)
            for (int i = 0; i < cols; ++i) v->at(i, dst) += q * v->at(i, src);
        if (vinv)
            for (int j = 0; j < cols; ++j) vinv->at(src, j) -= q * vinv->at(dst, j);
    };
    auto col_swap = [&](int j1, int j2) {
        for (int i = 0; i < rows; ++i) std::swap(d.at(i, j1), d.at(i, j2));
        if (v)
            for (int i = 0; i < cols; ++i) std::swap(v->at(i, j1), v->at(i, j2));
        if (vinv)
            for (int j = 0; j < cols; ++j) std::swap(vinv->at(j1, j), vinv->at(j2, j));
    };
    auto row_negate = [&](int i) {
        for (int j = 0; j < cols; ++j) d.at(i, j) = -d.at(i, j);
        if (u)
            for (int j = 0; j < rows; ++j) u->at(i, j) = -u->at(i, j);
    };
    auto rounded_quotient = [](const Int& a, const Int& b) { return rounded_div(a, b); };

    const int limit = std::min(rows, cols);
    for (int t = 0; t < limit; ++t) {
        for (;;) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            int pi = -1, pj = -1;
            for (int i = t; i < rows; ++i)
                for (int j = t; j < cols; ++j) {
                    if (d.at(i, j) == 0) continue;
                    if (pi < 0 || abs_int(d.at(i, j)) < abs_int(d.at(pi, pj))) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) {
                t = limit;  // trailing block is zero; done
                break;
            }
            if (pi != t) row_swap(pi, t);
            if (pj != t) col_swap(pj, t);

            bool dirty = false;
            for (int i = t + 1; i < rows; ++i) {
                if (d.at(i, t) == 0) continue;
                Int q = rounded_quotient(d.at(i, t), d.at(t, t));
                if (q != 0) row_axpy(i, t, -q);
                if (d.at(i, t) != 0) dirty = true;
            }
            for (int j = t + 1; j < cols; ++j) {
                if (d.at(t, j) == 0) continue;
                Int q = rounded_quotient(d.at(t, j), d.at(t, t));
                if (q != 0) col_axpy(j, t, -q);
                if (d.at(t, j) != 0) dirty = true;
            }
            if (dirty) continue;  // residues smaller than the pivot remain

            // Pivot must divide the rest of the block for the chain property.
            int vi = -1, vj = -1;
            for (int i = t + 1; i < rows && vi < 0; ++i)
                for (int j = t + 1; j < cols; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        vi = i;
                        vj = j;
                        break;
                    }
            if (vi < 0) break;
            row_axpy(t, vi, Int(1));
        }
        if (t >= limit) break;
        if (d.at(t, t) < 0) row_negate(t);
    }
}

}  // namespace

std::vector<Int> SmithResult::diagonal() const {
    std::vector<Int> out;
    const int k = std::min(d.rows(), d.cols());
    out.reserve(k);
    for (int i = 0; i < k; ++i) out.push_back(d.at(i, i));
    return out;
}

std::vector<Int> SmithResult::invariant_factors() const {
    std::vector<Int> out;
    for (const Int& x : diagonal())
        if (x != 0) out.push_back(x);
    return out;
}

SmithResult smith_normal_form(const IntMatrix& m) {
    SmithResult r;
    smith_internal(m, r.d, &r.u, &r.v, nullptr);
    return r;
}

IntMatrix hermite_rows(const IntMatrix& m) {
    const int rows = m.rows();
    const int cols = m.cols();
    IntMatrix h = m;
    int cur = 0;
    for (int c = 0; c < cols && cur < rows; ++c) {
        // Reduce the column below `cur` to a single nonzero entry.
        for (;;) {
            int best = -1;
            for (int i = cur; i < rows; ++i) {
                if (h.at(i, c) == 0) continue;
                if (best < 0 || abs_int(h.at(i, c)) < abs_int(h.at(best, c))) best = i;
            }
            if (best < 0) break;
            bool others = false;
            for (int i = cur; i < rows; ++i) {
                if (i == best || h.at(i, c) == 0) continue;
                others = true;
                Int q = rounded_div(h.at(i, c), h.at(best, c));
                for (int j = 0; j < cols; ++j) h.at(i, j) -= q * h.at(best, j);
            }
            if (!others) {
                if (best != cur)
                    for (int j = 0; j < cols; ++j) std::swap(h.at(best, j), h.at(cur, j));
                break;
            }
        }
        if (h.at(cur, c) == 0) continue;
        if (h.at(cur, c) < 0)
            for (int j = 0; j < cols; ++j) h.at(cur, j) = -h.at(cur, j);
        // Reduce the entries above the pivot into [0, pivot).
        for (int i = 0; i < cur; ++i) {
            Int q = h.at(i, c) / h.at(cur, c);
            if (h.at(i, c) % h.at(cur, c) < 0) q -= 1;
            if (q != 0)
                for (int j = 0; j < cols; ++j) h.at(i, j) -= q * h.at(cur, j);
        }
        ++cur;
    }
    // Keep the nonzero (first `cur`) rows.
    IntMatrix out(cur, cols);
    for (int i = 0; i < cur; ++i)
        for (int j = 0; j < cols; ++j) out.at(i, j) = h.at(i, j);
    return out;
}

std::vector<std::vector<Int>> saturate_rows(const std::vector<std::vector<Int>>& rows) {
    if (rows.empty()) return {};
    IntMatrix k = IntMatrix::from_rows(rows);
    IntMatrix d, vinv;
    smith_internal(k, d, nullptr, nullptr, &vinv);
    int rank = 0;
    const int limit = std::min(d.rows(), d.cols());
    while (rank < limit && d.at(rank, rank) != 0) ++rank;
    // Row span over Q of k equals the span of the first `rank` rows of
    // V^{-1}; those rows extend to a basis of Z^n, so they span a saturated
    // lattice.
    std::vector<std::vector<Int>> basis;
    basis.reserve(rank);
    for (int i = 0; i < rank; ++i) basis.push_back(vinv.row(i));
    IntMatrix reduced = hermite_rows(IntMatrix::from_rows(basis));
    std::vector<std::vector<Int>> out;
    out.reserve(reduced.rows());
    for (int i = 0; i < reduced.rows(); ++i) out.push_back(reduced.row(i));
    return out;
}

std::vector<std::vector<Int>> kernel_lattice(const IntMatrix& m) {
    RatMat a = to_rat(m);
    std::vector<int> pivots = rref(a);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Int>> vectors;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        RatVec x(m.cols(), Rat(0));
        x[f] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -a[r][f];
        vectors.push_back(scale_to_primitive_vector(x));
    }
    if (vectors.empty()) return {};
    return saturate_rows(vectors);
}

int rational_rank(const IntMatrix& m) {
    RatMat a = to_rat(m);
    return static_cast<int>(rref(a).size());
}

std::optional<std::vector<Int>> coordinates_in_lattice(
    const std::vector<std::vector<Int>>& basis, const std::vector<Int>& v) {
    if (basis.empty()) {
        for (const Int& x : v)
            if (x != 0) return std::nullopt;
        return std::vector<Int>{};
    }
    const int n = static_cast<int>(v.size());
    const int r = static_cast<int>(basis.size());
    // Solve B^T x = v augmented; basis rows are independent by contract.
    RatMat a(n, RatVec(r + 1, Rat(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < r; ++j) a[i][j] = Rat(basis[j][i]);
        a[i][r] = Rat(v[i]);
    }
    std::vector<int> pivots = rref(a);
    if (!pivots.empty() && pivots.back() == r) return std::nullopt;  // inconsistent
    std::vector<Int> coords(r, Int(0));
    for (size_t row = 0; row < pivots.size(); ++row) {
        const Rat& val = a[row][r];
        if (boost::multiprecision::denominator(val) != 1) return std::nullopt;
        coords[pivots[row]] = boost::multiprecision::numerator(val);
    }
    return coords;
}

bool lattice_contains(const std::vector<std::vector<Int>>& basis, const std::vector<Int>& v) {
    return coordinates_in_lattice(basis, v).has_value();
}

std::optional<IntMatrix> solve_integer_right(const IntMatrix& b, const IntMatrix& c) {
    if (b.rows() != c.rows()) throw std::invalid_argument("solve_integer_right: shape mismatch");
    const int n = b.rows();
    const int d = b.cols();
    const int k = c.cols();
    RatMat a(n, RatVec(d + k, Rat(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < d; ++j) a[i][j] = Rat(b.at(i, j));
        for (int j = 0; j < k; ++j) a[i][d + j] = Rat(c.at(i, j));
    }
    std::vector<int> pivots = rref(a);
    for (int p : pivots)
        if (p >= d) return std::nullopt;  // inconsistent system
    if (static_cast<int>(pivots.size()) != d) return std::nullopt;  // rank-deficient B
    IntMatrix r(d, k);
    for (int row = 0; row < d; ++row) {
        for (int j = 0; j < k; ++j) {
            const Rat& val = a[row][d + j];
            if (boost::multiprecision::denominator(val) != 1) return std::nullopt;
            r.at(pivots[row], j) = boost::multiprecision::numerator(val);
        }
    }
    return r;
}

}  // namespace toraut
