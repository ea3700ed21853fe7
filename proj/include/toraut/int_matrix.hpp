#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "toraut/int_poly.hpp"
#include "toraut/numeric.hpp"

namespace toraut {

/// Dense matrix with integer entries, row-major.  Most of the library works
/// with square matrices; rectangular shapes appear in kernel computations.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols, Int(0)) {}

    static IntMatrix identity(int n);
    static IntMatrix from_rows(std::vector<std::vector<Int>> rows);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Int& at(int i, int j) { return data_[size_t(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return data_[size_t(i) * cols_ + j]; }

    IntMatrix transposed() const;
    IntMatrix pow(unsigned k) const;  // square only

    std::vector<Int> row(int i) const;
    std::vector<Int> apply(const std::vector<Int>& v) const;  // matrix * column

    bool is_zero() const;
    bool is_skew_symmetric() const;

    IntMatrix operator-() const;
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    IntMatrix operator*(const Int& c) const;
    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
Int det(const IntMatrix& m);

Int trace(const IntMatrix& m);

/// Monic characteristic polynomial det(x I - A), by the Faddeev-LeVerrier
/// recurrence (all divisions exact).
IntPoly char_poly(const IntMatrix& a);

/// p evaluated at a square matrix (Horner).
IntMatrix poly_at_matrix(const IntPoly& p, const IntMatrix& a);

/// Companion matrix of a monic polynomial: ones on the superdiagonal and the
/// negated non-leading coefficients along the bottom row.
/// Errors: NotMonic.
IntMatrix companion(const IntPoly& p);

IntMatrix block_diag(const std::vector<IntMatrix>& blocks);

/// The 2m x 2m form [[0, I], [-I, 0]].
IntMatrix standard_symplectic_form(int m);

struct NonstandardForm {
    IntMatrix matrix;
    bool degenerate;  // true exactly when a + b - c == 2, where det vanishes
};

/// The 6x6 skew form J(a,b,c) preserved by the companion matrix of
/// x^6 + a x^5 + b x^4 + c x^3 + b x^2 + a x + 1; det J = (a+b-c-2)^2.
NonstandardForm nonstandard_symplectic_form(const Int& a, const Int& b, const Int& c);

/// Whether A^T J A = J for a nondegenerate skew form J.
/// Errors: BadForm if J is not skew-symmetric or has zero determinant.
bool is_symplectic(const IntMatrix& a, const IntMatrix& j);

/// Exact inverse of a matrix with determinant +-1; empty when |det| != 1.
std::optional<IntMatrix> inverse_unimodular(const IntMatrix& a);

}  // namespace toraut
