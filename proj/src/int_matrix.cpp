#include "toraut/int_matrix.hpp"

#include <stdexcept>

#include "toraut/error.hpp"

namespace toraut {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::vector<std::vector<Int>> rows) {
    if (rows.empty()) return IntMatrix();
    IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows_; ++i) {
        if (static_cast<int>(rows[i].size()) != m.cols_)
            throw std::invalid_argument("ragged matrix rows");
        for (int j = 0; j < m.cols_; ++j) m.at(i, j) = std::move(rows[i][j]);
    }
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<std::vector<Int>> conv;
    conv.reserve(rows.size());
    for (const auto& r : rows) conv.emplace_back(r.begin(), r.end());
    return from_rows(std::move(conv));
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::pow(unsigned k) const {
    if (!is_square()) throw std::invalid_argument("pow of non-square matrix");
    IntMatrix result = identity(rows_);
    IntMatrix base = *this;
    while (k > 0) {
        if (k & 1u) result = result * base;
        base = base * base;
        k >>= 1u;
    }
    return result;
}

std::vector<Int> IntMatrix::row(int i) const {
    std::vector<Int> r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("apply: size mismatch");
    std::vector<Int> out(rows_, Int(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
    return out;
}

bool IntMatrix::is_zero() const {
    for (const Int& x : data_)
        if (x != 0) return false;
    return true;
}

bool IntMatrix::is_skew_symmetric() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i; j < cols_; ++j)
            if (at(i, j) != -at(j, i)) return false;
    return true;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix m(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = -data_[i];
    return m;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix sum: shape mismatch");
    IntMatrix m(a.rows_, a.cols_);
    for (size_t i = 0; i < m.data_.size(); ++i) m.data_[i] = a.data_[i] + b.data_[i];
    return m;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix difference: shape mismatch");
    IntMatrix m(a.rows_, a.cols_);
    for (size_t i = 0; i < m.data_.size(); ++i) m.data_[i] = a.data_[i] - b.data_[i];
    return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    IntMatrix m(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols_; ++j) m.at(i, j) += aik * b.at(k, j);
        }
    return m;
}

IntMatrix IntMatrix::operator*(const Int& c) const {
    IntMatrix m(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] * c;
    return m;
}

Int det(const IntMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("det of non-square matrix");
    const int n = m.rows();
    if (n == 0) return Int(1);
    IntMatrix w = m;
    Int prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (w.at(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (w.at(i, k) != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return Int(0);
            for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                w.at(i, j) = (w.at(k, k) * w.at(i, j) - w.at(i, k) * w.at(k, j)) / prev;
            }
            w.at(i, k) = 0;
        }
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : Int(-w.at(n - 1, n - 1));
}

Int trace(const IntMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("trace of non-square matrix");
    Int t(0);
    for (int i = 0; i < m.rows(); ++i) t += m.at(i, i);
    return t;
}

IntPoly char_poly(const IntMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("char_poly of non-square matrix");
    const int n = a.rows();
    // Faddeev-LeVerrier: M_1 = A, c_{n-1} = -tr M_1,
    // M_{k+1} = A (M_k + c_{n-k} I), c_{n-k-1} = -tr(M_{k+1}) / (k+1).
    std::vector<Int> coeffs(n + 1, Int(0));
    coeffs[n] = 1;
    IntMatrix mk = a;
    for (int k = 1; k <= n; ++k) {
        Int c = -trace(mk);
        if (c % k != 0) throw std::logic_error("char_poly: inexact division");
        c /= k;
        coeffs[n - k] = c;
        if (k < n) {
            IntMatrix shifted = mk;
            for (int i = 0; i < n; ++i) shifted.at(i, i) += c;
            mk = a * shifted;
        }
    }
    return IntPoly(std::move(coeffs));
}

IntMatrix poly_at_matrix(const IntPoly& p, const IntMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("poly_at_matrix of non-square matrix");
    const int n = a.rows();
    IntMatrix acc(n, n);
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * a;
        const Int& c = p.coeff(i);
        if (c != 0)
            for (int d = 0; d < n; ++d) acc.at(d, d) += c;
    }
    return acc;
}

IntMatrix companion(const IntPoly& p) {
    if (!p.is_monic()) throw Error(ErrorCode::NotMonic, "companion requires a monic polynomial");
    const int n = p.degree();
    if (n < 1) throw Error(ErrorCode::NotMonic, "companion requires degree >= 1");
    IntMatrix m(n, n);
    for (int i = 0; i + 1 < n; ++i) m.at(i, i + 1) = 1;
    for (int j = 0; j < n; ++j) m.at(n - 1, j) = -p.coeff(j);
    return m;
}

IntMatrix block_diag(const std::vector<IntMatrix>& blocks) {
    int n = 0;
    for (const auto& b : blocks) {
        if (!b.is_square()) throw std::invalid_argument("block_diag: non-square block");
        n += b.rows();
    }
    IntMatrix m(n, n);
    int off = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) m.at(off + i, off + j) = b.at(i, j);
        off += b.rows();
    }
    return m;
}

IntMatrix standard_symplectic_form(int m) {
    if (m < 1) throw std::invalid_argument("standard_symplectic_form: m must be >= 1");
    IntMatrix j(2 * m, 2 * m);
    for (int i = 0; i < m; ++i) {
        j.at(i, m + i) = 1;
        j.at(m + i, i) = -1;
    }
    return j;
}

NonstandardForm nonstandard_symplectic_form(const Int& a, const Int& b, const Int& c) {
    const Int z(0), one(1);
    std::vector<std::vector<Int>> rows{
        {z, z, one, one, one, z},
        {z, z, a, a + 1, a + 1, one},
        {-one, -a, z, a + b - c, a + 1, one},
        {-one, -a - 1, -a - b + c, z, a, one},
        {-one, -a - 1, -a - 1, -a, z, z},
        {z, -one, -one, -one, z, z},
    };
    NonstandardForm out{IntMatrix::from_rows(std::move(rows)), a + b - c == 2};
    return out;
}

bool is_symplectic(const IntMatrix& a, const IntMatrix& j) {
    if (!a.is_square() || !j.is_square() || a.rows() != j.rows())
        throw std::invalid_argument("is_symplectic: shape mismatch");
    if (!j.is_skew_symmetric()) throw Error(ErrorCode::BadForm, "form is not skew-symmetric");
    if (det(j) == 0) throw Error(ErrorCode::BadForm, "form is degenerate");
    return a.transposed() * j * a == j;
}

std::optional<IntMatrix> inverse_unimodular(const IntMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("inverse of non-square matrix");
    const int n = a.rows();
    Int d = det(a);
    if (d != 1 && d != -1) return std::nullopt;
    // Gauss-Jordan over the rationals; the result is integral because
    // the inverse of a unimodular matrix is its (sign-adjusted) adjugate.
    std::vector<std::vector<Rat>> w(n, std::vector<Rat>(2 * n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) w[i][j] = Rat(a.at(i, j));
        w[i][n + i] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (w[i][col] != 0) {
                pivot = i;
                break;
            }
        std::swap(w[col], w[pivot]);
        Rat inv = Rat(1) / w[col][col];
        for (int j = 0; j < 2 * n; ++j) w[col][j] *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == col || w[i][col] == 0) continue;
            Rat f = w[i][col];
            for (int j = 0; j < 2 * n; ++j) w[i][j] -= f * w[col][j];
        }
    }
    IntMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Rat& x = w[i][n + j];
            if (boost::multiprecision::denominator(x) != 1)
                throw std::logic_error("unimodular inverse must be integral");
            inv.at(i, j) = boost::multiprecision::numerator(x);
        }
    return inv;
}

}  // namespace toraut
