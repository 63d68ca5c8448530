#pragma once

#include <vector>

#include "vps/scalar.hpp"

namespace vps {

template <typename K>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const K& fill = K())
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n, const K& one) {
        Matrix m(n, n, one - one);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    K& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const K& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<K> row(std::size_t i) const {
        return std::vector<K>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }

    void set_row(std::size_t i, const std::vector<K>& r) {
        require(r.size() == cols_, ErrorKind::DimensionMismatch, "row length mismatch");
        std::copy(r.begin(), r.end(), data_.begin() + i * cols_);
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        require(a.cols_ == b.rows_, ErrorKind::DimensionMismatch, "matrix product shape");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const K& aik = a.at(i, k);
                if (is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c.at(i, j) += aik * b.at(k, j);
            }
        return c;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        require(a.rows_ == b.rows_ && a.cols_ == b.cols_, ErrorKind::DimensionMismatch, "sum shape");
        Matrix c = a;
        for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
        return c;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        require(a.rows_ == b.rows_ && a.cols_ == b.cols_, ErrorKind::DimensionMismatch, "diff shape");
        Matrix c = a;
        for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
        return c;
    }

    friend Matrix operator*(const Matrix& a, const K& s) {
        Matrix c = a;
        for (auto& x : c.data_) x = x * s;
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::vector<K> apply(const std::vector<K>& v) const {
        require(v.size() == cols_, ErrorKind::DimensionMismatch, "matrix-vector shape");
        std::vector<K> out(rows_, K());
        for (std::size_t i = 0; i < rows_; ++i) {
            K acc = K();
            for (std::size_t j = 0; j < cols_; ++j)
                if (!is_zero(at(i, j))) acc += at(i, j) * v[j];
            out[i] = acc;
        }
        return out;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<K> data_;
};

using MatrixQ = Matrix<Rat>;
using MatrixP = Matrix<Fp>;

template <typename K>
struct RowReduceResult {
    std::size_t rank = 0;
    Matrix<K> rref;            // reduced row-echelon form, zero rows dropped? kept (same shape)
    Matrix<K> kernel;          // rows form a basis of { v : M v = 0 }
    std::vector<std::size_t> pivots;
};

namespace detail {

// Clear denominators row by row (does not change row space or kernel).
inline void integerize_rows(MatrixQ& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, Int(m.at(i, j).get_den()));
        if (l != 1) {
            Rat s(l);
            for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) *= s;
        }
    }
}

// Fraction-free (Bareiss) forward elimination for rational matrices with
// integral entries; returns pivot columns.  Entries stay integral, which
// keeps intermediate growth polynomial instead of exponential.
inline std::vector<std::size_t> bareiss_forward(MatrixQ& m) {
    std::vector<std::size_t> pivots;
    Rat prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && is_zero(m.at(p, c))) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(r, p);
        const Rat pivot = m.at(r, c);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            const Rat head = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m.at(i, j) = (pivot * m.at(i, j) - head * m.at(r, j)) / prev;
            m.at(i, c) = 0;
        }
        prev = pivot;
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace detail

// Exact reduced row-echelon form with kernel basis.
template <typename K>
RowReduceResult<K> row_reduce(Matrix<K> m) {
    RowReduceResult<K> res;
    if constexpr (std::is_same_v<K, Rat>) {
        detail::integerize_rows(m);
        res.pivots = detail::bareiss_forward(m);
    } else {
        // plain Gauss elimination; divisions are cheap in F_p
        std::size_t r = 0;
        for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
            std::size_t p = r;
            while (p < m.rows() && is_zero(m.at(p, c))) ++p;
            if (p == m.rows()) continue;
            m.swap_rows(r, p);
            for (std::size_t i = r + 1; i < m.rows(); ++i) {
                if (is_zero(m.at(i, c))) continue;
                K f = m.at(i, c) * inverse(m.at(r, c));
                for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
            }
            res.pivots.push_back(c);
            ++r;
        }
    }
    res.rank = res.pivots.size();
    // normalize pivots to 1 and eliminate above
    for (std::size_t k = res.rank; k-- > 0;) {
        std::size_t c = res.pivots[k];
        K inv = inverse(m.at(k, c));
        for (std::size_t j = c; j < m.cols(); ++j) m.at(k, j) = m.at(k, j) * inv;
        for (std::size_t i = 0; i < k; ++i) {
            K f = m.at(i, c);
            if (is_zero(f)) continue;
            for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(k, j);
        }
    }
    res.rref = m;

    // kernel from the rref: one basis row per free column
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : res.pivots) is_pivot[c] = true;
    std::size_t nfree = m.cols() - res.rank;
    Matrix<K> ker(nfree, m.cols());
    std::size_t kr = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        if constexpr (std::is_same_v<K, Rat>) {
            ker.at(kr, c) = Rat(1);
        } else {
            std::uint32_t pr = 0;
            for (std::size_t i = 0; i < m.rows() && pr == 0; ++i)
                for (std::size_t q = 0; q < m.cols() && pr == 0; ++q) pr = m.at(i, q).prime;
            ker.at(kr, c) = Fp(1, pr);
        }
        for (std::size_t k = 0; k < res.rank; ++k) ker.at(kr, res.pivots[k]) = -m.at(k, c);
        ++kr;
    }
    res.kernel = ker;
    return res;
}

// Exact determinant (fraction-free for rationals).
inline Rat det(MatrixQ m) {
    require(m.rows() == m.cols(), ErrorKind::DimensionMismatch, "det of non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return Rat(1);
    Rat scale(1);
    for (std::size_t i = 0; i < n; ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < n; ++j) l = lcm(l, Int(m.at(i, j).get_den()));
        if (l != 1) {
            Rat s(l);
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) *= s;
            scale *= s;
        }
    }
    Rat prev(1);
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && is_zero(m.at(p, c))) ++p;
        if (p == n) return Rat(0);
        if (p != c) {
            m.swap_rows(c, p);
            sign = -sign;
        }
        const Rat pivot = m.at(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            const Rat head = m.at(i, c);
            for (std::size_t j = c; j < n; ++j)
                m.at(i, j) = (pivot * m.at(i, j) - head * m.at(c, j)) / prev;
        }
        prev = pivot;
    }
    Rat d = m.at(n - 1, n - 1);
    if (sign < 0) d = -d;
    return d / scale;
}

inline MatrixQ inverse_matrix(const MatrixQ& m) {
    require(m.rows() == m.cols(), ErrorKind::DimensionMismatch, "inverse of non-square matrix");
    std::size_t n = m.rows();
    MatrixQ aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    auto rr = row_reduce(aug);
    require(rr.rank == n && rr.pivots.back() == n - 1, ErrorKind::DegenerateForm,
            "matrix is singular");
    MatrixQ inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = rr.rref.at(i, n + j);
    return inv;
}

}  // namespace vps
