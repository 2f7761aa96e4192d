#ifndef LAXKIT_MATRIX_HPP
#define LAXKIT_MATRIX_HPP

#include <laxkit/scalar.hpp>

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace laxkit {

/// Dense exact matrix over Q[i]. Column vectors are n x 1 matrices.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one();
        return m;
    }
    static Mat col_vector(std::vector<Scalar> v) {
        Mat m(v.size(), 1);
        m.a_ = std::move(v);
        return m;
    }
    static Mat basis_vector(std::size_t n, std::size_t i) {
        Mat m(n, 1);
        m(i, 0) = Scalar::one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    Mat operator+(const Mat& o) const {
        check_same(o);
        Mat r = *this;
        for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
        return r;
    }
    Mat operator-(const Mat& o) const {
        check_same(o);
        Mat r = *this;
        for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] -= o.a_[k];
        return r;
    }
    Mat operator-() const {
        Mat r = *this;
        for (auto& x : r.a_) x = -x;
        return r;
    }
    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Mat r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Scalar& x = (*this)(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
            }
        return r;
    }
    Mat operator*(const Scalar& s) const {
        Mat r = *this;
        for (auto& x : r.a_) x *= s;
        return r;
    }
    friend Mat operator*(const Scalar& s, const Mat& m) { return m * s; }

    Mat transpose() const {
        Mat r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    Mat col(std::size_t j) const {
        Mat v(rows_, 1);
        for (std::size_t i = 0; i < rows_; ++i) v(i, 0) = (*this)(i, j);
        return v;
    }
    void set_col(std::size_t j, const Mat& v) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v(i, 0);
    }
    void set_block(std::size_t i0, std::size_t j0, const Mat& b) {
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) (*this)(i0 + i, j0 + j) = b(i, j);
    }
    Mat block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const {
        Mat b(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) b(i, j) = (*this)(i0 + i, j0 + j);
        return b;
    }

    /// Fraction-free (Bareiss) determinant; pivots exact, no tolerance.
    Scalar det() const {
        if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
        std::size_t n = rows_;
        if (n == 0) return Scalar::one();
        Mat m = *this;
        Scalar prev = Scalar::one();
        Scalar sign = Scalar::one();
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (m(k, k).is_zero()) {
                std::size_t p = k + 1;
                while (p < n && m(p, k).is_zero()) ++p;
                if (p == n) return Scalar::zero();
                for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n; ++i) {
                for (std::size_t j = k + 1; j < n; ++j)
                    m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
                m(i, k) = Scalar::zero();
            }
            prev = m(k, k);
        }
        return sign * m(n - 1, n - 1);
    }

    /// Reduced row echelon form; returns pivot column indices.
    std::vector<std::size_t> rref_in_place() {
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t c = 0; c < cols_ && row < rows_; ++c) {
            std::size_t p = row;
            while (p < rows_ && (*this)(p, c).is_zero()) ++p;
            if (p == rows_) continue;
            if (p != row)
                for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(row, j), (*this)(p, j));
            Scalar inv = Scalar::one() / (*this)(row, c);
            for (std::size_t j = 0; j < cols_; ++j) (*this)(row, j) *= inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == row || (*this)(i, c).is_zero()) continue;
                Scalar f = (*this)(i, c);
                for (std::size_t j = 0; j < cols_; ++j)
                    (*this)(i, j) -= f * (*this)(row, j);
            }
            pivots.push_back(c);
            ++row;
        }
        return pivots;
    }

    std::size_t rank() const {
        Mat m = *this;
        return m.rref_in_place().size();
    }

    /// Basis of the right null space, as columns of the returned matrix.
    Mat kernel() const {
        Mat m = *this;
        auto pivots = m.rref_in_place();
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : pivots) is_pivot[c] = true;
        std::size_t k = cols_ - pivots.size();
        Mat K(cols_, k);
        std::size_t out = 0;
        for (std::size_t c = 0; c < cols_; ++c) {
            if (is_pivot[c]) continue;
            K(c, out) = Scalar::one();
            for (std::size_t r = 0; r < pivots.size(); ++r)
                K(pivots[r], out) = -m(r, c);
            ++out;
        }
        return K;
    }

    std::optional<Mat> inverse() const {
        if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
        std::size_t n = rows_;
        Mat aug(n, 2 * n);
        aug.set_block(0, 0, *this);
        aug.set_block(0, n, identity(n));
        auto pivots = aug.rref_in_place();
        if (pivots.size() != n || (n > 0 && pivots.back() != n - 1)) return std::nullopt;
        return aug.block(0, n, n, n);
    }

    /// Any exact solution of A x = b (free variables set to zero), or nullopt
    /// when the system is inconsistent. b may have several columns.
    std::optional<Mat> solve(const Mat& b) const {
        if (b.rows() != rows_) throw std::invalid_argument("solve shape mismatch");
        Mat aug(rows_, cols_ + b.cols());
        aug.set_block(0, 0, *this);
        aug.set_block(0, cols_, b);
        auto pivots = aug.rref_in_place();
        for (auto c : pivots)
            if (c >= cols_) return std::nullopt;
        Mat x(cols_, b.cols());
        for (std::size_t r = 0; r < pivots.size(); ++r)
            for (std::size_t j = 0; j < b.cols(); ++j)
                x(pivots[r], j) = aug(r, cols_ + j);
        return x;
    }

private:
    void check_same(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }

    std::size_t rows_, cols_;
    std::vector<Scalar> a_;
};

/// Dense exact 3-tensor, used for residuals of triple identities.
class Tensor3 {
public:
    Tensor3() : n_(0) {}
    explicit Tensor3(std::size_t n) : n_(n), a_(n * n * n) {}

    std::size_t dim() const { return n_; }
    Scalar& at(std::size_t i, std::size_t j, std::size_t k) { return a_[(i * n_ + j) * n_ + k]; }
    const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const {
        return a_[(i * n_ + j) * n_ + k];
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    Tensor3 operator+(const Tensor3& o) const {
        Tensor3 r = *this;
        for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
        return r;
    }
    Tensor3 operator-(const Tensor3& o) const {
        Tensor3 r = *this;
        for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] -= o.a_[k];
        return r;
    }
    Tensor3 operator*(const Scalar& s) const {
        Tensor3 r = *this;
        for (auto& x : r.a_) x *= s;
        return r;
    }
    bool operator==(const Tensor3& o) const { return n_ == o.n_ && a_ == o.a_; }

    /// First nonzero entry in lexicographic (i,j,k) order, if any.
    std::optional<std::array<std::size_t, 3>> first_nonzero() const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                for (std::size_t k = 0; k < n_; ++k)
                    if (!at(i, j, k).is_zero()) return std::array<std::size_t, 3>{i, j, k};
        return std::nullopt;
    }

private:
    std::size_t n_;
    std::vector<Scalar> a_;
};

} // namespace laxkit

#endif
