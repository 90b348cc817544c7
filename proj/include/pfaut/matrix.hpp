#pragma once

// Dense row-major matrices over an exact scalar type (Rational, Poly, or
// Int). Degenerate shapes (0 x n, n x 0) are legal and behave like the
// corresponding empty products: they show up as dimension-0 automata.

#include <cstddef>
#include <vector>

#include "pfaut/polynomial.hpp"
#include "pfaut/rational.hpp"

namespace pfaut {

template <typename T>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        return m;
    }

    static Matrix from_columns(const std::vector<std::vector<T>>& cols) {
        Matrix m(cols.empty() ? 0 : cols.front().size(), cols.size());
        for (size_t j = 0; j < cols.size(); ++j)
            for (size_t i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    T& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(size_t i) const {
        return {data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_};
    }
    std::vector<T> column(size_t j) const {
        std::vector<T> c(rows_);
        for (size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    void swap_rows(size_t a, size_t b) {
        if (a == b) return;
        for (size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_columns(size_t a, size_t b) {
        if (a == b) return;
        for (size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        Matrix out(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                for (size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        Matrix out = a;
        for (size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

  private:
    size_t rows_, cols_;
    std::vector<T> data_;
};

using MatrixQ = Matrix<Rational>;
using MatrixPoly = Matrix<Poly>;
using MatrixZ = Matrix<Int>;

template <typename T>
std::vector<T> row_times_matrix(const std::vector<T>& v, const Matrix<T>& m) {
    std::vector<T> out(m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
    return out;
}

template <typename T>
std::vector<T> matrix_times_column(const Matrix<T>& m, const std::vector<T>& v) {
    std::vector<T> out(m.rows());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
    return out;
}

template <typename T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
    T out{};
    for (size_t i = 0; i < a.size(); ++i) out += a[i] * b[i];
    return out;
}

}  // namespace pfaut
