#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "uniserial/errors.hpp"
#include "uniserial/rational.hpp"

namespace uniserial {

// Dense matrix over Q, row-major, 0-based indices. Value type: every
// operation returns a fresh matrix, nothing is mutated in place except
// through the element accessors.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}

    Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 0 || cols < 0) throw InputError("negative matrix dimension");
        data_.assign(static_cast<std::size_t>(rows) * cols, Rational(0));
    }

    Matrix(std::initializer_list<std::initializer_list<Rational>> init) {
        rows_ = static_cast<int>(init.size());
        cols_ = rows_ ? static_cast<int>(init.begin()->size()) : 0;
        data_.reserve(static_cast<std::size_t>(rows_) * cols_);
        for (const auto& row : init) {
            if (static_cast<int>(row.size()) != cols_)
                throw InputError("ragged matrix initializer");
            for (const auto& x : row) data_.push_back(x);
        }
    }

    static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static Matrix diagonal(const std::vector<Rational>& d) {
        Matrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
        for (int i = 0; i < m.rows_; ++i) m(i, i) = d[i];
        return m;
    }

    // Upper triangular Jordan block J^p(alpha): alpha on the diagonal,
    // ones on the first superdiagonal.
    static Matrix jordan_upper(int p, const Rational& alpha) {
        if (p < 1) throw InputError("Jordan block size must be positive");
        Matrix m(p, p);
        for (int i = 0; i < p; ++i) {
            m(i, i) = alpha;
            if (i + 1 < p) m(i, i + 1) = 1;
        }
        return m;
    }

    // Lower triangular Jordan block J_p(alpha).
    static Matrix jordan_lower(int p, const Rational& alpha) {
        return jordan_upper(p, alpha).transpose();
    }

    // Single-entry matrix with a 1 at (i, j), 0-based.
    static Matrix unit(int rows, int cols, int i, int j) {
        Matrix m(rows, cols);
        m(i, j) = 1;
        return m;
    }

    static Matrix block_diagonal(const std::vector<Matrix>& blocks) {
        int r = 0, c = 0;
        for (const auto& b : blocks) { r += b.rows_; c += b.cols_; }
        Matrix m(r, c);
        int i0 = 0, j0 = 0;
        for (const auto& b : blocks) {
            m.set_block(i0, j0, b);
            i0 += b.rows_;
            j0 += b.cols_;
        }
        return m;
    }

    static Matrix column(const std::vector<Rational>& v) {
        Matrix m(static_cast<int>(v.size()), 1);
        for (int i = 0; i < m.rows_; ++i) m(i, 0) = v[i];
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& operator()(int i, int j) {
        check_index(i, j);
        return data_[static_cast<std::size_t>(i) * cols_ + j];
    }
    const Rational& operator()(int i, int j) const {
        check_index(i, j);
        return data_[static_cast<std::size_t>(i) * cols_ + j];
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (x != 0) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix m(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    Matrix block(int i0, int j0, int h, int w) const {
        if (i0 < 0 || j0 < 0 || h < 0 || w < 0 || i0 + h > rows_ || j0 + w > cols_)
            throw InputError("block out of range");
        Matrix m(h, w);
        for (int i = 0; i < h; ++i)
            for (int j = 0; j < w; ++j) m(i, j) = (*this)(i0 + i, j0 + j);
        return m;
    }

    void set_block(int i0, int j0, const Matrix& b) {
        if (i0 < 0 || j0 < 0 || i0 + b.rows_ > rows_ || j0 + b.cols_ > cols_)
            throw InputError("block out of range");
        for (int i = 0; i < b.rows_; ++i)
            for (int j = 0; j < b.cols_; ++j) (*this)(i0 + i, j0 + j) = b(i, j);
    }

    Matrix operator+(const Matrix& o) const {
        check_same_shape(o, "+");
        Matrix m(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k] + o.data_[k];
        return m;
    }

    Matrix operator-(const Matrix& o) const {
        check_same_shape(o, "-");
        Matrix m(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k] - o.data_[k];
        return m;
    }

    Matrix operator-() const {
        Matrix m(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = -data_[k];
        return m;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw InputError("matrix product shape mismatch");
        Matrix m(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Rational& a = (*this)(i, k);
                if (a == 0) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    if (o(k, j) != 0) m(i, j) += a * o(k, j);
                }
            }
        return m;
    }

    Matrix operator*(const Rational& c) const {
        Matrix m(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k] * c;
        return m;
    }

    friend Matrix operator*(const Rational& c, const Matrix& m) { return m * c; }

    Matrix pow(int k) const {
        if (!is_square()) throw InputError("power of non-square matrix");
        if (k < 0) throw InputError("negative matrix power");
        Matrix r = identity(rows_);
        for (int i = 0; i < k; ++i) r = r * (*this);
        return r;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    std::string str() const {
        std::string s;
        for (int i = 0; i < rows_; ++i) {
            s += i ? "\n[" : "[";
            for (int j = 0; j < cols_; ++j) {
                if (j) s += ", ";
                s += to_string((*this)(i, j));
            }
            s += "]";
        }
        return s;
    }

private:
    void check_index(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw InputError("matrix index out of range");
    }
    void check_same_shape(const Matrix& o, const char* op) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw InputError(std::string("matrix shape mismatch in ") + op);
    }

    int rows_;
    int cols_;
    std::vector<Rational> data_;
};

inline Matrix commutator(const Matrix& a, const Matrix& b) {
    return a * b - b * a;
}

// Row-major vectorization: M_{p x q} -> column of length p*q.
inline Matrix vectorize(const Matrix& m) {
    Matrix v(m.rows() * m.cols(), 1);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) v(i * m.cols() + j, 0) = m(i, j);
    return v;
}

inline Matrix unvectorize(const Matrix& v, int rows, int cols) {
    if (v.cols() != 1 || v.rows() != rows * cols)
        throw InputError("unvectorize shape mismatch");
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = v(i * cols + j, 0);
    return m;
}

inline Matrix kronecker(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l) {
                    if (b(k, l) != 0)
                        m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
                }
        }
    return m;
}

} // namespace uniserial
