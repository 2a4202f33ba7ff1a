#pragma once

// Dense row-major matrices over an exact scalar. Problem sizes are desk-scale,
// so no sparsity or blocking anywhere.

#include <cassert>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "gaussian.hpp"
#include "rational.hpp"

namespace toriq {

template <class T>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), e_(r * c, T(0)) {}
    Matrix(std::size_t r, std::size_t c, std::vector<T> entries)
        : rows_(r), cols_(c), e_(std::move(entries)) {
        assert(e_.size() == rows_ * cols_);
    }
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        e_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            assert(row.size() == cols_);
            for (const auto& x : row) e_.push_back(x);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return e_[i * cols_ + j];
    }
    const T& operator()(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return e_[i * cols_ + j];
    }

    const std::vector<T>& entries() const { return e_; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    std::vector<T> row(std::size_t i) const {
        std::vector<T> v(cols_);
        for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
        return v;
    }
    std::vector<T> col(std::size_t j) const {
        std::vector<T> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    void set_row(std::size_t i, const std::vector<T>& v) {
        assert(v.size() == cols_);
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
    }
    void set_col(std::size_t j, const std::vector<T>& v) {
        assert(v.size() == rows_);
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        Matrix r = a;
        for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] += b.e_[k];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        Matrix r = a;
        for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] -= b.e_[k];
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        assert(a.cols_ == b.rows_);
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }
    friend Matrix operator*(const T& s, const Matrix& m) {
        Matrix r = m;
        for (auto& x : r.e_) x = s * x;
        return r;
    }
    Matrix operator-() const { return T(-1) * *this; }

    friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& x) {
        assert(a.cols_ == x.size());
        std::vector<T> y(a.rows_, T(0));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) y[i] += a(i, j) * x[j];
        return y;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!(x == T(0))) return false;
        return true;
    }

    // Horizontal concatenation [a | b].
    static Matrix hcat(const Matrix& a, const Matrix& b) {
        if (a.cols_ == 0 && a.rows_ == 0) return b;
        if (b.cols_ == 0 && b.rows_ == 0) return a;
        assert(a.rows_ == b.rows_);
        Matrix r(a.rows_, a.cols_ + b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
            for (std::size_t j = 0; j < b.cols_; ++j) r(i, a.cols_ + j) = b(i, j);
        }
        return r;
    }
    static Matrix vcat(const Matrix& a, const Matrix& b) {
        if (a.rows_ == 0 && a.cols_ == 0) return b;
        if (b.rows_ == 0 && b.cols_ == 0) return a;
        assert(a.cols_ == b.cols_);
        Matrix r(a.rows_ + b.rows_, a.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) r(a.rows_ + i, j) = b(i, j);
        return r;
    }

    Matrix select_cols(const std::vector<std::size_t>& idx) const {
        Matrix r(rows_, idx.size());
        for (std::size_t j = 0; j < idx.size(); ++j)
            for (std::size_t i = 0; i < rows_; ++i) r(i, j) = (*this)(i, idx[j]);
        return r;
    }
    Matrix select_rows(const std::vector<std::size_t>& idx) const {
        Matrix r(idx.size(), cols_);
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(idx[i], j);
        return r;
    }

    template <class U>
    Matrix<U> map(const std::function<U(const T&)>& f) const {
        std::vector<U> out;
        out.reserve(e_.size());
        for (const auto& x : e_) out.push_back(f(x));
        return Matrix<U>(rows_, cols_, std::move(out));
    }

    std::string str() const {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i) os << "; ";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) os << " ";
                os << (*this)(i, j);
            }
        }
        os << "]";
        return os.str();
    }

  private:
    std::size_t rows_, cols_;
    std::vector<T> e_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;
using GMatrix = Matrix<Gaussian>;

inline RatMatrix to_rational(const IntMatrix& m) {
    return m.map<Rational>([](const Integer& x) { return Rational(x); });
}

inline GMatrix to_gaussian(const RatMatrix& m) {
    return m.map<Gaussian>([](const Rational& x) { return Gaussian(x); });
}

// Only valid when every entry is real.
inline RatMatrix to_real(const GMatrix& m) {
    return m.map<Rational>([](const Gaussian& x) {
        assert(x.is_real());
        return x.re;
    });
}

inline GMatrix conj(const GMatrix& m) {
    return m.map<Gaussian>([](const Gaussian& x) { return x.conj(); });
}

}  // namespace toriq
