#pragma once

// Exact linear algebra over a field (Rational or Gaussian): reduced echelon
// forms, rank/kernel, solving, determinants, and span arithmetic. Everything
// is deterministic: pivots are always the first nonzero candidate.

#include <cstddef>
#include <optional>
#include <vector>

#include "matrix.hpp"

namespace toriq {

template <class T>
struct Rref {
    Matrix<T> r;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

template <class T>
Rref<T> rref(Matrix<T> m) {
    Rref<T> out;
    std::size_t pr = 0;  // next pivot row
    for (std::size_t c = 0; c < m.cols() && pr < m.rows(); ++c) {
        std::size_t sel = pr;
        while (sel < m.rows() && m(sel, c) == T(0)) ++sel;
        if (sel == m.rows()) continue;
        if (sel != pr)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pr, j), m(sel, j));
        T inv = T(1) / m(pr, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(pr, j) = inv * m(pr, j);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == pr || m(i, c) == T(0)) continue;
            T f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(pr, j);
        }
        out.pivot_cols.push_back(c);
        ++pr;
    }
    out.rank = pr;
    out.r = std::move(m);
    return out;
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
    return rref(m).rank;
}

// Columns form the canonical kernel basis: one column per free variable,
// with a 1 in the free position (the standard construction from the RREF).
template <class T>
Matrix<T> kernel_basis(const Matrix<T>& m) {
    Rref<T> f = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : f.pivot_cols) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix<T> k(m.cols(), free_cols.size());
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        std::size_t fc = free_cols[j];
        k(fc, j) = T(1);
        for (std::size_t i = 0; i < f.rank; ++i) k(f.pivot_cols[i], j) = -f.r(i, fc);
    }
    return k;
}

// One solution of a*x = b, or nullopt. Free variables are set to zero.
template <class T>
std::optional<std::vector<T>> solve(const Matrix<T>& a, const std::vector<T>& b) {
    assert(a.rows() == b.size());
    Matrix<T> bm(b.size(), 1);
    bm.set_col(0, b);
    Rref<T> f = rref(Matrix<T>::hcat(a, bm));
    std::vector<T> x(a.cols(), T(0));
    for (std::size_t i = 0; i < f.rank; ++i) {
        std::size_t pc = f.pivot_cols[i];
        if (pc == a.cols()) return std::nullopt;  // pivot in the augmented column
        x[pc] = f.r(i, a.cols());
    }
    return x;
}

// Solve a*X = B columnwise; nullopt if any column is unsolvable.
template <class T>
std::optional<Matrix<T>> solve_matrix(const Matrix<T>& a, const Matrix<T>& b) {
    assert(a.rows() == b.rows());
    Matrix<T> x(a.cols(), b.cols());
    Rref<T> f = rref(Matrix<T>::hcat(a, b));
    for (std::size_t i = 0; i < f.rank; ++i)
        if (f.pivot_cols[i] >= a.cols()) return std::nullopt;
    for (std::size_t i = 0; i < f.rank; ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x(f.pivot_cols[i], j) = f.r(i, a.cols() + j);
    return x;
}

template <class T>
T det(Matrix<T> m) {
    assert(m.rows() == m.cols());
    T d(1);
    for (std::size_t c = 0; c < m.cols(); ++c) {
        std::size_t sel = c;
        while (sel < m.rows() && m(sel, c) == T(0)) ++sel;
        if (sel == m.rows()) return T(0);
        if (sel != c) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(c, j), m(sel, j));
            d = -d;
        }
        d = d * m(c, c);
        T inv = T(1) / m(c, c);
        for (std::size_t i = c + 1; i < m.rows(); ++i) {
            if (m(i, c) == T(0)) continue;
            T f = inv * m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(c, j);
        }
    }
    return d;
}

template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& m) {
    assert(m.rows() == m.cols());
    Rref<T> f = rref(Matrix<T>::hcat(m, Matrix<T>::identity(m.rows())));
    if (f.rank < m.rows()) return std::nullopt;
    // a pivot in the identity block means m itself is rank deficient
    for (std::size_t c : f.pivot_cols)
        if (c >= m.cols()) return std::nullopt;
    Matrix<T> inv(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) inv(i, j) = f.r(i, m.cols() + j);
    return inv;
}

// Canonical basis of the column span: reduced column echelon form with zero
// columns dropped (exactly rank columns). Two matrices have equal column
// spans iff their col_basis results are identical.
template <class T>
Matrix<T> col_basis(const Matrix<T>& m) {
    Rref<T> f = rref(m.transpose());
    Matrix<T> rt = f.r.transpose();
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < f.rank; ++j) keep.push_back(j);
    return rt.select_cols(keep);
}

template <class T>
bool in_span(const Matrix<T>& basis, const std::vector<T>& v) {
    return solve(basis, v).has_value();
}

// Every column of b lies in the column span of a.
template <class T>
bool span_contains(const Matrix<T>& a, const Matrix<T>& b) {
    if (b.cols() == 0) return true;
    return solve_matrix(a, b).has_value();
}

template <class T>
bool span_equal(const Matrix<T>& a, const Matrix<T>& b) {
    return span_contains(a, b) && span_contains(b, a);
}

// Canonical basis of (col span a) ∩ (col span b): kernel vectors (x; y) of
// [a | -b] give the intersection as a*x.
template <class T>
Matrix<T> span_intersection(const Matrix<T>& a, const Matrix<T>& b) {
    assert(a.rows() == b.rows());
    if (a.cols() == 0 || b.cols() == 0) return Matrix<T>(a.rows(), 0);
    Matrix<T> k = kernel_basis(Matrix<T>::hcat(a, -b));
    Matrix<T> xs(a.cols(), k.cols());
    for (std::size_t j = 0; j < k.cols(); ++j)
        for (std::size_t i = 0; i < a.cols(); ++i) xs(i, j) = k(i, j);
    return col_basis(a * xs);
}

template <class T>
Matrix<T> span_sum(const Matrix<T>& a, const Matrix<T>& b) {
    return col_basis(Matrix<T>::hcat(a, b));
}

}  // namespace toriq
