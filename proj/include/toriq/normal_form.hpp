#pragma once

// Integer lattice algorithms: Hermite and Smith normal forms with transform
// matrices, saturated kernel lattices, integer linear solving, and the dual
// pairing used for integrality tests.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "matrix.hpp"
#include "rational.hpp"

namespace toriq {

namespace detail {

inline void row_swap(IntMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

inline void row_sub(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) -= q * m(src, j);
}

inline void row_negate(IntMatrix& m, std::size_t r) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

inline void col_swap(IntMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

inline void col_sub(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) -= q * m(i, src);
}

}  // namespace detail

struct Hnf {
    IntMatrix h;
    IntMatrix u;  // unimodular, u * input = h
};

// Row-style Hermite form: echelon, pivots positive, entries above a pivot
// reduced into [0, pivot). This is a canonical form: two integer matrices
// have the same row lattice iff their nonzero HNF rows agree.
inline Hnf hermite_normal_form(IntMatrix m) {
    using namespace detail;
    const std::size_t R = m.rows(), C = m.cols();
    IntMatrix u = IntMatrix::identity(R);
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        for (;;) {
            std::size_t sel = R;
            for (std::size_t i = r; i < R; ++i) {
                if (m(i, c) == 0) continue;
                if (sel == R || abs(m(i, c)) < abs(m(sel, c))) sel = i;
            }
            if (sel == R) break;
            if (sel != r) {
                row_swap(m, r, sel);
                row_swap(u, r, sel);
            }
            bool again = false;
            for (std::size_t i = r + 1; i < R; ++i) {
                if (m(i, c) == 0) continue;
                Integer q = int_fdiv(m(i, c), m(r, c));
                row_sub(m, i, r, q);
                row_sub(u, i, r, q);
                if (m(i, c) != 0) again = true;
            }
            if (!again) break;
        }
        if (m(r, c) == 0) continue;
        if (m(r, c) < 0) {
            row_negate(m, r);
            row_negate(u, r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            Integer q = int_fdiv(m(i, c), m(r, c));
            row_sub(m, i, r, q);
            row_sub(u, i, r, q);
        }
        ++r;
    }
    return {std::move(m), std::move(u)};
}

struct Snf {
    std::vector<Integer> d;  // invariant factors, d[i] | d[i+1], zeros last
    IntMatrix u;             // u * input * v = diag(d)
    IntMatrix v;
};

inline Snf smith_normal_form(IntMatrix m) {
    using namespace detail;
    const std::size_t R = m.rows(), C = m.cols();
    const std::size_t K = std::min(R, C);
    IntMatrix u = IntMatrix::identity(R);
    IntMatrix v = IntMatrix::identity(C);
    for (std::size_t t = 0; t < K; ++t) {
        for (;;) {
            std::size_t pi = R, pj = C;
            for (std::size_t i = t; i < R; ++i)
                for (std::size_t j = t; j < C; ++j) {
                    if (m(i, j) == 0) continue;
                    if (pi == R || abs(m(i, j)) < abs(m(pi, pj))) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi == R) goto done;  // remaining block is zero
            if (pi != t) {
                row_swap(m, t, pi);
                row_swap(u, t, pi);
            }
            if (pj != t) {
                col_swap(m, t, pj);
                col_swap(v, t, pj);
            }
            bool again = false;
            for (std::size_t i = t + 1; i < R; ++i) {
                if (m(i, t) == 0) continue;
                Integer q = int_fdiv(m(i, t), m(t, t));
                row_sub(m, i, t, q);
                row_sub(u, i, t, q);
                if (m(i, t) != 0) again = true;
            }
            for (std::size_t j = t + 1; j < C; ++j) {
                if (m(t, j) == 0) continue;
                Integer q = int_fdiv(m(t, j), m(t, t));
                col_sub(m, j, t, q);
                col_sub(v, j, t, q);
                if (m(t, j) != 0) again = true;
            }
            if (again) continue;
            // pivot divides everything below-right, or we fold the offending
            // row in and keep reducing
            std::size_t bi = R;
            for (std::size_t i = t + 1; i < R && bi == R; ++i)
                for (std::size_t j = t + 1; j < C; ++j)
                    if (m(i, j) % m(t, t) != 0) {
                        bi = i;
                        break;
                    }
            if (bi == R) break;
            row_sub(m, t, bi, Integer(-1));
            row_sub(u, t, bi, Integer(-1));
        }
        if (m(t, t) < 0) {
            row_negate(m, t);
            row_negate(u, t);
        }
    }
done:
    std::vector<Integer> d(K);
    for (std::size_t t = 0; t < K; ++t) d[t] = m(t, t);
    return {std::move(d), std::move(u), std::move(v)};
}

inline std::size_t lattice_rank(const Snf& s) {
    std::size_t r = 0;
    while (r < s.d.size() && s.d[r] != 0) ++r;
    return r;
}

// Canonical row basis of the row lattice: nonzero HNF rows.
inline IntMatrix row_lattice_hnf(const IntMatrix& m) {
    IntMatrix h = hermite_normal_form(m).h;
    std::size_t nz = 0;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < h.cols(); ++j)
            if (h(i, j) != 0) zero = false;
        if (!zero) nz = i + 1;  // echelon form: nonzero rows are on top
    }
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < nz; ++i) keep.push_back(i);
    return h.select_rows(keep);
}

// Basis (as columns) of {x in Z^cols : m x = 0}, canonicalized through HNF.
// The lattice is automatically saturated: it is spanned by columns of the
// unimodular v beyond the rank, hence a direct summand of Z^cols.
inline IntMatrix kernel_lattice(const IntMatrix& m) {
    Snf s = smith_normal_form(m);
    std::size_t r = lattice_rank(s);
    std::vector<std::size_t> tail;
    for (std::size_t j = r; j < m.cols(); ++j) tail.push_back(j);
    IntMatrix k = s.v.select_cols(tail);
    return row_lattice_hnf(k.transpose()).transpose();
}

// Saturation of the row lattice of m inside Z^cols: all integer vectors in
// the rational row span. Double annihilator, both steps via kernel_lattice.
inline IntMatrix saturate_rows(const IntMatrix& m) {
    IntMatrix k = kernel_lattice(m);
    return row_lattice_hnf(kernel_lattice(k.transpose()).transpose());
}

// One integer solution of m x = b, or nullopt (none exists).
inline std::optional<std::vector<Integer>> integer_solve(const IntMatrix& m,
                                                         const std::vector<Integer>& b) {
    assert(b.size() == m.rows());
    Snf s = smith_normal_form(m);
    std::vector<Integer> c(m.rows(), Integer(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.rows(); ++j) c[i] += s.u(i, j) * b[j];
    std::vector<Integer> y(m.cols(), Integer(0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i < s.d.size() && s.d[i] != 0) {
            if (c[i] % s.d[i] != 0) return std::nullopt;
            y[i] = c[i] / s.d[i];
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    std::vector<Integer> x(m.cols(), Integer(0));
    for (std::size_t i = 0; i < m.cols(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) x[i] += s.v(i, j) * y[j];
    return x;
}

// Pairings <functional, b_j> against each lattice basis row; the caller
// decides what integrality means for its context.
inline std::vector<Rational> dual_lattice_pairing(const IntMatrix& lattice_basis,
                                                  const std::vector<Rational>& functional) {
    assert(functional.size() == lattice_basis.cols());
    std::vector<Rational> out;
    out.reserve(lattice_basis.rows());
    for (std::size_t i = 0; i < lattice_basis.rows(); ++i) {
        Rational s(0);
        for (std::size_t j = 0; j < lattice_basis.cols(); ++j)
            s += Rational(lattice_basis(i, j)) * functional[j];
        out.push_back(s);
    }
    return out;
}

inline Integer int_det(const IntMatrix& m) {
    Rational d = det(to_rational(m));
    assert(d.is_integer());
    return d.num();
}

inline bool is_unimodular(const IntMatrix& m) {
    if (m.rows() != m.cols()) return false;
    Integer d = int_det(m);
    return d == 1 || d == -1;
}

}  // namespace toriq
