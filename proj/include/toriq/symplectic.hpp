#pragma once

// Linear symplectic algebra over exact rationals: symplectic vector spaces,
// real and complex subspaces with canonical bases, Darboux bases, symplectic
// complements, the five-way classification, and linear reduction V0 =
// C/(C cap C^omega).

#include <cstddef>
#include <string>
#include <vector>

#include "error.hpp"
#include "gaussian.hpp"
#include "linalg.hpp"
#include "matrix.hpp"
#include "rational.hpp"

namespace toriq {

class SymplecticSpace {
  public:
    explicit SymplecticSpace(RatMatrix form) : form_(std::move(form)) {
        if (form_.rows() != form_.cols() || form_.rows() % 2 != 0)
            throw math_error("OddDimension", "symplectic form must be square of even size");
        for (std::size_t i = 0; i < form_.rows(); ++i)
            for (std::size_t j = 0; j <= i; ++j)
                if (form_(i, j) != -form_(j, i))
                    throw math_error("NotSkew", "symplectic form must be skew-symmetric");
        if (rank(form_) != form_.rows())
            throw math_error("Degenerate", "symplectic form must be nonsingular");
    }

    // standard form on R^{2n} in basis (e_1..e_n, f_1..f_n):
    // omega(e_i, f_j) = delta_ij
    static SymplecticSpace standard(std::size_t n) {
        RatMatrix f(2 * n, 2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            f(i, n + i) = Rational(1);
            f(n + i, i) = Rational(-1);
        }
        return SymplecticSpace(std::move(f));
    }

    std::size_t dim() const { return form_.rows(); }
    std::size_t half_dim() const { return form_.rows() / 2; }
    const RatMatrix& form() const { return form_; }
    GMatrix form_c() const { return to_gaussian(form_); }

    Rational omega(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
        assert(x.size() == dim() && y.size() == dim());
        Rational s(0);
        for (std::size_t i = 0; i < dim(); ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim(); ++j) s += x[i] * form_(i, j) * y[j];
        }
        return s;
    }

    Gaussian omega_c(const std::vector<Gaussian>& x, const std::vector<Gaussian>& y) const {
        assert(x.size() == dim() && y.size() == dim());
        Gaussian s(0);
        for (std::size_t i = 0; i < dim(); ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim(); ++j) s += x[i] * Gaussian(form_(i, j)) * y[j];
        }
        return s;
    }

    bool operator==(const SymplecticSpace& o) const { return form_ == o.form_; }

  private:
    RatMatrix form_;
};

// A subspace of V or of its complexification V_C, stored with a canonical
// reduced-column-echelon basis so that equal spans compare equal as data.
// Spanning sets are accepted; dependent columns are dropped.
class Subspace {
  public:
    static Subspace real(SymplecticSpace ambient, const RatMatrix& spanning) {
        if (spanning.rows() != ambient.dim())
            throw input_error("subspace spanning vectors have wrong dimension");
        return Subspace(std::move(ambient), to_gaussian(col_basis(spanning)), false);
    }

    static Subspace complex(SymplecticSpace ambient, const GMatrix& spanning) {
        if (spanning.rows() != ambient.dim())
            throw input_error("subspace spanning vectors have wrong dimension");
        return Subspace(std::move(ambient), col_basis(spanning), true);
    }

    const SymplecticSpace& ambient() const { return ambient_; }
    bool is_complex() const { return complex_; }
    // canonical basis, columns; entries are real when is_complex() is false
    const GMatrix& basis() const { return basis_; }
    RatMatrix real_basis() const { return to_real(basis_); }
    std::size_t dim() const { return basis_.cols(); }

    bool operator==(const Subspace& o) const {
        return complex_ == o.complex_ && ambient_ == o.ambient_ && basis_ == o.basis_;
    }

  private:
    Subspace(SymplecticSpace ambient, GMatrix basis, bool cplx)
        : ambient_(std::move(ambient)), basis_(std::move(basis)), complex_(cplx) {}

    SymplecticSpace ambient_;
    GMatrix basis_;
    bool complex_;
};

// C^omega = {v : omega(v, c) = 0 for all c in C}, over the same field as C.
inline Subspace symplectic_complement(const Subspace& c) {
    const RatMatrix& f = c.ambient().form();
    if (!c.is_complex()) {
        RatMatrix constraints = c.real_basis().transpose() * f.transpose();
        return Subspace::real(c.ambient(), kernel_basis(constraints));
    }
    GMatrix constraints = c.basis().transpose() * to_gaussian(f).transpose();
    return Subspace::complex(c.ambient(), kernel_basis(constraints));
}

enum class SubspaceKind { isotropic, coisotropic, lagrangian, symplectic, generic };

inline std::string to_string(SubspaceKind k) {
    switch (k) {
        case SubspaceKind::isotropic: return "isotropic";
        case SubspaceKind::coisotropic: return "coisotropic";
        case SubspaceKind::lagrangian: return "lagrangian";
        case SubspaceKind::symplectic: return "symplectic";
        case SubspaceKind::generic: return "generic";
    }
    return "generic";
}

inline SubspaceKind classify_subspace(const Subspace& c) {
    Subspace cw = symplectic_complement(c);
    bool c_in_cw = span_contains(cw.basis(), c.basis());
    bool cw_in_c = span_contains(c.basis(), cw.basis());
    if (c_in_cw && cw_in_c) return SubspaceKind::lagrangian;
    if (c_in_cw) return SubspaceKind::isotropic;
    if (cw_in_c) return SubspaceKind::coisotropic;
    if (span_intersection(c.basis(), cw.basis()).cols() == 0) return SubspaceKind::symplectic;
    return SubspaceKind::generic;
}

// Darboux basis (e_1..e_n, f_1..f_n) as columns: B^T omega B is the standard
// block form. Symplectic Gram-Schmidt, fully deterministic.
inline RatMatrix darboux_basis(const SymplecticSpace& s) {
    const std::size_t dim = s.dim();
    RatMatrix rem = RatMatrix::identity(dim);
    std::vector<std::vector<Rational>> es, fs;
    while (rem.cols() > 0) {
        std::vector<Rational> u = rem.col(0);
        std::size_t wi = 0;
        Rational p(0);
        for (std::size_t j = 1; j < rem.cols(); ++j) {
            p = s.omega(u, rem.col(j));
            if (!p.is_zero()) {
                wi = j;
                break;
            }
        }
        // the form is nondegenerate on the remaining span, so a partner exists
        assert(wi != 0);
        std::vector<Rational> v = rem.col(wi);
        Rational inv = Rational(1) / p;
        for (auto& x : v) x *= inv;
        es.push_back(u);
        fs.push_back(v);
        RatMatrix next(dim, rem.cols() - 2);
        std::size_t out = 0;
        for (std::size_t j = 1; j < rem.cols(); ++j) {
            if (j == wi) continue;
            std::vector<Rational> cvec = rem.col(j);
            Rational a = s.omega(v, cvec), b = s.omega(u, cvec);
            for (std::size_t i = 0; i < dim; ++i) cvec[i] += a * u[i] - b * v[i];
            next.set_col(out++, cvec);
        }
        rem = std::move(next);
    }
    RatMatrix basis(dim, dim);
    for (std::size_t k = 0; k < es.size(); ++k) {
        basis.set_col(k, es[k]);
        basis.set_col(es.size() + k, fs[k]);
    }
    return basis;
}

inline bool is_symplectic_matrix(const SymplecticSpace& s, const RatMatrix& m) {
    if (m.rows() != s.dim() || m.cols() != s.dim()) return false;
    return m.transpose() * s.form() * m == s.form();
}

// Linear reduction of an arbitrary real subspace C: V0 = C/(C cap C^omega)
// with the induced form. domain_basis = [R | D] is a basis of C whose first
// null_dim columns span C cap C^omega; the classes of the D columns are the
// chosen basis of V0, so the projection matrix is just [0 | I].
struct ReducedSpace {
    SymplecticSpace ambient;
    SymplecticSpace space;        // V0 with its induced form
    RatMatrix domain_basis;       // basis [R | D] of C, columns in ambient coords
    RatMatrix representatives;    // the D block: lifts of the V0 basis
    RatMatrix projection;         // matrix of pi_0 : C -> V0 in these bases
    std::size_t null_dim;         // dim(C cap C^omega)
};

inline ReducedSpace linear_reduce(const Subspace& c) {
    assert(!c.is_complex());
    RatMatrix b = c.real_basis();
    Subspace cw = symplectic_complement(c);
    RatMatrix r = to_real(span_intersection(c.basis(), cw.basis()));
    RatMatrix picked = r;
    std::vector<std::size_t> d_cols;
    for (std::size_t j = 0; j < b.cols(); ++j) {
        std::vector<Rational> v = b.col(j);
        if (in_span(picked, v)) continue;
        RatMatrix vm(b.rows(), 1);
        vm.set_col(0, v);
        picked = RatMatrix::hcat(picked, vm);
        d_cols.push_back(j);
    }
    RatMatrix d = b.select_cols(d_cols);
    RatMatrix form0 = d.transpose() * c.ambient().form() * d;
    std::size_t k = d.cols();
    RatMatrix proj(k, r.cols() + k);
    for (std::size_t i = 0; i < k; ++i) proj(i, r.cols() + i) = Rational(1);
    return ReducedSpace{c.ambient(),          SymplecticSpace(std::move(form0)),
                        RatMatrix::hcat(r, d), d,
                        std::move(proj),       r.cols()};
}

}  // namespace toriq
