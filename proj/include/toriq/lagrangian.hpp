#pragma once

// Lagrangian subspaces of V_C and their reductions: coisotropic reduction
// L0 = pi_0(L cap C_C), the real/totally-complex/mixed trichotomy, and exact
// positivity of the Hermitian pairing i*omega(v, conj(w)).

#include <cstddef>
#include <string>
#include <vector>

#include "error.hpp"
#include "gaussian.hpp"
#include "linalg.hpp"
#include "matrix.hpp"
#include "symplectic.hpp"

namespace toriq {

inline bool is_isotropic(const Subspace& s) {
    GMatrix b = s.basis();
    GMatrix pairings = b.transpose() * s.ambient().form_c() * b;
    return pairings.is_zero();
}

inline bool is_lagrangian(const Subspace& s) {
    return s.dim() == s.ambient().half_dim() && is_isotropic(s);
}

inline void require_lagrangian(const Subspace& s, const char* who) {
    if (!is_lagrangian(s))
        throw math_error("NotLagrangian", std::string(who) + ": subspace is not Lagrangian");
}

struct LagrangianReduction {
    ReducedSpace reduction;
    Subspace l0;            // complex subspace of reduction.space
    SubspaceKind l0_kind;   // classification of l0 in the reduced space
};

// L0 = pi_0(L cap C_C) for a complex Lagrangian L and a real subspace C.
// When C is coisotropic the result is guaranteed Lagrangian; otherwise it is
// computed all the same and l0_kind reports what came out.
inline LagrangianReduction reduce_lagrangian_full(const Subspace& l, const Subspace& c) {
    assert(l.is_complex() && !c.is_complex());
    require_lagrangian(l, "reduce_lagrangian");
    ReducedSpace red = linear_reduce(c);
    GMatrix meet = span_intersection(l.basis(), to_gaussian(c.real_basis()));
    GMatrix domain = to_gaussian(red.domain_basis);
    GMatrix coords(red.space.dim(), meet.cols());
    for (std::size_t j = 0; j < meet.cols(); ++j) {
        auto x = solve(domain, meet.col(j));
        assert(x.has_value());  // meet is inside C by construction
        for (std::size_t i = 0; i < red.space.dim(); ++i)
            coords(i, j) = (*x)[red.null_dim + i];
    }
    Subspace l0 = Subspace::complex(red.space, coords);
    SubspaceKind kind = classify_subspace(l0);
    return LagrangianReduction{std::move(red), std::move(l0), kind};
}

inline Subspace reduce_lagrangian(const Subspace& l, const Subspace& c) {
    return reduce_lagrangian_full(l, c).l0;
}

enum class LagrangianType { real, totally_complex, mixed };

inline std::string to_string(LagrangianType t) {
    switch (t) {
        case LagrangianType::real: return "real";
        case LagrangianType::totally_complex: return "totally_complex";
        case LagrangianType::mixed: return "mixed";
    }
    return "mixed";
}

inline LagrangianType lagrangian_type(const Subspace& l) {
    assert(l.is_complex());
    require_lagrangian(l, "lagrangian_type");
    GMatrix cb = conj(l.basis());
    if (span_equal(l.basis(), cb)) return LagrangianType::real;
    if (span_intersection(l.basis(), cb).cols() == 0) return LagrangianType::totally_complex;
    return LagrangianType::mixed;
}

// Positive-definiteness of <v,w> = i*omega(v, conj(w)) on L, decided by
// sequential Hermitian elimination: every pivot must be a positive real
// rational (Sylvester's criterion; a zero or negative pivot ends it).
inline bool is_positive(const Subspace& l) {
    assert(l.is_complex());
    require_lagrangian(l, "is_positive");
    GMatrix b = l.basis();
    GMatrix g = b.transpose() * l.ambient().form_c() * conj(b);
    g = Gaussian::i() * g;
    const std::size_t m = g.rows();
    for (std::size_t k = 0; k < m; ++k) {
        Gaussian p = g(k, k);
        if (!p.is_real() || p.re.sign() <= 0) return false;
        Gaussian inv = Gaussian(1) / p;
        for (std::size_t i = k + 1; i < m; ++i) {
            if (g(i, k).is_zero()) continue;
            Gaussian f = g(i, k) * inv;
            for (std::size_t j = k + 1; j < m; ++j) g(i, j) -= f * g(k, j);
        }
    }
    return true;
}

// Prop-level check: a positive Lagrangian meets the complexified orbit
// directions C^omega trivially. Preconditions are enforced, the intersection
// is then computed and compared against {0}.
inline bool positive_orbit_intersection_check(const Subspace& l, const Subspace& c) {
    if (!is_positive(l))
        throw math_error("PreconditionViolation",
                         "positive_orbit_intersection_check: L is not positive");
    if (classify_subspace(c) != SubspaceKind::coisotropic &&
        classify_subspace(c) != SubspaceKind::lagrangian) {
        // a Lagrangian C is coisotropic too; anything else violates the Prop
        throw math_error("PreconditionViolation",
                         "positive_orbit_intersection_check: C is not coisotropic");
    }
    Subspace cw = symplectic_complement(c);
    GMatrix meet = span_intersection(l.basis(), to_gaussian(cw.real_basis()));
    return meet.cols() == 0;
}

}  // namespace toriq
