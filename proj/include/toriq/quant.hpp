#pragma once

// Toric geometric quantization: prequantum integrality, the monomial basis
// indexed by Delta cap Z^n with exponents a = pi^T b - lambda, subtorus
// invariants, the reduced polytope Delta_H, and the [Q,R]=0 comparison.

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "delzant.hpp"
#include "error.hpp"
#include "normal_form.hpp"
#include "polytope.hpp"
#include "rep.hpp"

namespace toriq {

struct IntegralityReport {
    bool lambda_integral = false;
    bool iota_lambda_integral = false;
    std::vector<Rational> iota_values;  // <lambda, eta_j> per kernel basis row

    bool pass() const { return lambda_integral && iota_lambda_integral; }
};

inline IntegralityReport prequantum_integrality(const DelzantData& d) {
    IntegralityReport rep;
    rep.lambda_integral = true;
    for (const auto& l : d.lambda)
        if (!l.is_integer()) rep.lambda_integral = false;
    rep.iota_values = dual_lattice_pairing(d.kernel_basis, d.lambda);
    rep.iota_lambda_integral = true;
    for (const auto& v : rep.iota_values)
        if (!v.is_integer()) rep.iota_lambda_integral = false;
    return rep;
}

struct QuantBasis {
    std::vector<std::vector<Integer>> points;     // b in Delta cap Z^n, sorted lex
    std::vector<std::vector<Integer>> exponents;  // a = pi^T b - lambda per point

    std::size_t count() const { return points.size(); }
};

inline QuantBasis quantization_basis(const DelzantData& d) {
    IntegralityReport ir = prequantum_integrality(d);
    if (!ir.pass())
        throw math_error("IntegralityFailure",
                         "prequantum integrality fails: lambda is not in the weight lattice");
    QuantBasis qb;
    qb.points = lattice_points(d.polytope);
    const std::size_t big_n = d.polytope.facet_count();
    for (const auto& b : qb.points) {
        std::vector<Integer> a(big_n);
        for (std::size_t i = 0; i < big_n; ++i) {
            Integer dot(0);
            for (std::size_t k = 0; k < d.polytope.dim(); ++k)
                dot += d.pi(k, i) * b[k];
            Rational ai = Rational(dot) - d.lambda[i];
            assert(ai.is_integer() && ai.sign() >= 0);  // forced by b in Delta, lambda integral
            a[i] = ai.num();
        }
        qb.exponents.push_back(std::move(a));
    }
    for (std::size_t i = 0; i + 1 < qb.exponents.size(); ++i)
        for (std::size_t j = i + 1; j < qb.exponents.size(); ++j)
            assert(qb.exponents[i] != qb.exponents[j]);  // b -> a injective (pi has rank n)
    return qb;
}

struct KernelRhoReport {
    bool in_kernel = false;
    std::vector<Rational> pairings;  // <lambda, eta_j> per subtorus basis row
};

// Connected H lies in ker(rho), rho(theta) = e^{-i <lambda, theta>}, iff
// lambda annihilates the Lie algebra of H.
inline KernelRhoReport check_subtorus_in_kernel_rho(const DelzantData& d, const Subtorus& h) {
    if (h.ambient_rank() != d.polytope.facet_count())
        throw input_error("subtorus ambient rank must equal the facet count");
    KernelRhoReport rep;
    rep.pairings = dual_lattice_pairing(h.basis(), d.lambda);
    rep.in_kernel = true;
    for (const auto& p : rep.pairings)
        if (!p.is_zero()) rep.in_kernel = false;
    return rep;
}

namespace detail {

inline void require_kernel_rho(const DelzantData& d, const Subtorus& h) {
    KernelRhoReport kr = check_subtorus_in_kernel_rho(d, h);
    if (!kr.in_kernel) {
        std::ostringstream os;
        os << "H is not in ker(rho); <lambda,eta> =";
        for (const auto& p : kr.pairings) os << ' ' << p;
        throw math_error("KernelConditionViolated", os.str());
    }
}

}  // namespace detail

// Keeps the basis elements fixed by H: <a, eta_j> = 0 for every j. The
// equivalent geometric test <b, pi*eta_j> = 0 is evaluated as well; the two
// must agree since <lambda, eta_j> = 0.
inline QuantBasis invariant_subspace(const QuantBasis& qb, const DelzantData& d,
                                     const Subtorus& h) {
    detail::require_kernel_rho(d, h);
    QuantBasis out;
    for (std::size_t p = 0; p < qb.points.size(); ++p) {
        bool keep = true;
        for (std::size_t j = 0; j < h.rank(); ++j) {
            Integer s(0);
            for (std::size_t i = 0; i < h.ambient_rank(); ++i)
                s += qb.exponents[p][i] * h.basis()(j, i);
            if (s != 0) keep = false;
        }
        [[maybe_unused]] bool keep_geom = true;
        IntMatrix pieta = d.pi * h.basis().transpose();  // column j = pi * eta_j
        for (std::size_t j = 0; j < h.rank(); ++j) {
            Integer s(0);
            for (std::size_t k = 0; k < d.polytope.dim(); ++k)
                s += qb.points[p][k] * pieta(k, j);
            if (s != 0) keep_geom = false;
        }
        assert(keep == keep_geom);
        if (keep) {
            out.points.push_back(qb.points[p]);
            out.exponents.push_back(qb.exponents[p]);
        }
    }
    return out;
}

struct ReducedPolytopeReport {
    SlicedPolytope sliced;
    DelzantReport delzant;
    bool is_delzant = false;
    bool empty = false;
};

// Delta_H = Delta cap {<b, pi*eta_j> = 0}, expressed in the induced lattice.
// Whether the reduced polytope is Delzant in that lattice is reported, not
// required: a failure marks the reduced count as conjectural.
inline ReducedPolytopeReport reduced_polytope(const DelzantData& d, const Subtorus& h) {
    detail::require_kernel_rho(d, h);
    std::vector<std::pair<std::vector<Integer>, Rational>> eqs;
    IntMatrix pieta = d.pi * h.basis().transpose();
    for (std::size_t j = 0; j < h.rank(); ++j) {
        std::vector<Integer> c(d.polytope.dim());
        for (std::size_t k = 0; k < d.polytope.dim(); ++k) c[k] = pieta(k, j);
        eqs.emplace_back(std::move(c), Rational(0));
    }
    ReducedPolytopeReport rep{slice(d.polytope, eqs), DelzantReport{}, false, false};
    if (rep.sliced.constant_infeasible) {
        rep.empty = true;
        return rep;
    }
    try {
        rep.delzant = verify_delzant(rep.sliced.polytope);
        rep.is_delzant = rep.delzant.pass();
    } catch (const math_error& e) {
        if (e.kind == "Empty")
            rep.empty = true;
        else
            throw;
    }
    return rep;
}

struct QRReport {
    IntegralityReport integrality;
    KernelRhoReport kernel_rho;
    std::size_t total_count = 0;
    std::size_t invariant_count = 0;
    std::size_t reduced_count = 0;
    ReducedPolytopeReport reduced;
    bool injective = false;
    bool counts_equal = false;
    bool reduced_is_delzant = false;
    // The openness hypothesis (H_C times the level set open in its closure)
    // is not algorithmically checkable here; renderers must say so.
};

// The [Q,R]=0 comparison: invariant monomials upstairs vs lattice points of
// the reduced polytope, with kappa(b) the coordinate vector of b on the
// slice. Injectivity of kappa is verified element by element.
inline QRReport qr_check(const DelzantData& d, const Subtorus& h) {
    QRReport rep;
    rep.integrality = prequantum_integrality(d);
    if (!rep.integrality.pass())
        throw math_error("IntegralityFailure",
                         "prequantum integrality fails: lambda is not in the weight lattice");
    rep.kernel_rho = check_subtorus_in_kernel_rho(d, h);
    detail::require_kernel_rho(d, h);
    QuantBasis qb = quantization_basis(d);
    rep.total_count = qb.count();
    QuantBasis inv = invariant_subspace(qb, d, h);
    rep.invariant_count = inv.count();
    rep.reduced = reduced_polytope(d, h);
    std::vector<std::vector<Integer>> reduced_pts = slice_lattice_points(rep.reduced.sliced);
    rep.reduced_count = reduced_pts.size();
    rep.reduced_is_delzant = rep.reduced.is_delzant;
    rep.counts_equal = rep.invariant_count == rep.reduced_count;
    // kappa: solve embedding * y = b - origin for each invariant b; the
    // images must be distinct lattice points of the reduced polytope
    RatMatrix emb = to_rational(rep.reduced.sliced.embedding);
    std::vector<std::vector<Integer>> images;
    rep.injective = true;
    for (const auto& b : inv.points) {
        std::vector<Rational> rhs(b.size());
        for (std::size_t k = 0; k < b.size(); ++k)
            rhs[k] = Rational(b[k]) - rep.reduced.sliced.origin[k];
        auto y = solve(emb, rhs);
        if (!y.has_value()) {
            rep.injective = false;
            continue;
        }
        std::vector<Integer> yi;
        bool ok = true;
        for (const auto& c : *y) {
            if (!c.is_integer()) ok = false;
            yi.push_back(c.num());
        }
        if (!ok || std::find(images.begin(), images.end(), yi) != images.end())
            rep.injective = false;
        else
            images.push_back(std::move(yi));
    }
    return rep;
}

}  // namespace toriq
