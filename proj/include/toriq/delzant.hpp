#pragma once

// The Delzant construction data: the exact sequence 0 -> k -> R^N -> R^n -> 0
// with pi assembled from facet normals, the primitive kernel subtorus, the
// shifted momentum bookkeeping on C^N (squared moduli only), the per-face
// freeness certificate, and the moment-polytope roundtrip.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "linalg.hpp"
#include "matrix.hpp"
#include "normal_form.hpp"
#include "polytope.hpp"
#include "random.hpp"
#include "rational.hpp"

namespace toriq {

struct DelzantData {
    HPolytope polytope;
    IntMatrix pi;            // n x N, column i = v_i
    IntMatrix kernel_basis;  // (N - n) x N, rows a primitive basis of k cap Z^N
    std::vector<Rational> lambda;
};

// require_delzant = false still assembles the data (used to exhibit failures
// on non-Delzant fixtures); the default insists on a verified polytope.
inline DelzantData build_delzant(const HPolytope& p, bool require_delzant = true) {
    if (require_delzant) {
        DelzantReport rep = verify_delzant(p);
        if (!rep.pass()) {
            std::string what = "polytope is not Delzant:";
            if (!rep.surjective_on_lattice) what += " pi not surjective on lattices;";
            if (!rep.simple) what += " not simple;";
            if (!rep.vertex_unimodular) what += " vertex normals not unimodular;";
            throw math_error("NotDelzant", what);
        }
    }
    IntMatrix pi = p.normal_matrix();
    IntMatrix kb = kernel_lattice(pi).transpose();  // rows, HNF-canonical
    std::vector<Rational> lambda;
    for (const auto& f : p.facets()) lambda.push_back(f.offset);
    return DelzantData{p, std::move(pi), std::move(kb), std::move(lambda)};
}

struct LevelPoint {
    std::vector<Rational> b;       // the point of Delta
    std::vector<Rational> moduli;  // m_i = <b, v_i> - lambda_i = 1/2 |z_i|^2

    std::vector<std::size_t> support() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < moduli.size(); ++i)
            if (!moduli[i].is_zero()) out.push_back(i);
        return out;
    }
};

// full = moduli + lambda and restricted = kernel_basis * full. One often
// sees J = 1/2|z|^2 - lambda, but with facets <x,v_i> >= lambda_i the
// roundtrip J_Delta(M_Delta) = Delta forces 1/2|z_i|^2 = <b,v_i> - lambda_i,
// i.e. full_i = (pi^T b)_i; the restricted momentum then vanishes exactly on
// the level set because pi * kernel_basis^T = 0.
inline std::pair<std::vector<Rational>, std::vector<Rational>> momentum(
    const DelzantData& d, const std::vector<Rational>& moduli) {
    if (moduli.size() != d.polytope.facet_count())
        throw input_error("moduli length must equal the facet count");
    for (const auto& m : moduli)
        if (m.sign() < 0) throw math_error("NegativeModulus", "squared moduli must be >= 0");
    std::vector<Rational> full(moduli.size());
    for (std::size_t i = 0; i < moduli.size(); ++i) full[i] = moduli[i] + d.lambda[i];
    std::vector<Rational> restricted(d.kernel_basis.rows(), Rational(0));
    for (std::size_t j = 0; j < d.kernel_basis.rows(); ++j)
        for (std::size_t i = 0; i < moduli.size(); ++i)
            restricted[j] += Rational(d.kernel_basis(j, i)) * full[i];
    return {std::move(full), std::move(restricted)};
}

inline LevelPoint level_point_from_polytope(const DelzantData& d,
                                            const std::vector<Rational>& b) {
    if (b.size() != d.polytope.dim()) throw input_error("point has wrong dimension");
    if (!d.polytope.contains(b))
        throw math_error("OutsidePolytope", "point violates a facet inequality");
    std::vector<Rational> moduli(d.polytope.facet_count());
    for (std::size_t i = 0; i < moduli.size(); ++i) moduli[i] = d.polytope.slack(i, b);
    return LevelPoint{b, std::move(moduli)};
}

struct FreenessEntry {
    std::vector<std::size_t> active_set;
    bool certified = false;
    std::vector<Integer> invariant_factors;  // of the complementary kernel columns
};

struct FreenessReport {
    std::vector<FreenessEntry> entries;
    bool all_certified = true;
};

// For each face F_I the subtorus K cap T_I must be trivial; equivalently the
// kernel_basis columns outside I must define a surjection onto Z^{N-n}, i.e.
// full rank with all SNF invariant factors 1. On the level set the stabilizer
// of a point depends only on its support, which is the complement of I.
inline FreenessReport freeness_certificate(const DelzantData& d) {
    FreenessReport rep;
    FacePoset fp = face_lattice(d.polytope);
    const std::size_t want_rank = d.kernel_basis.rows();
    for (const Face& f : fp.faces) {
        FreenessEntry e;
        e.active_set = f.active_set;
        std::vector<std::size_t> outside;
        for (std::size_t i = 0; i < d.polytope.facet_count(); ++i)
            if (!std::binary_search(f.active_set.begin(), f.active_set.end(), i))
                outside.push_back(i);
        IntMatrix bj = d.kernel_basis.select_cols(outside);
        Snf s = smith_normal_form(bj);
        e.invariant_factors = s.d;
        e.certified = lattice_rank(s) == want_rank;
        for (std::size_t i = 0; i < s.d.size(); ++i)
            if (s.d[i] != 0 && s.d[i] != 1) e.certified = false;
        if (!e.certified) rep.all_certified = false;
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

// Deterministic sample points of Delta (vertices, face witnesses, centroid,
// then seeded convex combinations) must produce level points with restricted
// momentum zero whose full momentum recovers b exactly through pi^T b = full.
inline bool moment_roundtrip_check(const DelzantData& d, std::size_t samples,
                                   std::uint64_t seed = 0x64656c7au) {
    std::vector<std::vector<Rational>> pts;
    FacePoset fp = face_lattice(d.polytope);
    for (const auto& v : fp.vertices) pts.push_back(v);
    for (const auto& f : fp.faces) pts.push_back(f.witness);
    const std::size_t n = d.polytope.dim();
    std::vector<Rational> centroid(n, Rational(0));
    for (const auto& v : fp.vertices)
        for (std::size_t k = 0; k < n; ++k) centroid[k] += v[k];
    Rational inv = Rational(1) / Rational(Integer(fp.vertices.size()));
    for (auto& c : centroid) c *= inv;
    pts.push_back(centroid);
    Rng rng(seed);
    for (std::size_t t = 0; t < samples; ++t) {
        std::vector<Rational> x(n, Rational(0));
        Rational total(0);
        std::vector<Rational> w(fp.vertices.size());
        for (std::size_t v = 0; v < fp.vertices.size(); ++v) {
            w[v] = Rational(rng.next_int(0, 4));
            total += w[v];
        }
        if (total.is_zero()) {
            w[0] = Rational(1);
            total = Rational(1);
        }
        for (std::size_t v = 0; v < fp.vertices.size(); ++v)
            for (std::size_t k = 0; k < n; ++k) x[k] += w[v] * fp.vertices[v][k] / total;
        pts.push_back(std::move(x));
    }
    RatMatrix pit = to_rational(d.pi).transpose();
    for (const auto& b : pts) {
        LevelPoint lp = level_point_from_polytope(d, b);
        auto [full, restricted] = momentum(d, lp.moduli);
        for (const auto& r : restricted)
            if (!r.is_zero()) return false;
        auto back = solve(pit, full);
        if (!back.has_value() || *back != b) return false;
    }
    return true;
}

}  // namespace toriq
