#pragma once

// Orbit-type and infinitesimal stratifications of a linear torus action on
// C^m, computed through the support-cell combinatorics: the stabilizer of a
// point depends only on which coordinates vanish, so strata are classes of
// supports with equal stabilizer data. Also the face-keyed stratification of
// a Delzant reduced space.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "delzant.hpp"
#include "error.hpp"
#include "linalg.hpp"
#include "matrix.hpp"
#include "normal_form.hpp"
#include "polytope.hpp"
#include "rep.hpp"

namespace toriq {

// Stabilizer of a support S under H acting through the pairing matrix M:
// the subgroup {s : M_S s in Z^S} of H, i.e. the dual quasi-lattice of the
// row lattice of M_S. The HNF row lattice is a complete invariant (double
// duality), the real kernel is the identity component, and the component
// group order is the product of the nonzero invariant factors.
struct StabilizerData {
    std::vector<std::size_t> support;
    RatMatrix kernel_subspace;     // canonical kernel basis of M_S, columns
    Integer component_group_order = Integer(1);
    IntMatrix canonical_form;      // HNF rows of the row lattice of M_S
};

inline StabilizerData stabilizer_of_support(const IntMatrix& weights, const Subtorus& h,
                                            const std::vector<std::size_t>& support) {
    if (h.ambient_rank() != weights.cols())
        throw input_error("subtorus ambient rank does not match the weight length");
    for (auto j : support)
        if (j >= weights.rows()) throw input_error("support index out of range");
    IntMatrix m = weights * h.basis().transpose();  // m x r pairings
    IntMatrix ms = m.select_rows(support);
    StabilizerData out;
    out.support = support;
    out.kernel_subspace = kernel_basis(to_rational(ms));
    Snf s = smith_normal_form(ms);
    for (const auto& dk : s.d)
        if (dk != 0) out.component_group_order *= dk;
    out.canonical_form = row_lattice_hnf(ms);
    return out;
}

struct Stratum {
    std::vector<std::vector<std::size_t>> supports;  // cells in the class
    StabilizerData stabilizer;                       // of a representative
    std::size_t dim = 0;                             // 2 * max support size
};

struct StratReport {
    std::vector<Stratum> strata;
    // (a, b): stratum a lies in the closure of stratum b, i.e. some support
    // of a is contained in some support of b; a != b
    std::vector<std::pair<std::size_t, std::size_t>> order;
    bool frontier_ok = false;
    std::vector<std::string> violations;
    // orbit-type pieces are reported at the support-class level; connected
    // components over R are not refined further
    bool connected_refinement_computed = false;
};

namespace detail {

inline std::vector<std::vector<std::size_t>> all_supports(std::size_t m) {
    if (m > 16) throw input_error("too many coordinates for support enumeration (max 16)");
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t mask = 0; mask < (std::size_t(1) << m); ++mask) {
        std::vector<std::size_t> s;
        for (std::size_t j = 0; j < m; ++j)
            if (mask & (std::size_t(1) << j)) s.push_back(j);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(),
              [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });
    return out;
}

// closure containment on support cells: cell T is in the closure of cell S
// iff T is a subset of S
inline void finish_strat_report(StratReport& rep) {
    auto& strata = rep.strata;
    auto contained = [&](std::size_t a, std::size_t b) {
        for (const auto& sa : strata[a].supports)
            for (const auto& sb : strata[b].supports)
                if (std::includes(sb.begin(), sb.end(), sa.begin(), sa.end())) return true;
        return false;
    };
    for (std::size_t a = 0; a < strata.size(); ++a)
        for (std::size_t b = 0; b < strata.size(); ++b)
            if (a != b && contained(a, b)) rep.order.emplace_back(a, b);
    rep.frontier_ok = true;
    auto complain = [&](std::string msg) {
        rep.frontier_ok = false;
        rep.violations.push_back(std::move(msg));
    };
    for (const auto& [a, b] : rep.order) {
        // frontier axiom: touching the closure means lying inside it
        for (const auto& sa : strata[a].supports) {
            bool covered = false;
            for (const auto& sb : strata[b].supports)
                if (std::includes(sb.begin(), sb.end(), sa.begin(), sa.end())) covered = true;
            if (!covered)
                complain("stratum " + std::to_string(a) + " meets the closure of stratum " +
                         std::to_string(b) + " without lying inside it");
        }
        if (strata[a].dim >= strata[b].dim)
            complain("dimension does not drop from stratum " + std::to_string(b) +
                     " to stratum " + std::to_string(a));
    }
}

template <class Key>
StratReport partition_by(const IntMatrix& weights, const Subtorus& h, Key key) {
    StratReport rep;
    std::vector<decltype(key(StabilizerData{}))> keys;
    for (const auto& s : all_supports(weights.rows())) {
        StabilizerData sd = stabilizer_of_support(weights, h, s);
        auto k = key(sd);
        std::size_t at = rep.strata.size();
        for (std::size_t i = 0; i < keys.size(); ++i)
            if (keys[i] == k) {
                at = i;
                break;
            }
        if (at == rep.strata.size()) {
            keys.push_back(std::move(k));
            rep.strata.push_back(Stratum{{s}, std::move(sd), 2 * s.size()});
        } else {
            rep.strata[at].supports.push_back(s);
            if (2 * s.size() > rep.strata[at].dim) rep.strata[at].dim = 2 * s.size();
        }
    }
    finish_strat_report(rep);
    return rep;
}

}  // namespace detail

// Pieces of the orbit-type stratification: supports with equal stabilizer
// (for tori, conjugacy is equality).
inline StratReport orbit_type_partition(const IntMatrix& weights, const Subtorus& h) {
    return detail::partition_by(weights, h,
                                [](const StabilizerData& sd) { return sd.canonical_form; });
}

inline StratReport orbit_type_partition(const WeightRep& rep, const Subtorus& h) {
    return orbit_type_partition(rep.weights, h);
}

// Pieces of the infinitesimal stratification: supports with equal stabilizer
// identity component (equal real kernels). Always coarsens the orbit types.
inline StratReport infinitesimal_partition(const IntMatrix& weights, const Subtorus& h) {
    return detail::partition_by(weights, h,
                                [](const StabilizerData& sd) { return sd.kernel_subspace; });
}

inline StratReport infinitesimal_partition(const WeightRep& rep, const Subtorus& h) {
    return infinitesimal_partition(rep.weights, h);
}

// checks that the second report's classes are unions of the first's
inline bool is_coarsening(const StratReport& fine, const StratReport& coarse) {
    for (const auto& fs : fine.strata) {
        std::size_t where = coarse.strata.size();
        for (const auto& s : fs.supports) {
            for (std::size_t i = 0; i < coarse.strata.size(); ++i) {
                const auto& cs = coarse.strata[i].supports;
                if (std::find(cs.begin(), cs.end(), s) != cs.end()) {
                    if (where == coarse.strata.size())
                        where = i;
                    else if (where != i)
                        return false;  // fine class split across coarse classes
                    break;
                }
            }
        }
    }
    return true;
}

// Stratification of the reduced space M_Delta by the open faces of Delta:
// over the face with active set I the residual T^n-stabilizer has Lie
// algebra span{v_i : i in I} (stored via its saturated lattice), and the
// stratum has dimension 2(n - |I|). The poset is the face poset.
inline StratReport reduced_space_strata(const DelzantData& d) {
    DelzantReport check = verify_delzant(d.polytope);
    if (!check.pass())
        throw math_error("NotDelzant", "reduced-space strata need a Delzant polytope");
    FacePoset fp = face_lattice(d.polytope);
    FrontierReport fr = frontier_check(fp);
    StratReport rep;
    const std::size_t n = d.polytope.dim();
    for (const Face& f : fp.faces) {
        IntMatrix rows(f.active_set.size(), n);
        for (std::size_t r = 0; r < f.active_set.size(); ++r)
            for (std::size_t k = 0; k < n; ++k)
                rows(r, k) = d.polytope.facets()[f.active_set[r]].normal[k];
        StabilizerData sd;
        sd.support = f.active_set;
        sd.canonical_form = saturate_rows(rows);
        sd.kernel_subspace = col_basis(to_rational(sd.canonical_form).transpose());
        sd.component_group_order = Integer(1);  // Delzant: stabilizers are connected
        rep.strata.push_back(Stratum{{f.active_set}, std::move(sd), 2 * (n - f.active_set.size())});
    }
    rep.order = fp.order;
    rep.frontier_ok = fr.ok;
    rep.violations = fr.violations;
    rep.connected_refinement_computed = true;  // faces are connected
    return rep;
}

}  // namespace toriq
