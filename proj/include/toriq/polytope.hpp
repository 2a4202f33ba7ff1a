#pragma once

// Exact half-space polytopes Delta = {x : <x, v_i> >= lambda_i} with integer
// primitive normals: vertex enumeration by subset solving, face lattice with
// combinatorial frontier verification, Delzant smoothness checks, lattice
// point enumeration, and affine slicing with induced-lattice bookkeeping.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "linalg.hpp"
#include "matrix.hpp"
#include "normal_form.hpp"
#include "rational.hpp"

namespace toriq {

struct Facet {
    std::vector<Integer> normal;
    Rational offset;

    bool operator==(const Facet& o) const { return normal == o.normal && offset == o.offset; }
};

class HPolytope {
  public:
    HPolytope(std::size_t dim, std::vector<Facet> facets)
        : dim_(dim), facets_(std::move(facets)) {
        for (const auto& f : facets_) {
            if (f.normal.size() != dim_) throw input_error("facet normal has wrong length");
            Integer g(0);
            for (const auto& e : f.normal) g = int_gcd(g, e);
            if (g == 0) throw input_error("facet normal must be nonzero");
            if (g != 1) throw input_error("facet normal must be primitive");
        }
        for (std::size_t i = 0; i < facets_.size(); ++i)
            for (std::size_t j = i + 1; j < facets_.size(); ++j)
                if (facets_[i] == facets_[j]) throw input_error("duplicate facet");
    }

    std::size_t dim() const { return dim_; }
    const std::vector<Facet>& facets() const { return facets_; }
    std::size_t facet_count() const { return facets_.size(); }

    // slack <x, v_i> - lambda_i; nonnegative on the polytope
    Rational slack(std::size_t i, const std::vector<Rational>& x) const {
        assert(x.size() == dim_);
        Rational s = -facets_[i].offset;
        for (std::size_t k = 0; k < dim_; ++k) s += Rational(facets_[i].normal[k]) * x[k];
        return s;
    }

    bool contains(const std::vector<Rational>& x) const {
        for (std::size_t i = 0; i < facets_.size(); ++i)
            if (slack(i, x).sign() < 0) return false;
        return true;
    }

    std::vector<std::size_t> active_set(const std::vector<Rational>& x) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < facets_.size(); ++i)
            if (slack(i, x).is_zero()) out.push_back(i);
        return out;
    }

    // normals as the columns of an n x N integer matrix (the projection pi of
    // the Delzant construction)
    IntMatrix normal_matrix() const {
        IntMatrix m(dim_, facets_.size());
        for (std::size_t i = 0; i < facets_.size(); ++i)
            for (std::size_t k = 0; k < dim_; ++k) m(k, i) = facets_[i].normal[k];
        return m;
    }

  private:
    std::size_t dim_;
    std::vector<Facet> facets_;
};

namespace detail {

inline bool lex_less(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (b[i] < a[i]) return false;
    }
    return false;
}

// enumerate index subsets of {0..n-1} of given size, lexicographically
inline bool next_subset(std::vector<std::size_t>& s, std::size_t n) {
    std::size_t k = s.size();
    for (std::size_t i = k; i-- > 0;) {
        if (s[i] < n - (k - i)) {
            ++s[i];
            for (std::size_t j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace detail

// The recession cone {g : <g, v_i> >= 0} is {0} iff the normals positively
// span R^n. Checked without LP: if the cone is nonzero it is pointed (full
// rank) or contains a kernel line (rank deficit); a pointed nonzero cone has
// an extreme ray cut out by n-1 independent tight constraints, so scanning
// the (n-1)-subsets finds a recession direction when one exists.
inline bool is_bounded(const HPolytope& p) {
    const std::size_t n = p.dim();
    if (n == 0) return true;
    IntMatrix normals(p.facet_count(), n);
    for (std::size_t i = 0; i < p.facet_count(); ++i)
        for (std::size_t k = 0; k < n; ++k) normals(i, k) = p.facets()[i].normal[k];
    RatMatrix nq = to_rational(normals);
    if (rank(nq) < n) return false;
    auto is_recession = [&](const std::vector<Rational>& g) {
        for (std::size_t i = 0; i < p.facet_count(); ++i) {
            Rational s(0);
            for (std::size_t k = 0; k < n; ++k) s += Rational(normals(i, k)) * g[k];
            if (s.sign() < 0) return false;
        }
        return true;
    };
    std::vector<std::size_t> sub(n - 1);  // full rank implies facet_count >= n
    for (std::size_t i = 0; i < n - 1; ++i) sub[i] = i;
    do {
        RatMatrix rows = nq.select_rows(sub);
        RatMatrix k = kernel_basis(rows);
        if (k.cols() != 1) continue;
        std::vector<Rational> g = k.col(0);
        if (is_recession(g)) return false;
        for (auto& x : g) x = -x;
        if (is_recession(g)) return false;
    } while (detail::next_subset(sub, p.facet_count()));
    return true;
}

// All vertices (extreme points), sorted lexicographically. Works for lower
// dimensional bounded polytopes too: a point is extreme iff some n of its
// active facets are linearly independent.
inline std::vector<std::vector<Rational>> enumerate_vertices(const HPolytope& p) {
    const std::size_t n = p.dim();
    if (n == 0) return {std::vector<Rational>{}};
    if (!is_bounded(p)) throw math_error("Unbounded", "polytope has a recession direction");
    std::vector<std::vector<Rational>> verts;
    if (p.facet_count() >= n) {
        std::vector<std::size_t> sub(n);
        for (std::size_t i = 0; i < n; ++i) sub[i] = i;
        do {
            RatMatrix a(n, n);
            std::vector<Rational> b(n);
            for (std::size_t r = 0; r < n; ++r) {
                for (std::size_t k = 0; k < n; ++k)
                    a(r, k) = Rational(p.facets()[sub[r]].normal[k]);
                b[r] = p.facets()[sub[r]].offset;
            }
            if (det(a).is_zero()) continue;
            auto x = solve(a, b);
            assert(x.has_value());
            if (p.contains(*x)) verts.push_back(*x);
        } while (detail::next_subset(sub, p.facet_count()));
    }
    std::sort(verts.begin(), verts.end(), detail::lex_less);
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (verts.empty()) throw math_error("Empty", "polytope has no feasible point");
    return verts;
}

struct Face {
    std::vector<std::size_t> active_set;  // sorted facet indices
    std::size_t dim = 0;
    std::vector<Rational> witness;        // relative-interior point
    std::vector<std::size_t> members;     // indices into the vertex list
};

struct FacePoset {
    HPolytope polytope;
    std::vector<std::vector<Rational>> vertices;
    std::vector<Face> faces;
    // (a, b) with active(a) strictly containing active(b): face a lies in the
    // closure of face b (reverse inclusion of active sets)
    std::vector<std::pair<std::size_t, std::size_t>> order;
};

namespace detail {

inline bool subset_of(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline std::vector<std::size_t> intersect_sorted(const std::vector<std::size_t>& a,
                                                 const std::vector<std::size_t>& b) {
    std::vector<std::size_t> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace detail

// Faces are the nonempty strata Sigma_I: the vertex active sets closed under
// intersection. Each face's witness is the barycenter of its vertices, which
// realizes the face's active set exactly.
inline FacePoset face_lattice(const HPolytope& p) {
    std::vector<std::vector<Rational>> verts = enumerate_vertices(p);
    std::vector<std::vector<std::size_t>> vsets;
    for (const auto& v : verts) vsets.push_back(p.active_set(v));
    std::vector<std::vector<std::size_t>> family = vsets;
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    for (bool grew = true; grew;) {
        grew = false;
        std::vector<std::vector<std::size_t>> found;
        for (std::size_t a = 0; a < family.size(); ++a)
            for (std::size_t b = a + 1; b < family.size(); ++b) {
                auto meet = detail::intersect_sorted(family[a], family[b]);
                if (!std::binary_search(family.begin(), family.end(), meet))
                    found.push_back(meet);
            }
        if (!found.empty()) {
            grew = true;
            family.insert(family.end(), found.begin(), found.end());
            std::sort(family.begin(), family.end());
            family.erase(std::unique(family.begin(), family.end()), family.end());
        }
    }
    FacePoset fp{p, std::move(verts), {}, {}};
    for (const auto& iset : family) {
        Face f;
        f.active_set = iset;
        for (std::size_t v = 0; v < fp.vertices.size(); ++v)
            if (detail::subset_of(iset, vsets[v])) f.members.push_back(v);
        assert(!f.members.empty());
        f.witness.assign(p.dim(), Rational(0));
        for (auto v : f.members)
            for (std::size_t k = 0; k < p.dim(); ++k) f.witness[k] += fp.vertices[v][k];
        Rational inv = Rational(1) / Rational(Integer(f.members.size()));
        for (auto& c : f.witness) c *= inv;
        RatMatrix diffs(p.dim(), f.members.size());
        for (std::size_t j = 0; j < f.members.size(); ++j)
            for (std::size_t k = 0; k < p.dim(); ++k)
                diffs(k, j) = fp.vertices[f.members[j]][k] - fp.vertices[f.members[0]][k];
        f.dim = rank(diffs);
        fp.faces.push_back(std::move(f));
    }
    for (std::size_t a = 0; a < fp.faces.size(); ++a)
        for (std::size_t b = 0; b < fp.faces.size(); ++b) {
            if (a == b) continue;
            if (fp.faces[a].active_set.size() > fp.faces[b].active_set.size() &&
                detail::subset_of(fp.faces[b].active_set, fp.faces[a].active_set))
                fp.order.emplace_back(a, b);
        }
    return fp;
}

struct FrontierReport {
    bool ok = true;
    std::vector<std::string> violations;
};

// Verifies the frontier axiom combinatorially on a face poset, treating it as
// untrusted data: witnesses must realize their active sets, the face family
// must be exactly the intersection-closure of the vertex active sets (so each
// closure decomposes into listed faces), the order must be exactly reverse
// inclusion, and dimension must drop strictly along it.
inline FrontierReport frontier_check(const FacePoset& fp) {
    FrontierReport rep;
    auto complain = [&](std::string msg) {
        rep.ok = false;
        rep.violations.push_back(std::move(msg));
    };
    std::vector<std::vector<std::size_t>> listed;
    for (std::size_t i = 0; i < fp.faces.size(); ++i) {
        const Face& f = fp.faces[i];
        if (f.witness.size() != fp.polytope.dim() ||
            !fp.polytope.contains(f.witness) ||
            fp.polytope.active_set(f.witness) != f.active_set)
            complain("face " + std::to_string(i) + ": witness does not realize its active set");
        listed.push_back(f.active_set);
    }
    std::sort(listed.begin(), listed.end());
    if (std::adjacent_find(listed.begin(), listed.end()) != listed.end())
        complain("duplicate active sets in face list");
    std::vector<std::vector<std::size_t>> expected;
    for (const auto& v : fp.vertices) expected.push_back(fp.polytope.active_set(v));
    std::sort(expected.begin(), expected.end());
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
    for (bool grew = true; grew;) {
        grew = false;
        std::vector<std::vector<std::size_t>> found;
        for (std::size_t a = 0; a < expected.size(); ++a)
            for (std::size_t b = a + 1; b < expected.size(); ++b) {
                auto meet = detail::intersect_sorted(expected[a], expected[b]);
                if (!std::binary_search(expected.begin(), expected.end(), meet))
                    found.push_back(meet);
            }
        if (!found.empty()) {
            grew = true;
            expected.insert(expected.end(), found.begin(), found.end());
            std::sort(expected.begin(), expected.end());
            expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
        }
    }
    if (listed != expected)
        complain("face family is not the intersection-closure of the vertex active sets");
    std::vector<std::pair<std::size_t, std::size_t>> want;
    for (std::size_t a = 0; a < fp.faces.size(); ++a)
        for (std::size_t b = 0; b < fp.faces.size(); ++b) {
            if (a == b) continue;
            if (fp.faces[a].active_set.size() > fp.faces[b].active_set.size() &&
                detail::subset_of(fp.faces[b].active_set, fp.faces[a].active_set))
                want.emplace_back(a, b);
        }
    auto got = fp.order;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    if (got != want) complain("order relation is not reverse inclusion of active sets");
    for (const auto& [a, b] : fp.order) {
        if (a >= fp.faces.size() || b >= fp.faces.size()) {
            complain("order pair out of range");
            continue;
        }
        if (fp.faces[a].dim >= fp.faces[b].dim)
            complain("dimension does not drop from face " + std::to_string(b) + " to face " +
                     std::to_string(a));
    }
    return rep;
}

struct DelzantReport {
    bool surjective_on_lattice = false;
    bool simple = false;
    bool vertex_unimodular = false;
    std::vector<std::vector<Rational>> failing_vertices;

    bool pass() const { return surjective_on_lattice && simple && vertex_unimodular; }
};

// Delzant conditions: pi(Z^N) = Z^n globally (SNF all ones), and at every
// vertex exactly n active facets whose normals form a lattice basis.
inline DelzantReport verify_delzant(const HPolytope& p) {
    DelzantReport rep;
    const std::size_t n = p.dim();
    Snf s = smith_normal_form(p.normal_matrix());
    rep.surjective_on_lattice = lattice_rank(s) == n;
    for (std::size_t i = 0; i < s.d.size(); ++i)
        if (s.d[i] != 0 && s.d[i] != 1) rep.surjective_on_lattice = false;
    std::vector<std::vector<Rational>> verts = enumerate_vertices(p);
    rep.simple = true;
    rep.vertex_unimodular = true;
    for (const auto& v : verts) {
        std::vector<std::size_t> act = p.active_set(v);
        bool bad = false;
        if (act.size() != n) {
            rep.simple = false;
            rep.vertex_unimodular = false;  // no n-element lattice basis at v
            bad = true;
        } else {
            IntMatrix m(n, n);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t k = 0; k < n; ++k) m(r, k) = p.facets()[act[r]].normal[k];
            if (!is_unimodular(m)) {
                rep.vertex_unimodular = false;
                bad = true;
            }
        }
        if (bad) rep.failing_vertices.push_back(v);
    }
    return rep;
}

// All integer points of a bounded polytope, in lexicographic order. Depth
// first over coordinates with per-facet interval pruning against the
// bounding box of the remaining coordinates.
inline std::vector<std::vector<Integer>> lattice_points(const HPolytope& p) {
    const std::size_t n = p.dim();
    if (n == 0) return {std::vector<Integer>{}};
    std::vector<std::vector<Rational>> verts;
    try {
        verts = enumerate_vertices(p);
    } catch (const math_error& e) {
        if (e.kind == "Empty") return {};
        throw;
    }
    std::vector<Integer> lo(n), hi(n);
    for (std::size_t k = 0; k < n; ++k) {
        Rational mn = verts[0][k], mx = verts[0][k];
        for (const auto& v : verts) {
            if (v[k] < mn) mn = v[k];
            if (mx < v[k]) mx = v[k];
        }
        lo[k] = mn.ceil();
        hi[k] = mx.floor();
        if (lo[k] > hi[k]) return {};
    }
    std::vector<std::vector<Integer>> out;
    std::vector<Integer> x(n);
    auto scan = [&](auto&& self, std::size_t depth) -> void {
        if (depth == n) {
            std::vector<Rational> xr(n);
            for (std::size_t k = 0; k < n; ++k) xr[k] = Rational(x[k]);
            if (p.contains(xr)) out.push_back(x);
            return;
        }
        Integer a = lo[depth], b = hi[depth];
        for (std::size_t i = 0; i < p.facet_count() && a <= b; ++i) {
            const auto& v = p.facets()[i].normal;
            Rational fixed(0);
            for (std::size_t k = 0; k < depth; ++k) fixed += Rational(v[k] * x[k]);
            Rational rest_hi(0);
            for (std::size_t k = depth + 1; k < n; ++k)
                rest_hi += Rational(v[k] > 0 ? v[k] * hi[k] : v[k] * lo[k]);
            // need v[depth]*x_depth >= offset - fixed - rest_hi to be satisfiable
            Rational bound = p.facets()[i].offset - fixed - rest_hi;
            if (v[depth] > 0) {
                Integer c = (bound / Rational(v[depth])).ceil();
                if (c > a) a = c;
            } else if (v[depth] < 0) {
                Integer c = (bound / Rational(v[depth])).floor();
                if (c < b) b = c;
            } else if (bound.sign() > 0) {
                return;  // facet cannot be satisfied in this branch
            }
        }
        for (Integer t = a; t <= b; ++t) {
            x[depth] = t;
            self(self, depth + 1);
        }
    };
    scan(scan, 0);
    return out;
}

// Delta cut by affine equations <x, c_j> = r_j, rewritten on the solution
// subspace x = origin + embedding*y. The embedding columns are a basis of
// the saturated kernel lattice, so when the origin is integral the slice's
// lattice points in y-coordinates are exactly the Z^n points of the slice.
struct SlicedPolytope {
    HPolytope polytope{0, {}};     // in the y-coordinates, dim = kernel rank
    std::vector<Rational> origin;
    IntMatrix embedding;           // n x k
    bool integral_origin = false;
    bool constant_infeasible = false;  // an equation-killed facet was violated
};

inline SlicedPolytope slice(const HPolytope& p,
                            const std::vector<std::pair<std::vector<Integer>, Rational>>& eqs) {
    const std::size_t n = p.dim();
    IntMatrix c(eqs.size(), n);
    std::vector<Rational> r(eqs.size());
    for (std::size_t j = 0; j < eqs.size(); ++j) {
        if (eqs[j].first.size() != n) throw input_error("equation has wrong length");
        for (std::size_t k = 0; k < n; ++k) c(j, k) = eqs[j].first[k];
        r[j] = eqs[j].second;
    }
    auto x0 = solve(to_rational(c), r);
    if (!x0.has_value())
        throw math_error("InconsistentEquations", "slice equations have no solution");
    bool integral = true;
    for (const auto& v : *x0)
        if (!v.is_integer()) integral = false;
    if (!integral) {
        // a rational solution exists; check for an integer one
        bool rhs_integral = true;
        for (const auto& v : r)
            if (!v.is_integer()) rhs_integral = false;
        if (rhs_integral) {
            std::vector<Integer> ri(r.size());
            for (std::size_t j = 0; j < r.size(); ++j) ri[j] = r[j].num();
            auto xi = integer_solve(c, ri);
            if (xi.has_value()) {
                integral = true;
                for (std::size_t k = 0; k < n; ++k) (*x0)[k] = Rational((*xi)[k]);
            }
        }
    }
    IntMatrix b = kernel_lattice(c);
    const std::size_t k = b.cols();
    std::vector<Facet> induced;
    bool infeasible = false;
    for (std::size_t i = 0; i < p.facet_count(); ++i) {
        std::vector<Integer> u(k, Integer(0));
        for (std::size_t jj = 0; jj < k; ++jj)
            for (std::size_t kk = 0; kk < n; ++kk)
                u[jj] += b(kk, jj) * p.facets()[i].normal[kk];
        Rational mu = -p.slack(i, *x0);  // lambda_i - <x0, v_i>
        Integer g(0);
        for (const auto& e : u) g = int_gcd(g, e);
        if (g == 0) {
            if (mu.sign() > 0) infeasible = true;
            continue;
        }
        for (auto& e : u) e /= g;
        mu /= Rational(g);
        bool merged = false;
        for (auto& f : induced)
            if (f.normal == u) {
                if (f.offset < mu) f.offset = mu;
                merged = true;
                break;
            }
        if (!merged) induced.push_back(Facet{std::move(u), mu});
    }
    return SlicedPolytope{HPolytope(k, std::move(induced)), std::move(*x0), std::move(b),
                          integral, infeasible};
}

// lattice points of the slice as a subset of Z^n, in slice coordinates;
// empty when the affine subspace misses Z^n entirely
inline std::vector<std::vector<Integer>> slice_lattice_points(const SlicedPolytope& s) {
    if (s.constant_infeasible || !s.integral_origin) return {};
    return lattice_points(s.polytope);
}

}  // namespace toriq
