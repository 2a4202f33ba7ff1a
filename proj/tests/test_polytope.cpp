#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include <toriq/polytope.hpp>
#include <toriq/random.hpp>

#include "helpers.hpp"

using namespace toriq;

namespace {

Facet facet(std::initializer_list<int> n, int off) {
    std::vector<Integer> v;
    for (int x : n) v.emplace_back(x);
    return Facet{std::move(v), Rational(off)};
}

std::vector<Rational> rv(std::initializer_list<int> v) {
    std::vector<Rational> out;
    for (int x : v) out.emplace_back(x);
    return out;
}

std::vector<Integer> iv(std::initializer_list<int> v) {
    std::vector<Integer> out;
    for (int x : v) out.emplace_back(x);
    return out;
}

// x >= 0, y >= 0, x + y <= k
HPolytope simplex2(int k) {
    return HPolytope(2, {facet({1, 0}, 0), facet({0, 1}, 0), facet({-1, -1}, -k)});
}

HPolytope box2(int k) {
    return HPolytope(2, {facet({1, 0}, 0), facet({0, 1}, 0), facet({-1, 0}, -k),
                         facet({0, -1}, -k)});
}

const Face* find_face(const FacePoset& fp, const std::vector<std::size_t>& act) {
    for (const auto& f : fp.faces)
        if (f.active_set == act) return &f;
    return nullptr;
}

}  // namespace

TEST_CASE("h-polytope input validation") {
    REQUIRE_THROWS_AS(HPolytope(2, {facet({2, 0}, 0)}), input_error);
    REQUIRE_THROWS_AS(HPolytope(2, {facet({0, 0}, 1)}), input_error);
    REQUIRE_THROWS_AS(HPolytope(2, {facet({1}, 0)}), input_error);
    REQUIRE_THROWS_AS(HPolytope(1, {facet({1}, 0), facet({1}, 0)}), input_error);
    // same normal with a different offset is fine
    REQUIRE(HPolytope(1, {facet({1}, 0), facet({1}, 1)}).facet_count() == 2);
}

TEST_CASE("slack, containment, active sets") {
    HPolytope tri = simplex2(3);
    REQUIRE(tri.slack(2, rv({1, 1})) == Rational(1));
    REQUIRE(tri.contains(rv({0, 0})));
    REQUIRE(tri.contains(rv({1, 2})));
    REQUIRE_FALSE(tri.contains(rv({2, 2})));
    REQUIRE(tri.active_set(rv({0, 0})) == (std::vector<std::size_t>{0, 1}));
    REQUIRE(tri.active_set(rv({1, 1})).empty());
    REQUIRE(tri.active_set(rv({0, 3})) == (std::vector<std::size_t>{0, 2}));
}

TEST_CASE("vertex enumeration") {
    std::vector<std::vector<Rational>> want{rv({0, 0}), rv({0, 3}), rv({3, 0})};
    REQUIRE(enumerate_vertices(simplex2(3)) == want);

    HPolytope interval(1, {facet({1}, 0), facet({-1}, -1)});
    REQUIRE(enumerate_vertices(interval) ==
            (std::vector<std::vector<Rational>>{rv({0}), rv({1})}));

    REQUIRE(enumerate_vertices(HPolytope(0, {})).size() == 1);

    HPolytope half(2, {facet({1, 0}, 0)});
    REQUIRE(thrown_kind([&] { enumerate_vertices(half); }) == "Unbounded");

    HPolytope empty(1, {facet({1}, 1), facet({-1}, 1)});
    REQUIRE(thrown_kind([&] { enumerate_vertices(empty); }) == "Empty");

    // flat segment in the plane: lower dimensional but bounded
    HPolytope seg(2, {facet({1, 0}, 0), facet({-1, 0}, -1), facet({0, 1}, 0),
                      facet({0, -1}, 0)});
    REQUIRE(enumerate_vertices(seg) ==
            (std::vector<std::vector<Rational>>{rv({0, 0}), rv({1, 0})}));
}

TEST_CASE("face lattices") {
    FacePoset tri = face_lattice(simplex2(3));
    REQUIRE(tri.vertices.size() == 3);
    REQUIRE(tri.faces.size() == 7);
    REQUIRE(tri.order.size() == 12);

    const Face* whole = find_face(tri, {});
    REQUIRE(whole != nullptr);
    REQUIRE(whole->dim == 2);
    REQUIRE(whole->members.size() == 3);
    const Face* edge = find_face(tri, {0});
    REQUIRE(edge != nullptr);
    REQUIRE(edge->dim == 1);
    const Face* corner = find_face(tri, {0, 1});
    REQUIRE(corner != nullptr);
    REQUIRE(corner->dim == 0);
    REQUIRE(corner->witness == rv({0, 0}));

    REQUIRE(face_lattice(HPolytope(1, {facet({1}, 0), facet({-1}, -1)})).faces.size() == 3);
    REQUIRE(face_lattice(box2(1)).faces.size() == 9);
}

TEST_CASE("frontier condition") {
    FacePoset fp = face_lattice(simplex2(3));
    FrontierReport rep = frontier_check(fp);
    REQUIRE(rep.ok);
    REQUIRE(rep.violations.empty());
    REQUIRE(frontier_check(face_lattice(box2(2))).ok);

    // negative controls: a poset missing a face, and one with a bad witness
    FacePoset missing = fp;
    missing.faces.pop_back();
    REQUIRE_FALSE(frontier_check(missing).ok);

    FacePoset skewed = fp;
    skewed.faces[0].witness = rv({0, 0});
    if (skewed.faces[0].active_set == fp.polytope.active_set(rv({0, 0})))
        skewed.faces[0].witness = rv({1, 1});
    FrontierReport bad = frontier_check(skewed);
    REQUIRE_FALSE(bad.ok);
    REQUIRE_FALSE(bad.violations.empty());
}

TEST_CASE("delzant verification") {
    DelzantReport tri = verify_delzant(simplex2(3));
    REQUIRE(tri.surjective_on_lattice);
    REQUIRE(tri.simple);
    REQUIRE(tri.vertex_unimodular);
    REQUIRE(tri.pass());
    REQUIRE(tri.failing_vertices.empty());

    // weighted projective plane P(1,1,2): simple but not unimodular at (0,1)
    HPolytope wp(2, {facet({1, 0}, 0), facet({0, 1}, 0), facet({-1, -2}, -2)});
    DelzantReport wrep = verify_delzant(wp);
    REQUIRE(wrep.surjective_on_lattice);
    REQUIRE(wrep.simple);
    REQUIRE_FALSE(wrep.vertex_unimodular);
    REQUIRE_FALSE(wrep.pass());
    REQUIRE(wrep.failing_vertices == (std::vector<std::vector<Rational>>{rv({0, 1})}));

    // normals that span an index 2 sublattice
    HPolytope narrow(2, {facet({2, 1}, 0), facet({-2, 1}, 0), facet({0, -1}, -2)});
    DelzantReport nrep = verify_delzant(narrow);
    REQUIRE_FALSE(nrep.surjective_on_lattice);
    REQUIRE_FALSE(nrep.pass());

    // a redundant facet through a vertex kills simplicity
    HPolytope crowded(2, {facet({1, 0}, 0), facet({0, 1}, 0), facet({-1, -1}, -3),
                          facet({1, 1}, 0)});
    DelzantReport crep = verify_delzant(crowded);
    REQUIRE_FALSE(crep.simple);
    REQUIRE_FALSE(crep.pass());
    REQUIRE_FALSE(crep.failing_vertices.empty());
    REQUIRE(crep.failing_vertices[0] == rv({0, 0}));
}

TEST_CASE("lattice point enumeration") {
    HPolytope seg(1, {facet({1}, 0), facet({-1}, -5)});
    REQUIRE(lattice_points(seg).size() == 6);
    REQUIRE(lattice_points(seg)[0] == iv({0}));
    REQUIRE(lattice_points(seg)[5] == iv({5}));

    REQUIRE(lattice_points(simplex2(3)).size() == 10);
    REQUIRE(lattice_points(box2(2)).size() == 9);
    REQUIRE(lattice_points(HPolytope(0, {})).size() == 1);

    HPolytope empty(1, {facet({1}, 1), facet({-1}, 1)});
    REQUIRE(lattice_points(empty).empty());

    // non-integral vertices: [1/2, 3/2] holds exactly one integer
    HPolytope half(1, {Facet{iv({1}), Rational(Integer(1), Integer(2))},
                       Facet{iv({-1}), Rational(Integer(-3), Integer(2))}});
    REQUIRE(lattice_points(half) == (std::vector<std::vector<Integer>>{iv({1})}));
}

TEST_CASE("lattice points match a box filter") {
    Rng rng(71);
    for (int t = 0; t < 10; ++t) {
        int a = rng.next_int(-2, 1), b = rng.next_int(2, 4);
        int c = rng.next_int(-2, 0), d = rng.next_int(1, 3);
        HPolytope p(2, {facet({1, 0}, a), facet({-1, 0}, -b), facet({0, 1}, c),
                        facet({0, -1}, -d), facet({-1, -1}, -(b + d - 1))});
        auto pts = lattice_points(p);
        std::size_t count = 0;
        for (int x = a; x <= b; ++x)
            for (int y = c; y <= d; ++y)
                if (p.contains(rv({x, y}))) ++count;
        REQUIRE(pts.size() == count);
        REQUIRE(std::is_sorted(pts.begin(), pts.end()));
        for (const auto& q : pts) {
            std::vector<Rational> qr;
            for (const auto& e : q) qr.emplace_back(e);
            REQUIRE(p.contains(qr));
        }
    }
}

TEST_CASE("slicing by affine equations") {
    HPolytope sq = box2(2);
    SlicedPolytope s = slice(sq, {{iv({1, 1}), Rational(2)}});
    REQUIRE(s.polytope.dim() == 1);
    REQUIRE(s.integral_origin);
    REQUIRE_FALSE(s.constant_infeasible);
    REQUIRE(slice_lattice_points(s).size() == 3);

    // origin + embedding * y must land on the diagonal x + y = 2
    for (const auto& y : slice_lattice_points(s)) {
        std::vector<Rational> x(2);
        for (std::size_t k = 0; k < 2; ++k)
            x[k] = s.origin[k] + Rational(s.embedding(k, 0) * y[0]);
        REQUIRE(sq.contains(x));
        REQUIRE(x[0] + x[1] == Rational(2));
    }

    // no integral point on 2x + 2y = 1, though the rational slice is nonempty
    SlicedPolytope odd = slice(sq, {{iv({2, 2}), Rational(1)}});
    REQUIRE_FALSE(odd.integral_origin);
    REQUIRE(slice_lattice_points(odd).empty());

    // an equation that misses the polytope entirely
    SlicedPolytope off = slice(sq, {{iv({1, 0}), Rational(5)}});
    REQUIRE(off.constant_infeasible);
    REQUIRE(slice_lattice_points(off).empty());

    REQUIRE(thrown_kind([&] {
                slice(sq, {{iv({1, 1}), Rational(0)}, {iv({1, 1}), Rational(1)}});
            }) == "InconsistentEquations");
}

TEST_CASE("facet order does not matter") {
    HPolytope a = simplex2(3);
    HPolytope b(2, {facet({-1, -1}, -3), facet({0, 1}, 0), facet({1, 0}, 0)});
    REQUIRE(enumerate_vertices(a) == enumerate_vertices(b));
    REQUIRE(lattice_points(a) == lattice_points(b));
    REQUIRE(face_lattice(a).faces.size() == face_lattice(b).faces.size());
    REQUIRE(verify_delzant(a).pass() == verify_delzant(b).pass());
}

TEST_CASE("unimodular coordinate changes preserve the combinatorics") {
    Rng rng(72);
    HPolytope base = simplex2(3);
    for (int t = 0; t < 15; ++t) {
        // random unimodular u: transformed normals are u^{-T} v
        IntMatrix u = IntMatrix::identity(2);
        for (int s = 0; s < 5; ++s) {
            std::size_t i = rng.next_int(0, 1), j = 1 - i;
            Integer c(rng.next_int(-2, 2));
            for (std::size_t k = 0; k < 2; ++k) u(i, k) += c * u(j, k);
        }
        RatMatrix inv = *inverse(to_rational(u));
        std::vector<Facet> fs;
        for (const auto& f : base.facets()) {
            std::vector<Integer> n(2);
            for (std::size_t k = 0; k < 2; ++k) {
                Rational v(0);
                for (std::size_t j = 0; j < 2; ++j) v += inv(j, k) * Rational(f.normal[j]);
                REQUIRE(v.is_integer());
                n[k] = v.num();
            }
            fs.push_back(Facet{std::move(n), f.offset});
        }
        HPolytope moved(2, fs);
        REQUIRE(enumerate_vertices(moved).size() == 3);
        REQUIRE(lattice_points(moved).size() == 10);
        REQUIRE(face_lattice(moved).faces.size() == 7);
        REQUIRE(verify_delzant(moved).pass());
        REQUIRE(frontier_check(face_lattice(moved)).ok);
    }
}
