#include <catch2/catch_amalgamated.hpp>

#include <toriq/quant.hpp>

#include "helpers.hpp"

using namespace toriq;

namespace {

Facet facet(std::initializer_list<int> n, int off) {
    std::vector<Integer> v;
    for (int x : n) v.emplace_back(x);
    return Facet{std::move(v), Rational(off)};
}

std::vector<Integer> iv(std::initializer_list<int> v) {
    std::vector<Integer> out;
    for (int x : v) out.emplace_back(x);
    return out;
}

IntMatrix ints(std::size_t r, std::size_t c, std::initializer_list<int> v) {
    std::vector<Integer> e;
    for (int x : v) e.emplace_back(x);
    return IntMatrix(r, c, std::move(e));
}

HPolytope cp1(int k) { return HPolytope(1, {facet({1}, 0), facet({-1}, -k)}); }

HPolytope cp2(int k) {
    return HPolytope(2, {facet({1, 0}, 0), facet({0, 1}, 0), facet({-1, -1}, -k)});
}

HPolytope box(int lo1, int hi1, int lo2, int hi2) {
    return HPolytope(2, {facet({1, 0}, lo1), facet({0, 1}, lo2), facet({-1, 0}, -hi1),
                         facet({0, -1}, -hi2)});
}

DelzantData half_open_interval() {
    // [1/2, 3/2]: Delzant as a polytope, but lambda is not integral
    return build_delzant(
        HPolytope(1, {Facet{iv({1}), Rational(Integer(1), Integer(2))},
                      Facet{iv({-1}), Rational(Integer(-3), Integer(2))}}));
}

}  // namespace

TEST_CASE("prequantum integrality") {
    IntegralityReport good = prequantum_integrality(build_delzant(cp1(2)));
    REQUIRE(good.lambda_integral);
    REQUIRE(good.iota_lambda_integral);
    REQUIRE(good.pass());
    REQUIRE(good.iota_values == std::vector<Rational>{Rational(-2)});

    IntegralityReport bad = prequantum_integrality(half_open_interval());
    REQUIRE_FALSE(bad.lambda_integral);
    // <lambda, (1,1)> = 1/2 - 3/2 = -1 is integral even though lambda is not
    REQUIRE(bad.iota_lambda_integral);
    REQUIRE_FALSE(bad.pass());
    REQUIRE(bad.iota_values == std::vector<Rational>{Rational(-1)});

    DelzantData frac = build_delzant(
        HPolytope(1, {facet({1}, 0), Facet{iv({-1}), Rational(Integer(-1), Integer(2))}}));
    IntegralityReport worse = prequantum_integrality(frac);
    REQUIRE_FALSE(worse.iota_lambda_integral);
    REQUIRE(worse.iota_values == (std::vector<Rational>{Rational(Integer(-1), Integer(2))}));
}

TEST_CASE("quantization bases") {
    QuantBasis q1 = quantization_basis(build_delzant(cp1(5)));
    REQUIRE(q1.count() == 6);
    REQUIRE(q1.points.front() == iv({0}));
    REQUIRE(q1.exponents.front() == iv({0, 5}));
    REQUIRE(q1.exponents.back() == iv({5, 0}));

    DelzantData d2 = build_delzant(cp2(3));
    QuantBasis q2 = quantization_basis(d2);
    REQUIRE(q2.count() == 10);
    REQUIRE(q2.points.front() == iv({0, 0}));
    REQUIRE(q2.exponents.front() == iv({0, 0, 3}));
    // a = pi^T b - lambda, entrywise nonnegative, distinct per point
    for (std::size_t p = 0; p < q2.count(); ++p) {
        for (std::size_t i = 0; i < 3; ++i) {
            Integer want(0);
            for (std::size_t k = 0; k < 2; ++k) want += d2.pi(k, i) * q2.points[p][k];
            want -= d2.lambda[i].num();
            REQUIRE(q2.exponents[p][i] == want);
            REQUIRE(q2.exponents[p][i] >= 0);
        }
    }

    REQUIRE(quantization_basis(build_delzant(box(0, 2, 0, 2))).count() == 9);
    REQUIRE(thrown_kind([&] { quantization_basis(half_open_interval()); }) ==
            "IntegralityFailure");
}

TEST_CASE("kernel condition for subtori of the big torus") {
    DelzantData d = build_delzant(box(0, 2, 0, 2));

    KernelRhoReport diag = check_subtorus_in_kernel_rho(d, Subtorus(4, ints(1, 4, {1, -1, 0, 0})));
    REQUIRE(diag.in_kernel);
    REQUIRE(diag.pairings == std::vector<Rational>{Rational(0)});

    KernelRhoReport off = check_subtorus_in_kernel_rho(d, Subtorus(4, ints(1, 4, {0, 0, 1, 0})));
    REQUIRE_FALSE(off.in_kernel);
    REQUIRE(off.pairings == std::vector<Rational>{Rational(-2)});

    REQUIRE_THROWS_AS(check_subtorus_in_kernel_rho(d, Subtorus::full(2)), input_error);
    REQUIRE(thrown_kind([&] {
                invariant_subspace(quantization_basis(d), d, Subtorus(4, ints(1, 4, {0, 0, 1, 0})));
            }) == "KernelConditionViolated");
}

TEST_CASE("invariant subspaces and reduced polytopes on the square") {
    DelzantData d = build_delzant(box(0, 2, 0, 2));
    QuantBasis qb = quantization_basis(d);
    REQUIRE(qb.count() == 9);

    Subtorus diag(4, ints(1, 4, {1, -1, 0, 0}));
    QuantBasis inv = invariant_subspace(qb, d, diag);
    REQUIRE(inv.count() == 3);
    REQUIRE(inv.points == (std::vector<std::vector<Integer>>{iv({0, 0}), iv({1, 1}), iv({2, 2})}));

    ReducedPolytopeReport red = reduced_polytope(d, diag);
    REQUIRE_FALSE(red.empty);
    REQUIRE(red.sliced.polytope.dim() == 1);
    REQUIRE(red.is_delzant);
    REQUIRE(slice_lattice_points(red.sliced).size() == 3);

    // the trivial subtorus keeps everything
    QuantBasis all = invariant_subspace(qb, d, Subtorus::trivial(4));
    REQUIRE(all.count() == 9);
    ReducedPolytopeReport same = reduced_polytope(d, Subtorus::trivial(4));
    REQUIRE(slice_lattice_points(same.sliced).size() == 9);

    // x + y = 0 meets the square only at the origin
    Subtorus anti(4, ints(1, 4, {1, 1, 0, 0}));
    REQUIRE(invariant_subspace(qb, d, anti).count() == 1);
    ReducedPolytopeReport point = reduced_polytope(d, anti);
    REQUIRE_FALSE(point.empty);
    REQUIRE(slice_lattice_points(point.sliced).size() == 1);
    REQUIRE_FALSE(point.is_delzant);  // one vertex, two active facets
}

TEST_CASE("qr comparison on the square with the diagonal subtorus") {
    DelzantData d = build_delzant(box(0, 2, 0, 2));
    QRReport rep = qr_check(d, Subtorus(4, ints(1, 4, {1, -1, 0, 0})));
    REQUIRE(rep.integrality.pass());
    REQUIRE(rep.kernel_rho.in_kernel);
    REQUIRE(rep.total_count == 9);
    REQUIRE(rep.invariant_count == 3);
    REQUIRE(rep.reduced_count == 3);
    REQUIRE(rep.counts_equal);
    REQUIRE(rep.injective);
    REQUIRE(rep.reduced_is_delzant);
}

TEST_CASE("qr comparison with an empty reduced polytope") {
    DelzantData d = build_delzant(box(-3, -1, 1, 3));
    Subtorus h(4, ints(1, 4, {0, 3, 0, 1}));
    REQUIRE(check_subtorus_in_kernel_rho(d, h).in_kernel);
    QRReport rep = qr_check(d, h);
    REQUIRE(rep.total_count == 9);
    REQUIRE(rep.invariant_count == 0);
    REQUIRE(rep.reduced_count == 0);
    REQUIRE(rep.counts_equal);
    REQUIRE(rep.injective);
    REQUIRE(rep.reduced.empty);
    REQUIRE_FALSE(rep.reduced_is_delzant);
}

TEST_CASE("qr comparison on the simplex with a fractional reduced vertex") {
    DelzantData d = build_delzant(cp2(3));
    Subtorus h(3, ints(1, 3, {1, -1, 0}));
    QRReport rep = qr_check(d, h);
    REQUIRE(rep.total_count == 10);
    REQUIRE(rep.invariant_count == 2);
    REQUIRE(rep.reduced_count == 2);
    REQUIRE(rep.counts_equal);
    REQUIRE(rep.injective);
    // the reduced segment [0, 3/2] is Delzant although not a lattice polytope
    REQUIRE(rep.reduced_is_delzant);

    REQUIRE(thrown_kind([&] { qr_check(half_open_interval(), Subtorus::trivial(2)); }) ==
            "IntegralityFailure");
}
