#include <catch2/catch_amalgamated.hpp>

#include <toriq/lagrangian.hpp>
#include <toriq/random.hpp>
#include <toriq/rep.hpp>

#include "helpers.hpp"

using namespace toriq;

namespace {

IntMatrix ints(std::size_t r, std::size_t c, std::initializer_list<int> v) {
    std::vector<Integer> e;
    for (int x : v) e.emplace_back(x);
    return IntMatrix(r, c, std::move(e));
}

RatMatrix units(std::size_t dim, std::initializer_list<std::size_t> idx) {
    RatMatrix m(dim, idx.size());
    std::size_t j = 0;
    for (auto i : idx) m(i, j++) = Rational(1);
    return m;
}

std::vector<Rational> rat_vec(std::initializer_list<int> v) {
    std::vector<Rational> out;
    for (int x : v) out.emplace_back(x);
    return out;
}

RatMatrix random_symmetric(Rng& rng, std::size_t n) {
    RatMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) a(i, j) = a(j, i) = rng.next_rational();
    return a;
}

GMatrix random_complex_symmetric(Rng& rng, std::size_t n) {
    GMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            a(i, j) = a(j, i) = Gaussian(rng.next_rational(), rng.next_rational());
    return a;
}

// graph Lagrangian {(x, Ax)} in standard coordinates (e..., f...)
template <class T>
Matrix<T> graph_lagrangian(const Matrix<T>& a) {
    return Matrix<T>::vcat(Matrix<T>::identity(a.rows()), a);
}

// L_V + L_W inside V + W with coordinates (x_V, y_V, x_W, y_W): a complex
// graph over x_V in the V block plus the lines span{e_j^W + sigma_j i f_j^W}
GMatrix block_sum_lagrangian(std::size_t nv, std::size_t nw, const GMatrix& av,
                             const std::vector<int>& sigma) {
    GMatrix m(2 * nv + 2 * nw, nv + nw);
    for (std::size_t k = 0; k < nv; ++k) {
        m(k, k) = Gaussian(1);
        for (std::size_t j = 0; j < nv; ++j) m(nv + j, k) = av(j, k);
    }
    for (std::size_t j = 0; j < nw; ++j) {
        m(2 * nv + j, nv + j) = Gaussian(1);
        m(2 * nv + nw + j, nv + j) =
            sigma[j] > 0 ? Gaussian::i() : Gaussian(Rational(0), Rational(-1));
    }
    return m;
}

// rotation by a quarter turn on the chosen coordinates of standard(n),
// identity elsewhere
RatMatrix quarter_turn(std::size_t n, std::initializer_list<std::size_t> coords) {
    RatMatrix g = RatMatrix::identity(2 * n);
    for (auto j : coords) {
        g(j, j) = Rational(0);
        g(n + j, n + j) = Rational(0);
        g(j, n + j) = Rational(-1);
        g(n + j, j) = Rational(1);
    }
    return g;
}

}  // namespace

TEST_CASE("subtorus validation") {
    Subtorus full = Subtorus::full(3);
    REQUIRE(full.rank() == 3);
    Subtorus triv = Subtorus::trivial(3);
    REQUIRE(triv.rank() == 0);
    REQUIRE(triv.ambient_rank() == 3);

    REQUIRE(Subtorus(2, ints(1, 2, {1, 2})).rank() == 1);
    REQUIRE_THROWS_AS(Subtorus(2, ints(1, 2, {2, 0})), input_error);
    REQUIRE_THROWS_AS(Subtorus(2, ints(2, 2, {1, 0, 2, 0})), input_error);
    REQUIRE_THROWS_AS(Subtorus(2, ints(2, 2, {1, 0, 0, 2})), input_error);
    REQUIRE_THROWS_AS(Subtorus(3, ints(1, 2, {1, 0})), input_error);
}

TEST_CASE("weight rep validation and the pairing matrix") {
    WeightRep rep(1, ints(2, 1, {1, 2}));
    REQUIRE(rep.coords() == 2);
    REQUIRE(rep.dim() == 4);
    REQUIRE(rep.shift == rat_vec({0}));

    REQUIRE_THROWS_AS(WeightRep(2, ints(1, 1, {1})), input_error);
    REQUIRE_THROWS_AS(WeightRep(1, ints(1, 1, {1}), rat_vec({1, 2})), input_error);

    REQUIRE(pairing_matrix(rep, Subtorus::full(1)) == ints(2, 1, {1, 2}));
    REQUIRE_THROWS_AS(pairing_matrix(rep, Subtorus::full(2)), input_error);
}

TEST_CASE("fixed subspaces of weight representations") {
    WeightRep rep12(1, ints(2, 1, {1, 2}));
    REQUIRE(fixed_subspace(rep12).dim() == 0);
    REQUIRE(classify_subspace(fixed_subspace(rep12)) == SubspaceKind::isotropic);

    Subspace all = fixed_subspace(rep12, Subtorus::trivial(1));
    REQUIRE(all.dim() == 4);

    WeightRep rep03(1, ints(2, 1, {0, 3}));
    Subspace fixed = fixed_subspace(rep03);
    REQUIRE(fixed == Subspace::real(rep03.space(), units(4, {0, 2})));
    REQUIRE(classify_subspace(fixed) == SubspaceKind::symplectic);
}

TEST_CASE("fixed subspace is symplectic") {
    Rng rng(61);
    for (int t = 0; t < 40; ++t) {
        std::size_t d = rng.next_int(1, 3), m = rng.next_int(1, 4);
        IntMatrix w(m, d);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < d; ++j) w(i, j) = Integer(rng.next_int(-3, 3));
        WeightRep rep(d, w);
        Subspace fixed = fixed_subspace(rep);
        if (fixed.dim() == 0) continue;
        // the form stays nondegenerate on V^K; the classifier only says
        // "symplectic" for proper subspaces (the whole space reads coisotropic)
        Subspace comp = symplectic_complement(fixed);
        REQUIRE(span_intersection(fixed.basis(), comp.basis()).cols() == 0);
        if (fixed.dim() < rep.dim())
            REQUIRE(classify_subspace(fixed) == SubspaceKind::symplectic);
    }
}

TEST_CASE("quadratic momentum on the pinned examples") {
    WeightRep one(1, ints(1, 1, {1}));
    REQUIRE(quadratic_momentum(one, rat_vec({3, 4}), rat_vec({1})) ==
            Rational(Integer(25), Integer(2)));
    REQUIRE(quadratic_momentum(one, rat_vec({0, 0}), rat_vec({1})) == Rational(0));

    WeightRep three(1, ints(1, 1, {3}));
    REQUIRE(quadratic_momentum(three, rat_vec({1, 0}), rat_vec({1})) ==
            Rational(Integer(3), Integer(2)));

    WeightRep shifted(1, ints(1, 1, {1}), rat_vec({2}));
    REQUIRE(quadratic_momentum(shifted, rat_vec({0, 0}), rat_vec({1})) == Rational(-2));
    REQUIRE(momentum_vector(shifted, rat_vec({3, 4})) ==
            std::vector<Rational>{Rational(Integer(21), Integer(2))});

    REQUIRE_THROWS_AS(quadratic_momentum(one, rat_vec({1}), rat_vec({1})), input_error);
    REQUIRE_THROWS_AS(quadratic_momentum(one, rat_vec({1, 0}), rat_vec({1, 0})), input_error);
}

TEST_CASE("the fundamental field is in the symplectic Lie algebra") {
    Rng rng(62);
    for (int t = 0; t < 40; ++t) {
        std::size_t d = rng.next_int(1, 3), m = rng.next_int(1, 4);
        IntMatrix w(m, d);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < d; ++j) w(i, j) = Integer(rng.next_int(-3, 3));
        WeightRep rep(d, w);
        std::vector<Rational> xi(d);
        for (auto& x : xi) x = rng.next_rational();
        RatMatrix a = fundamental_field_matrix(rep, xi);
        SymplecticSpace s = rep.space();
        REQUIRE(a.transpose() * s.form() + s.form() * a == RatMatrix(2 * m, 2 * m));
    }
}

TEST_CASE("momentum differential pairs with the fundamental field") {
    Rng rng(63);
    for (int t = 0; t < 60; ++t) {
        std::size_t d = rng.next_int(1, 3), m = rng.next_int(1, 4);
        IntMatrix w(m, d);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < d; ++j) w(i, j) = Integer(rng.next_int(-3, 3));
        WeightRep rep(d, w);
        std::vector<Rational> xi(d), v(2 * m), u(2 * m);
        for (auto& x : xi) x = rng.next_rational();
        for (auto& x : v) x = rng.next_rational();
        for (auto& x : u) x = rng.next_rational();
        // polarization of the quadratic: J(v+u) - J(v) - J(u) = omega(A v, u)
        std::vector<Rational> vu(2 * m);
        for (std::size_t i = 0; i < 2 * m; ++i) vu[i] = v[i] + u[i];
        Rational lhs = quadratic_momentum(rep, vu, xi) - quadratic_momentum(rep, v, xi) -
                       quadratic_momentum(rep, u, xi);
        RatMatrix a = fundamental_field_matrix(rep, xi);
        REQUIRE(lhs == rep.space().omega(a * v, u));
    }
}

TEST_CASE("torus elements act by exact rotations") {
    WeightRep rep(1, ints(2, 1, {1, 2}));
    auto p = circle_point(Rational(Integer(1), Integer(2)));
    REQUIRE(p.first == Rational(Integer(3), Integer(5)));
    REQUIRE(p.second == Rational(Integer(4), Integer(5)));

    RatMatrix g = torus_element_matrix(rep, {p});
    REQUIRE(is_symplectic_matrix(rep.space(), g));
    // weight 2 coordinate turns twice: (c, s)^2 = (-7/25, 24/25)
    REQUIRE(g(1, 1) == Rational(Integer(-7), Integer(25)));
    REQUIRE(g(1, 3) == Rational(Integer(-24), Integer(25)));
    REQUIRE(g(3, 1) == Rational(Integer(24), Integer(25)));

    WeightRep neg(1, ints(1, 1, {-1}));
    RatMatrix gn = torus_element_matrix(neg, {p});
    REQUIRE(gn(0, 0) == Rational(Integer(3), Integer(5)));
    REQUIRE(gn(0, 1) == Rational(Integer(4), Integer(5)));

    REQUIRE_THROWS_AS(torus_element_matrix(rep, {{Rational(1), Rational(1)}}), input_error);
    REQUIRE_THROWS_AS(torus_element_matrix(rep, {}), input_error);
}

TEST_CASE("momentum is invariant along the action") {
    Rng rng(64);
    WeightRep rep(2, ints(3, 2, {1, 0, 0, 1, 2, -1}), rat_vec({1, -3}));
    for (int t = 0; t < 25; ++t) {
        auto p1 = circle_point(rng.next_rational());
        auto p2 = circle_point(rng.next_rational());
        RatMatrix g = torus_element_matrix(rep, {p1, p2});
        REQUIRE(is_symplectic_matrix(rep.space(), g));
        std::vector<Rational> v(rep.dim());
        for (auto& x : v) x = rng.next_rational();
        REQUIRE(momentum_vector(rep, g * v) == momentum_vector(rep, v));
    }
}

TEST_CASE("zero-level decomposition checks on the pinned reps") {
    WeightRep w10(1, ints(2, 1, {1, 0}));
    REQUIRE(momentum_zero_decomposition_check(w10, 100));
    // the fixed plane is the second coordinate, and J vanishes there
    REQUIRE(quadratic_momentum(w10, rat_vec({0, 3, 0, -2}), rat_vec({1})) == Rational(0));

    WeightRep zeros(1, ints(2, 1, {0, 0}));
    REQUIRE(momentum_zero_decomposition_check(zeros, 100));

    WeightRep pm(1, ints(2, 1, {1, -1}));
    REQUIRE(momentum_zero_decomposition_check(pm, 100));
    // |z1| = |z2| lies on the zero level
    REQUIRE(quadratic_momentum(pm, rat_vec({1, 2, 2, -1}), rat_vec({1})) == Rational(0));

    WeightRep two(2, ints(3, 2, {1, 0, 0, 1, 1, 1}));
    REQUIRE(momentum_zero_decomposition_check(two, Subtorus(2, ints(1, 2, {1, -1})), 50));
    REQUIRE(momentum_zero_decomposition_check(two, Subtorus::trivial(2), 10));
}

TEST_CASE("finite symplectic groups") {
    SymplecticSpace s2 = SymplecticSpace::standard(2);
    FiniteGroupRep pm(s2, {-RatMatrix::identity(4)});
    REQUIRE(pm.order() == 2);
    REQUIRE(fixed_subspace(pm).dim() == 0);

    SymplecticSpace s1 = SymplecticSpace::standard(1);
    FiniteGroupRep z4(s1, {quarter_turn(1, {0})});
    REQUIRE(z4.order() == 4);
    REQUIRE(fixed_subspace(z4).dim() == 0);

    RatMatrix scale{{Rational(2), Rational(0)}, {Rational(0), Rational(1)}};
    REQUIRE(thrown_kind([&] { FiniteGroupRep bad(s1, {scale}); }) == "NotSymplectic");

    RatMatrix shear{{Rational(1), Rational(1)}, {Rational(0), Rational(1)}};
    REQUIRE(thrown_kind([&] { FiniteGroupRep inf(s1, {shear}, 64); }) == "GroupNotFinite");
}

TEST_CASE("invariant subspaces under an action") {
    WeightRep rep12(1, ints(2, 1, {1, 2}));
    LinearAction act = action_of(rep12);
    REQUIRE(is_invariant_subspace(act, Subspace::real(rep12.space(), units(4, {0, 2}))));
    REQUIRE_FALSE(is_invariant_subspace(act, Subspace::real(rep12.space(), units(4, {0}))));
    REQUIRE(fixed_subspace(act) == fixed_subspace(rep12));

    FiniteGroupRep pm(SymplecticSpace::standard(2), {-RatMatrix::identity(4)});
    LinearAction fact = action_of(pm);
    // -id preserves every subspace
    REQUIRE(is_invariant_subspace(fact, Subspace::real(pm.space(), units(4, {1, 3}))));
}

TEST_CASE("singular reduction with trivial group and W = 0 is plain reduction") {
    Rng rng(65);
    SymplecticSpace v = SymplecticSpace::standard(2);
    SymplecticSpace w0 = SymplecticSpace::standard(0);
    FiniteGroupRep kv(v, {});
    FiniteGroupRep kw(w0, {});

    Subspace f = Subspace::real(v, graph_lagrangian(random_symmetric(rng, 2)));
    Subspace l = Subspace::complex(v, graph_lagrangian(random_complex_symmetric(rng, 2)));

    SingularReduction sr = singular_reduce_lagrangian(kv, kw, f, l);
    REQUIRE(sr.c == Subspace::real(v, f.real_basis()));
    LagrangianReduction direct = reduce_lagrangian_full(l, f);
    REQUIRE(sr.red.l0 == direct.l0);
    REQUIRE(sr.red.l0_kind == SubspaceKind::lagrangian);
    REQUIRE(sr.red.reduction.space.dim() == 0);
}

TEST_CASE("the Z2 model case") {
    // K = Z2 by -id on V = R^2, trivial on W = R^2; F = span{e1_V};
    // L = span{e1_V, e_W + i f_W}
    SymplecticSpace v = SymplecticSpace::standard(1);
    SymplecticSpace w = SymplecticSpace::standard(1);
    FiniteGroupRep kv(v, {-RatMatrix::identity(2)});
    FiniteGroupRep kw(w, {RatMatrix::identity(2)});

    Subspace f = Subspace::real(v, units(2, {0}));

    SymplecticSpace vw(block_diag(v.form(), w.form()));
    GMatrix lb(4, 2);
    lb(0, 0) = Gaussian(1);       // e1_V
    lb(2, 1) = Gaussian(1);       // e_W
    lb(3, 1) = Gaussian::i();     // + i f_W
    Subspace l = Subspace::complex(vw, lb);

    SingularReduction sr = singular_reduce_lagrangian(kv, kw, f, l);
    REQUIRE(sr.c == Subspace::real(vw, units(4, {0, 2, 3})));
    REQUIRE(sr.red.reduction.space.dim() == 2);
    REQUIRE(sr.red.l0_kind == SubspaceKind::lagrangian);

    GMatrix want(2, 1, {Gaussian(1), Gaussian::i()});
    REQUIRE(sr.red.l0 == Subspace::complex(sr.red.reduction.space, want));
    REQUIRE(lagrangian_type(sr.red.l0) == LagrangianType::totally_complex);
}

TEST_CASE("invariance violations are reported") {
    SymplecticSpace v = SymplecticSpace::standard(1);
    SymplecticSpace w = SymplecticSpace::standard(1);
    SymplecticSpace vw(block_diag(v.form(), w.form()));

    // Z4 rotation on V admits no invariant real line
    FiniteGroupRep kv4(v, {quarter_turn(1, {0})});
    FiniteGroupRep kw_triv(w, {RatMatrix::identity(2)});
    GMatrix lb(4, 2);
    lb(0, 0) = Gaussian(1);
    lb(1, 0) = Gaussian::i();  // e_V + i f_V, rotation-invariant line
    lb(2, 1) = Gaussian(1);
    lb(3, 1) = Gaussian::i();
    Subspace l = Subspace::complex(vw, lb);
    Subspace f = Subspace::real(v, units(2, {0}));
    REQUIRE(thrown_kind([&] { singular_reduce_lagrangian(kv4, kw_triv, f, l); }) ==
            "InvarianceViolation");

    // with K = Z2 the same F is invariant, but this L is not
    FiniteGroupRep kv2(v, {-RatMatrix::identity(2)});
    GMatrix mixed(4, 2);
    mixed(0, 0) = Gaussian(1);   // e_V + e_W
    mixed(2, 0) = Gaussian(1);
    mixed(1, 1) = Gaussian(-1);  // f_W - f_V
    mixed(3, 1) = Gaussian(1);
    Subspace lbad = Subspace::complex(vw, mixed);
    REQUIRE(thrown_kind([&] { singular_reduce_lagrangian(kv2, kw_triv, f, lbad); }) ==
            "InvarianceViolation");

    REQUIRE_THROWS_AS(singular_reduce_lagrangian(kv2, FiniteGroupRep(w, {}), f, l),
                      input_error);
}

TEST_CASE("random invariant inputs reduce to lagrangians: Z2 on V") {
    Rng rng(66);
    for (int t = 0; t < 20; ++t) {
        std::size_t nv = rng.next_int(1, 2), nw = rng.next_int(1, 2);
        SymplecticSpace v = SymplecticSpace::standard(nv);
        SymplecticSpace w = SymplecticSpace::standard(nw);
        FiniteGroupRep kv(v, {-RatMatrix::identity(2 * nv)});
        FiniteGroupRep kw(w, {RatMatrix::identity(2 * nw)});

        Subspace f = Subspace::real(v, graph_lagrangian(random_symmetric(rng, nv)));
        std::vector<int> sigma(nw);
        for (auto& s : sigma) s = rng.next_bool() ? 1 : -1;
        SymplecticSpace vw(block_diag(v.form(), w.form()));
        Subspace l = Subspace::complex(
            vw, block_sum_lagrangian(nv, nw, random_complex_symmetric(rng, nv), sigma));

        SingularReduction sr = singular_reduce_lagrangian(kv, kw, f, l);
        REQUIRE(sr.red.reduction.space.dim() == 2 * nw);
        REQUIRE(sr.red.l0_kind == SubspaceKind::lagrangian);
        REQUIRE(is_lagrangian(sr.red.l0));
    }
}

TEST_CASE("random invariant inputs reduce to lagrangians: Z4 on W") {
    Rng rng(67);
    for (int t = 0; t < 20; ++t) {
        std::size_t nv = rng.next_int(1, 2);
        SymplecticSpace v = SymplecticSpace::standard(nv);
        SymplecticSpace w = SymplecticSpace::standard(2);
        // quarter turn on the first W coordinate, identity on the second
        FiniteGroupRep kv(v, {RatMatrix::identity(2 * nv)});
        FiniteGroupRep kw(w, {quarter_turn(2, {0})});

        Subspace f = Subspace::real(v, graph_lagrangian(random_symmetric(rng, nv)));
        std::vector<int> sigma(2);
        for (auto& s : sigma) s = rng.next_bool() ? 1 : -1;
        SymplecticSpace vw(block_diag(v.form(), w.form()));
        Subspace l = Subspace::complex(
            vw, block_sum_lagrangian(nv, 2, random_complex_symmetric(rng, nv), sigma));

        SingularReduction sr = singular_reduce_lagrangian(kv, kw, f, l);
        // W^K is the fixed coordinate plane, so the reduction has dimension 2
        REQUIRE(sr.red.reduction.space.dim() == 2);
        REQUIRE(sr.red.l0_kind == SubspaceKind::lagrangian);
        REQUIRE(lagrangian_type(sr.red.l0) == LagrangianType::totally_complex);
    }
}

TEST_CASE("weight-rep flavored singular reduction") {
    // S^1 with weight 1 on W = C, trivial V = C: same model through the
    // weight-rep overloads
    Rng rng(68);
    WeightRep repv(1, ints(1, 1, {0}));
    WeightRep repw(1, ints(1, 1, {1}));
    SymplecticSpace v = repv.space(), w = repw.space();
    Subspace f = Subspace::real(v, graph_lagrangian(random_symmetric(rng, 1)));
    std::vector<int> sigma{1};
    SymplecticSpace vw(block_diag(v.form(), w.form()));
    Subspace l = Subspace::complex(
        vw, block_sum_lagrangian(1, 1, random_complex_symmetric(rng, 1), sigma));
    SingularReduction sr = singular_reduce_lagrangian(repv, repw, f, l);
    // W^K = 0: C = F and the reduction collapses to a point
    REQUIRE(sr.red.reduction.space.dim() == 0);
    REQUIRE(sr.red.l0_kind == SubspaceKind::lagrangian);
    REQUIRE_THROWS_AS(singular_reduce_lagrangian(repv, WeightRep(2, ints(1, 2, {1, 0})), f, l),
                      input_error);
}
