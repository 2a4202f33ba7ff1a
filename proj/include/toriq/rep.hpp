#pragma once

// Symplectic representations at desk scale: subtori of T^d given by primitive
// lattice bases, torus weight representations on C^m (realized on R^{2m} with
// the standard form), finite rational symplectic matrix groups, fundamental
// vector fields, quadratic momentum maps, and the linear model of singular
// Lagrangian reduction C = F + W^K.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "lagrangian.hpp"
#include "linalg.hpp"
#include "matrix.hpp"
#include "normal_form.hpp"
#include "random.hpp"
#include "rational.hpp"
#include "symplectic.hpp"

namespace toriq {

// Connected subtorus H <= T^N described by a primitive basis of its integer
// Lie-algebra lattice (rows). Primitivity makes H embedded: we reject bases
// whose SNF has an invariant factor > 1 rather than silently working with a
// disconnected "subgroup".
class Subtorus {
  public:
    Subtorus(std::size_t ambient_rank, IntMatrix basis)
        : ambient_rank_(ambient_rank), basis_(std::move(basis)) {
        if (basis_.rows() > 0 && basis_.cols() != ambient_rank_)
            throw input_error("subtorus basis rows must have length ambient_rank");
        if (basis_.rows() == 0) basis_ = IntMatrix(0, ambient_rank_);
        Snf s = smith_normal_form(basis_);
        if (lattice_rank(s) != basis_.rows())
            throw input_error("subtorus basis rows must be linearly independent");
        for (std::size_t i = 0; i < basis_.rows(); ++i)
            if (s.d[i] != 1)
                throw input_error("subtorus basis must be primitive (SNF factor " +
                                  s.d[i].get_str() + " found)");
    }

    static Subtorus full(std::size_t rank) { return Subtorus(rank, IntMatrix::identity(rank)); }
    static Subtorus trivial(std::size_t rank) { return Subtorus(rank, IntMatrix(0, rank)); }

    std::size_t ambient_rank() const { return ambient_rank_; }
    std::size_t rank() const { return basis_.rows(); }
    const IntMatrix& basis() const { return basis_; }

  private:
    std::size_t ambient_rank_;
    IntMatrix basis_;
};

// T^d acting on C^m with weight w_j on the j-th coordinate; underlying real
// space is R^{2m} with coordinates (x_1..x_m, y_1..y_m) and the standard
// form. shift is the momentum offset lambda (empty means 0).
struct WeightRep {
    std::size_t torus_rank;
    IntMatrix weights;             // m x d, row j = w_j
    std::vector<Rational> shift;   // in Q^d

    WeightRep(std::size_t d, IntMatrix w, std::vector<Rational> s = {})
        : torus_rank(d), weights(std::move(w)), shift(std::move(s)) {
        if (weights.rows() > 0 && weights.cols() != torus_rank)
            throw input_error("weight vectors must have length torus_rank");
        if (weights.rows() == 0) weights = IntMatrix(0, torus_rank);
        if (shift.empty()) shift.assign(torus_rank, Rational(0));
        if (shift.size() != torus_rank)
            throw input_error("shift vector must have length torus_rank");
    }

    std::size_t coords() const { return weights.rows(); }
    std::size_t dim() const { return 2 * weights.rows(); }
    SymplecticSpace space() const { return SymplecticSpace::standard(coords()); }
};

// pairings <w_j, eta_i> as an m x r matrix (row per coordinate, column per
// subtorus generator)
inline IntMatrix pairing_matrix(const WeightRep& rep, const Subtorus& h) {
    if (h.ambient_rank() != rep.torus_rank)
        throw input_error("subtorus ambient rank does not match torus_rank");
    return rep.weights * h.basis().transpose();
}

// A_xi, the matrix of the fundamental vector field at xi: with a_j = <w_j,xi>
// it sends e_j to -a_j f_j and f_j to a_j e_j, so J^xi = 1/2 sum a_j |z_j|^2.
inline RatMatrix fundamental_field_matrix(const WeightRep& rep, const std::vector<Rational>& xi) {
    if (xi.size() != rep.torus_rank) throw input_error("xi must have length torus_rank");
    const std::size_t m = rep.coords();
    RatMatrix a(2 * m, 2 * m);
    for (std::size_t j = 0; j < m; ++j) {
        Rational aj(0);
        for (std::size_t i = 0; i < rep.torus_rank; ++i) aj += Rational(rep.weights(j, i)) * xi[i];
        a(m + j, j) = -aj;
        a(j, m + j) = aj;
    }
    return a;
}

namespace detail {

struct Rot {
    Rational c, s;  // a point on the rational unit circle

    Rot inv() const { return {c, -s}; }
    Rot operator*(const Rot& o) const { return {c * o.c - s * o.s, c * o.s + s * o.c}; }

    static Rot pow(Rot r, Integer e) {
        if (e < 0) {
            r = r.inv();
            e = -e;
        }
        Rot acc{Rational(1), Rational(0)};
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) acc = acc * r;
            r = r * r;
            e /= 2;
        }
        return acc;
    }
};

}  // namespace detail

// The torus element with parameters t_i = (c_i, s_i) on the rational circle,
// acting on coordinate j as rotation by the w_j-weighted combination. Exact
// because rational circle points form a group.
inline RatMatrix torus_element_matrix(const WeightRep& rep,
                                      const std::vector<std::pair<Rational, Rational>>& params) {
    if (params.size() != rep.torus_rank)
        throw input_error("need one circle parameter per torus factor");
    for (const auto& [c, s] : params)
        if (c * c + s * s != Rational(1))
            throw input_error("torus parameter is not on the unit circle");
    const std::size_t m = rep.coords();
    RatMatrix g(2 * m, 2 * m);
    for (std::size_t j = 0; j < m; ++j) {
        detail::Rot r{Rational(1), Rational(0)};
        for (std::size_t i = 0; i < rep.torus_rank; ++i) {
            detail::Rot base{params[i].first, params[i].second};
            r = r * detail::Rot::pow(base, rep.weights(j, i));
        }
        g(j, j) = r.c;
        g(j, m + j) = -r.s;
        g(m + j, j) = r.s;
        g(m + j, m + j) = r.c;
    }
    return g;
}

// rational circle point from the tangent-half-angle parameter
inline std::pair<Rational, Rational> circle_point(const Rational& t) {
    Rational d = Rational(1) + t * t;
    return {(Rational(1) - t * t) / d, (t + t) / d};
}

// V^H for a weight representation: the coordinates whose weights annihilate
// the subtorus, as a real subspace of R^{2m}.
inline Subspace fixed_subspace(const WeightRep& rep, const Subtorus& h) {
    IntMatrix m = pairing_matrix(rep, h);
    std::vector<std::size_t> fixed;
    for (std::size_t j = 0; j < rep.coords(); ++j) {
        bool zero = true;
        for (std::size_t i = 0; i < m.cols(); ++i)
            if (m(j, i) != 0) zero = false;
        if (zero) fixed.push_back(j);
    }
    RatMatrix basis(rep.dim(), 2 * fixed.size());
    for (std::size_t k = 0; k < fixed.size(); ++k) {
        basis(fixed[k], 2 * k) = Rational(1);
        basis(rep.coords() + fixed[k], 2 * k + 1) = Rational(1);
    }
    return Subspace::real(rep.space(), basis);
}

inline Subspace fixed_subspace(const WeightRep& rep) {
    return fixed_subspace(rep, Subtorus::full(rep.torus_rank));
}

// A finite group of exact symplectic matrices, closed under multiplication.
// Finiteness is verified by enumerating the generated group up to a bound.
class FiniteGroupRep {
  public:
    FiniteGroupRep(SymplecticSpace space, std::vector<RatMatrix> generators,
                   std::size_t order_bound = 1024)
        : space_(std::move(space)), generators_(std::move(generators)) {
        for (const auto& g : generators_)
            if (!is_symplectic_matrix(space_, g))
                throw math_error("NotSymplectic", "group generator does not preserve the form");
        elements_.push_back(RatMatrix::identity(space_.dim()));
        for (std::size_t head = 0; head < elements_.size(); ++head) {
            RatMatrix cur = elements_[head];
            for (const auto& g : generators_) {
                RatMatrix prod = g * cur;
                bool known = false;
                for (const auto& e : elements_)
                    if (e == prod) {
                        known = true;
                        break;
                    }
                if (!known) {
                    if (elements_.size() >= order_bound)
                        throw math_error("GroupNotFinite",
                                         "generated group exceeds the order bound");
                    elements_.push_back(std::move(prod));
                }
            }
        }
    }

    const SymplecticSpace& space() const { return space_; }
    const std::vector<RatMatrix>& generators() const { return generators_; }
    const std::vector<RatMatrix>& elements() const { return elements_; }
    std::size_t order() const { return elements_.size(); }

  private:
    SymplecticSpace space_;
    std::vector<RatMatrix> generators_;
    std::vector<RatMatrix> elements_;
};

// V^K for the subgroup generated by the chosen generators (all by default):
// the common kernel of g - id.
inline Subspace fixed_subspace(const FiniteGroupRep& rep,
                               const std::vector<std::size_t>& generator_subset) {
    RatMatrix stacked(0, rep.space().dim());
    for (auto gi : generator_subset) {
        assert(gi < rep.generators().size());
        stacked = RatMatrix::vcat(
            stacked, rep.generators()[gi] - RatMatrix::identity(rep.space().dim()));
    }
    return Subspace::real(rep.space(), kernel_basis(stacked));
}

inline Subspace fixed_subspace(const FiniteGroupRep& rep) {
    std::vector<std::size_t> all;
    for (std::size_t i = 0; i < rep.generators().size(); ++i) all.push_back(i);
    return fixed_subspace(rep, all);
}

// J^xi(v) = 1/2 omega(A_xi v, v) - <shift, xi>. The unshifted part is the
// momentum of the linear action; the shift follows the representation's
// lambda so that delzant-style offsets can be carried along.
inline Rational quadratic_momentum(const WeightRep& rep, const std::vector<Rational>& v,
                                   const std::vector<Rational>& xi) {
    if (v.size() != rep.dim()) throw input_error("point has wrong dimension");
    if (xi.size() != rep.torus_rank) throw input_error("xi must have length torus_rank");
    RatMatrix a = fundamental_field_matrix(rep, xi);
    SymplecticSpace s = rep.space();
    Rational value = s.omega(a * v, v) / Rational(2);
    for (std::size_t i = 0; i < rep.torus_rank; ++i) value -= rep.shift[i] * xi[i];
    return value;
}

inline std::vector<Rational> momentum_vector(const WeightRep& rep,
                                             const std::vector<Rational>& v) {
    std::vector<Rational> out(rep.torus_rank, Rational(0));
    for (std::size_t i = 0; i < rep.torus_rank; ++i) {
        std::vector<Rational> xi(rep.torus_rank, Rational(0));
        xi[i] = Rational(1);
        out[i] = quadratic_momentum(rep, v, xi);
    }
    return out;
}

// Checks the decomposition J_V^{-1}(0) = J_W^{-1}(0) + V^K on deterministic
// samples, for the unshifted momentum of the subtorus action: writing
// v = v^K + w along the splitting V = V^K + W, verifies J(v^K) = 0 and
// J(v) = J(w) componentwise, which gives the zero-level identity exactly.
inline bool momentum_zero_decomposition_check(const WeightRep& rep, const Subtorus& h,
                                              std::size_t samples,
                                              std::uint64_t seed = 0x746f7269u) {
    WeightRep unshifted(rep.torus_rank, rep.weights);
    IntMatrix m = pairing_matrix(rep, h);
    std::vector<bool> is_fixed(rep.coords(), true);
    for (std::size_t j = 0; j < rep.coords(); ++j)
        for (std::size_t i = 0; i < m.cols(); ++i)
            if (m(j, i) != 0) is_fixed[j] = false;
    Rng rng(seed);
    auto momentum_h = [&](const std::vector<Rational>& v) {
        std::vector<Rational> out;
        for (std::size_t i = 0; i < h.rank(); ++i) {
            std::vector<Rational> xi(rep.torus_rank);
            for (std::size_t k = 0; k < rep.torus_rank; ++k) xi[k] = Rational(h.basis()(i, k));
            out.push_back(quadratic_momentum(unshifted, v, xi));
        }
        return out;
    };
    for (std::size_t t = 0; t < samples; ++t) {
        std::vector<Rational> vk(rep.dim(), Rational(0)), w(rep.dim(), Rational(0)),
            v(rep.dim(), Rational(0));
        for (std::size_t j = 0; j < rep.coords(); ++j) {
            Rational x = rng.next_rational(), y = rng.next_rational();
            if (is_fixed[j]) {
                vk[j] = x;
                vk[rep.coords() + j] = y;
            } else {
                w[j] = x;
                w[rep.coords() + j] = y;
            }
        }
        for (std::size_t i = 0; i < rep.dim(); ++i) v[i] = vk[i] + w[i];
        std::vector<Rational> jk = momentum_h(vk), jv = momentum_h(v), jw = momentum_h(w);
        for (std::size_t i = 0; i < h.rank(); ++i) {
            if (!jk[i].is_zero()) return false;  // J must vanish on V^K
            if (jv[i] != jw[i]) return false;    // J(v^K + w) = J(w)
        }
    }
    return true;
}

inline bool momentum_zero_decomposition_check(const WeightRep& rep, std::size_t samples,
                                              std::uint64_t seed = 0x746f7269u) {
    return momentum_zero_decomposition_check(rep, Subtorus::full(rep.torus_rank), samples, seed);
}

// The two acting-group flavors reduced to a common shape: a subspace S is
// invariant iff op*S <= S for every invariance op, and the fixed subspace is
// the common kernel of the fixed ops.
struct LinearAction {
    SymplecticSpace space;
    std::vector<RatMatrix> invariance_ops;
    std::vector<RatMatrix> fixed_ops;
};

inline LinearAction action_of(const FiniteGroupRep& rep) {
    std::vector<RatMatrix> fixed;
    for (const auto& g : rep.generators())
        fixed.push_back(g - RatMatrix::identity(rep.space().dim()));
    return LinearAction{rep.space(), rep.generators(), std::move(fixed)};
}

inline LinearAction action_of(const WeightRep& rep, const Subtorus& h) {
    std::vector<RatMatrix> ops;
    for (std::size_t i = 0; i < h.rank(); ++i) {
        std::vector<Rational> xi(rep.torus_rank);
        for (std::size_t k = 0; k < rep.torus_rank; ++k) xi[k] = Rational(h.basis()(i, k));
        ops.push_back(fundamental_field_matrix(rep, xi));
    }
    return LinearAction{rep.space(), ops, ops};
}

inline LinearAction action_of(const WeightRep& rep) {
    return action_of(rep, Subtorus::full(rep.torus_rank));
}

inline bool is_invariant_subspace(const LinearAction& act, const Subspace& s) {
    assert(s.ambient() == act.space);
    for (const auto& op : act.invariance_ops) {
        if (s.is_complex()) {
            if (!span_contains(s.basis(), to_gaussian(op) * s.basis())) return false;
        } else {
            if (!span_contains(s.real_basis(), op * s.real_basis())) return false;
        }
    }
    return true;
}

inline Subspace fixed_subspace(const LinearAction& act) {
    RatMatrix stacked(0, act.space.dim());
    for (const auto& op : act.fixed_ops) stacked = RatMatrix::vcat(stacked, op);
    return Subspace::real(act.space, kernel_basis(stacked));
}

inline RatMatrix block_diag(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
    return out;
}

struct SingularReduction {
    Subspace c;  // F + W^K inside V + W
    LagrangianReduction red;
};

// Linear model of singular reduction. K acts on V and W through the paired
// action data (op i on V corresponds to op i on W); F is a K-invariant real
// Lagrangian of V, L a K-invariant complex Lagrangian of V + W. The reduction
// of C = F + W^K carries L to a Lagrangian L0.
inline SingularReduction singular_reduce_lagrangian(const LinearAction& act_v,
                                                    const LinearAction& act_w, const Subspace& f,
                                                    const Subspace& l) {
    if (act_v.invariance_ops.size() != act_w.invariance_ops.size())
        throw input_error("paired actions need matching generator lists");
    if (f.is_complex() || !(f.ambient() == act_v.space))
        throw input_error("F must be a real subspace of V");
    require_lagrangian(f, "singular_reduce_lagrangian(F)");
    if (!is_invariant_subspace(act_v, f))
        throw math_error("InvarianceViolation", "F is not invariant under the action on V");

    SymplecticSpace vw(block_diag(act_v.space.form(), act_w.space.form()));
    if (!l.is_complex() || !(l.ambient() == vw))
        throw input_error("L must be a complex subspace of V + W");
    require_lagrangian(l, "singular_reduce_lagrangian(L)");
    std::vector<RatMatrix> joint_inv, joint_fix;
    for (std::size_t i = 0; i < act_v.invariance_ops.size(); ++i) {
        joint_inv.push_back(block_diag(act_v.invariance_ops[i], act_w.invariance_ops[i]));
        joint_fix.push_back(block_diag(act_v.fixed_ops[i], act_w.fixed_ops[i]));
    }
    LinearAction joint{vw, std::move(joint_inv), std::move(joint_fix)};
    if (!is_invariant_subspace(joint, l))
        throw math_error("InvarianceViolation", "L is not invariant under the action on V + W");

    Subspace wk = fixed_subspace(act_w);
    RatMatrix f_block = RatMatrix::vcat(f.real_basis(), RatMatrix(act_w.space.dim(), f.dim()));
    RatMatrix wk_block =
        RatMatrix::vcat(RatMatrix(act_v.space.dim(), wk.dim()), wk.real_basis());
    Subspace c = Subspace::real(vw, RatMatrix::hcat(f_block, wk_block));
    LagrangianReduction red = reduce_lagrangian_full(l, c);
    return SingularReduction{std::move(c), std::move(red)};
}

inline SingularReduction singular_reduce_lagrangian(const FiniteGroupRep& v,
                                                    const FiniteGroupRep& w, const Subspace& f,
                                                    const Subspace& l) {
    if (v.generators().size() != w.generators().size())
        throw input_error("V and W need the same generator list");
    return singular_reduce_lagrangian(action_of(v), action_of(w), f, l);
}

inline SingularReduction singular_reduce_lagrangian(const WeightRep& v, const WeightRep& w,
                                                    const Subtorus& h, const Subspace& f,
                                                    const Subspace& l) {
    if (v.torus_rank != w.torus_rank) throw input_error("V and W need the same torus");
    return singular_reduce_lagrangian(action_of(v, h), action_of(w, h), f, l);
}

inline SingularReduction singular_reduce_lagrangian(const WeightRep& v, const WeightRep& w,
                                                    const Subspace& f, const Subspace& l) {
    return singular_reduce_lagrangian(v, w, Subtorus::full(v.torus_rank), f, l);
}

}  // namespace toriq
