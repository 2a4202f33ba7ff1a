#pragma once

// JSON file formats and report rendering. Files are UTF-8 JSON with rationals
// written as "p/q" strings or bare integers; matrices are row-major
// {"rows", "cols", "entries"} with complex entries {"re", "im"}. Rendering
// uses ordered_json so output is deterministic, and every parse_* here is the
// left inverse of the matching render_*.

#include <nlohmann/json.hpp>

#include <cstddef>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "delzant.hpp"
#include "error.hpp"
#include "gaussian.hpp"
#include "matrix.hpp"
#include "polytope.hpp"
#include "quant.hpp"
#include "rational.hpp"
#include "rep.hpp"
#include "stratify.hpp"

namespace toriq::io {

using json = nlohmann::ordered_json;

inline json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("parse error in '") + path + "': " + e.what());
    }
}

inline const json& field(const json& j, const std::string& name) {
    if (!j.is_object()) throw input_error("expected an object with field '" + name + "'");
    auto it = j.find(name);
    if (it == j.end()) throw input_error("missing field '" + name + "'");
    return *it;
}

inline bool parse_bool(const json& j) {
    if (!j.is_boolean()) throw input_error("expected a boolean");
    return j.get<bool>();
}

inline std::size_t parse_count(const json& j) {
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw input_error("expected a nonnegative integer");
    return static_cast<std::size_t>(j.get<long long>());
}

inline Rational parse_rational(const json& j) {
    if (j.is_number_integer()) return Rational::parse(j.dump());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw input_error("expected a rational (integer or \"p/q\" string)");
}

inline Integer parse_integer(const json& j) {
    Rational r = parse_rational(j);
    if (!r.is_integer()) throw input_error("expected an integer, got '" + r.str() + "'");
    return r.num();
}

inline Gaussian parse_gaussian(const json& j) {
    if (j.is_object()) return Gaussian(parse_rational(field(j, "re")), parse_rational(field(j, "im")));
    return Gaussian(parse_rational(j));
}

inline json render_integer(const Integer& n) {
    if (n.fits_slong_p()) return json(n.get_si());
    return json(n.get_str());
}

inline json render_rational(const Rational& r) {
    if (r.is_integer()) return render_integer(r.num());
    return json(r.str());
}

inline json render_gaussian(const Gaussian& g) {
    return json{{"re", render_rational(g.re)}, {"im", render_rational(g.im)}};
}

// --- vectors ---

inline std::vector<Rational> parse_rational_vector(const json& j) {
    if (!j.is_array()) throw input_error("expected an array of rationals");
    std::vector<Rational> out;
    for (const auto& e : j) out.push_back(parse_rational(e));
    return out;
}

inline std::vector<Integer> parse_integer_vector(const json& j) {
    if (!j.is_array()) throw input_error("expected an array of integers");
    std::vector<Integer> out;
    for (const auto& e : j) out.push_back(parse_integer(e));
    return out;
}

inline std::vector<std::size_t> parse_index_vector(const json& j) {
    if (!j.is_array()) throw input_error("expected an array of indices");
    std::vector<std::size_t> out;
    for (const auto& e : j) out.push_back(parse_count(e));
    return out;
}

inline json render_rational_vector(const std::vector<Rational>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(render_rational(x));
    return out;
}

inline json render_integer_vector(const std::vector<Integer>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(render_integer(x));
    return out;
}

inline json render_index_vector(const std::vector<std::size_t>& v) {
    json out = json::array();
    for (auto x : v) out.push_back(x);
    return out;
}

// --- matrices ---

namespace detail {

template <class T, class ParseEntry>
Matrix<T> parse_matrix(const json& j, ParseEntry entry) {
    std::size_t rows = parse_count(field(j, "rows"));
    std::size_t cols = parse_count(field(j, "cols"));
    const json& es = field(j, "entries");
    if (!es.is_array() || es.size() != rows * cols)
        throw input_error("matrix entries must be an array of length rows*cols");
    std::vector<T> out;
    out.reserve(es.size());
    for (const auto& e : es) out.push_back(entry(e));
    return Matrix<T>(rows, cols, std::move(out));
}

template <class T, class RenderEntry>
json render_matrix(const Matrix<T>& m, RenderEntry entry) {
    json es = json::array();
    for (const auto& x : m.entries()) es.push_back(entry(x));
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(es)}};
}

}  // namespace detail

inline IntMatrix parse_int_matrix(const json& j) {
    return detail::parse_matrix<Integer>(j, parse_integer);
}
inline RatMatrix parse_rational_matrix(const json& j) {
    return detail::parse_matrix<Rational>(j, parse_rational);
}
inline GMatrix parse_gaussian_matrix(const json& j) {
    return detail::parse_matrix<Gaussian>(j, parse_gaussian);
}

inline json render_int_matrix(const IntMatrix& m) {
    return detail::render_matrix(m, render_integer);
}
inline json render_rational_matrix(const RatMatrix& m) {
    return detail::render_matrix(m, render_rational);
}
inline json render_gaussian_matrix(const GMatrix& m) {
    return detail::render_matrix(m, render_gaussian);
}

// --- domain objects ---

inline HPolytope parse_polytope(const json& j) {
    std::size_t dim = parse_count(field(j, "dim"));
    const json& fs = field(j, "facets");
    if (!fs.is_array()) throw input_error("'facets' must be an array");
    std::vector<Facet> facets;
    for (const auto& f : fs)
        facets.push_back(Facet{parse_integer_vector(field(f, "normal")),
                               parse_rational(field(f, "offset"))});
    return HPolytope(dim, std::move(facets));
}

inline json render_polytope(const HPolytope& p) {
    json fs = json::array();
    for (const auto& f : p.facets())
        fs.push_back(json{{"normal", render_integer_vector(f.normal)},
                          {"offset", render_rational(f.offset)}});
    return json{{"dim", p.dim()}, {"facets", std::move(fs)}};
}

inline WeightRep parse_weight_rep(const json& j) {
    std::size_t d = parse_count(field(j, "torus_rank"));
    const json& ws = field(j, "weights");
    if (!ws.is_array()) throw input_error("'weights' must be an array of weight vectors");
    IntMatrix w(ws.size(), d);
    for (std::size_t r = 0; r < ws.size(); ++r) {
        std::vector<Integer> row = parse_integer_vector(ws[r]);
        if (row.size() != d) throw input_error("weight vectors must have length torus_rank");
        w.set_row(r, row);
    }
    std::vector<Rational> shift;
    if (j.contains("shift")) shift = parse_rational_vector(j.at("shift"));
    return WeightRep(d, std::move(w), std::move(shift));
}

inline json render_weight_rep(const WeightRep& rep) {
    json ws = json::array();
    for (std::size_t r = 0; r < rep.weights.rows(); ++r)
        ws.push_back(render_integer_vector(rep.weights.row(r)));
    json out{{"torus_rank", rep.torus_rank}, {"weights", std::move(ws)}};
    bool zero_shift = true;
    for (const auto& s : rep.shift)
        if (!s.is_zero()) zero_shift = false;
    if (!zero_shift) out["shift"] = render_rational_vector(rep.shift);
    return out;
}

inline Subtorus parse_subtorus(const json& j) {
    std::size_t n = parse_count(field(j, "ambient_rank"));
    const json& bs = field(j, "basis");
    if (!bs.is_array()) throw input_error("'basis' must be an array of integer vectors");
    IntMatrix b(bs.size(), n);
    for (std::size_t r = 0; r < bs.size(); ++r) {
        std::vector<Integer> row = parse_integer_vector(bs[r]);
        if (row.size() != n) throw input_error("subtorus basis rows must have length ambient_rank");
        b.set_row(r, row);
    }
    return Subtorus(n, std::move(b));
}

inline json render_subtorus(const Subtorus& h) {
    json bs = json::array();
    for (std::size_t r = 0; r < h.basis().rows(); ++r)
        bs.push_back(render_integer_vector(h.basis().row(r)));
    return json{{"ambient_rank", h.ambient_rank()}, {"basis", std::move(bs)}};
}

// --- reports ---

inline json render_delzant_report(const DelzantReport& r) {
    json fv = json::array();
    for (const auto& v : r.failing_vertices) fv.push_back(render_rational_vector(v));
    return json{{"surjective_on_lattice", r.surjective_on_lattice},
                {"simple", r.simple},
                {"vertex_unimodular", r.vertex_unimodular},
                {"failing_vertices", std::move(fv)},
                {"pass", r.pass()}};
}

inline DelzantReport parse_delzant_report(const json& j) {
    DelzantReport r;
    r.surjective_on_lattice = parse_bool(field(j, "surjective_on_lattice"));
    r.simple = parse_bool(field(j, "simple"));
    r.vertex_unimodular = parse_bool(field(j, "vertex_unimodular"));
    for (const auto& v : field(j, "failing_vertices"))
        r.failing_vertices.push_back(parse_rational_vector(v));
    return r;
}

inline json render_freeness_report(const FreenessReport& r) {
    json es = json::array();
    for (const auto& e : r.entries)
        es.push_back(json{{"active_set", render_index_vector(e.active_set)},
                          {"certified", e.certified},
                          {"invariant_factors", render_integer_vector(e.invariant_factors)}});
    return json{{"all_certified", r.all_certified}, {"entries", std::move(es)}};
}

inline FreenessReport parse_freeness_report(const json& j) {
    FreenessReport r;
    r.all_certified = parse_bool(field(j, "all_certified"));
    for (const auto& e : field(j, "entries")) {
        FreenessEntry fe;
        fe.active_set = parse_index_vector(field(e, "active_set"));
        fe.certified = parse_bool(field(e, "certified"));
        fe.invariant_factors = parse_integer_vector(field(e, "invariant_factors"));
        r.entries.push_back(std::move(fe));
    }
    return r;
}

inline json render_order(const std::vector<std::pair<std::size_t, std::size_t>>& order) {
    json out = json::array();
    for (const auto& [a, b] : order) out.push_back(json::array({a, b}));
    return out;
}

inline std::vector<std::pair<std::size_t, std::size_t>> parse_order(const json& j) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    if (!j.is_array()) throw input_error("expected an array of index pairs");
    for (const auto& e : j) {
        auto p = parse_index_vector(e);
        if (p.size() != 2) throw input_error("order entries must be pairs");
        out.emplace_back(p[0], p[1]);
    }
    return out;
}

inline json render_face_poset(const FacePoset& fp) {
    json vs = json::array();
    for (const auto& v : fp.vertices) vs.push_back(render_rational_vector(v));
    json fs = json::array();
    for (const auto& f : fp.faces)
        fs.push_back(json{{"active_set", render_index_vector(f.active_set)},
                          {"dim", f.dim},
                          {"witness", render_rational_vector(f.witness)},
                          {"members", render_index_vector(f.members)}});
    return json{{"polytope", render_polytope(fp.polytope)},
                {"vertices", std::move(vs)},
                {"faces", std::move(fs)},
                {"order", render_order(fp.order)}};
}

inline FacePoset parse_face_poset(const json& j) {
    FacePoset fp{parse_polytope(field(j, "polytope")), {}, {}, {}};
    for (const auto& v : field(j, "vertices")) fp.vertices.push_back(parse_rational_vector(v));
    for (const auto& f : field(j, "faces")) {
        Face face;
        face.active_set = parse_index_vector(field(f, "active_set"));
        face.dim = parse_count(field(f, "dim"));
        face.witness = parse_rational_vector(field(f, "witness"));
        face.members = parse_index_vector(field(f, "members"));
        fp.faces.push_back(std::move(face));
    }
    fp.order = parse_order(field(j, "order"));
    return fp;
}

inline json render_frontier_report(const FrontierReport& r) {
    return json{{"ok", r.ok}, {"violations", r.violations}};
}

inline FrontierReport parse_frontier_report(const json& j) {
    FrontierReport r;
    r.ok = parse_bool(field(j, "ok"));
    for (const auto& v : field(j, "violations")) {
        if (!v.is_string()) throw input_error("violations must be strings");
        r.violations.push_back(v.get<std::string>());
    }
    return r;
}

inline json render_integrality_report(const IntegralityReport& r) {
    return json{{"lambda_integral", r.lambda_integral},
                {"iota_lambda_integral", r.iota_lambda_integral},
                {"iota_values", render_rational_vector(r.iota_values)},
                {"pass", r.pass()}};
}

inline IntegralityReport parse_integrality_report(const json& j) {
    IntegralityReport r;
    r.lambda_integral = parse_bool(field(j, "lambda_integral"));
    r.iota_lambda_integral = parse_bool(field(j, "iota_lambda_integral"));
    r.iota_values = parse_rational_vector(field(j, "iota_values"));
    return r;
}

inline json render_quant_basis(const QuantBasis& qb) {
    json ps = json::array(), as = json::array();
    for (const auto& p : qb.points) ps.push_back(render_integer_vector(p));
    for (const auto& a : qb.exponents) as.push_back(render_integer_vector(a));
    return json{{"count", qb.count()}, {"points", std::move(ps)}, {"exponents", std::move(as)}};
}

inline QuantBasis parse_quant_basis(const json& j) {
    QuantBasis qb;
    for (const auto& p : field(j, "points")) qb.points.push_back(parse_integer_vector(p));
    for (const auto& a : field(j, "exponents")) qb.exponents.push_back(parse_integer_vector(a));
    return qb;
}

inline json render_kernel_rho_report(const KernelRhoReport& r) {
    return json{{"in_kernel", r.in_kernel}, {"pairings", render_rational_vector(r.pairings)}};
}

inline KernelRhoReport parse_kernel_rho_report(const json& j) {
    KernelRhoReport r;
    r.in_kernel = parse_bool(field(j, "in_kernel"));
    r.pairings = parse_rational_vector(field(j, "pairings"));
    return r;
}

inline json render_sliced_polytope(const SlicedPolytope& s) {
    return json{{"polytope", render_polytope(s.polytope)},
                {"origin", render_rational_vector(s.origin)},
                {"embedding", render_int_matrix(s.embedding)},
                {"integral_origin", s.integral_origin},
                {"constant_infeasible", s.constant_infeasible}};
}

inline SlicedPolytope parse_sliced_polytope(const json& j) {
    return SlicedPolytope{parse_polytope(field(j, "polytope")),
                          parse_rational_vector(field(j, "origin")),
                          parse_int_matrix(field(j, "embedding")),
                          parse_bool(field(j, "integral_origin")),
                          parse_bool(field(j, "constant_infeasible"))};
}

inline json render_reduced_polytope_report(const ReducedPolytopeReport& r) {
    return json{{"sliced", render_sliced_polytope(r.sliced)},
                {"delzant", render_delzant_report(r.delzant)},
                {"is_delzant", r.is_delzant},
                {"empty", r.empty}};
}

inline ReducedPolytopeReport parse_reduced_polytope_report(const json& j) {
    return ReducedPolytopeReport{parse_sliced_polytope(field(j, "sliced")),
                                 parse_delzant_report(field(j, "delzant")),
                                 parse_bool(field(j, "is_delzant")),
                                 parse_bool(field(j, "empty"))};
}

inline constexpr const char* kOpennessNote =
    "openness of the complexified-orbit saturation is a hypothesis of the "
    "surjectivity theorem and is not checked here";

inline json render_qr_report(const QRReport& r) {
    return json{{"integrality", render_integrality_report(r.integrality)},
                {"kernel_rho", render_kernel_rho_report(r.kernel_rho)},
                {"total_count", r.total_count},
                {"invariant_count", r.invariant_count},
                {"reduced_count", r.reduced_count},
                {"counts_equal", r.counts_equal},
                {"injective", r.injective},
                {"reduced_is_delzant", r.reduced_is_delzant},
                {"reduced", render_reduced_polytope_report(r.reduced)},
                {"openness_note", kOpennessNote}};
}

inline QRReport parse_qr_report(const json& j) {
    QRReport r;
    r.integrality = parse_integrality_report(field(j, "integrality"));
    r.kernel_rho = parse_kernel_rho_report(field(j, "kernel_rho"));
    r.total_count = parse_count(field(j, "total_count"));
    r.invariant_count = parse_count(field(j, "invariant_count"));
    r.reduced_count = parse_count(field(j, "reduced_count"));
    r.counts_equal = parse_bool(field(j, "counts_equal"));
    r.injective = parse_bool(field(j, "injective"));
    r.reduced_is_delzant = parse_bool(field(j, "reduced_is_delzant"));
    r.reduced = parse_reduced_polytope_report(field(j, "reduced"));
    return r;
}

inline json render_stabilizer(const StabilizerData& s) {
    return json{{"support", render_index_vector(s.support)},
                {"kernel_subspace", render_rational_matrix(s.kernel_subspace)},
                {"component_group_order", render_integer(s.component_group_order)},
                {"canonical_form", render_int_matrix(s.canonical_form)}};
}

inline StabilizerData parse_stabilizer(const json& j) {
    StabilizerData s;
    s.support = parse_index_vector(field(j, "support"));
    s.kernel_subspace = parse_rational_matrix(field(j, "kernel_subspace"));
    s.component_group_order = parse_integer(field(j, "component_group_order"));
    s.canonical_form = parse_int_matrix(field(j, "canonical_form"));
    return s;
}

inline json render_strat_report(const StratReport& r) {
    json ss = json::array();
    for (const auto& s : r.strata) {
        json sup = json::array();
        for (const auto& v : s.supports) sup.push_back(render_index_vector(v));
        ss.push_back(json{{"supports", std::move(sup)},
                          {"stabilizer", render_stabilizer(s.stabilizer)},
                          {"dim", s.dim}});
    }
    return json{{"strata", std::move(ss)},
                {"order", render_order(r.order)},
                {"frontier_ok", r.frontier_ok},
                {"violations", r.violations},
                {"connected_refinement_computed", r.connected_refinement_computed}};
}

inline StratReport parse_strat_report(const json& j) {
    StratReport r;
    for (const auto& s : field(j, "strata")) {
        Stratum st;
        for (const auto& v : field(s, "supports")) st.supports.push_back(parse_index_vector(v));
        st.stabilizer = parse_stabilizer(field(s, "stabilizer"));
        st.dim = parse_count(field(s, "dim"));
        r.strata.push_back(std::move(st));
    }
    r.order = parse_order(field(j, "order"));
    r.frontier_ok = parse_bool(field(j, "frontier_ok"));
    for (const auto& v : field(j, "violations")) {
        if (!v.is_string()) throw input_error("violations must be strings");
        r.violations.push_back(v.get<std::string>());
    }
    r.connected_refinement_computed = parse_bool(field(j, "connected_refinement_computed"));
    return r;
}

}  // namespace toriq::io
