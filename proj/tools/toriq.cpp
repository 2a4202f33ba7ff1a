// toriq: exact reports on symplectic linear algebra, Delzant polytopes,
// toric quantization, [Q,R]=0 and stratifications. All arithmetic is
// rational, all output deterministic. Exit codes: 0 pass, 1 mathematical
// verification failure, 2 input or usage error.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <type_traits>
#include <vector>

#include "toriq/delzant.hpp"
#include "toriq/io.hpp"
#include "toriq/lagrangian.hpp"
#include "toriq/polytope.hpp"
#include "toriq/quant.hpp"
#include "toriq/rep.hpp"
#include "toriq/stratify.hpp"
#include "toriq/symplectic.hpp"

namespace {

using toriq::io::json;

struct Options {
    std::string output = "text";
    std::uint64_t seed = 20260815;  // published default: CI runs are reproducible
    std::size_t samples = 25;
    bool verbose = false;

    bool structured() const { return output == "structured"; }
};

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string subscript(std::size_t k) {
    static const char* digit[10] = {"₀", "₁", "₂", "₃", "₄",
                                    "₅", "₆", "₇", "₈", "₉"};
    std::string out;
    for (char c : std::to_string(k)) out += digit[c - '0'];
    return out;
}

std::string coord_symbol(std::size_t i, std::size_t half) {
    if (i < half) return "e" + subscript(i + 1);
    return "f" + subscript(i - half + 1);
}

std::string gaussian_coeff(const toriq::Gaussian& g) {
    using toriq::Rational;
    if (g == toriq::Gaussian(1)) return "";
    if (g == toriq::Gaussian(-1)) return "-";
    if (g.im.is_zero()) return g.re.is_integer() ? g.re.str() : "(" + g.re.str() + ")";
    if (g.re.is_zero()) {
        if (g.im == Rational(1)) return "i";
        if (g.im == Rational(-1)) return "-i";
        return g.im.is_integer() ? g.im.str() + "i" : "(" + g.im.str() + ")i";
    }
    std::string im = g.im == Rational(1)    ? "+i"
                     : g.im == Rational(-1) ? "-i"
                     : g.im.sign() > 0      ? "+" + g.im.str() + "i"
                                            : g.im.str() + "i";
    return "(" + g.re.str() + im + ")";
}

std::string span_string(const toriq::GMatrix& basis, std::size_t half) {
    std::string out = "span{";
    for (std::size_t j = 0; j < basis.cols(); ++j) {
        if (j) out += ", ";
        std::string col;
        for (std::size_t i = 0; i < basis.rows(); ++i) {
            if (basis(i, j).is_zero()) continue;
            std::string term = gaussian_coeff(basis(i, j)) + coord_symbol(i, half);
            if (col.empty() || term[0] == '-')
                col += term;
            else
                col += "+" + term;
        }
        out += col.empty() ? "0" : col;
    }
    return out + "}";
}

template <class T>
std::string tuple_str(const std::vector<T>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        if constexpr (std::is_same_v<T, toriq::Integer>)
            out += v[i].get_str();
        else
            out += v[i].str();
    }
    return out + ")";
}

std::string set_str(const std::vector<std::size_t>& v) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(v[i]);
    }
    return out + "}";
}

const char* yn(bool b) { return b ? "yes" : "no"; }

int cmd_polytope_verify(const Options& opt, const std::string& file) {
    toriq::HPolytope p = toriq::io::parse_polytope(toriq::io::load_file(file));
    toriq::DelzantReport dr = toriq::verify_delzant(p);
    json out;
    bool ok = dr.pass();
    if (opt.structured()) {
        out["delzant"] = toriq::io::render_delzant_report(dr);
    } else {
        std::cout << "delzant: " << (dr.pass() ? "pass" : "FAIL") << "\n";
        if (!dr.pass()) {
            std::cout << "  surjective on lattice: " << yn(dr.surjective_on_lattice) << "\n"
                      << "  simple: " << yn(dr.simple) << "\n"
                      << "  vertex unimodular: " << yn(dr.vertex_unimodular) << "\n";
            for (const auto& v : dr.failing_vertices)
                std::cout << "  failing vertex: " << tuple_str(v) << "\n";
        }
    }
    if (ok) {
        toriq::DelzantData d = toriq::build_delzant(p);
        toriq::FreenessReport fr = toriq::freeness_certificate(d);
        bool rt = toriq::moment_roundtrip_check(d, opt.samples, opt.seed);
        ok = fr.all_certified && rt;
        if (opt.structured()) {
            out["freeness"] = toriq::io::render_freeness_report(fr);
            out["roundtrip"] = rt;
        } else {
            std::cout << "freeness: " << (fr.all_certified ? "pass" : "FAIL") << "\n";
            for (const auto& e : fr.entries) {
                if (!e.certified)
                    std::cout << "  uncertified face: " << set_str(e.active_set)
                              << ", invariant factors " << tuple_str(e.invariant_factors) << "\n";
                else if (opt.verbose)
                    std::cout << "  face " << set_str(e.active_set) << ": certified\n";
            }
            std::cout << "roundtrip: " << (rt ? "pass" : "FAIL") << "\n";
        }
    }
    if (opt.structured()) {
        out["pass"] = ok;
        emit(out);
    }
    return ok ? 0 : 1;
}

int cmd_polytope_faces(const Options& opt, const std::string& file) {
    toriq::HPolytope p = toriq::io::parse_polytope(toriq::io::load_file(file));
    toriq::FacePoset fp = toriq::face_lattice(p);
    toriq::FrontierReport fr = toriq::frontier_check(fp);
    if (opt.structured()) {
        emit(json{{"face_poset", toriq::io::render_face_poset(fp)},
                  {"frontier", toriq::io::render_frontier_report(fr)}});
    } else {
        std::cout << "vertices: " << fp.vertices.size() << "\n"
                  << "faces: " << fp.faces.size() << "\n";
        for (const auto& f : fp.faces) {
            std::cout << "  face " << set_str(f.active_set) << ": dim " << f.dim;
            if (opt.verbose) std::cout << ", witness " << tuple_str(f.witness);
            std::cout << "\n";
        }
        std::cout << "frontier: " << (fr.ok ? "ok" : "VIOLATED") << "\n";
        for (const auto& v : fr.violations) std::cout << "  " << v << "\n";
    }
    return fr.ok ? 0 : 1;
}

int cmd_polytope_points(const Options& opt, const std::string& file) {
    toriq::HPolytope p = toriq::io::parse_polytope(toriq::io::load_file(file));
    std::vector<std::vector<toriq::Integer>> pts = toriq::lattice_points(p);
    if (opt.structured()) {
        json arr = json::array();
        for (const auto& b : pts) arr.push_back(toriq::io::render_integer_vector(b));
        emit(json{{"count", pts.size()}, {"points", std::move(arr)}});
    } else {
        std::cout << "points: " << pts.size() << "\n";
        for (const auto& b : pts) std::cout << "  " << tuple_str(b) << "\n";
    }
    return 0;
}

int cmd_quantize(const Options& opt, const std::string& file, bool with_basis) {
    toriq::HPolytope p = toriq::io::parse_polytope(toriq::io::load_file(file));
    toriq::DelzantData d = toriq::build_delzant(p);
    toriq::IntegralityReport ir = toriq::prequantum_integrality(d);
    if (!ir.pass()) {
        if (opt.structured()) {
            emit(json{{"integrality", toriq::io::render_integrality_report(ir)}});
        } else {
            std::cout << "integrality: FAIL\n";
            for (std::size_t i = 0; i < ir.iota_values.size(); ++i)
                std::cout << "  iota(lambda)[" << i << "] = " << ir.iota_values[i].str() << "\n";
        }
        return 1;
    }
    toriq::QuantBasis qb = toriq::quantization_basis(d);
    if (opt.structured()) {
        json out{{"integrality", toriq::io::render_integrality_report(ir)},
                 {"dim_q", qb.count()}};
        if (with_basis) out["basis"] = toriq::io::render_quant_basis(qb);
        emit(out);
    } else {
        std::cout << "integrality: pass\n"
                  << "dim Q = " << qb.count() << "\n";
        if (with_basis)
            for (std::size_t i = 0; i < qb.count(); ++i)
                std::cout << "  b = " << tuple_str(qb.points[i])
                          << ", a = " << tuple_str(qb.exponents[i]) << "\n";
    }
    return 0;
}

int cmd_qr(const Options& opt, const std::string& file, const std::string& sub_file) {
    toriq::HPolytope p = toriq::io::parse_polytope(toriq::io::load_file(file));
    toriq::DelzantData d = toriq::build_delzant(p);
    toriq::Subtorus h = toriq::io::parse_subtorus(toriq::io::load_file(sub_file));
    toriq::QRReport r = toriq::qr_check(d, h);
    if (opt.structured()) {
        emit(toriq::io::render_qr_report(r));
    } else {
        std::cout << "integrality: " << (r.integrality.pass() ? "pass" : "FAIL") << "\n"
                  << "kernel rho: " << (r.kernel_rho.in_kernel ? "pass" : "FAIL") << "\n"
                  << "invariant=" << r.invariant_count << " reduced=" << r.reduced_count
                  << " equal=" << yn(r.counts_equal) << " injective=" << yn(r.injective) << "\n"
                  << "total: " << r.total_count << "\n"
                  << "reduced delzant: " << yn(r.reduced_is_delzant) << "\n"
                  << "reduced empty: " << yn(r.reduced.empty) << "\n";
        if (opt.verbose && !r.reduced.empty)
            std::cout << "reduced polytope: "
                      << toriq::io::render_polytope(r.reduced.sliced.polytope).dump() << "\n";
        std::cout << "note: " << toriq::io::kOpennessNote << "\n";
    }
    return (r.counts_equal && r.injective) ? 0 : 1;
}

void print_strat_table(const Options& opt, const toriq::StratReport& r, bool with_components) {
    for (std::size_t i = 0; i < r.strata.size(); ++i) {
        const auto& s = r.strata[i];
        std::cout << "  class " << i << ": dim " << s.dim << ", cells " << s.supports.size();
        if (with_components)
            std::cout << ", component group " << s.stabilizer.component_group_order.get_str();
        std::cout << ", identity dim " << s.stabilizer.kernel_subspace.cols() << "\n";
        if (opt.verbose) {
            std::cout << "    supports:";
            for (const auto& sup : s.supports) std::cout << " " << set_str(sup);
            std::cout << "\n";
        }
    }
}

int cmd_stratify_rep(const Options& opt, const std::string& file, const std::string& sub_file) {
    toriq::WeightRep rep = toriq::io::parse_weight_rep(toriq::io::load_file(file));
    toriq::Subtorus h = sub_file.empty()
                            ? toriq::Subtorus::full(rep.torus_rank)
                            : toriq::io::parse_subtorus(toriq::io::load_file(sub_file));
    toriq::StratReport orbit = toriq::orbit_type_partition(rep, h);
    toriq::StratReport infin = toriq::infinitesimal_partition(rep, h);
    if (opt.structured()) {
        emit(json{{"orbit_type", toriq::io::render_strat_report(orbit)},
                  {"infinitesimal", toriq::io::render_strat_report(infin)}});
    } else {
        std::cout << "orbit-type: " << orbit.strata.size()
                  << " pieces / infinitesimal: " << infin.strata.size() << " pieces\n";
        std::cout << "orbit-type classes:\n";
        print_strat_table(opt, orbit, true);
        std::cout << "infinitesimal classes:\n";
        print_strat_table(opt, infin, false);
        std::cout << "frontier (orbit-type): " << (orbit.frontier_ok ? "ok" : "VIOLATED") << "\n"
                  << "frontier (infinitesimal): " << (infin.frontier_ok ? "ok" : "VIOLATED")
                  << "\n";
    }
    return (orbit.frontier_ok && infin.frontier_ok) ? 0 : 1;
}

int cmd_stratify_reduced(const Options& opt, const std::string& file) {
    toriq::HPolytope p = toriq::io::parse_polytope(toriq::io::load_file(file));
    toriq::DelzantData d = toriq::build_delzant(p, /*require_delzant=*/false);
    toriq::StratReport r = toriq::reduced_space_strata(d);
    if (opt.structured()) {
        emit(json{{"reduced", toriq::io::render_strat_report(r)}});
    } else {
        std::cout << "reduced strata: " << r.strata.size() << "\n";
        for (const auto& s : r.strata)
            std::cout << "  stratum " << set_str(s.stabilizer.support) << ": dim " << s.dim
                      << "\n";
        std::cout << "frontier: " << (r.frontier_ok ? "ok" : "VIOLATED") << "\n";
        for (const auto& v : r.violations) std::cout << "  " << v << "\n";
    }
    return r.frontier_ok ? 0 : 1;
}

int cmd_symplin_darboux(const Options& opt, const std::string& form_file) {
    toriq::SymplecticSpace s(toriq::io::parse_rational_matrix(toriq::io::load_file(form_file)));
    toriq::RatMatrix b = toriq::darboux_basis(s);
    if (opt.structured())
        emit(json{{"darboux_basis", toriq::io::render_rational_matrix(b)}});
    else
        std::cout << "darboux basis: " << b.str() << "\n";
    return 0;
}

int cmd_symplin_complement(const Options& opt, const std::string& form_file,
                           const std::string& sub_file) {
    toriq::SymplecticSpace s(toriq::io::parse_rational_matrix(toriq::io::load_file(form_file)));
    toriq::Subspace c =
        toriq::Subspace::real(s, toriq::io::parse_rational_matrix(toriq::io::load_file(sub_file)));
    toriq::Subspace cw = toriq::symplectic_complement(c);
    std::string kind = toriq::to_string(toriq::classify_subspace(c));
    if (opt.structured()) {
        emit(json{{"complement", toriq::io::render_rational_matrix(cw.real_basis())},
                  {"dim", cw.dim()},
                  {"input_kind", kind}});
    } else {
        std::cout << "complement: " << cw.real_basis().str() << "\n"
                  << "dim: " << cw.dim() << "\n"
                  << "input kind: " << kind << "\n";
    }
    return 0;
}

int cmd_symplin_reduce_lagrangian(const Options& opt, const std::string& form_file,
                                  const std::string& l_file, const std::string& c_file) {
    toriq::SymplecticSpace s(toriq::io::parse_rational_matrix(toriq::io::load_file(form_file)));
    toriq::Subspace l =
        toriq::Subspace::complex(s, toriq::io::parse_gaussian_matrix(toriq::io::load_file(l_file)));
    toriq::Subspace c =
        toriq::Subspace::real(s, toriq::io::parse_rational_matrix(toriq::io::load_file(c_file)));
    toriq::LagrangianReduction red = toriq::reduce_lagrangian_full(l, c);
    std::string span = span_string(red.l0.basis(), red.reduction.space.half_dim());
    std::string kind = toriq::to_string(red.l0_kind);
    bool is_lag = red.l0_kind == toriq::SubspaceKind::lagrangian;
    std::string type = is_lag ? toriq::to_string(toriq::lagrangian_type(red.l0)) : "";
    if (opt.structured()) {
        json out{{"l0", toriq::io::render_gaussian_matrix(red.l0.basis())},
                 {"span", span},
                 {"kind", kind},
                 {"reduced_dim", red.reduction.space.dim()}};
        if (is_lag) out["type"] = type;
        emit(out);
    } else {
        if (is_lag)
            std::cout << span << ", type: " << type << "\n";
        else
            std::cout << span << ", kind: " << kind << "\n";
        std::cout << "kind: " << kind << "\n"
                  << "reduced dim: " << red.reduction.space.dim() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for toric symplectic reduction and quantization"};
    Options opt;
    if (const char* env = std::getenv("TORIQ_OUTPUT")) {
        std::string v = env;
        if (v == "text" || v == "structured") opt.output = v;
    }
    app.add_option("--output", opt.output, "report mode")
        ->check(CLI::IsMember({"text", "structured"}));
    app.add_option("--seed", opt.seed, "seed for sampled checks");
    app.add_option("--samples", opt.samples, "sample count for sampled checks");
    app.add_flag("-v,--verbose", opt.verbose, "more detail in text reports");
    app.require_subcommand(1);

    int rc = 0;

    auto* poly = app.add_subcommand("polytope", "polytope verification and combinatorics");
    poly->require_subcommand(1);
    std::string pv_file, pf_file, pp_file;
    auto* pv = poly->add_subcommand("verify", "Delzant conditions, freeness, moment roundtrip");
    pv->add_option("file", pv_file, "polytope file")->required();
    pv->callback([&] { rc = cmd_polytope_verify(opt, pv_file); });
    auto* pf = poly->add_subcommand("faces", "face lattice and frontier check");
    pf->add_option("file", pf_file, "polytope file")->required();
    pf->callback([&] { rc = cmd_polytope_faces(opt, pf_file); });
    auto* pp = poly->add_subcommand("points", "lattice points");
    pp->add_option("file", pp_file, "polytope file")->required();
    pp->callback([&] { rc = cmd_polytope_points(opt, pp_file); });

    std::string q_file;
    bool q_basis = false;
    auto* quant = app.add_subcommand("quantize", "dimension of the toric quantization");
    quant->add_option("file", q_file, "polytope file")->required();
    quant->add_flag("--basis", q_basis, "list the monomial basis");
    quant->callback([&] { rc = cmd_quantize(opt, q_file, q_basis); });

    std::string qr_file, qr_sub;
    auto* qr = app.add_subcommand("qr", "quantization commutes with reduction");
    qr->add_option("file", qr_file, "polytope file")->required();
    qr->add_option("--subtorus", qr_sub, "subtorus file")->required();
    qr->callback([&] { rc = cmd_qr(opt, qr_file, qr_sub); });

    std::string st_file, st_sub, st_reduced;
    auto* strat = app.add_subcommand("stratify", "orbit-type and infinitesimal stratifications");
    strat->add_option("file", st_file, "weight representation file");
    strat->add_option("--subtorus", st_sub, "subtorus file (default: the full torus)");
    strat->add_option("--reduced", st_reduced, "polytope file: stratify the reduced space");
    strat->callback([&] {
        if (st_reduced.empty() == st_file.empty())
            throw toriq::input_error(
                "stratify needs a weight representation file or --reduced, not both");
        if (!st_reduced.empty() && !st_sub.empty())
            throw toriq::input_error("--subtorus only applies to weight representations");
        rc = st_reduced.empty() ? cmd_stratify_rep(opt, st_file, st_sub)
                                : cmd_stratify_reduced(opt, st_reduced);
    });

    auto* sym = app.add_subcommand("symplin", "linear symplectic algebra");
    sym->require_subcommand(1);
    std::string sd_form, sc_form, sc_sub, sr_form, sr_l, sr_c;
    auto* sd = sym->add_subcommand("darboux", "Darboux basis of a form");
    sd->add_option("form", sd_form, "form matrix file")->required();
    sd->callback([&] { rc = cmd_symplin_darboux(opt, sd_form); });
    auto* sc = sym->add_subcommand("complement", "symplectic complement of a subspace");
    sc->add_option("form", sc_form, "form matrix file")->required();
    sc->add_option("subspace", sc_sub, "subspace basis file")->required();
    sc->callback([&] { rc = cmd_symplin_complement(opt, sc_form, sc_sub); });
    auto* sr = sym->add_subcommand("reduce-lagrangian", "coisotropic reduction of a Lagrangian");
    sr->add_option("form", sr_form, "form matrix file")->required();
    sr->add_option("lagrangian", sr_l, "complex Lagrangian basis file")->required();
    sr->add_option("coisotropic", sr_c, "real subspace basis file")->required();
    sr->callback([&] { rc = cmd_symplin_reduce_lagrangian(opt, sr_form, sr_l, sr_c); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const toriq::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const toriq::math_error& e) {
        std::cerr << "error [" << e.kind << "]: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
