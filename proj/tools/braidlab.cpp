// Batch front-end: builds the braided-algebra objects from flags or JSON
// files, runs the verification suites, and emits JSON-line reports.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "braidlab/acceptance.hpp"
#include "braidlab/linalg.hpp"
#include "braidlab/orbits.hpp"
#include "braidlab/poisson.hpp"

using namespace braidlab;

namespace {

struct Options {
    bool pretty = false;
    bool with_timing = true;
    int jobs = 0;
    int max_degree = kDefaultDegreeCap;
    int max_dim = 4;
};

int emit(const Options& opt, const std::vector<Report>& reports) {
    bool ok = true;
    for (const auto& r : reports) {
        std::cout << r.to_line(opt.pretty, opt.with_timing) << "\n";
        ok = ok && r.passed();
    }
    return ok ? 0 : 1;
}

void check_dims(const Options& opt, int m, int n) {
    if (m < 0 || n < 0 || m + n < 1)
        throw CLI::ValidationError("--m/--n", "need m, n >= 0 and m + n >= 1");
    if (m + n > opt.max_dim)
        throw CLI::ValidationError(
            "--m/--n", "m + n = " + std::to_string(m + n) + " exceeds the size cap " +
                           std::to_string(opt.max_dim) + " (override with --max-dim)");
}

Scalar parse_scalar_flag(const std::string& text, const std::string& flag) {
    try {
        return Scalar::parse(text);
    } catch (const ParseError& e) {
        throw CLI::ValidationError(flag, e.what());
    }
}

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--spectrum", "cannot open " + path);
    nlohmann::json j;
    in >> j;
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification engine for Hecke symmetries, reflection equation "
                 "algebras, their Poisson counterparts and braided orbits"};
    app.require_subcommand(1);

    Options opt;
    if (const char* env = std::getenv("BRAIDLAB_MAX_DEGREE")) opt.max_degree = std::atoi(env);
    app.add_flag("--pretty", opt.pretty, "multi-line JSON output");
    app.add_flag("!--no-timing", opt.with_timing, "omit the timing field");
    app.add_option("--jobs", opt.jobs, "parallel checks in `suite` (default: hardware)");
    app.add_option("--max-degree", opt.max_degree, "rewriting degree cap")
        ->envname("BRAIDLAB_MAX_DEGREE");
    app.add_option("--max-dim", opt.max_dim, "cap on m + n for algebra construction");

    int m = 0, n = 0, power = 1;
    std::string poly_text = "1", spectrum_path, hbar_text, out_path, in_path, what = "r";

    auto add_mn = [&](CLI::App* cmd) {
        cmd->add_option("--m", m, "even dimension")->required();
        cmd->add_option("--n", n, "odd dimension")->required();
    };

    auto* ybe = app.add_subcommand("ybe", "Yang-Baxter and Hecke condition for the braiding");
    add_mn(ybe);
    auto* skew = app.add_subcommand("skew", "skew inverse, B and C, their relation and closed form");
    add_mn(skew);
    std::string dump_dir;
    skew->add_option("--dump", dump_dir, "directory for R/psi/B/C JSON dumps");
    auto* rea = app.add_subcommand("rea", "build the algebra, graded dimensions, confluence");
    add_mn(rea);
    rea->add_option("--hbar", hbar_text, "deformation scalar (default: the symbol hbar)");
    auto* casimir = app.add_subcommand("casimir", "braided Casimir element and its centrality");
    add_mn(casimir);
    casimir->add_option("--k", power, "trace power")->required();
    auto* ch = app.add_subcommand("ch", "characteristic identity checks (m + n <= 2)");
    add_mn(ch);
    auto* pairing_cmd = app.add_subcommand("pairing", "generator pairing and its inverse relation");
    add_mn(pairing_cmd);
    auto* poisson_cmd = app.add_subcommand("poisson", "bracket constructions and checks");
    poisson_cmd->require_subcommand(1);
    auto* poisson_sl2 = poisson_cmd->add_subcommand("sl2", "the rank-one pencil");
    auto* poisson_gl = poisson_cmd->add_subcommand("gl", "linear and quadratic matrix brackets");
    add_mn(poisson_gl);
    auto* poisson_so3 = poisson_cmd->add_subcommand("so3", "the rotational family");
    poisson_so3->add_option("--p", poly_text, "structure polynomial in x, y, z");
    std::string bracket_path;
    auto* poisson_custom = poisson_cmd->add_subcommand("custom", "checks for a bracket file");
    poisson_custom->add_option("--bracket", bracket_path, "bracket JSON file")->required();
    auto* semicl = app.add_subcommand("semiclassical", "first-order matrix and consistency");
    add_mn(semicl);
    auto* orbit = app.add_subcommand("orbit", "spectral weights, regularity, ideal generators");
    orbit->add_option("--spectrum", spectrum_path, "spectrum JSON file")->required();
    orbit->add_option("--hbar", hbar_text, "deformation scalar (overrides the file)");
    auto* dump = app.add_subcommand("dump", "serialize an operator to JSON");
    dump->add_option("--what", what, "one of r, flip, psi, b, c")->required();
    add_mn(dump);
    dump->add_option("--out", out_path, "output path")->required();
    auto* load = app.add_subcommand("load", "reload an operator dump and reprint it");
    load->add_option("--in", in_path, "input path")->required();
    auto* suite = app.add_subcommand("suite", "the full verification battery");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    declare_standard_symbols();
    std::vector<Report> reports;
    try {
        if (*ybe) {
            check_dims(opt, m, n);
            SuperDim dim{m, n};
            reports.push_back(timed([&] { return check_yang_baxter(hecke_symmetry(dim)); }));
            reports.push_back(timed([&] { return check_hecke_condition(hecke_symmetry(dim)); }));
        } else if (*skew) {
            check_dims(opt, m, n);
            SuperDim dim{m, n};
            reports.push_back(timed([&] { return check_skew_pair(dim); }));
            if (!dump_dir.empty()) {
                TensorOperator r = hecke_symmetry(dim);
                TensorOperator psi = skew_inverse(r);
                auto [b, c] = bc_operators(psi);
                for (auto& [name, op] :
                     std::vector<std::pair<std::string, TensorOperator>>{
                         {"R", r}, {"psi", psi}, {"B", b}, {"C", c}}) {
                    std::ofstream out(dump_dir + "/" + name + ".json");
                    out << op.to_json().dump(2) << "\n";
                }
            }
        } else if (*rea) {
            check_dims(opt, m, n);
            SuperDim dim{m, n};
            Scalar hb = hbar_text.empty() ? Scalar::hbar() : parse_scalar_flag(hbar_text, "--hbar");
            reports.push_back(timed([&] {
                REAlgebra alg = build_rea(dim, hb, 4);
                Report rep;
                rep.command = "rea-build";
                rep.inputs["dim"] = dim.to_string();
                rep.inputs["hbar"] = hb.to_string();
                rep.detail("rule_count", std::to_string(alg.pres().rules().size()));
                int depth = dim.total() <= 2 ? 4 : 3;
                auto dims = hilbert_dims(alg.pres(), depth);
                auto expect = supersymmetric_dims(dim, depth);
                std::string ds;
                for (auto v : dims) ds += (ds.empty() ? "" : " ") + std::to_string(v);
                rep.detail("graded_dims", ds);
                rep.detail("graded_dims_match_supersymmetric", dims == expect ? "yes" : "no");
                rep.detail("confluence", alg.confluence().passed() ? "pass" : "fail");
                rep.set_pass(dims == expect && alg.confluence().passed());
                return rep;
            }));
        } else if (*casimir) {
            check_dims(opt, m, n);
            SuperDim dim{m, n};
            reports.push_back(timed([&] {
                REAlgebra alg = build_rea(dim, Scalar::hbar(), 0);
                Report rep;
                rep.command = "casimir";
                rep.inputs["dim"] = dim.to_string();
                rep.inputs["k"] = power;
                NCPolynomial z = r_trace_power(alg, power, opt.max_degree);
                rep.detail("element", z.to_string(alg.names()));
                bool central = true;
                for (auto& [name, res] : centrality_residual(z, alg.pres(), opt.max_degree)) {
                    if (!res.is_zero()) rep.detail("residual_" + name, res.to_string(alg.names()));
                    central = central && res.is_zero();
                }
                rep.detail("central", central ? "yes" : "no");
                rep.set_pass(central);
                return rep;
            }));
        } else if (*ch) {
            check_dims(opt, m, n);
            if (m + n > 2)
                throw CLI::ValidationError("--m/--n", "characteristic solve is limited to m + n <= 2");
            SuperDim dim{m, n};
            reports.push_back(timed([&] { return check_cayley_hamilton(dim); }));
        } else if (*pairing_cmd) {
            check_dims(opt, m, n);
            SuperDim dim{m, n};
            reports.push_back(timed([&] {
                REAlgebra alg = build_rea(dim, Scalar::hbar(), 0);
                Report rep;
                rep.command = "pairing";
                rep.inputs["dim"] = dim.to_string();
                Scalar det = determinant(pairing_gram(alg));
                rep.detail("gram_determinant", det.to_string());
                bool ok = !det.is_zero();
                Report inverse = casimir_pairing_inverse_check(alg);
                for (const auto& [k, v] : inverse.details) rep.detail(k, v);
                ok = ok && inverse.passed();
                if (dim.total() == 2) {
                    NCPolynomial b = NCPolynomial::generator(1), c = NCPolynomial::generator(2);
                    rep.detail("<b,c>", pairing(alg, b, c).to_string());
                    rep.detail("<c,b>", pairing(alg, c, b).to_string());
                }
                rep.set_pass(ok);
                return rep;
            }));
        } else if (*poisson_cmd) {
            if (*poisson_sl2) {
                reports.push_back(timed([&] { return check_poisson_battery(); }));
            } else if (*poisson_gl) {
                check_dims(opt, m, n);
                SuperDim dim{m, n};
                reports.push_back(timed([&] {
                    Report rep;
                    rep.command = "poisson-gl";
                    rep.inputs["dim"] = dim.to_string();
                    PoissonBracket lin = linear_bracket(dim);
                    PoissonBracket quad = quadratic_gl_bracket(dim);
                    bool ok = check_jacobi(lin).passed() && check_jacobi(quad).passed() &&
                              check_parity_axioms(lin).passed() &&
                              check_parity_axioms(quad).passed() &&
                              check_compatibility(lin, quad).passed();
                    rep.detail("jacobi_parity_compatibility", ok ? "pass" : "fail");
                    // Supertrace powers stay central across the pencil.
                    Scalar pa = Scalar::variable("pen_a"), pb = Scalar::variable("pen_b");
                    PoissonBracket pen = pencil(lin, quad, pa, pb);
                    std::vector<int> par = lin.parities();
                    int d = dim.total();
                    std::vector<std::vector<SCPolynomial>> lmat(
                        static_cast<size_t>(d), std::vector<SCPolynomial>(static_cast<size_t>(d)));
                    for (int i = 0; i < d; ++i)
                        for (int j = 0; j < d; ++j)
                            lmat[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                                SCPolynomial::generator(i * d + j);
                    auto supertrace = [&](int k) {
                        auto mat = lmat;
                        std::vector<std::vector<SCPolynomial>> acc(
                            static_cast<size_t>(d), std::vector<SCPolynomial>(static_cast<size_t>(d)));
                        for (int i = 0; i < d; ++i) acc[static_cast<size_t>(i)][static_cast<size_t>(i)] =
                            SCPolynomial::constant(Scalar(1));
                        for (int t = 0; t < k; ++t) {
                            std::vector<std::vector<SCPolynomial>> nxt(
                                static_cast<size_t>(d), std::vector<SCPolynomial>(static_cast<size_t>(d)));
                            for (int i = 0; i < d; ++i)
                                for (int kk = 0; kk < d; ++kk)
                                    for (int j = 0; j < d; ++j)
                                        nxt[static_cast<size_t>(i)][static_cast<size_t>(j)] += sc_mul(
                                            acc[static_cast<size_t>(i)][static_cast<size_t>(kk)],
                                            lmat[static_cast<size_t>(kk)][static_cast<size_t>(j)], par);
                            acc = std::move(nxt);
                        }
                        SCPolynomial tr;
                        for (int i = 1; i <= d; ++i) {
                            SCPolynomial diag = acc[static_cast<size_t>(i - 1)][static_cast<size_t>(i - 1)];
                            tr += dim.parity(i) ? -diag : diag;
                        }
                        return tr;
                    };
                    bool central = true;
                    for (int k = 1; k <= 2; ++k)
                        for (auto& [nm, res] : center_residual(pen, supertrace(k)))
                            central = central && res.is_zero();
                    rep.detail("supertrace_powers_central", central ? "yes" : "no");
                    rep.set_pass(ok && central);
                    return rep;
                }));
            } else if (*poisson_so3) {
                reports.push_back(timed([&] {
                    Report rep;
                    rep.command = "poisson-so3";
                    rep.inputs["p"] = poly_text;
                    PoissonBracket br = so3_bracket(poly_text);
                    bool ok = check_jacobi(br).passed() && check_parity_axioms(br).passed() &&
                              check_compatibility(so3_linear_bracket(), br).passed();
                    std::vector<int> par{0, 0, 0};
                    SCPolynomial cas;
                    for (int i = 0; i < 3; ++i)
                        cas += sc_mul(SCPolynomial::generator(i), SCPolynomial::generator(i), par);
                    bool central = true;
                    for (auto& [nm, res] : center_residual(br, cas)) central = central && res.is_zero();
                    rep.detail("jacobi_parity_compatibility", ok ? "pass" : "fail");
                    rep.detail("sphere_function_central", central ? "yes" : "no");
                    rep.set_pass(ok && central);
                    return rep;
                }));
            } else if (*poisson_custom) {
                nlohmann::json j = load_json(bracket_path);
                PoissonBracket br = PoissonBracket::from_json(j);
                reports.push_back(timed([&] { return check_jacobi(br); }));
                reports.push_back(timed([&] { return check_parity_axioms(br); }));
            }
        } else if (*semicl) {
            check_dims(opt, m, n);
            SuperDim dim{m, n};
            reports.push_back(timed([&] {
                ClassicalRMatrix cr = semiclassical_r(dim);
                Report rep = semiclassical_r_pattern_check(cr);
                return rep;
            }));
            reports.push_back(timed([&] { return semiclassical_consistency(dim); }));
        } else if (*orbit) {
            nlohmann::json j = load_json(spectrum_path);
            Spectrum s = Spectrum::from_json(j);
            Scalar hb = Scalar(0);
            if (j.contains("hbar")) hb = Scalar::parse(j.at("hbar").get<std::string>());
            if (!hbar_text.empty()) hb = parse_scalar_flag(hbar_text, "--hbar");
            std::optional<Rational> q_value;
            if (j.contains("q") && j.at("q").is_string() && j.at("q").get<std::string>() != "symbolic") {
                Scalar qv = Scalar::parse(j.at("q").get<std::string>());
                if (!qv.is_rational())
                    throw CLI::ValidationError("--spectrum", "q must be rational or \"symbolic\"");
                q_value = qv.rational_value();
                require_generic_q(*q_value);
            }
            check_dims(opt, s.dim.m, s.dim.n);
            auto render = [&](const Scalar& v) {
                return q_value ? v.substitute("q", Scalar(*q_value)).to_string() : v.to_string();
            };
            reports.push_back(timed([&] {
                Report rep;
                rep.command = "orbit-dims";
                rep.inputs = s.to_json();
                rep.inputs["hbar"] = hb.to_string();
                QuantumDims dims = quantum_dims(s, hb);
                for (size_t i = 0; i < dims.d.size(); ++i)
                    rep.detail("d_" + std::to_string(i + 1), render(dims.d[i]));
                for (size_t i = 0; i < dims.dprime.size(); ++i)
                    rep.detail("d'_" + std::to_string(i + 1), render(dims.dprime[i]));
                for (int k = 0; k <= s.dim.total(); ++k)
                    rep.detail("power_sum_" + std::to_string(k), render(power_sum(s, dims, k)));
                rep.set(Report::Outcome::info);
                return rep;
            }));
            reports.push_back(timed([&] { return quantum_dims_prefactor_report(s, hb); }));
            reports.push_back(timed([&] { return regularity(s, hb); }));
            reports.push_back(timed([&] {
                Report rep;
                rep.command = "orbit-ideal";
                rep.inputs = s.to_json();
                rep.inputs["hbar"] = hb.to_string();
                REAlgebra alg = build_rea(s.dim, hb, 0);
                auto gens = orbit_ideal(alg, s);
                for (size_t i = 0; i < gens.size(); ++i) {
                    NCPolynomial g = q_value ? gens[i].map_coefficients([&](const Scalar& c) {
                        return c.substitute("q", Scalar(*q_value));
                    })
                                             : gens[i];
                    rep.detail("generator_" + std::to_string(i + 1), g.to_string(alg.names()));
                }
                rep.set(Report::Outcome::info);
                return rep;
            }));
        } else if (*dump) {
            check_dims(opt, m, n);
            SuperDim dim{m, n};
            TensorOperator op = [&]() -> TensorOperator {
                if (what == "r") return hecke_symmetry(dim);
                if (what == "flip") return super_flip(dim);
                TensorOperator psi = skew_inverse(hecke_symmetry(dim));
                if (what == "psi") return psi;
                auto [b, c] = bc_operators(psi);
                if (what == "b") return b;
                if (what == "c") return c;
                throw CLI::ValidationError("--what", "expected one of r, flip, psi, b, c");
            }();
            std::ofstream out(out_path);
            if (!out) throw CLI::ValidationError("--out", "cannot open " + out_path);
            out << op.to_json().dump(2) << "\n";
            Report rep;
            rep.command = "dump";
            rep.inputs["what"] = what;
            rep.inputs["dim"] = dim.to_string();
            rep.detail("path", out_path);
            rep.set(Report::Outcome::info);
            reports.push_back(std::move(rep));
        } else if (*load) {
            std::ifstream in(in_path);
            if (!in) throw CLI::ValidationError("--in", "cannot open " + in_path);
            nlohmann::json j;
            in >> j;
            TensorOperator op = TensorOperator::from_json(j);
            Report rep;
            rep.command = "load";
            rep.inputs["path"] = in_path;
            bool roundtrip = op.to_json() == j;
            rep.detail("bit_exact_roundtrip", roundtrip ? "yes" : "no");
            rep.set_pass(roundtrip);
            std::cout << op.to_json().dump(opt.pretty ? 2 : -1) << "\n";
            reports.push_back(std::move(rep));
        } else if (*suite) {
            reports = run_acceptance_suite(opt.jobs);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed JSON input: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    return emit(opt, reports);
}
