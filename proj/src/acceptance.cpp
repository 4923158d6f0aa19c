#include "braidlab/acceptance.hpp"

#include <atomic>
#include <functional>
#include <thread>

#include "braidlab/linalg.hpp"
#include "braidlab/orbits.hpp"
#include "braidlab/poisson.hpp"
#include "braidlab/symbols.hpp"

namespace braidlab {

void declare_standard_symbols() {
    auto& t = SymbolTable::instance();
    for (const char* s : {"mu1", "mu2", "nu1", "nu2", "nu", "pen_a", "pen_b", "par_a", "par_c", "r"})
        t.declare(s);
}

std::vector<long> supersymmetric_dims(SuperDim dim, int max_degree) {
    int even = dim.m * dim.m + dim.n * dim.n;
    int odd = 2 * dim.m * dim.n;
    // Series (1+t)^odd / (1-t)^even by convolution.
    std::vector<long> binom(static_cast<size_t>(max_degree) + 1, 0);
    binom[0] = 1;
    for (int i = 0; i < odd; ++i)
        for (int d = max_degree; d >= 1; --d) binom[static_cast<size_t>(d)] += binom[static_cast<size_t>(d) - 1];
    std::vector<long> dims(static_cast<size_t>(max_degree) + 1, 0);
    for (int d = 0; d <= max_degree; ++d) {
        // coefficient of t^d in (1-t)^{-even} is C(even-1+d, d)
        long c = 1;
        for (int i = 1; i <= d; ++i) c = c * (even - 1 + i) / i;
        dims[static_cast<size_t>(d)] = even > 0 ? c : (d == 0 ? 1 : 0);
    }
    std::vector<long> out(static_cast<size_t>(max_degree) + 1, 0);
    for (int d = 0; d <= max_degree; ++d)
        for (int k = 0; k <= d; ++k) out[static_cast<size_t>(d)] += binom[static_cast<size_t>(k)] * dims[static_cast<size_t>(d - k)];
    return out;
}

namespace {

std::vector<SuperDim> all_dims_up_to(int total) {
    std::vector<SuperDim> dims;
    for (int t = 1; t <= total; ++t)
        for (int m = t; m >= 0; --m) dims.push_back({m, t - m});
    return dims;
}

std::string join_dims(const std::vector<SuperDim>& dims) {
    std::string s;
    for (const auto& d : dims) {
        if (!s.empty()) s += " ";
        s += d.to_string();
    }
    return s;
}

} // namespace

Report check_braiding_axioms(SuperDim dim) {
    Report rep;
    rep.command = "braiding-axioms";
    rep.inputs["dim"] = dim.to_string();
    TensorOperator r = hecke_symmetry(dim);
    bool yb = yang_baxter_residual(r).is_zero();
    bool hk = hecke_residual(r).is_zero();
    // Classical limit: the braiding at q = 1 is the super-flip, which is
    // an involution.
    TensorOperator flip = super_flip(dim);
    bool limit = r.substitute_q(Scalar(1)) == flip;
    bool invol = flip * flip == TensorOperator::identity(dim, 2);
    rep.detail("yang_baxter", yb ? "0" : "nonzero");
    rep.detail("hecke_condition", hk ? "0" : "nonzero");
    rep.detail("q1_limit_is_super_flip", limit ? "yes" : "no");
    rep.detail("super_flip_involution", invol ? "yes" : "no");
    rep.set_pass(yb && hk && limit && invol);
    return rep;
}

Report check_skew_pair(SuperDim dim) {
    Report rep;
    rep.command = "skew-pair";
    rep.inputs["dim"] = dim.to_string();
    TensorOperator r = hecke_symmetry(dim);
    TensorOperator psi = skew_inverse(r);
    auto [b, c] = bc_operators(psi);
    bool ok = true;

    // Defining identity and the mirrored one.
    int d = dim.total();
    TensorOperator lhs(dim, 2), rhs = plain_flip(dim);
    {
        TensorOperator prod = r.embed(1, 3) * psi.embed(2, 3);
        TensorOperator tr(dim, 2);
        // Trace over the middle factor of an arity-3 operator.
        prod.for_each([&](int row, int col, const Scalar& v) {
            int i = row / (d * d), jm = (row / d) % d, k = row % d;
            int a = col / (d * d), bm = (col / d) % d, cc = col % d;
            if (jm == bm) tr.add_at(i * d + k, a * d + cc, v);
        });
        lhs = tr;
    }
    bool defining = lhs == rhs;
    ok = ok && defining;
    rep.detail("trace_identity", defining ? "holds" : "fails");
    {
        TensorOperator prod = psi.embed(1, 3) * r.embed(2, 3);
        TensorOperator tr(dim, 2);
        prod.for_each([&](int row, int col, const Scalar& v) {
            int i = row / (d * d), jm = (row / d) % d, k = row % d;
            int a = col / (d * d), bm = (col / d) % d, cc = col % d;
            if (jm == bm) tr.add_at(i * d + k, a * d + cc, v);
        });
        rep.detail("mirrored_trace_identity", tr == rhs ? "holds" : "fails");
        ok = ok && tr == rhs;
    }

    Report bc = check_bc_relation(b, c, dim);
    ok = ok && bc.passed();
    rep.detail("bc_equals_q^2(n-m)", bc.passed() ? "yes" : "no");

    Report cc = compare_c_operators(c, c_closed_form(dim));
    ok = ok && cc.passed();
    rep.detail("c_closed_form", cc.passed() ? "exact" : "differs");

    // Trace of C convention: q^{n-m} (m-n)_q.
    Scalar trc = c.trace();
    Scalar expect = Scalar::q().pow(dim.n - dim.m) * q_int(dim.m - dim.n);
    bool conv = trc == expect;
    ok = ok && conv;
    rep.detail("trace_of_c", trc.to_string());
    rep.detail("trace_convention", conv ? "q^(n-m)*(m-n)_q" : "unexpected");

    if (dim.m == 2 && dim.n == 0) {
        bool exact = b.at(0, 0) == Scalar::q().pow(-1) && b.at(1, 1) == Scalar::q().pow(-3) &&
                     c.at(0, 0) == Scalar::q().pow(-3) && c.at(1, 1) == Scalar::q().pow(-1) &&
                     b.at(0, 1).is_zero() && b.at(1, 0).is_zero();
        ok = ok && exact;
        rep.detail("known_2x2_matrices", exact ? "match" : "differ");
    }
    if (dim.m == 1 && dim.n == 1) {
        Scalar q = Scalar::q();
        bool exact = b.at(0, 0) == q.pow(-1) && b.at(1, 1) == -q.pow(-1) && c.at(0, 0) == q &&
                     c.at(1, 1) == -q;
        ok = ok && exact;
        rep.detail("known_2x2_matrices", exact ? "match" : "differ");
    }
    rep.set_pass(ok);
    return rep;
}

Report check_defining_relations(SuperDim dim) {
    Report rep;
    rep.command = "defining-relations";
    rep.inputs["dim"] = dim.to_string();
    Scalar q = Scalar::q(), h = Scalar::hbar(), lam = q - q.pow(-1);
    REAlgebra alg = build_rea(dim, h, 0);
    auto names = alg.names();
    bool ok = true;

    std::vector<NCPolynomial> fixtures;
    if (dim.m == 2 && dim.n == 0) {
        NCPolynomial a = NCPolynomial::generator(0), b = NCPolynomial::generator(1),
                     c = NCPolynomial::generator(2), d = NCPolynomial::generator(3);
        fixtures = {
            a * b * q - b * a * q.pow(-1) - b * h,
            c * a * q - a * c * q.pow(-1) - c * h,
            a * d - d * a,
            (b * c - c * b) * q - (a * lam - NCPolynomial::constant(h)) * (d - a),
            (c * d - d * c) * q - c * (a * lam - NCPolynomial::constant(h)),
            (d * b - b * d) * q - (a * lam - NCPolynomial::constant(h)) * b,
        };
        ok = ok && alg.pres().rules().size() == 6;
    } else if (dim.m == 1 && dim.n == 1) {
        NCPolynomial a = NCPolynomial::generator(0), b = NCPolynomial::generator(1),
                     c = NCPolynomial::generator(2), d = NCPolynomial::generator(3);
        Scalar q2 = q * q;
        // hbar-linear signs follow the derivation (and the representation
        // and centrality checks); see the conformance notes.
        fixtures = {
            a * b * q2 - b * a - b * (q * h),
            c * a * q2 - a * c - c * (q * h),
            a * d - d * a,
            b * b,
            c * c,
            b * c * q.pow(-1) + c * b * q - a * (a - d) * lam - (d - a) * h,
            b * d - d * b - a * b * (q2 - Scalar(1)) + b * (q * h),
            c * d - d * c + c * a * (q2 - Scalar(1)) - c * (q * h),
        };
        ok = ok && alg.pres().rules().size() == 8;
        const NCPolynomial* bb = alg.pres().rule_for(Word{1, 1});
        const NCPolynomial* cc = alg.pres().rule_for(Word{2, 2});
        bool squares = bb && cc && bb->is_zero() && cc->is_zero();
        rep.detail("odd_squares_vanish", squares ? "yes" : "no");
        ok = ok && squares;
    }
    rep.detail("rule_count", std::to_string(alg.pres().rules().size()));
    for (size_t i = 0; i < fixtures.size(); ++i) {
        NCPolynomial res = normal_form(fixtures[i], alg.pres());
        if (!res.is_zero()) {
            ok = false;
            rep.detail("fixture_" + std::to_string(i + 1), res.to_string(names));
        }
    }
    // Span equality: the fixture relations generate the same quadratic
    // space as the oriented rules.
    if (!fixtures.empty()) {
        std::vector<NCPolynomial> rules_as_relations;
        for (const auto& [lead, tail] : alg.pres().rules())
            rules_as_relations.push_back(NCPolynomial::term(lead, Scalar(1)) - tail);
        auto span_rank = [&](const std::vector<NCPolynomial>& rels) {
            int g = alg.pres().generator_count();
            std::vector<SparseRow> rows;
            for (const auto& rel : rels) {
                SparseRow row;
                for (const auto& [w, cf] : rel.terms()) {
                    int col = 0;
                    if (w.size() == 2)
                        col = w[0] * g + w[1];
                    else if (w.size() == 1)
                        col = g * g + w[0];
                    else
                        col = g * g + g;
                    row[col] = cf;
                }
                rows.push_back(std::move(row));
            }
            return sparse_rank(rows);
        };
        std::vector<NCPolynomial> both = rules_as_relations;
        both.insert(both.end(), fixtures.begin(), fixtures.end());
        bool spans = span_rank(rules_as_relations) == static_cast<int>(alg.pres().rules().size()) &&
                     span_rank(both) == static_cast<int>(alg.pres().rules().size());
        rep.detail("span_equality", spans ? "yes" : "no");
        ok = ok && spans;
    }
    rep.set_pass(ok);
    return rep;
}

Report check_graded_dims(SuperDim dim) {
    Report rep;
    rep.command = "graded-dims";
    rep.inputs["dim"] = dim.to_string();
    REAlgebra alg = build_rea(dim, Scalar::hbar(), 4);
    int depth = dim.total() <= 2 ? 4 : 3;
    auto dims = hilbert_dims(alg.pres(), depth);
    auto expect = supersymmetric_dims(dim, depth);
    std::string got, want;
    for (int i = 0; i <= depth; ++i) {
        got += (i ? " " : "") + std::to_string(dims[static_cast<size_t>(i)]);
        want += (i ? " " : "") + std::to_string(expect[static_cast<size_t>(i)]);
    }
    bool ok = dims == expect && alg.confluence().passed();
    rep.detail("dims", got);
    rep.detail("expected", want);
    rep.detail("confluence_to_degree_4", alg.confluence().passed() ? "pass" : "fail");
    // The linear tails never disturb the graded dimensions: same counts
    // for the hbar = 0 presentation.
    Presentation plain = build_rea(dim, Scalar(0), 0).pres();
    bool graded_match = hilbert_dims(plain, depth) == dims;
    rep.detail("hbar_independent", graded_match ? "yes" : "no");
    rep.set_pass(ok && graded_match);
    return rep;
}

Report check_casimir_centrality(SuperDim dim, int max_power) {
    Report rep;
    rep.command = "casimir-centrality";
    rep.inputs["dim"] = dim.to_string();
    REAlgebra alg = build_rea(dim, Scalar::hbar(), 0);
    bool ok = true;
    for (int k = 1; k <= max_power; ++k) {
        NCPolynomial z = r_trace_power(alg, k);
        bool central = true;
        for (auto& [name, res] : centrality_residual(z, alg.pres())) central = central && res.is_zero();
        rep.detail("power_" + std::to_string(k), central ? "central" : "not central");
        ok = ok && central;
    }
    rep.set_pass(ok);
    return rep;
}

Report check_basic_example_centrality() {
    Report rep;
    rep.command = "basic-example-center";
    Scalar q = Scalar::q(), h = Scalar::hbar();
    Scalar twoqh = q_int(2) * h;
    Presentation pres = deformed_sl2_presentation(twoqh, twoqh, twoqh);
    NCPolynomial cas = NCPolynomial::term({0, 2}, q.pow(-1)) + NCPolynomial::term({2, 0}, q) +
                       NCPolynomial::term({1, 1}, q_int(2).inverse());
    bool ok = true;
    for (auto& [name, res] : centrality_residual(cas, pres)) ok = ok && res.is_zero();
    rep.detail("quadratic_center_element", ok ? "central" : "not central");
    // A generator is not central for generic q.
    bool x_central = true;
    for (auto& [name, res] : centrality_residual(NCPolynomial::generator(0), pres))
        x_central = x_central && res.is_zero();
    rep.detail("generator_not_central", x_central ? "unexpectedly central" : "confirmed");
    ok = ok && !x_central;
    rep.set_pass(ok);
    return rep;
}

Report check_cayley_hamilton(SuperDim dim) {
    Report rep;
    rep.command = "cayley-hamilton";
    rep.inputs["dim"] = dim.to_string();
    Scalar q = Scalar::q();
    REAlgebra alg = build_rea(dim, Scalar(0), 0);
    bool ok = true;
    NCPolynomial a = NCPolynomial::generator(0), b = NCPolynomial::generator(1),
                 c = NCPolynomial::generator(2), d = NCPolynomial::generator(3);
    std::vector<NCPolynomial> coeffs;
    if (dim.m == 2 && dim.n == 0) {
        coeffs = {a * d * q.pow(-2) - c * b, -(a * q.pow(-2) + d), NCPolynomial::constant(Scalar(1))};
    } else {
        // Constant coefficient sign per the mechanical solve.
        coeffs = {(a - d) * (a * d - b * c) + a * (b * c - c * b),
                  -(a * a - d * d + b * c - c * b), a - d};
    }
    bool zero = ncm_is_zero(ch_residual(alg, coeffs));
    rep.detail("identity_residual", zero ? "0" : "nonzero");
    ok = ok && zero;

    // The bounded solve reproduces it: some solution line has central
    // coefficients proportional to the fixture.
    auto sols = derive_ch_coeffs(alg);
    bool derived_ok = false;
    for (const auto& s : sols)
        if (ncm_is_zero(ch_residual(alg, s))) derived_ok = true;
    rep.detail("derived_solutions", std::to_string(sols.size()));
    ok = ok && derived_ok && !sols.empty();

    // Sanity: a wrong coefficient list does not vanish.
    std::vector<NCPolynomial> junk(static_cast<size_t>(dim.total()) + 1);
    junk.back() = NCPolynomial::constant(Scalar(1));
    bool junk_zero = ncm_is_zero(ch_residual(alg, junk));
    rep.detail("top_power_alone", junk_zero ? "unexpectedly zero" : "nonzero");
    ok = ok && !junk_zero;

    if (dim.m == 1 && dim.n == 1) {
        Report f = ch_factorized_check_11(alg);
        rep.detail("factorized_form", f.passed() ? "pass" : "fail");
        ok = ok && f.passed();
    }
    rep.set_pass(ok);
    return rep;
}

Report check_overlap_dichotomy() {
    Report rep;
    rep.command = "overlap-dichotomy";
    Scalar a = Scalar::variable("par_a"), c = Scalar::variable("par_c"), nu = Scalar::variable("nu");
    Scalar b = Scalar(2) - a;
    bool ok = true;
    {
        Presentation p = twisted_sl2_presentation(a, b, b, a, nu);
        int dim1 = overlap_dimension(p);
        rep.detail("overlap_dim_symmetric", std::to_string(dim1));
        ok = ok && dim1 == 1;
    }
    {
        Presentation p = twisted_sl2_presentation(a, b, c, Scalar(2) - c, nu);
        int dim0 = overlap_dimension(p);
        rep.detail("overlap_dim_generic", std::to_string(dim0));
        ok = ok && dim0 == 0;
    }
    {
        Scalar q = Scalar::q(), h = Scalar::hbar();
        Scalar twoqh = q_int(2) * h;
        Presentation good = deformed_sl2_presentation(twoqh, twoqh, twoqh);
        Report g = confluence_check(good, 4);
        rep.detail("confluence_equal_factors", g.passed() ? "pass" : "fail");
        ok = ok && g.passed();
        Presentation badp = deformed_sl2_presentation(Scalar(1), Scalar(0), Scalar(0));
        Report bad = confluence_check(badp, 4);
        rep.detail("confluence_unequal_factors", bad.passed() ? "unexpected pass" : "fail");
        ok = ok && !bad.passed();
    }
    rep.set_pass(ok);
    return rep;
}

Report check_poisson_battery() {
    Report rep;
    rep.command = "poisson-battery";
    bool ok = true;
    Scalar pa = Scalar::variable("pen_a"), pb = Scalar::variable("pen_b");

    {
        PoissonBracket lin = sl2_bracket();
        PoissonBracket quad = quadratic_sl2_bracket();
        PoissonBracket pen = pencil(lin, quad, pa, pb);
        bool jac = check_jacobi(lin).passed() && check_jacobi(quad).passed() &&
                   check_jacobi(pen).passed() && check_parity_axioms(pen).passed() &&
                   check_compatibility(lin, quad).passed();
        rep.detail("sl2_pencil", jac ? "pass" : "fail");
        ok = ok && jac;
        // Cas = 2xy + h^2/2 in normal order.
        std::vector<int> par{0, 0, 0};
        SCPolynomial cas =
            sc_mul(SCPolynomial::generator(0), SCPolynomial::generator(2), par) * Scalar(2) +
            sc_mul(SCPolynomial::generator(1), SCPolynomial::generator(1), par) * Scalar(Rational(1, 2));
        bool central = true;
        for (auto& [n, r] : center_residual(pen, cas)) central = central && r.is_zero();
        rep.detail("sl2_pencil_center", central ? "central" : "not central");
        ok = ok && central;
    }
    {
        PoissonBracket lin = linear_bracket({1, 1});
        PoissonBracket quad = quadratic_gl_bracket({1, 1});
        PoissonBracket pen = pencil(lin, quad, pa, pb);
        bool jac = check_jacobi(lin).passed() && check_jacobi(quad).passed() &&
                   check_jacobi(pen).passed() && check_parity_axioms(lin).passed() &&
                   check_parity_axioms(quad).passed() && check_compatibility(lin, quad).passed();
        rep.detail("gl11_pencil", jac ? "pass" : "fail");
        ok = ok && jac;
        std::vector<int> par = lin.parities();
        auto gen = [&](int i) { return SCPolynomial::generator(i); };
        SCPolynomial tr1 = gen(0) - gen(3);
        SCPolynomial tr2 = sc_mul(gen(0), gen(0), par) + sc_mul(gen(1), gen(2), par) * Scalar(2) -
                           sc_mul(gen(3), gen(3), par);
        bool central = true;
        for (auto& [n, r] : center_residual(pen, tr1)) central = central && r.is_zero();
        for (auto& [n, r] : center_residual(pen, tr2)) central = central && r.is_zero();
        rep.detail("gl11_pencil_center", central ? "central" : "not central");
        ok = ok && central;
    }
    {
        PoissonBracket lin = linear_bracket({2, 0});
        PoissonBracket quad = quadratic_gl_bracket({2, 0});
        bool jac = check_jacobi(quad).passed() && check_parity_axioms(quad).passed() &&
                   check_compatibility(lin, quad).passed();
        rep.detail("gl2_quadratic", jac ? "pass" : "fail");
        ok = ok && jac;
    }
    {
        // All monomials of total degree <= 2 plus named samples.
        std::vector<std::string> ps{"1", "x", "y", "z",  "x^2", "y^2", "z^2",
                                    "x*y", "x*z", "y*z", "x^2 + 3*y*z"};
        auto gens = so3_generators();
        std::vector<int> par{0, 0, 0};
        SCPolynomial cas;
        for (int i = 0; i < 3; ++i)
            cas += sc_mul(SCPolynomial::generator(i), SCPolynomial::generator(i), par);
        bool all = true;
        for (const auto& p : ps) {
            PoissonBracket br = so3_bracket(p);
            bool jac = check_jacobi(br).passed() && check_parity_axioms(br).passed();
            bool compat = check_compatibility(so3_linear_bracket(), br).passed();
            bool central = true;
            for (auto& [n, r] : center_residual(br, cas)) central = central && r.is_zero();
            if (!(jac && compat && central)) {
                all = false;
                rep.detail("so3_p=" + p, "fail");
            }
        }
        rep.detail("so3_family", all ? "pass" : "fail");
        ok = ok && all;
    }
    {
        // Deliberate violations must fail.
        std::vector<Generator> gens{{"x", 0}, {"y", 0}, {"z", 0}};
        std::vector<int> par{0, 0, 0};
        SCPolynomial y2 = sc_mul(SCPolynomial::generator(1), SCPolynomial::generator(1), par);
        std::vector<std::tuple<int, int, SCPolynomial>> entries;
        entries.emplace_back(0, 1, y2);
        entries.emplace_back(0, 2, SCPolynomial::generator(0));
        PoissonBracket broken(gens, std::move(entries));
        bool jac = check_jacobi(broken).passed();
        rep.detail("violation_jacobi", jac ? "unexpected pass" : "fail as expected");
        ok = ok && !jac;

        std::vector<Generator> sgens{{"u", 0}, {"v", 1}};
        std::vector<std::tuple<int, int, SCPolynomial>> sentries;
        sentries.emplace_back(0, 1, SCPolynomial::constant(Scalar(1)));
        PoissonBracket parity_broken(sgens, std::move(sentries));
        bool parity_ok = check_parity_axioms(parity_broken).passed();
        rep.detail("violation_parity", parity_ok ? "unexpected pass" : "fail as expected");
        ok = ok && !parity_ok;

        PoissonBracket lin = sl2_bracket();
        SCPolynomial x2 = sc_mul(SCPolynomial::generator(0), SCPolynomial::generator(0), par);
        std::vector<std::tuple<int, int, SCPolynomial>> pentries;
        pentries.emplace_back(1, 0, x2);
        PoissonBracket perturb(lin.generators(), std::move(pentries));
        bool alone = check_jacobi(perturb).passed();
        bool compat = check_compatibility(lin, perturb).passed();
        rep.detail("violation_compatibility",
                   (alone && !compat) ? "fail as expected" : "unexpected outcome");
        ok = ok && alone && !compat;
    }
    rep.set_pass(ok);
    return rep;
}

Report check_orbit_battery() {
    Report rep;
    rep.command = "orbit-battery";
    bool ok = true;
    Scalar q = Scalar::q(), h = Scalar::hbar();
    Scalar mu1 = Scalar::variable("mu1"), mu2 = Scalar::variable("mu2"), nu1 = Scalar::variable("nu1");

    // Tr C consistency of the spectral weights for three dimensions.
    for (SuperDim dim : {SuperDim{1, 0}, SuperDim{2, 0}, SuperDim{1, 1}}) {
        Spectrum s;
        s.dim = dim;
        if (dim.m >= 1) s.mu.push_back(mu1);
        if (dim.m >= 2) s.mu.push_back(mu2);
        if (dim.n >= 1) s.nu.push_back(nu1);
        QuantumDims dims = quantum_dims(s, Scalar(0));
        Scalar trc = c_closed_form(dim).trace();
        bool match = power_sum(s, dims, 0) == trc;
        rep.detail("power_sum0_equals_trace_c_" + dim.to_string(), match ? "yes" : "no");
        ok = ok && match;
        Report pre = quantum_dims_prefactor_report(s, h);
        ok = ok && pre.passed();
    }

    {
        // Braided hyperboloid values.
        Spectrum s{{2, 0}, {mu1, -mu1}, {}};
        QuantumDims dims = quantum_dims(s, Scalar(0));
        bool v1 = power_sum(s, dims, 1).is_zero();
        bool v2 = power_sum(s, dims, 2) == (q.pow(-3) + q.pow(-1)) * mu1 * mu1;
        rep.detail("hyperboloid_trace1", v1 ? "0" : "nonzero");
        rep.detail("hyperboloid_trace2", v2 ? "matches" : "differs");
        ok = ok && v1 && v2;
        REAlgebra alg = build_rea({2, 0}, Scalar(0), 0);
        auto gens = orbit_ideal(alg, s);
        bool ideal_ok = gens.size() == 2 && gens[0] == r_trace_power(alg, 1);
        rep.detail("hyperboloid_ideal", ideal_ok ? "matches" : "differs");
        ok = ok && ideal_ok;
    }
    {
        // hbar-corrected traces.
        Spectrum s{{2, 0}, {mu1, mu2}, {}};
        QuantumDims dims = quantum_dims(s, h);
        bool v1 = power_sum(s, dims, 1) == q.pow(-1) * (mu1 + mu2) - q.pow(-2) * h;
        bool v2 = power_sum(s, dims, 2) == q.pow(-1) * (mu1 * mu1 + mu2 * mu2) +
                                              (q.pow(-1) - q.pow(-3)) * mu1 * mu2 -
                                              q.pow(-2) * h * (mu1 + mu2);
        rep.detail("corrected_traces_2_0", v1 && v2 ? "match" : "differ");
        ok = ok && v1 && v2;
        Spectrum t{{1, 1}, {mu1}, {nu1}};
        QuantumDims dt = quantum_dims(t, h);
        bool w1 = power_sum(t, dt, 1) == q.pow(-1) * mu1 - q * nu1 + h;
        bool w2 = power_sum(t, dt, 2) == (mu1 + nu1) * (q.pow(-1) * mu1 - q * nu1) + h * (mu1 + nu1);
        rep.detail("corrected_traces_1_1", w1 && w2 ? "match" : "differ");
        ok = ok && w1 && w2;
    }
    {
        // q -> 1 degeneration of the weights.
        Spectrum s{{1, 1}, {mu1}, {nu1}};
        QuantumDims dims = quantum_dims(s, Scalar(0));
        bool deg = dims.d[0].substitute("q", Scalar(1)) == Scalar(1) &&
                   dims.dprime[0].substitute("q", Scalar(1)) == Scalar(-1);
        rep.detail("classical_weights", deg ? "+1/-1" : "unexpected");
        ok = ok && deg;
        bool cls = power_sum(s, dims, 2).substitute("q", Scalar(1)) == classical_power_sum(s, 2);
        rep.detail("classical_power_sum_limit", cls ? "matches" : "differs");
        ok = ok && cls;
    }
    {
        // Regularity verdicts.
        bool r1 = regularity({{2, 0}, {Scalar(1), Scalar(-1)}, {}}, Scalar(0)).passed();
        bool r2 = regularity({{1, 1}, {q.pow(2) * nu1}, {nu1}}, Scalar(0)).passed();
        bool r3 = regularity({{1, 1}, {mu1}, {nu1}}, h).passed();
        rep.detail("hyperboloid_regular", r1 ? "yes" : "no");
        rep.detail("trace_zero_locus_regular", r2 ? "unexpectedly yes" : "no");
        rep.detail("generic_symbolic_regular", r3 ? "yes" : "no");
        ok = ok && r1 && !r2 && r3;
    }
    {
        // Trace convention is pinned by the closed form.
        bool conv = true;
        for (SuperDim dim : {SuperDim{2, 0}, SuperDim{1, 1}, SuperDim{2, 1}, SuperDim{1, 2}}) {
            Scalar expect = Scalar::q().pow(dim.n - dim.m) * q_int(dim.m - dim.n);
            conv = conv && c_closed_form(dim).trace() == expect;
        }
        rep.detail("trace_c_convention", conv ? "q^(n-m)*(m-n)_q" : "unexpected");
        ok = ok && conv;
    }
    rep.set_pass(ok);
    return rep;
}

std::vector<Report> run_acceptance_suite(int jobs) {
    declare_standard_symbols();
    std::vector<std::pair<std::string, std::function<Report()>>> checks;

    checks.emplace_back("01-braiding-axioms", [] {
        Report rep;
        rep.command = "01-braiding-axioms";
        bool ok = true;
        auto dims = all_dims_up_to(4);
        rep.inputs["dims"] = join_dims(dims);
        for (const auto& d : dims) {
            Report r = check_braiding_axioms(d);
            rep.detail(d.to_string(), r.passed() ? "pass" : "fail");
            ok = ok && r.passed();
        }
        rep.set_pass(ok);
        return rep;
    });
    checks.emplace_back("02-skew-inverse", [] {
        Report rep;
        rep.command = "02-skew-inverse";
        bool ok = true;
        for (const auto& d : all_dims_up_to(4)) {
            Report r = check_skew_pair(d);
            rep.detail(d.to_string(), r.passed() ? "pass" : "fail");
            ok = ok && r.passed();
        }
        rep.set_pass(ok);
        return rep;
    });
    checks.emplace_back("03-defining-relations", [] {
        Report rep;
        rep.command = "03-defining-relations";
        Report a = check_defining_relations({2, 0});
        Report b = check_defining_relations({1, 1});
        rep.detail("(2|0)", a.passed() ? "pass" : "fail");
        rep.detail("(1|1)", b.passed() ? "pass" : "fail");
        rep.set_pass(a.passed() && b.passed());
        return rep;
    });
    checks.emplace_back("04-graded-dims-confluence", [] {
        Report rep;
        rep.command = "04-graded-dims-confluence";
        Report a = check_graded_dims({2, 0});
        Report b = check_graded_dims({1, 1});
        for (const auto& r : {std::ref(a), std::ref(b)})
            for (const auto& [k, v] : r.get().details) rep.detail(r.get().inputs["dim"].get<std::string>() + " " + k, v);
        rep.set_pass(a.passed() && b.passed());
        return rep;
    });
    checks.emplace_back("05-centrality", [] {
        Report rep;
        rep.command = "05-centrality";
        bool ok = true;
        for (SuperDim d : {SuperDim{1, 0}, SuperDim{2, 0}, SuperDim{1, 1}, SuperDim{2, 1}}) {
            Report r = check_casimir_centrality(d, d.total());
            rep.detail(d.to_string(), r.passed() ? "pass" : "fail");
            ok = ok && r.passed();
        }
        Report base = check_basic_example_centrality();
        rep.detail("deformed-sl2-center", base.passed() ? "pass" : "fail");
        rep.set_pass(ok && base.passed());
        return rep;
    });
    checks.emplace_back("06-cayley-hamilton", [] {
        Report rep;
        rep.command = "06-cayley-hamilton";
        Report a = check_cayley_hamilton({2, 0});
        Report b = check_cayley_hamilton({1, 1});
        rep.detail("(2|0)", a.passed() ? "pass" : "fail");
        rep.detail("(1|1)", b.passed() ? "pass" : "fail");
        rep.set_pass(a.passed() && b.passed());
        return rep;
    });
    checks.emplace_back("07-overlap-dichotomy", [] { return check_overlap_dichotomy(); });
    checks.emplace_back("08-poisson-suite", [] { return check_poisson_battery(); });
    checks.emplace_back("09-semiclassical", [] {
        Report rep;
        rep.command = "09-semiclassical";
        bool ok = true;
        for (SuperDim d : {SuperDim{1, 1}, SuperDim{2, 0}}) {
            Report r = semiclassical_consistency(d);
            rep.detail(d.to_string(), r.passed() ? "pass" : "fail");
            ok = ok && r.passed();
            TensorOperator rhat = super_flip(d) * hecke_symmetry(d);
            bool at1 = rhat.substitute_q(Scalar(1)) == TensorOperator::identity(d, 2);
            rep.detail("identity_at_q1_" + d.to_string(), at1 ? "yes" : "no");
            ok = ok && at1;
        }
        rep.set_pass(ok);
        return rep;
    });
    checks.emplace_back("10-orbits", [] { return check_orbit_battery(); });

    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    jobs = std::min<int>(jobs, static_cast<int>(checks.size()));

    std::vector<Report> results(checks.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= checks.size()) return;
            results[i] = timed([&] { return checks[i].second(); });
            results[i].command = checks[i].first;
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return results;
}

} // namespace braidlab
