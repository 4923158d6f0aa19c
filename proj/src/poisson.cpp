#include "braidlab/poisson.hpp"

#include <cassert>
#include <sstream>

namespace braidlab {

namespace {

// Word of generator indices of a normal-ordered monomial, ascending.
std::vector<int> monomial_factors(const Monomial& m) {
    std::vector<int> out;
    const auto& e = m.exponents();
    for (size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k) out.push_back(static_cast<int>(i));
    return out;
}

SCPolynomial monomial_suffix(const std::vector<int>& factors, size_t from) {
    std::vector<int> exps;
    for (size_t t = from; t < factors.size(); ++t) {
        if (factors[t] >= static_cast<int>(exps.size())) exps.resize(static_cast<size_t>(factors[t]) + 1, 0);
        exps[static_cast<size_t>(factors[t])] += 1;
    }
    return SCPolynomial::term(Monomial::from_exponents(std::move(exps)), Scalar(1));
}

} // namespace

PoissonBracket::PoissonBracket(std::vector<Generator> gens,
                               std::vector<std::tuple<int, int, SCPolynomial>> entries)
    : gens_(std::move(gens)) {
    for (const auto& g : gens_) parities_.push_back(g.parity & 1);
    for (auto& [i, j, value] : entries) {
        if (value.is_zero()) continue;
        if (i <= j) {
            table_[{i, j}] = std::move(value);
        } else {
            int sign = (parities_[static_cast<size_t>(i)] * parities_[static_cast<size_t>(j)]) ? 1 : -1;
            table_[{j, i}] = value * Scalar(sign);
        }
    }
}

std::vector<std::string> PoissonBracket::names() const {
    std::vector<std::string> out;
    for (const auto& g : gens_) out.push_back(g.name);
    return out;
}

int PoissonBracket::generator_index(const std::string& name) const {
    for (size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return static_cast<int>(i);
    return -1;
}

SCPolynomial PoissonBracket::on_generators(int i, int j) const {
    if (i <= j) {
        auto it = table_.find({i, j});
        return it == table_.end() ? SCPolynomial() : it->second;
    }
    auto it = table_.find({j, i});
    if (it == table_.end()) return SCPolynomial();
    int sign = (parities_[static_cast<size_t>(i)] * parities_[static_cast<size_t>(j)]) ? 1 : -1;
    return it->second * Scalar(sign);
}

nlohmann::ordered_json PoissonBracket::to_json() const {
    nlohmann::ordered_json j;
    j["bracket"] = true;
    auto gens = nlohmann::ordered_json::array();
    for (const auto& g : gens_) {
        nlohmann::ordered_json e;
        e["name"] = g.name;
        e["parity"] = g.parity;
        gens.push_back(std::move(e));
    }
    j["generators"] = std::move(gens);
    auto rules = nlohmann::ordered_json::array();
    auto nm = names();
    for (const auto& [key, value] : table_) {
        nlohmann::ordered_json r;
        r["lead"] = {nm[static_cast<size_t>(key.first)], nm[static_cast<size_t>(key.second)]};
        r["tail"] = value.to_string(nm);
        rules.push_back(std::move(r));
    }
    j["rules"] = std::move(rules);
    return j;
}

PoissonBracket PoissonBracket::from_json(const nlohmann::json& j) {
    if (!j.value("bracket", false)) throw ParseError("missing \"bracket\": true flag");
    std::vector<Generator> gens;
    for (const auto& g : j.at("generators"))
        gens.push_back({g.at("name").get<std::string>(), g.at("parity").get<int>()});
    std::vector<std::tuple<int, int, SCPolynomial>> entries;
    auto index_of = [&](const std::string& name) {
        for (size_t i = 0; i < gens.size(); ++i)
            if (gens[i].name == name) return static_cast<int>(i);
        throw ParseError("unknown generator " + name);
    };
    for (const auto& r : j.at("rules")) {
        int a = index_of(r.at("lead").at(0).get<std::string>());
        int b = index_of(r.at("lead").at(1).get<std::string>());
        entries.emplace_back(a, b, parse_scpoly(r.at("tail").get<std::string>(), gens));
    }
    return PoissonBracket(std::move(gens), std::move(entries));
}

// --------------------------------------------------------------- evaluate

namespace {

SCPolynomial bracket_mono(const PoissonBracket& br, const std::vector<int>& u,
                          const std::vector<int>& v);

SCPolynomial bracket_gen_mono(const PoissonBracket& br, int g, const std::vector<int>& v) {
    const auto& par = br.parities();
    if (v.empty()) return SCPolynomial();
    if (v.size() == 1) return br.on_generators(g, v[0]);
    // {g, h v'} = {g,h} v' + (-1)^{|g||h|} h {g,v'}
    int h = v[0];
    SCPolynomial first =
        sc_mul(br.on_generators(g, h), monomial_suffix(v, 1), par);
    SCPolynomial rest = bracket_gen_mono(br, g, std::vector<int>(v.begin() + 1, v.end()));
    SCPolynomial second = sc_mul(SCPolynomial::generator(h), rest, par);
    if (par[static_cast<size_t>(g)] && par[static_cast<size_t>(h)]) second = -second;
    return first + second;
}

SCPolynomial bracket_mono(const PoissonBracket& br, const std::vector<int>& u,
                          const std::vector<int>& v) {
    const auto& par = br.parities();
    if (u.empty() || v.empty()) return SCPolynomial();
    if (u.size() == 1) return bracket_gen_mono(br, u[0], v);
    // {g u', v} = g {u', v} + (-1)^{|u'||v|} {g, v} u'
    int g = u[0];
    std::vector<int> urest(u.begin() + 1, u.end());
    SCPolynomial first = sc_mul(SCPolynomial::generator(g), bracket_mono(br, urest, v), par);
    int pu = 0;
    for (int t : urest) pu ^= par[static_cast<size_t>(t)];
    int pv = 0;
    for (int t : v) pv ^= par[static_cast<size_t>(t)];
    SCPolynomial second = sc_mul(bracket_gen_mono(br, g, v), monomial_suffix(u, 1), par);
    if (pu && pv) second = -second;
    return first + second;
}

} // namespace

SCPolynomial bracket_eval(const PoissonBracket& br, const SCPolynomial& f, const SCPolynomial& g) {
    SCPolynomial acc;
    for (const auto& [mf, cf] : f.terms()) {
        auto uf = monomial_factors(mf);
        for (const auto& [mg, cg] : g.terms()) {
            auto ug = monomial_factors(mg);
            acc += bracket_mono(br, uf, ug) * (cf * cg);
        }
    }
    return acc;
}

// ----------------------------------------------------------------- checks

Report check_jacobi(const PoissonBracket& br) {
    Report rep;
    rep.command = "jacobi";
    int g = static_cast<int>(br.generators().size());
    const auto& par = br.parities();
    auto nm = br.names();
    bool ok = true;
    for (int i = 0; i < g; ++i)
        for (int j = i; j < g; ++j)
            for (int k = j; k < g; ++k) {
                SCPolynomial f = SCPolynomial::generator(i);
                SCPolynomial h = SCPolynomial::generator(j);
                SCPolynomial w = SCPolynomial::generator(k);
                int pf = par[static_cast<size_t>(i)], ph = par[static_cast<size_t>(j)], pw = par[static_cast<size_t>(k)];
                SCPolynomial sum = bracket_eval(br, bracket_eval(br, f, h), w);
                SCPolynomial t2 = bracket_eval(br, bracket_eval(br, w, f), h);
                if ((ph * pw + pf * pw) & 1) t2 = -t2;
                SCPolynomial t3 = bracket_eval(br, bracket_eval(br, h, w), f);
                if ((pf * ph + pf * pw) & 1) t3 = -t3;
                sum += t2;
                sum += t3;
                if (!sum.is_zero()) {
                    ok = false;
                    rep.detail("jacobiator(" + nm[static_cast<size_t>(i)] + "," + nm[static_cast<size_t>(j)] + "," +
                                   nm[static_cast<size_t>(k)] + ")",
                               sum.to_string(nm));
                }
            }
    rep.set_pass(ok);
    if (ok) rep.detail("jacobiator", "0 on all generator triples");
    return rep;
}

namespace {

bool same_generators(const PoissonBracket& a, const PoissonBracket& b) {
    if (a.generators().size() != b.generators().size()) return false;
    for (size_t i = 0; i < a.generators().size(); ++i)
        if (a.generators()[i].name != b.generators()[i].name ||
            a.generators()[i].parity != b.generators()[i].parity)
            return false;
    return true;
}

} // namespace

Report check_compatibility(const PoissonBracket& b1, const PoissonBracket& b2) {
    if (!same_generators(b1, b2)) throw GeneratorMismatch();
    PoissonBracket sum = pencil(b1, b2, Scalar(1), Scalar(1));
    Report rep = check_jacobi(sum);
    rep.command = "compatibility";
    return rep;
}

Report check_parity_axioms(const PoissonBracket& br) {
    Report rep;
    rep.command = "parity-axioms";
    const auto& par = br.parities();
    auto nm = br.names();
    bool ok = true;
    int g = static_cast<int>(br.generators().size());
    for (int i = 0; i < g; ++i)
        for (int j = i; j < g; ++j) {
            SCPolynomial value = br.on_generators(i, j);
            if (value.is_zero()) continue;
            int want = (par[static_cast<size_t>(i)] + par[static_cast<size_t>(j)]) & 1;
            auto have = sc_parity(value, par);
            if (!have || *have != want) {
                ok = false;
                rep.detail("parity({" + nm[static_cast<size_t>(i)] + "," + nm[static_cast<size_t>(j)] + "})",
                           !have ? "mixed" : std::to_string(*have) + " != " + std::to_string(want));
            }
            if (i == j && !par[static_cast<size_t>(i)]) {
                ok = false;
                rep.detail("antisymmetry({" + nm[static_cast<size_t>(i)] + "," + nm[static_cast<size_t>(i)] + "})",
                           "nonzero bracket of an even generator with itself");
            }
        }
    rep.set_pass(ok);
    return rep;
}

std::vector<std::pair<std::string, SCPolynomial>> center_residual(const PoissonBracket& br,
                                                                  const SCPolynomial& z) {
    std::vector<std::pair<std::string, SCPolynomial>> out;
    auto nm = br.names();
    for (int i = 0; i < static_cast<int>(nm.size()); ++i)
        out.emplace_back(nm[static_cast<size_t>(i)],
                         bracket_eval(br, z, SCPolynomial::generator(i)));
    return out;
}

// ----------------------------------------------------------- constructors

PoissonBracket sl2_bracket() {
    std::vector<Generator> gens{{"x", 0}, {"h", 0}, {"y", 0}};
    // {x,y} = h, {h,x} = 2x, {h,y} = -2y
    std::vector<std::tuple<int, int, SCPolynomial>> entries;
    entries.emplace_back(0, 2, SCPolynomial::generator(1));
    entries.emplace_back(1, 0, SCPolynomial::generator(0) * Scalar(2));
    entries.emplace_back(1, 2, SCPolynomial::generator(2) * Scalar(-2));
    return PoissonBracket(std::move(gens), std::move(entries));
}

PoissonBracket quadratic_sl2_bracket() {
    std::vector<Generator> gens{{"x", 0}, {"h", 0}, {"y", 0}};
    std::vector<int> par{0, 0, 0};
    // {x,y} = h^2, {h,x} = 2xh, {h,y} = -2yh
    SCPolynomial h2 = sc_mul(SCPolynomial::generator(1), SCPolynomial::generator(1), par);
    SCPolynomial xh = sc_mul(SCPolynomial::generator(0), SCPolynomial::generator(1), par);
    SCPolynomial yh = sc_mul(SCPolynomial::generator(2), SCPolynomial::generator(1), par);
    std::vector<std::tuple<int, int, SCPolynomial>> entries;
    entries.emplace_back(0, 2, h2);
    entries.emplace_back(1, 0, xh * Scalar(2));
    entries.emplace_back(1, 2, yh * Scalar(-2));
    return PoissonBracket(std::move(gens), std::move(entries));
}

PoissonBracket pencil(const PoissonBracket& b1, const PoissonBracket& b2, const Scalar& a,
                      const Scalar& b) {
    if (!same_generators(b1, b2)) throw GeneratorMismatch();
    std::vector<std::tuple<int, int, SCPolynomial>> entries;
    int g = static_cast<int>(b1.generators().size());
    for (int i = 0; i < g; ++i)
        for (int j = i; j < g; ++j) {
            SCPolynomial v = b1.on_generators(i, j) * a + b2.on_generators(i, j) * b;
            if (!v.is_zero()) entries.emplace_back(i, j, std::move(v));
        }
    return PoissonBracket(b1.generators(), std::move(entries));
}

PoissonBracket linear_bracket(SuperDim dim) {
    Presentation pres = classical_limit_presentation(dim, Scalar(1));
    auto gens = pres.generators();
    int g = pres.generator_count();
    std::vector<std::tuple<int, int, SCPolynomial>> entries;
    for (int i = 0; i < g; ++i)
        for (int j = i; j < g; ++j) {
            int sign = (gens[static_cast<size_t>(i)].parity * gens[static_cast<size_t>(j)].parity) % 2 ? 1 : -1;
            NCPolynomial comm = NCPolynomial::generator(i) * NCPolynomial::generator(j) +
                                NCPolynomial::generator(j) * NCPolynomial::generator(i) * Scalar(sign);
            NCPolynomial nf = normal_form(comm, pres);
            if (nf.degree() > 1)
                throw Error("classical-limit commutator is not linear");
            SCPolynomial value;
            for (const auto& [w, c] : nf.terms()) {
                if (w.empty())
                    value += SCPolynomial::constant(c);
                else
                    value += SCPolynomial::generator(w[0]) * c;
            }
            if (!value.is_zero()) entries.emplace_back(i, j, std::move(value));
        }
    return PoissonBracket(gens, std::move(entries));
}

std::vector<Generator> so3_generators() {
    return {{"x", 0}, {"y", 0}, {"z", 0}};
}

PoissonBracket so3_bracket(const SCPolynomial& p) {
    auto gens = so3_generators();
    std::vector<int> par{0, 0, 0};
    std::vector<std::tuple<int, int, SCPolynomial>> entries;
    entries.emplace_back(0, 1, sc_mul(SCPolynomial::generator(2), p, par));
    entries.emplace_back(1, 2, sc_mul(SCPolynomial::generator(0), p, par));
    entries.emplace_back(2, 0, sc_mul(SCPolynomial::generator(1), p, par));
    return PoissonBracket(std::move(gens), std::move(entries));
}

PoissonBracket so3_bracket(const std::string& p_text) {
    return so3_bracket(parse_scpoly(p_text, so3_generators()));
}

PoissonBracket so3_linear_bracket() { return so3_bracket(SCPolynomial::constant(Scalar(1))); }

// -------------------------------------------------------- semiclassical r

ClassicalRMatrix semiclassical_r(SuperDim dim) {
    TensorOperator rhat = super_flip(dim) * hecke_symmetry(dim);
    Scalar nu = Scalar::variable("nu");
    Scalar one_plus_nu = Scalar(1) + nu;
    TensorOperator r = rhat.map_entries([&](const Scalar& v) {
        return v.substitute("q", one_plus_nu).derivative("nu").substitute("nu", Scalar(0));
    });
    return {dim, std::move(r)};
}

Report semiclassical_r_pattern_check(const ClassicalRMatrix& cr) {
    Report rep;
    rep.command = "semiclassical-r-pattern";
    rep.inputs["dim"] = cr.dim.to_string();
    int d = cr.dim.total();
    TensorOperator pattern(cr.dim, 2);
    for (int i = 1; i <= d; ++i) {
        int p = cr.dim.parity(i);
        int v = (p ? -1 : 1) * (1 - 2 * p);
        pattern.set((i - 1) * d + (i - 1), (i - 1) * d + (i - 1), Scalar(v));
    }
    for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j)
            pattern.set((j - 1) * d + (i - 1), (i - 1) * d + (j - 1), Scalar(2));
    bool match = cr.r == pattern;
    rep.set(Report::Outcome::info);
    rep.detail("matches_printed_pattern", match ? "yes" : "no");
    if (!match) {
        TensorOperator diff = cr.r - pattern;
        diff.for_each([&](int r, int c, const Scalar& v) {
            rep.detail("mismatch[" + std::to_string(r) + "," + std::to_string(c) + "]",
                       "computed " + cr.r.at(r, c).to_string() + ", pattern " +
                           pattern.at(r, c).to_string());
        });
    }
    return rep;
}

// ------------------------------------------------------- quadratic bracket

PoissonBracket quadratic_gl_bracket(SuperDim dim) {
    int d = dim.total();
    int s = d * d;
    auto gens = rea_generators(dim);
    std::vector<int> par;
    for (const auto& g : gens) par.push_back(g.parity);

    TensorOperator sigma = super_flip(dim);
    TensorOperator r = semiclassical_r(dim).r;
    TensorOperator r21 = sigma * r * sigma;

    using SCMatrix = std::vector<std::vector<SCPolynomial>>;
    auto lift = [&](const TensorOperator& op) {
        SCMatrix m(static_cast<size_t>(s), std::vector<SCPolynomial>(static_cast<size_t>(s)));
        op.for_each([&](int i, int j, const Scalar& v) {
            m[static_cast<size_t>(i)][static_cast<size_t>(j)] = SCPolynomial::constant(v);
        });
        return m;
    };
    auto mul = [&](const SCMatrix& a, const SCMatrix& b) {
        SCMatrix m(static_cast<size_t>(s), std::vector<SCPolynomial>(static_cast<size_t>(s)));
        for (int i = 0; i < s; ++i)
            for (int k = 0; k < s; ++k) {
                if (a[static_cast<size_t>(i)][static_cast<size_t>(k)].is_zero()) continue;
                for (int j = 0; j < s; ++j) {
                    if (b[static_cast<size_t>(k)][static_cast<size_t>(j)].is_zero()) continue;
                    m[static_cast<size_t>(i)][static_cast<size_t>(j)] +=
                        sc_mul(a[static_cast<size_t>(i)][static_cast<size_t>(k)],
                               b[static_cast<size_t>(k)][static_cast<size_t>(j)], par);
                }
            }
        return m;
    };

    SCMatrix l1(static_cast<size_t>(s), std::vector<SCPolynomial>(static_cast<size_t>(s)));
    for (int i = 0; i < d; ++i)
        for (int a = 0; a < d; ++a)
            for (int j = 0; j < d; ++j)
                l1[static_cast<size_t>(i * d + a)][static_cast<size_t>(j * d + a)] =
                    SCPolynomial::generator(i * d + j);
    SCMatrix sig = lift(sigma);
    SCMatrix l2 = mul(mul(sig, l1), sig);
    SCMatrix rm = lift(r);
    SCMatrix r21m = lift(r21);

    SCMatrix acc(static_cast<size_t>(s), std::vector<SCPolynomial>(static_cast<size_t>(s)));
    auto add = [&](const SCMatrix& m, int sign) {
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < s; ++j) {
                if (m[static_cast<size_t>(i)][static_cast<size_t>(j)].is_zero()) continue;
                if (sign > 0)
                    acc[static_cast<size_t>(i)][static_cast<size_t>(j)] += m[static_cast<size_t>(i)][static_cast<size_t>(j)];
                else
                    acc[static_cast<size_t>(i)][static_cast<size_t>(j)] -= m[static_cast<size_t>(i)][static_cast<size_t>(j)];
            }
    };
    add(mul(rm, mul(l1, l2)), -1);
    add(mul(l1, mul(r21m, l2)), -1);
    add(mul(l2, mul(l1, r21m)), +1);
    add(mul(l2, mul(rm, l1)), +1);

    // Entry ((i,a),(j,b)) carries the bracket of generators (i,j) and
    // (a,b) twisted by the Koszul sign of moving the slot-2 entry past the
    // slot-1 column index.
    // Normalized to the deformation parameter 1 - q^2: the commutator of
    // two generators in the quadratic algebra equals (1 - q^2) times the
    // bracket, exactly.
    Scalar scale(Rational(-1, 2));
    auto read_off = [&](int u, int v) {
        int i = u / d, j = u % d;
        int a = v / d, b = v % d;
        SCPolynomial value = acc[static_cast<size_t>(i * d + a)][static_cast<size_t>(j * d + b)] * scale;
        int sign = dim.parity(j + 1) * ((dim.parity(a + 1) + dim.parity(b + 1)) % 2);
        return sign ? -value : value;
    };
    std::vector<std::tuple<int, int, SCPolynomial>> entries;
    for (int u = 0; u < s; ++u)
        for (int v = u; v < s; ++v) {
            SCPolynomial value = read_off(u, v);
            if (!value.is_zero()) entries.emplace_back(u, v, std::move(value));
        }
    PoissonBracket out(gens, std::move(entries));

    // The read-off is only consistent if the matrix expression is itself
    // super-antisymmetric; verify the transposed entries.
    for (int u = 0; u < s; ++u)
        for (int v = 0; v < s; ++v)
            if (out.on_generators(u, v) != read_off(u, v))
                throw Error("quadratic bracket expression is not super-antisymmetric");
    return out;
}

// --------------------------------------------------------- cross checks

Report semiclassical_consistency(SuperDim dim) {
    Report rep;
    rep.command = "semiclassical-consistency";
    rep.inputs["dim"] = dim.to_string();
    REAlgebra alg = build_rea(dim, Scalar(0), /*confluence_degree=*/0);
    PoissonBracket quad = quadratic_gl_bracket(dim);
    auto nm = alg.names();
    const auto& gens = alg.pres().generators();
    int g = alg.pres().generator_count();
    bool ok = true;
    for (int u = 0; u < g && ok; ++u)
        for (int v = u; v < g && ok; ++v) {
            int sign = (gens[static_cast<size_t>(u)].parity * gens[static_cast<size_t>(v)].parity) % 2 ? 1 : -1;
            NCPolynomial comm = NCPolynomial::generator(u) * NCPolynomial::generator(v) +
                                NCPolynomial::generator(v) * NCPolynomial::generator(u) * Scalar(sign);
            NCPolynomial nf = normal_form(comm, alg.pres());
            SCPolynomial first_order;
            for (const auto& [w, c] : nf.terms()) {
                Scalar at_one = c.substitute("q", Scalar(1));
                if (!at_one.is_zero()) {
                    ok = false;
                    rep.detail("classical_limit({" + nm[static_cast<size_t>(u)] + "," + nm[static_cast<size_t>(v)] + "})",
                               "commutator does not vanish at q = 1");
                    break;
                }
                // Coefficient with respect to nu = 1 - q^2.
                Scalar slope = c.derivative("q").substitute("q", Scalar(1)) / Scalar(-2);
                if (slope.is_zero()) continue;
                std::vector<int> exps;
                for (uint8_t t : w) {
                    if (t >= exps.size()) exps.resize(static_cast<size_t>(t) + 1, 0);
                    exps[t] += 1;
                }
                first_order.add_term(Monomial::from_exponents(std::move(exps)), slope);
            }
            if (!ok) break;
            SCPolynomial expect = quad.on_generators(u, v);
            if (first_order != expect) {
                ok = false;
                rep.detail("pair(" + nm[static_cast<size_t>(u)] + "," + nm[static_cast<size_t>(v)] + ")",
                           "expansion " + first_order.to_string(nm) + " vs bracket " +
                               expect.to_string(nm));
            }
        }
    rep.set_pass(ok);
    if (ok) rep.detail("pairs", "all generator pairs agree");
    return rep;
}

} // namespace braidlab
