#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braidlab/poisson.hpp"

using namespace braidlab;

namespace {

SCPolynomial g(int i) { return SCPolynomial::generator(i); }

SCPolynomial mul(const PoissonBracket& br, const SCPolynomial& a, const SCPolynomial& b) {
    return sc_mul(a, b, br.parities());
}

// Specializes the even generator with the given index to minus another
// one; used to restrict to a trace-zero locus in tests.
SCPolynomial substitute_negated(const SCPolynomial& p, int from, int to,
                                const std::vector<int>& par) {
    SCPolynomial acc;
    for (const auto& [m, c] : p.terms()) {
        SCPolynomial term = SCPolynomial::constant(c);
        const auto& e = m.exponents();
        for (size_t v = 0; v < e.size(); ++v)
            for (int k = 0; k < e[v]; ++k) {
                SCPolynomial factor = static_cast<int>(v) == from ? -g(to) : g(static_cast<int>(v));
                term = sc_mul(term, factor, par);
            }
        acc += term;
    }
    return acc;
}

} // namespace

TEST_CASE("rank-one brackets") {
    PoissonBracket lin = sl2_bracket();
    PoissonBracket quad = quadratic_sl2_bracket();
    SUBCASE("table values") {
        // {x,y} = h, {h,x} = 2x, {h,y} = -2y
        CHECK(lin.on_generators(0, 2) == g(1));
        CHECK(lin.on_generators(1, 0) == g(0) * Scalar(2));
        CHECK(lin.on_generators(1, 2) == g(2) * Scalar(-2));
        CHECK(quad.on_generators(1, 0) == mul(quad, g(0), g(1)) * Scalar(2));
        CHECK(quad.on_generators(0, 2) == mul(quad, g(1), g(1)));
    }
    SUBCASE("evaluation extends by the Leibniz rule") {
        // {h, x^2} = 2x{h,x} = 4x^2 h
        SCPolynomial x2 = mul(lin, g(0), g(0));
        CHECK(bracket_eval(quad, g(1), x2) ==
              mul(quad, x2, g(1)) * Scalar(4));
        // {f, f} = 0 for even f.
        SCPolynomial f = g(0) + mul(lin, g(1), g(2));
        CHECK(bracket_eval(lin, f, f).is_zero());
    }
    SUBCASE("axioms and compatibility") {
        CHECK(check_jacobi(lin).passed());
        CHECK(check_jacobi(quad).passed());
        CHECK(check_parity_axioms(lin).passed());
        CHECK(check_compatibility(lin, quad).passed());
        Scalar pa = Scalar::variable("pen_a"), pb = Scalar::variable("pen_b");
        PoissonBracket pen = pencil(lin, quad, pa, pb);
        CHECK(check_jacobi(pen).passed());
        // Rational sample grid.
        for (int i = -2; i <= 2; ++i)
            for (int j = -2; j <= 2; ++j)
                CHECK(check_jacobi(pencil(lin, quad, Scalar(i), Scalar(j))).passed());
    }
    SUBCASE("pencil center") {
        Scalar pa = Scalar::variable("pen_a"), pb = Scalar::variable("pen_b");
        PoissonBracket pen = pencil(lin, quad, pa, pb);
        SCPolynomial cas = mul(lin, g(0), g(2)) * Scalar(2) +
                           mul(lin, g(1), g(1)) * Scalar(Rational(1, 2));
        for (auto& [name, res] : center_residual(pen, cas)) {
            CAPTURE(name);
            CHECK(res.is_zero());
        }
        // x is not central.
        auto res = center_residual(lin, g(0));
        CHECK(!res[2].second.is_zero());
    }
    SUBCASE("trivial pencil weights") {
        PoissonBracket p10 = pencil(lin, quad, Scalar(1), Scalar(0));
        CHECK(p10.on_generators(1, 0) == lin.on_generators(1, 0));
        CHECK(p10.on_generators(0, 2) == lin.on_generators(0, 2));
    }
}

TEST_CASE("linear matrix bracket from the classical limit") {
    PoissonBracket lin = linear_bracket({1, 1});
    int a = lin.generator_index("a"), b = lin.generator_index("b"),
        c = lin.generator_index("c"), d = lin.generator_index("d");
    CHECK(lin.on_generators(a, b) == g(b));
    CHECK(lin.on_generators(a, c) == -g(c));
    CHECK(lin.on_generators(a, d).is_zero());
    CHECK(lin.on_generators(d, b) == g(b));
    CHECK(lin.on_generators(d, c) == -g(c));
    CHECK(lin.on_generators(b, c) == g(d) - g(a));
    CHECK(lin.on_generators(b, b).is_zero());
    CHECK(lin.on_generators(c, c).is_zero());
    CHECK(check_jacobi(lin).passed());
    CHECK(check_parity_axioms(lin).passed());
    CHECK(check_jacobi(linear_bracket({2, 0})).passed());
    CHECK(check_jacobi(linear_bracket({2, 1})).passed());
}

TEST_CASE("generator mismatch raises") {
    CHECK_THROWS_AS(check_compatibility(sl2_bracket(), so3_linear_bracket()), GeneratorMismatch);
    CHECK_THROWS_AS(pencil(sl2_bracket(), so3_linear_bracket(), Scalar(1), Scalar(1)),
                    GeneratorMismatch);
}

TEST_CASE("first-order matrix of the braiding") {
    SUBCASE("2x2 even matches the diagonal/off-diagonal pattern") {
        ClassicalRMatrix cr = semiclassical_r({2, 0});
        CHECK(cr.r.at(0, 0) == Scalar(1));
        CHECK(cr.r.at(3, 3) == Scalar(1));
        CHECK(cr.r.at(2, 1) == Scalar(2));
        CHECK(cr.r.at(1, 1).is_zero());
        Report pat = semiclassical_r_pattern_check(cr);
        REQUIRE(!pat.details.empty());
        CHECK(pat.details[0].second == "yes");
    }
    SUBCASE("mixed case deviates from the printed pattern at the odd diagonal") {
        // sigma R has q^{1-2|i|} on the diagonal; at the odd-odd slot the
        // entry is q^-1 whose slope at q = 1 is -1.
        TensorOperator rhat = super_flip({1, 1}) * hecke_symmetry({1, 1});
        CHECK(rhat.at(3, 3) == Scalar::q().pow(-1));
        ClassicalRMatrix cr = semiclassical_r({1, 1});
        CHECK(cr.r.at(3, 3) == Scalar(-1));
        Report pat = semiclassical_r_pattern_check(cr);
        CHECK(pat.details[0].second == "no");
    }
    SUBCASE("zeroth order is the identity") {
        for (SuperDim d : {SuperDim{2, 0}, SuperDim{1, 1}, SuperDim{2, 1}}) {
            TensorOperator rhat = super_flip(d) * hecke_symmetry(d);
            CHECK(rhat.substitute_q(Scalar(1)) == TensorOperator::identity(d, 2));
        }
    }
}

TEST_CASE("quadratic matrix bracket") {
    SUBCASE("1|1 table") {
        PoissonBracket quad = quadratic_gl_bracket({1, 1});
        int a = quad.generator_index("a"), b = quad.generator_index("b"),
            c = quad.generator_index("c"), d = quad.generator_index("d");
        CHECK(quad.on_generators(a, b) == mul(quad, g(a), g(b)));
        CHECK(quad.on_generators(a, c) == -mul(quad, g(a), g(c)));
        CHECK(quad.on_generators(a, d).is_zero());
        CHECK(quad.on_generators(d, b) == mul(quad, g(a), g(b)));
        CHECK(quad.on_generators(d, c) == -mul(quad, g(a), g(c)));
        CHECK(quad.on_generators(b, b).is_zero());
        CHECK(quad.on_generators(c, c).is_zero());
        CHECK(quad.on_generators(b, c) ==
              mul(quad, g(c), g(b)) - mul(quad, g(a), g(a) - g(d)));
        CHECK(check_jacobi(quad).passed());
        CHECK(check_parity_axioms(quad).passed());
        CHECK(check_compatibility(linear_bracket({1, 1}), quad).passed());
    }
    SUBCASE("2x2 even restricts to the quadratic rank-one bracket on the trace-zero locus") {
        PoissonBracket quad = quadratic_gl_bracket({2, 0});
        CHECK(check_jacobi(quad).passed());
        int a = quad.generator_index("a"), b = quad.generator_index("b"),
            c = quad.generator_index("c"), d = quad.generator_index("d");
        auto par = quad.parities();
        // The plain trace Poisson-commutes with everything.
        SCPolynomial tr = g(a) + g(d);
        for (auto& [name, res] : center_residual(quad, tr)) {
            CAPTURE(name);
            CHECK(res.is_zero());
        }
        // On d -> -a (trace zero) the table is half of the rank-one
        // quadratic bracket under x = b, y = c, h = a - d = 2a.
        auto at_trace_zero = [&](const SCPolynomial& p) {
            return substitute_negated(p, d, a, par);
        };
        SCPolynomial h_poly = g(a) - g(d);
        SCPolynomial lhs = at_trace_zero(bracket_eval(quad, h_poly, g(b)));
        SCPolynomial rhs = at_trace_zero(mul(quad, g(b), h_poly));  // (1/2) * 2 x h
        CHECK(lhs == rhs);
        SCPolynomial lhs2 = at_trace_zero(bracket_eval(quad, h_poly, g(c)));
        CHECK(lhs2 == -at_trace_zero(mul(quad, g(c), h_poly)));
        SCPolynomial lhs3 = at_trace_zero(bracket_eval(quad, g(b), g(c)));
        CHECK(lhs3 == at_trace_zero(mul(quad, h_poly, h_poly)) * Scalar(Rational(1, 2)));
    }
}

TEST_CASE("semiclassical expansion matches the quadratic bracket") {
    CHECK(semiclassical_consistency({1, 1}).passed());
    CHECK(semiclassical_consistency({2, 0}).passed());
}

TEST_CASE("rotational family") {
    std::vector<int> par{0, 0, 0};
    SCPolynomial cas;
    for (int i = 0; i < 3; ++i) cas += sc_mul(g(i), g(i), par);
    SUBCASE("unit polynomial gives the rotational algebra") {
        PoissonBracket br = so3_linear_bracket();
        CHECK(check_jacobi(br).passed());
        for (auto& [name, res] : center_residual(br, cas)) CHECK(res.is_zero());
    }
    SUBCASE("polynomial multipliers keep the axioms") {
        for (const char* p : {"z", "x^2 + 3*y*z", "x*y - 2*z^2", "1 - x"}) {
            CAPTURE(p);
            PoissonBracket br = so3_bracket(p);
            CHECK(check_jacobi(br).passed());
            CHECK(check_parity_axioms(br).passed());
            CHECK(check_compatibility(so3_linear_bracket(), br).passed());
            for (auto& [name, res] : center_residual(br, cas)) CHECK(res.is_zero());
        }
    }
}

TEST_CASE("deliberate violations are caught") {
    std::vector<int> par{0, 0, 0};
    SUBCASE("broken Jacobi") {
        std::vector<Generator> gens{{"x", 0}, {"y", 0}, {"z", 0}};
        SCPolynomial y2 = sc_mul(g(1), g(1), par);
        std::vector<std::tuple<int, int, SCPolynomial>> entries;
        entries.emplace_back(0, 1, y2);
        entries.emplace_back(0, 2, g(0));
        PoissonBracket broken(gens, std::move(entries));
        CHECK(!check_jacobi(broken).passed());
    }
    SUBCASE("parity violation") {
        std::vector<Generator> gens{{"u", 0}, {"v", 1}};
        std::vector<std::tuple<int, int, SCPolynomial>> entries;
        entries.emplace_back(0, 1, SCPolynomial::constant(Scalar(1)));
        PoissonBracket broken(gens, std::move(entries));
        CHECK(!check_parity_axioms(broken).passed());
    }
    SUBCASE("incompatible perturbation") {
        PoissonBracket lin = sl2_bracket();
        SCPolynomial x2 = sc_mul(g(0), g(0), par);
        std::vector<std::tuple<int, int, SCPolynomial>> entries;
        entries.emplace_back(1, 0, x2);
        PoissonBracket perturb(lin.generators(), std::move(entries));
        CHECK(check_jacobi(perturb).passed());
        CHECK(!check_compatibility(lin, perturb).passed());
    }
}

TEST_CASE("bracket JSON dialect round trip") {
    PoissonBracket quad = quadratic_gl_bracket({1, 1});
    auto j = quad.to_json();
    CHECK(j.at("bracket").get<bool>());
    PoissonBracket back = PoissonBracket::from_json(j);
    CHECK(back.to_json().dump() == j.dump());
    for (int i = 0; i < 4; ++i)
        for (int k = i; k < 4; ++k) CHECK(back.on_generators(i, k) == quad.on_generators(i, k));
}
