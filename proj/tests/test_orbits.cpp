#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braidlab/orbits.hpp"

using namespace braidlab;

namespace {
Scalar q = Scalar::q();
Scalar h = Scalar::hbar();
} // namespace

TEST_CASE("quantum dimensions") {
    Scalar mu1 = Scalar::variable("mu1"), mu2 = Scalar::variable("mu2"),
           nu1 = Scalar::variable("nu1");
    SUBCASE("single even eigenvalue has weight q^-1") {
        Spectrum s{{1, 0}, {mu1}, {}};
        CHECK(quantum_dims(s, Scalar(0)).d[0] == q.pow(-1));
    }
    SUBCASE("two even eigenvalues") {
        Spectrum s{{2, 0}, {mu1, mu2}, {}};
        QuantumDims d = quantum_dims(s, Scalar(0));
        CHECK(d.d[0] == q.pow(-1) * (mu1 - q.pow(-2) * mu2) / (mu1 - mu2));
        CHECK(power_sum(s, d, 0) == q.pow(-1) + q.pow(-3));
        CHECK(power_sum(s, d, 1) == q.pow(-1) * (mu1 + mu2));
        CHECK(power_sum(s, d, 2) ==
              q.pow(-1) * (mu1 * mu1 + mu2 * mu2) + (q.pow(-1) - q.pow(-3)) * mu1 * mu2);
    }
    SUBCASE("degenerate spectra are rejected with the colliding pair") {
        Spectrum s{{2, 0}, {mu1, mu1}, {}};
        CHECK_THROWS_AS(quantum_dims(s, Scalar(0)), DegenerateSpectrum);
        Spectrum t{{1, 1}, {nu1}, {nu1}};
        CHECK_THROWS_AS(quantum_dims(t, Scalar(0)), DegenerateSpectrum);
    }
    SUBCASE("deformed weights keep the weighted count") {
        Spectrum s{{2, 0}, {mu1, mu2}, {}};
        QuantumDims d = quantum_dims(s, h);
        CHECK(power_sum(s, d, 0) == q.pow(-1) + q.pow(-3));
        CHECK(power_sum(s, d, 1) == q.pow(-1) * (mu1 + mu2) - q.pow(-2) * h);
        CHECK(power_sum(s, d, 2) == q.pow(-1) * (mu1 * mu1 + mu2 * mu2) +
                                        (q.pow(-1) - q.pow(-3)) * mu1 * mu2 -
                                        q.pow(-2) * h * (mu1 + mu2));
        Spectrum t{{1, 1}, {mu1}, {nu1}};
        QuantumDims dt = quantum_dims(t, h);
        CHECK(power_sum(t, dt, 0).is_zero());
        CHECK(power_sum(t, dt, 1) == q.pow(-1) * mu1 - q * nu1 + h);
        CHECK(power_sum(t, dt, 2) == (mu1 + nu1) * (q.pow(-1) * mu1 - q * nu1) + h * (mu1 + nu1));
    }
    SUBCASE("prefactor dichotomy: only q^-1 satisfies the weighted count") {
        for (SuperDim dim : {SuperDim{1, 0}, SuperDim{2, 0}, SuperDim{1, 1}}) {
            CAPTURE(dim.to_string());
            Spectrum s;
            s.dim = dim;
            if (dim.m >= 1) s.mu.push_back(mu1);
            if (dim.m >= 2) s.mu.push_back(mu2);
            if (dim.n >= 1) s.nu.push_back(nu1);
            Report rep = quantum_dims_prefactor_report(s, h);
            CHECK(rep.passed());
            bool found = false;
            for (auto& [k, v] : rep.details)
                if (k == "surviving_prefactor") {
                    found = true;
                    CHECK(v == "q^-1");
                }
            CHECK(found);
        }
    }
    SUBCASE("classical limit of the weights") {
        Spectrum s{{1, 1}, {mu1}, {nu1}};
        QuantumDims d = quantum_dims(s, Scalar(0));
        CHECK(d.d[0].substitute("q", Scalar(1)) == Scalar(1));
        CHECK(d.dprime[0].substitute("q", Scalar(1)) == Scalar(-1));
        CHECK(power_sum(s, d, 3).substitute("q", Scalar(1)) == classical_power_sum(s, 3));
    }
}

TEST_CASE("classical power sums") {
    Scalar mu1 = Scalar::variable("mu1"), nu1 = Scalar::variable("nu1");
    Spectrum s{{1, 1}, {mu1}, {nu1}};
    CHECK(classical_power_sum(s, 1) == mu1 - nu1);
    CHECK(classical_power_sum(s, 0).is_zero());
    Spectrum t{{2, 0}, {Scalar(3), Scalar(5)}, {}};
    CHECK(classical_power_sum(t, 2) == Scalar(34));
    CHECK(classical_power_sum(t, 0) == Scalar(2));
}

TEST_CASE("regularity verdicts") {
    Scalar mu1 = Scalar::variable("mu1"), nu1 = Scalar::variable("nu1");
    CHECK(regularity({{2, 0}, {Scalar(1), Scalar(-1)}, {}}, Scalar(0)).passed());
    CHECK(!regularity({{1, 1}, {q.pow(2) * nu1}, {nu1}}, Scalar(0)).passed());
    CHECK(regularity({{1, 1}, {mu1}, {nu1}}, h).passed());
    CHECK(!regularity({{1, 1}, {q.pow(2) * nu1 - q * h}, {nu1}}, h).passed());
    CHECK(!regularity({{2, 0}, {Scalar(1), Scalar(1)}, {}}, Scalar(0)).passed());
    // The deformed even-even condition is order-sensitive; both orders are
    // checked.
    CHECK(!regularity({{2, 0}, {q.pow(-2) * mu1 - q.pow(-1) * h, mu1}, {}}, h).passed());
}

TEST_CASE("orbit ideals") {
    Scalar mu1 = Scalar::variable("mu1"), nu1 = Scalar::variable("nu1");
    SUBCASE("trace-zero quotient of the 2x2 even algebra") {
        REAlgebra alg = build_rea({2, 0}, Scalar(0), 0);
        Spectrum s{{2, 0}, {mu1, -mu1}, {}};
        auto gens = orbit_ideal(alg, s);
        REQUIRE(gens.size() == 2);
        CHECK(gens[0] == r_trace_power(alg, 1));
        NCPolynomial expect =
            r_trace_power(alg, 2) - NCPolynomial::constant((q.pow(-3) + q.pow(-1)) * mu1 * mu1);
        CHECK(normal_form(gens[1] - expect, alg.pres()).is_zero());
    }
    SUBCASE("deformed 1|1 ideal carries the hbar corrections") {
        REAlgebra alg = build_rea({1, 1}, h, 0);
        Spectrum s{{1, 1}, {mu1}, {nu1}};
        auto gens = orbit_ideal(alg, s);
        NCPolynomial expect =
            r_trace_power(alg, 1) - NCPolynomial::constant(q.pow(-1) * mu1 - q * nu1 + h);
        CHECK(normal_form(gens[0] - expect, alg.pres()).is_zero());
    }
    SUBCASE("spectrum must match the algebra") {
        REAlgebra alg = build_rea({2, 0}, Scalar(0), 0);
        Spectrum s{{1, 1}, {mu1}, {nu1}};
        CHECK_THROWS_AS(orbit_ideal(alg, s), SizeMismatch);
    }
}

TEST_CASE("eigenvalue symmetric functions against the algebra traces") {
    // Substituting e1 = q^-2 a + d and e2 = q^-2 a d - c b into the power
    // sums reproduces the braided traces modulo the defining relations.
    REAlgebra alg = build_rea({2, 0}, Scalar(0), 0);
    NCPolynomial a = NCPolynomial::generator(0), b = NCPolynomial::generator(1),
                 c = NCPolynomial::generator(2), d = NCPolynomial::generator(3);
    NCPolynomial e1 = a * q.pow(-2) + d;
    NCPolynomial e2 = a * d * q.pow(-2) - c * b;
    NCPolynomial p1 = e1 * q.pow(-1);
    CHECK(normal_form(p1 - r_trace_power(alg, 1), alg.pres()).is_zero());
    NCPolynomial p2 = e1 * e1 * q.pow(-1) - e2 * (q.pow(-1) + q.pow(-3));
    CHECK(normal_form(p2 - r_trace_power(alg, 2), alg.pres()).is_zero());
}

TEST_CASE("mixed-case eigenvalue identity after clearing denominators") {
    // q^-1 mu - q nu = l lifts to S + A = l^2 with the symmetric and
    // antisymmetric parts of the factorized identity.
    REAlgebra alg = build_rea({1, 1}, Scalar(0), 0);
    NCPolynomial ell = r_trace_power(alg, 1);
    NCPolynomial t2 = r_trace_power(alg, 2);
    Scalar inv2q = q_int(2).inverse();
    NCPolynomial s_pol = normal_form((ell * ell * q.pow(-1) + t2) * inv2q, alg.pres());
    NCPolynomial a_pol = normal_form((ell * ell * q - t2) * inv2q, alg.pres());
    CHECK(normal_form(s_pol + a_pol - ell * ell, alg.pres()).is_zero());
}

TEST_CASE("spectrum JSON") {
    Scalar mu1 = Scalar::variable("mu1"), nu1 = Scalar::variable("nu1");
    Spectrum s{{1, 1}, {mu1}, {nu1}};
    Spectrum back = Spectrum::from_json(s.to_json());
    CHECK(back.dim == s.dim);
    CHECK(back.mu[0] == mu1);
    CHECK(back.nu[0] == nu1);
    CHECK_THROWS_AS(Spectrum::from_json(nlohmann::json::parse(
                        R"({"dim": [2, 0], "mu": ["1"], "nu": []})")),
                    SizeMismatch);
}
