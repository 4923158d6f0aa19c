#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "braidlab/errors.hpp"
#include "braidlab/scalar.hpp"

using namespace braidlab;

TEST_CASE("q-integers expand to symmetric Laurent sums") {
    Scalar q = Scalar::q();
    CHECK(q_int(2) == q + q.pow(-1));
    CHECK(q_int(0).is_zero());
    CHECK(q_int(1).is_one());
    CHECK(q_int(-3) == -(q.pow(2) + Scalar(1) + q.pow(-2)));
    for (int k = -20; k <= 20; ++k)
        CHECK(q_int(k) * (q - q.pow(-1)) == q.pow(k) - q.pow(-k));
}

TEST_CASE("evaluation is exact and rejects vanishing denominators") {
    Scalar q = Scalar::q();
    CHECK(q_int(2).eval({{"q", Rational(2)}}) == Rational(5, 2));
    Scalar nu = (Scalar(1) - q * q) / (Scalar(1) + q * q);
    CHECK(nu.eval({{"q", Rational(1)}}) == 0);
    CHECK_THROWS_AS((Scalar(1) / (q - Scalar(1))).eval({{"q", Rational(1)}}), DenominatorVanishes);
    CHECK_THROWS_AS(Scalar::variable("stray").eval({{"q", Rational(2)}}), UnboundVariable);
}

TEST_CASE("field arithmetic in canonical form") {
    Scalar q = Scalar::q();
    Scalar lambda = q - q.pow(-1);
    CHECK((q + q.pow(-1)) * (q - q.pow(-1)) == q.pow(2) - q.pow(-2));
    CHECK((lambda + (-lambda)).is_zero());
    CHECK((q_int(2).inverse() * q_int(2)).is_one());
    CHECK_THROWS_AS(Scalar(0).inverse(), DivisionByZero);
    // Reduction through a nontrivial gcd.
    CHECK((q.pow(4) - Scalar(1)) / (q.pow(2) - Scalar(1)) == q.pow(2) + Scalar(1));
    Scalar mu1 = Scalar::variable("mu1"), mu2 = Scalar::variable("mu2");
    CHECK((mu1 * mu1 - mu2 * mu2) / (mu1 - mu2) == mu1 + mu2);
}

namespace {

Scalar random_scalar(std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-4, 4), exp(0, 3), pick(0, 2);
    Scalar vars[3] = {Scalar::q(), Scalar::hbar(), Scalar::variable("mu1")};
    Scalar acc;
    for (int t = 0; t < 3; ++t) {
        Scalar term(coeff(rng));
        for (int v = 0; v < 3; ++v) term *= vars[v].pow(exp(rng) * (pick(rng) == 0));
        acc += term;
    }
    return acc;
}

} // namespace

TEST_CASE("field axioms on randomized inputs") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 40; ++trial) {
        Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("evaluation commutes with arithmetic") {
    std::mt19937 rng(7);
    std::map<std::string, Rational> point{{"q", Rational(3, 2)}, {"hbar", Rational(-2)},
                                          {"mu1", Rational(5, 7)}};
    for (int trial = 0; trial < 25; ++trial) {
        Scalar a = random_scalar(rng), b = random_scalar(rng);
        CHECK((a * b).eval(point) == a.eval(point) * b.eval(point));
        CHECK((a + b).eval(point) == a.eval(point) + b.eval(point));
    }
}

TEST_CASE("rendering round-trips through the parser") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        Scalar a = random_scalar(rng);
        Scalar b = random_scalar(rng);
        if (b.is_zero()) b = Scalar(1);
        Scalar s = a / b;
        CHECK(Scalar::parse(s.to_string()) == s);
    }
    for (const char* text : {"q^-3", "(1 - q^2)/(1 + q^2)", "2*q*hbar - 1/2", "mu1^2*q^-1"}) {
        Scalar s = Scalar::parse(text);
        CHECK(Scalar::parse(s.to_string()) == s);
    }
    CHECK_THROWS_AS(Scalar::parse("q +"), ParseError);
    CHECK_THROWS_AS(Scalar::parse("(q"), ParseError);
}

TEST_CASE("substitution and derivatives") {
    Scalar q = Scalar::q();
    CHECK(q.pow(3).derivative("q") == 3 * q.pow(2));
    CHECK((q.pow(-1)).derivative("q").substitute("q", Scalar(1)) == Scalar(-1));
    Scalar nu = Scalar::variable("nu");
    Scalar shifted = (q * q).substitute("q", Scalar(1) + nu);
    CHECK(shifted == Scalar(1) + 2 * nu + nu * nu);
}

TEST_CASE("generic-q guard") {
    require_generic_q(Rational(2));
    require_generic_q(Rational(-3, 7));
    CHECK_THROWS_AS(require_generic_q(Rational(0)), NonGenericQ);
    CHECK_THROWS_AS(require_generic_q(Rational(1)), NonGenericQ);
    CHECK_THROWS_AS(require_generic_q(Rational(-1)), NonGenericQ);
}
