#ifndef BRAIDLAB_POLYNOMIAL_HPP
#define BRAIDLAB_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace braidlab {

using Rational = mpq_class;

// Exponent vector over the global variable order, trailing zeros trimmed.
// Compared degree-lexicographically (total degree first, then variable 0
// is most significant).
class Monomial {
public:
    Monomial() = default;
    static Monomial variable(int index, int exponent = 1);

    int exponent(int index) const;
    int total_degree() const;
    int max_var() const;   // -1 for the constant monomial
    bool is_one() const { return exps_.empty(); }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial divided_by(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }
    bool operator<(const Monomial& o) const;

    const std::vector<int>& exponents() const { return exps_; }
    static Monomial from_exponents(std::vector<int> exps);

private:
    void trim();
    std::vector<int> exps_;
};

// Sparse multivariate polynomial over Q.  The term map is keyed by the
// canonical monomial order, so equality of maps is equality of canonical
// forms.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(int c) : Polynomial(Rational(c)) {}
    explicit Polynomial(const Rational& c);
    static Polynomial variable(int index, int exponent = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // requires is_constant()

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial scaled(const Rational& c) const;
    Polynomial pow(int k) const;  // k >= 0

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return terms_ != o.terms_; }

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    void set_term(const Monomial& m, const Rational& c);

    const Monomial& leading_monomial() const;  // greatest monomial
    const Rational& leading_coeff() const;
    int total_degree() const;
    int degree_in(int var) const;
    int max_var() const;
    bool depends_on(int var) const;

    // Greatest common divisor of all monomials (componentwise min
    // exponents); the constant monomial when zero.
    Monomial monomial_content() const;
    Polynomial divided_by_monomial(const Monomial& m) const;

    // Exact division; nullopt when o does not divide *this.
    std::optional<Polynomial> divided_by(const Polynomial& o) const;

    Rational eval(const std::vector<std::optional<Rational>>& point) const;
    Polynomial derivative(int var) const;

    // Univariate view in `var`: coefficient polynomials (free of `var`)
    // indexed by degree.
    std::map<int, Polynomial> coefficients_in(int var) const;
    static Polynomial from_coefficients_in(int var, const std::map<int, Polynomial>& coeffs);

    // Primitive gcd, leading coefficient positive; gcd(0,0) = 0.
    static Polynomial gcd(const Polynomial& a, const Polynomial& b);

    std::string to_string() const;

private:
    std::map<Monomial, Rational> terms_;
};

std::string monomial_to_string(const Monomial& m, bool* leading_one = nullptr);

} // namespace braidlab

#endif
