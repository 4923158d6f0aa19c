#ifndef BRAIDLAB_SCPOLY_HPP
#define BRAIDLAB_SCPOLY_HPP

#include <optional>
#include <string>
#include <vector>

#include "braidlab/polynomial.hpp"
#include "braidlab/presentation.hpp"
#include "braidlab/scalar.hpp"

namespace braidlab {

// Element of a super-commutative polynomial algebra in normal order.  The
// exponent vectors index the owning generator list; odd generators square
// to zero and multiplication inserts Koszul signs.
class SCPolynomial {
public:
    SCPolynomial() = default;
    static SCPolynomial constant(const Scalar& c);
    static SCPolynomial generator(int index);
    static SCPolynomial term(Monomial m, Scalar c);

    bool is_zero() const { return terms_.empty(); }
    int degree() const;

    SCPolynomial operator+(const SCPolynomial& o) const;
    SCPolynomial operator-(const SCPolynomial& o) const;
    SCPolynomial operator-() const;
    SCPolynomial operator*(const Scalar& c) const;
    SCPolynomial& operator+=(const SCPolynomial& o);
    SCPolynomial& operator-=(const SCPolynomial& o);
    void add_term(const Monomial& m, const Scalar& c);

    bool operator==(const SCPolynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const SCPolynomial& o) const { return !(*this == o); }

    const std::map<Monomial, Scalar>& terms() const { return terms_; }
    SCPolynomial map_coefficients(const std::function<Scalar(const Scalar&)>& fn) const;

    std::string to_string(const std::vector<std::string>& names) const;

private:
    std::map<Monomial, Scalar> terms_;
};

// Product with Koszul signs for the given generator parities.
SCPolynomial sc_mul(const SCPolynomial& a, const SCPolynomial& b, const std::vector<int>& parities);

int sc_monomial_parity(const Monomial& m, const std::vector<int>& parities);
// Parity when homogeneous, nullopt for mixed terms; zero is even.
std::optional<int> sc_parity(const SCPolynomial& p, const std::vector<int>& parities);

// Parses numbers, generator names, other identifiers as scalar symbols,
// + - * / ^ and parentheses; division is only defined by scalar factors.
SCPolynomial parse_scpoly(const std::string& text, const std::vector<Generator>& gens);

} // namespace braidlab

#endif
