#ifndef BRAIDLAB_SCALAR_HPP
#define BRAIDLAB_SCALAR_HPP

#include <map>
#include <string>

#include "braidlab/polynomial.hpp"

namespace braidlab {

// Exact rational function in q, hbar and declared symbols.  Canonical form:
// gcd(num, den) is a unit, den is monic in the fixed monomial order, the
// zero scalar is 0/1.  Two scalars are equal iff their representations are
// identical.
class Scalar {
public:
    Scalar() : num_(), den_(1) {}
    Scalar(int c) : num_(c), den_(1) {}
    Scalar(const Rational& c) : num_(c), den_(1) {}
    explicit Scalar(Polynomial p) : num_(std::move(p)), den_(1) {}

    static Scalar q();
    static Scalar hbar();
    static Scalar variable(const std::string& name);  // declares if new
    static Scalar fraction(Polynomial num, Polynomial den);  // reduces

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
    Rational rational_value() const;  // requires is_rational()

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // DivisionByZero
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar inverse() const;  // DivisionByZero on zero
    Scalar pow(int k) const;

    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const;  // arbitrary total order for containers

    // Exact evaluation; every variable that occurs must be bound.
    Rational eval(const std::map<std::string, Rational>& point) const;
    // Substitutes one variable by a scalar, leaving others symbolic.
    Scalar substitute(const std::string& var, const Scalar& value) const;
    Scalar derivative(const std::string& var) const;

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    std::string to_string() const;
    static Scalar parse(const std::string& text);

private:
    void reduce();
    Polynomial num_, den_;
};

// q-integer (q^k - q^-k)/(q - q^-1).
Scalar q_int(int k);

// Rejects q in {0, +-1} and rational roots of cyclotomic polynomials of
// degree up to 8 (for rational q these coincide with {+-1}); used by
// operations that assume generic q.
void require_generic_q(const Rational& value);

inline Scalar operator*(int c, const Scalar& s) { return Scalar(c) * s; }

} // namespace braidlab

#endif
