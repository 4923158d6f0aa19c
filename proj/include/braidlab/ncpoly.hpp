#ifndef BRAIDLAB_NCPOLY_HPP
#define BRAIDLAB_NCPOLY_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "braidlab/scalar.hpp"

namespace braidlab {

// A word in generator indices.
using Word = std::vector<uint8_t>;

// Graded lexicographic word order: length first, then left-to-right index
// comparison.  It is a monomial order: u < v implies aub < avb.
struct WordLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

Word concat(const Word& a, const Word& b);
std::string word_to_string(const Word& w, const std::vector<std::string>& names);

// Formal scalar-linear combination of words; the element type of all
// associative-algebra computations.  No zero coefficients are stored.
class NCPolynomial {
public:
    NCPolynomial() = default;
    static NCPolynomial constant(const Scalar& c);
    static NCPolynomial generator(int index);
    static NCPolynomial term(Word w, Scalar c);

    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // -1 for zero

    NCPolynomial operator+(const NCPolynomial& o) const;
    NCPolynomial operator-(const NCPolynomial& o) const;
    NCPolynomial operator-() const;
    NCPolynomial operator*(const NCPolynomial& o) const;
    NCPolynomial operator*(const Scalar& c) const;
    NCPolynomial& operator+=(const NCPolynomial& o);
    NCPolynomial& operator-=(const NCPolynomial& o);
    void add_term(const Word& w, const Scalar& c);

    bool operator==(const NCPolynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const NCPolynomial& o) const { return !(*this == o); }

    const std::map<Word, Scalar, WordLess>& terms() const { return terms_; }
    Scalar coefficient(const Word& w) const;
    // Homogeneous part of the given degree.
    NCPolynomial graded_part(int degree) const;
    NCPolynomial map_coefficients(const std::function<Scalar(const Scalar&)>& fn) const;

    std::string to_string(const std::vector<std::string>& names) const;

private:
    std::map<Word, Scalar, WordLess> terms_;
};

inline NCPolynomial operator*(const Scalar& c, const NCPolynomial& p) { return p * c; }

} // namespace braidlab

#endif
