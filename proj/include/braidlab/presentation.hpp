#ifndef BRAIDLAB_PRESENTATION_HPP
#define BRAIDLAB_PRESENTATION_HPP

#include <json.hpp>

#include "braidlab/ncpoly.hpp"
#include "braidlab/report.hpp"

namespace braidlab {

inline constexpr int kDefaultDegreeCap = 12;

struct Generator {
    std::string name;
    int parity = 0;  // 0 even, 1 odd
};

struct RewriteRule {
    Word lead;          // length 2
    NCPolynomial tail;  // degree <= 2, strictly below lead in the word order
};

// Finitely presented associative algebra with quadratic-linear rewrite
// rules oriented by the graded lexicographic order on words.
class Presentation {
public:
    Presentation(std::vector<Generator> gens, std::vector<RewriteRule> rules);

    const std::vector<Generator>& generators() const { return gens_; }
    std::vector<std::string> generator_names() const;
    int generator_count() const { return static_cast<int>(gens_.size()); }
    int generator_index(const std::string& name) const;  // -1 when absent
    int word_parity(const Word& w) const;

    const std::map<Word, NCPolynomial, WordLess>& rules() const { return rules_; }
    const NCPolynomial* rule_for(const Word& lead) const;

    int max_verified_degree() const { return max_verified_degree_; }
    void set_max_verified_degree(int d) { max_verified_degree_ = d; }

    nlohmann::ordered_json to_json() const;
    static Presentation from_json(const nlohmann::json& j);

private:
    std::vector<Generator> gens_;
    std::map<Word, NCPolynomial, WordLess> rules_;
    int max_verified_degree_ = 0;
};

// Rewrites to the unique irreducible form: repeatedly replaces, inside the
// greatest reducible term, the leftmost occurrence of a rule lead.
// Deterministic and terminating (tails are strictly smaller in a monomial
// order); throws DegreeOverflow when an input term exceeds the cap.
NCPolynomial normal_form(const NCPolynomial& p, const Presentation& pres,
                         int degree_cap = kDefaultDegreeCap);

// Graded dimensions 0..max_degree of the quadratic quotient (linear and
// constant tail parts dropped), by exact rank over the scalar field.
std::vector<long> hilbert_dims(const Presentation& pres, int max_degree);

// dim(I (x) A_1  intersect  A_1 (x) I) inside the degree-3 word space,
// where I is the span of the quadratic parts lead - tail_2.
int overlap_dimension(const Presentation& pres);

// normal_form(z g - g z) per generator g; z is central iff all vanish.
std::vector<std::pair<std::string, NCPolynomial>> centrality_residual(
    const NCPolynomial& z, const Presentation& pres, int degree_cap = kDefaultDegreeCap);

// Resolves every degree-3 overlap of rule leads both ways and compares the
// normal forms; on success stamps max_verified_degree.  When the generator
// count is small, additionally replays every word up to min(degree, 4)
// under a second reduction strategy.
Report confluence_check(Presentation& pres, int degree);

// Orients a list of relations (degree <= 2) into a presentation: exact row
// reduction over the word space, greatest word becomes the lead of each
// independent relation.  Throws NonOrientable when a pivot lands on a word
// of degree < 2.
Presentation orient_relations(std::vector<Generator> gens,
                              const std::vector<NCPolynomial>& relations);

// Super-commutative presentation on the given generators: x_j x_i ->
// (-1)^{|i||j|} x_i x_j for i < j, and x^2 -> 0 for odd x.
Presentation supercommutative_presentation(std::vector<Generator> gens);

// The two-parameter deformation of Sym(sl2) on generators (x, h, y):
//   q^2 h x - x h = A x,  q^2 y h - h y = B y,
//   (q^2+1)(x y - y x) + (q^2-1) h^2 = C h.
Presentation deformed_sl2_presentation(const Scalar& a, const Scalar& b, const Scalar& c);

// One-parameter family on (x, h, y) with h x - x h = nu (a h x + b x h),
// h y - y h = -nu (c h y + d y h), x y - y x = nu h^2.
Presentation twisted_sl2_presentation(const Scalar& a, const Scalar& b, const Scalar& c,
                                      const Scalar& d, const Scalar& nu);

// Enveloping-algebra presentation of sl(1|1) on (h, b, c) with h even and
// b, c odd: [h,b] = [h,c] = 0, bc + cb = -h, b^2 = c^2 = 0.
Presentation sl11_enveloping_presentation();

} // namespace braidlab

#endif
