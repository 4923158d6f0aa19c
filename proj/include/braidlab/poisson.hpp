#ifndef BRAIDLAB_POISSON_HPP
#define BRAIDLAB_POISSON_HPP

#include "braidlab/rea.hpp"
#include "braidlab/scpoly.hpp"
#include "braidlab/tensor.hpp"

namespace braidlab {

// Super-Poisson bracket given by its values on generator pairs and
// extended as a graded biderivation.  Only pairs i <= j are stored; the
// transposed values carry the super-antisymmetry sign.
class PoissonBracket {
public:
    PoissonBracket(std::vector<Generator> gens,
                   std::vector<std::tuple<int, int, SCPolynomial>> entries);

    const std::vector<Generator>& generators() const { return gens_; }
    const std::vector<int>& parities() const { return parities_; }
    std::vector<std::string> names() const;
    int generator_index(const std::string& name) const;

    SCPolynomial on_generators(int i, int j) const;
    const std::map<std::pair<int, int>, SCPolynomial>& table() const { return table_; }

    nlohmann::ordered_json to_json() const;
    static PoissonBracket from_json(const nlohmann::json& j);

private:
    std::vector<Generator> gens_;
    std::vector<int> parities_;
    std::map<std::pair<int, int>, SCPolynomial> table_;
};

SCPolynomial bracket_eval(const PoissonBracket& br, const SCPolynomial& f, const SCPolynomial& g);

// Cyclic super-Jacobi sum on all generator triples (with repetition).
Report check_jacobi(const PoissonBracket& br);
// The sum bracket must again satisfy Jacobi.
Report check_compatibility(const PoissonBracket& b1, const PoissonBracket& b2);
// Super-antisymmetry on diagonals plus parity additivity of every entry.
Report check_parity_axioms(const PoissonBracket& br);

std::vector<std::pair<std::string, SCPolynomial>> center_residual(const PoissonBracket& br,
                                                                  const SCPolynomial& z);

PoissonBracket sl2_bracket();
PoissonBracket quadratic_sl2_bracket();
PoissonBracket pencil(const PoissonBracket& b1, const PoissonBracket& b2, const Scalar& a,
                      const Scalar& b);

// Linear super-Poisson bracket on the matrix entries, extracted from the
// classical limit q -> 1 of the modified reflection algebra at hbar = 1.
PoissonBracket linear_bracket(SuperDim dim);

// {x,y} = z p, {y,z} = x p, {z,x} = y p on three even generators.
PoissonBracket so3_bracket(const SCPolynomial& p);
PoissonBracket so3_bracket(const std::string& p_text);
PoissonBracket so3_linear_bracket();
std::vector<Generator> so3_generators();

struct ClassicalRMatrix {
    SuperDim dim;
    TensorOperator r;
};

// First-order coefficient of sigma R at q = 1 + nu.
ClassicalRMatrix semiclassical_r(SuperDim dim);
// Compares the computed matrix against the diagonal/off-diagonal closed
// pattern; mismatching entries are listed, never absorbed.
Report semiclassical_r_pattern_check(const ClassicalRMatrix& cr);

// Quadratic bracket {L1, L2} = -r L1 L2 - L1 r21 L2 + L2 L1 r21 + L2 r L1
// on the matrix entries, projected to the super-commutative quotient.
PoissonBracket quadratic_gl_bracket(SuperDim dim);

// First-order expansion at q = 1 of the quadratic-algebra commutators must
// reproduce the quadratic bracket on every generator pair.
Report semiclassical_consistency(SuperDim dim);

} // namespace braidlab

#endif
