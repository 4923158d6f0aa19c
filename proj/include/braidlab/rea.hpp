#ifndef BRAIDLAB_REA_HPP
#define BRAIDLAB_REA_HPP

#include "braidlab/presentation.hpp"
#include "braidlab/tensor.hpp"

namespace braidlab {

using NCMatrix = std::vector<std::vector<NCPolynomial>>;

NCMatrix ncm_identity(int side);
NCMatrix ncm_mul(const NCMatrix& a, const NCMatrix& b);
NCMatrix ncm_normal_form(const NCMatrix& m, const Presentation& pres,
                         int degree_cap = kDefaultDegreeCap);
bool ncm_is_zero(const NCMatrix& m);

// Quadratic-linear algebra generated by the entries of the matrix L under
// R L1 R L1 - L1 R L1 R = hbar (R L1 - L1 R); hbar = 0 gives the quadratic
// algebra, nonzero hbar its modified version.
class REAlgebra {
public:
    REAlgebra(SuperDim dim, Scalar hbar, TensorOperator r, TensorOperator psi,
              TensorOperator b, TensorOperator c, Presentation pres, Report confluence);

    SuperDim dim() const { return dim_; }
    const Scalar& hbar() const { return hbar_; }
    const TensorOperator& braiding() const { return r_; }
    const TensorOperator& psi() const { return psi_; }
    const TensorOperator& b_op() const { return b_; }
    const TensorOperator& c_op() const { return c_; }
    const Presentation& pres() const { return pres_; }
    const Report& confluence() const { return confluence_; }

    // Generators are the matrix entries in row-major order; a 2x2 matrix is
    // named (a, b, c, d), larger ones l{i}{j}.
    int generator_index(int i, int j) const;          // 1-based matrix position
    std::pair<int, int> generator_position(int index) const;
    std::vector<std::string> names() const { return pres_.generator_names(); }

    NCMatrix generating_matrix() const;

private:
    SuperDim dim_;
    Scalar hbar_;
    TensorOperator r_, psi_, b_, c_;
    Presentation pres_;
    Report confluence_;
};

std::vector<Generator> rea_generators(SuperDim dim);

// Scalar-valued components of R L1 R L1 - L1 R L1 R - hbar (R L1 - L1 R)
// in row-major order of the (m+n)^2-dimensional tensor square.
std::vector<NCPolynomial> reflection_relations(const TensorOperator& r, SuperDim dim,
                                               const Scalar& hbar);

// Builds the algebra from the standard Hecke symmetry; runs the confluence
// check to the given degree (0 skips it).
REAlgebra build_rea(SuperDim dim, const Scalar& hbar, int confluence_degree = 4);

// The classical limit q -> 1: same construction over the super-flip.
Presentation classical_limit_presentation(SuperDim dim, const Scalar& hbar);

// Tr(L^k C) in normal form; the braided Casimir elements.
NCPolynomial r_trace_power(const REAlgebra& alg, int k, int degree_cap = kDefaultDegreeCap);

// Numerical trace tr_R(l_i^j) = delta_i^j extended linearly to degree <= 1;
// constants pass through unchanged.
Scalar numerical_r_trace(const REAlgebra& alg, const NCPolynomial& p);

// <l_i^j, l_k^m> = B_k^j delta_i^m extended bilinearly to degree-1 inputs.
Scalar pairing(const REAlgebra& alg, const NCPolynomial& u, const NCPolynomial& v);
std::vector<std::vector<Scalar>> pairing_gram(const REAlgebra& alg);

// Checks that the pairing Gram matrix times the coefficient matrix of
// Tr_R L^2 is a scalar multiple of the identity; reports the factor.
Report casimir_pairing_inverse_check(const REAlgebra& alg);

// Quotient by the linear Casimir, rewritten on a traceless basis (upper
// entries, diagonal differences h_i, lower entries); m == n is rejected.
struct TracelessQuotient {
    Presentation pres;
    // Old generators expressed over the new ones; the last index of the
    // extended generator list stands for the linear Casimir and is set to
    // zero inside the quotient presentation.
    std::vector<NCPolynomial> old_in_extended;
    std::vector<std::string> extended_names;
};
TracelessQuotient sl_quotient(const REAlgebra& alg);
// Rewrites a polynomial in the algebra generators over the extended basis;
// set_casimir_zero drops every term containing the linear Casimir.
NCPolynomial to_traceless_basis(const REAlgebra& alg, const TracelessQuotient& quot,
                                const NCPolynomial& p, bool set_casimir_zero);

// Entrywise normal form of sum coeffs[i] * L^i.
NCMatrix ch_residual(const REAlgebra& alg, const std::vector<NCPolynomial>& coeffs,
                     int degree_cap = kDefaultDegreeCap);

// Bounded-degree ansatz solve for the characteristic coefficients;
// supported for m+n <= 2.  Returns a basis of the solution space, each
// entry a coefficient list b_0..b_{m+n}, deterministically normalized.
std::vector<std::vector<NCPolynomial>> derive_ch_coeffs(const REAlgebra& alg);

// gl(1|1)-type factorization: multiplies the characteristic identity by
// the linear Casimir and checks (l L - q S)(l L + q^-1 A) = 0 with
// S = (q^-1 l^2 + Tr_R L^2)/2_q and A = (q l^2 - Tr_R L^2)/2_q.
Report ch_factorized_check_11(const REAlgebra& alg);

// Substitutes pi(l_i^j) = B_j^j E_i^j into the relations at the given
// hbar; the substitution kills them exactly when hbar = 1.
Report representation_check(SuperDim dim, const Scalar& hbar);

} // namespace braidlab

#endif
