#ifndef BRAIDLAB_ORBITS_HPP
#define BRAIDLAB_ORBITS_HPP

#include "braidlab/rea.hpp"

namespace braidlab {

// Eigenvalue data of the generating matrix: m even and n odd eigenvalues,
// exact scalars (symbols or rationals).
struct Spectrum {
    SuperDim dim;
    std::vector<Scalar> mu;
    std::vector<Scalar> nu;

    nlohmann::ordered_json to_json() const;
    static Spectrum from_json(const nlohmann::json& j);
};

// Spectral weights of the braided trace: Tr_R L^k = sum d_i mu_i^k +
// sum d'_j nu_j^k.
struct QuantumDims {
    std::vector<Scalar> d;
    std::vector<Scalar> dprime;
    Scalar hbar;
};

// Product formulas for the quantum dimensions, hbar-corrected numerators
// with the q^-1 / -q prefactors; throws DegenerateSpectrum when an
// eigenvalue difference in a denominator vanishes.
QuantumDims quantum_dims(const Spectrum& s, const Scalar& hbar);

// Both prefactor variants for d_i (q^-1 as in the hbar = 0 display, q as
// in the hbar-corrected display) evaluated and compared against the
// constraint power_sum(k=0) = Tr C; the surviving variant is reported.
Report quantum_dims_prefactor_report(const Spectrum& s, const Scalar& hbar);

Scalar power_sum(const Spectrum& s, const QuantumDims& dims, int k);
// sum mu_i^k - sum nu_j^k.
Scalar classical_power_sum(const Spectrum& s, int k);

// Regularity predicates: classical (pairwise distinct), braided (no q^2
// ratios), and the hbar-modified braided family.  Symbolic entries are
// decided generically (predicate not identically zero); every violated
// condition is listed.
Report regularity(const Spectrum& s, const Scalar& hbar);

// Ideal generators Tr_R L^k - power_sum(k), k = 1..m+n, in normal form.
std::vector<NCPolynomial> orbit_ideal(const REAlgebra& alg, const Spectrum& s);

} // namespace braidlab

#endif
