#ifndef BRAIDLAB_TENSOR_HPP
#define BRAIDLAB_TENSOR_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "braidlab/errors.hpp"
#include "braidlab/report.hpp"
#include "braidlab/scalar.hpp"

namespace braidlab {

// Z2-graded dimension (m even basis vectors, then n odd ones).
struct SuperDim {
    int m = 0;
    int n = 0;

    int total() const { return m + n; }
    // Parity of the 1-based basis index.
    int parity(int i) const { return i <= m ? 0 : 1; }
    bool operator==(const SuperDim& o) const { return m == o.m && n == o.n; }
    std::string to_string() const;
};

// Exact operator on V^{tensor k} with the fixed row-major basis ordering:
// e_{i1} x ... x e_{ik} has flat index sum (i_t - 1) d^{k-t}.  Stored dense
// up to side 256, as a sorted nonzero map above that; the representation is
// invisible to callers.
class TensorOperator {
public:
    TensorOperator(SuperDim dim, int arity);
    static TensorOperator identity(SuperDim dim, int arity);

    SuperDim dim() const { return dim_; }
    int arity() const { return arity_; }
    int side() const { return side_; }

    Scalar at(int row, int col) const;
    void set(int row, int col, Scalar v);
    void add_at(int row, int col, const Scalar& v);
    void for_each(const std::function<void(int, int, const Scalar&)>& fn) const;

    TensorOperator operator+(const TensorOperator& o) const;
    TensorOperator operator-(const TensorOperator& o) const;
    TensorOperator operator*(const TensorOperator& o) const;  // composition
    TensorOperator scaled(const Scalar& c) const;

    // Kronecker product; arities add.
    TensorOperator tensor(const TensorOperator& o) const;
    // I x ... x this x ... x I with this starting at 1-based factor
    // position pos inside target_arity factors.
    TensorOperator embed(int pos, int target_arity) const;
    // Partial trace of an arity-2 operator over factor 1 or 2.
    TensorOperator partial_trace(int factor) const;
    Scalar trace() const;

    bool is_zero() const;
    bool operator==(const TensorOperator& o) const;
    // If *this equals c * identity returns c.
    std::optional<Scalar> as_scalar_multiple_of_identity() const;

    TensorOperator map_entries(const std::function<Scalar(const Scalar&)>& fn) const;
    TensorOperator substitute_q(const Scalar& value) const;

    nlohmann::ordered_json to_json() const;
    static TensorOperator from_json(const nlohmann::json& j);

private:
    SuperDim dim_;
    int arity_;
    int side_;
    bool dense_;
    std::vector<Scalar> d_;
    std::map<int64_t, Scalar> s_;
};

// Signed super-flip e_i x e_j -> (-1)^{|i||j|} e_j x e_i.
TensorOperator super_flip(SuperDim dim);
// Unsigned flip of the two factors (plain permutation).
TensorOperator plain_flip(SuperDim dim);
// The standard Hecke symmetry deforming the super-flip; symbolic in q.
TensorOperator hecke_symmetry(SuperDim dim);

TensorOperator yang_baxter_residual(const TensorOperator& r);
Report check_yang_baxter(const TensorOperator& r);

TensorOperator hecke_residual(const TensorOperator& r);
Report check_hecke_condition(const TensorOperator& r);

// Solves Tr_2 R_12 Psi_23 = P_13 (unsigned flip on the outer factors);
// throws NotSkewInvertible when the system is singular.
TensorOperator skew_inverse(const TensorOperator& r);

// B = Tr_1 Psi, C = Tr_2 Psi.
std::pair<TensorOperator, TensorOperator> bc_operators(const TensorOperator& psi);
Report check_bc_relation(const TensorOperator& b, const TensorOperator& c, SuperDim dim);

// Diagonal closed form of C for the standard Hecke symmetry.
TensorOperator c_closed_form(SuperDim dim);
// Compares the computed C against the closed form; reports equality or the
// exact q-power offset when the two differ by one.
Report compare_c_operators(const TensorOperator& computed, const TensorOperator& closed);

// Diagonal weight (-1)^{|i|}; turns the plain trace into the supertrace.
TensorOperator parity_weight(SuperDim dim);

// Tr(M W) with W an arity-1 weight; element type needs T*Scalar and +=.
template <typename T>
T trace_with_weight(const std::vector<std::vector<T>>& m, const TensorOperator& w) {
    if (w.arity() != 1 || static_cast<int>(m.size()) != w.side())
        throw SizeMismatch("trace_with_weight expects a square matrix matching the weight");
    T acc{};
    for (int i = 0; i < w.side(); ++i) {
        if (static_cast<int>(m[static_cast<size_t>(i)].size()) != w.side())
            throw SizeMismatch("trace_with_weight expects a square matrix matching the weight");
        for (int j = 0; j < w.side(); ++j) {
            Scalar wji = w.at(j, i);
            if (wji.is_zero()) continue;
            acc += m[static_cast<size_t>(i)][static_cast<size_t>(j)] * wji;
        }
    }
    return acc;
}

} // namespace braidlab

#endif
