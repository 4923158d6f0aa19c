#ifndef BRAIDLAB_LINALG_HPP
#define BRAIDLAB_LINALG_HPP

#include <map>
#include <optional>
#include <vector>

#include "braidlab/scalar.hpp"

namespace braidlab {

// Sparse row over the scalar field, keyed by column index.
using SparseRow = std::map<int, Scalar>;

// Incremental reduced row echelon form.  Rows are fed in order; pivots are
// the smallest column index of each reduced row, so feeding columns in
// descending monomial order makes pivots the greatest monomials.  Fully
// deterministic for a fixed input order.
class RowEchelon {
public:
    // reduced = false skips back-elimination (rank-only workloads).
    explicit RowEchelon(bool reduced = true) : reduced_(reduced) {}

    // Returns true if the row was independent (absorbed as a new pivot row).
    bool add_row(SparseRow row);
    // Reduces a row against the current pivots without inserting it.
    SparseRow reduce(SparseRow row) const;

    int rank() const { return static_cast<int>(rows_.size()); }
    // Pivot column -> normalized row (pivot coefficient 1, fully reduced).
    const std::map<int, SparseRow>& pivot_rows() const { return rows_; }

private:
    bool reduced_;
    std::map<int, SparseRow> rows_;
};

int sparse_rank(const std::vector<SparseRow>& rows);

// Dense exact linear solve A x = b for several right-hand sides; nullopt
// when A is singular.  Column j of the result solves against column j of
// rhs.
std::optional<std::vector<std::vector<Scalar>>> solve_dense(
    std::vector<std::vector<Scalar>> a, std::vector<std::vector<Scalar>> rhs);

// Exact determinant by fraction-free-ish elimination over the field.
Scalar determinant(std::vector<std::vector<Scalar>> a);

} // namespace braidlab

#endif
