#include "braidlab/linalg.hpp"

#include <cassert>

namespace braidlab {

SparseRow RowEchelon::reduce(SparseRow row) const {
    // Pivots are visited in ascending column order; each elimination only
    // introduces columns right of the pivot, so one pass suffices.
    for (auto it = row.begin(); it != row.end();) {
        auto pit = rows_.find(it->first);
        if (pit == rows_.end()) {
            ++it;
            continue;
        }
        Scalar factor = it->second;
        it = row.erase(it);
        for (const auto& [col, val] : pit->second) {
            if (col == pit->first) continue;
            auto rit = row.find(col);
            if (rit == row.end()) {
                Scalar v = -(factor * val);
                if (!v.is_zero()) row.emplace(col, std::move(v));
            } else {
                rit->second -= factor * val;
                if (rit->second.is_zero()) row.erase(rit);
            }
        }
        it = row.upper_bound(pit->first);
    }
    return row;
}

bool RowEchelon::add_row(SparseRow row) {
    row = reduce(std::move(row));
    if (row.empty()) return false;
    int pivot = row.begin()->first;
    Scalar inv = row.begin()->second.inverse();
    for (auto& [col, val] : row) val = val * inv;
    // Back-eliminate the new pivot from the existing rows.
    if (reduced_) {
        for (auto& [pcol, prow] : rows_) {
            auto hit = prow.find(pivot);
            if (hit == prow.end()) continue;
            Scalar factor = hit->second;
            prow.erase(hit);
            for (const auto& [col, val] : row) {
                if (col == pivot) continue;
                auto rit = prow.find(col);
                if (rit == prow.end()) {
                    Scalar v = -(factor * val);
                    if (!v.is_zero()) prow.emplace(col, std::move(v));
                } else {
                    rit->second -= factor * val;
                    if (rit->second.is_zero()) prow.erase(rit);
                }
            }
        }
    }
    rows_.emplace(pivot, std::move(row));
    return true;
}

int sparse_rank(const std::vector<SparseRow>& rows) {
    RowEchelon ech(/*reduced=*/false);
    for (const auto& r : rows) ech.add_row(r);
    return ech.rank();
}

std::optional<std::vector<std::vector<Scalar>>> solve_dense(
    std::vector<std::vector<Scalar>> a, std::vector<std::vector<Scalar>> rhs) {
    size_t n = a.size();
    assert(rhs.size() == n);
    size_t w = n == 0 ? 0 : rhs[0].size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(rhs[piv], rhs[col]);
        Scalar inv = a[col][col].inverse();
        for (size_t j = col; j < n; ++j) a[col][j] = a[col][j] * inv;
        for (size_t j = 0; j < w; ++j) rhs[col][j] = rhs[col][j] * inv;
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            Scalar f = a[r][col];
            for (size_t j = col; j < n; ++j) a[r][j] = a[r][j] - f * a[col][j];
            for (size_t j = 0; j < w; ++j) rhs[r][j] = rhs[r][j] - f * rhs[col][j];
        }
    }
    return rhs;
}

Scalar determinant(std::vector<std::vector<Scalar>> a) {
    size_t n = a.size();
    Scalar det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) return Scalar(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det = det * a[col][col];
        Scalar inv = a[col][col].inverse();
        for (size_t r = col + 1; r < n; ++r) {
            if (a[r][col].is_zero()) continue;
            Scalar f = a[r][col] * inv;
            for (size_t j = col; j < n; ++j) a[r][j] = a[r][j] - f * a[col][j];
        }
    }
    return det;
}

} // namespace braidlab
