#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "scalar.hpp"

namespace qpb {

// Elimination over the Laurent ring needs a unit (monomial) pivot in every
// nonzero row; catalog systems satisfy this, and callers are expected to
// retry at a higher word-length bound if one does not.
struct NonMonomialPivot : std::runtime_error {
    NonMonomialPivot()
        : std::runtime_error("exact elimination found a row without a monomial pivot") {}
};

using SparseVec = std::map<int, ParamScalar>;

// Row-echelon accumulator with unit pivots over ParamScalar.
class Echelon {
public:
    // Reduce v against the stored rows (eliminating their pivot columns).
    SparseVec reduce(SparseVec v) const {
        for (const auto& [p, ri] : pivot_rows_) {
            auto it = v.find(p);
            if (it == v.end()) continue;
            ParamScalar c = it->second;
            v.erase(it);
            for (const auto& [col, rc] : rows_[ri]) {
                if (col == p) continue;
                auto vit = v.find(col);
                if (vit == v.end()) {
                    ParamScalar nc = -(c * rc);
                    if (!nc.is_zero()) v[col] = nc;
                } else {
                    vit->second -= c * rc;
                    if (vit->second.is_zero()) v.erase(vit);
                }
            }
        }
        return v;
    }

    // Insert v's residue as a new pivot row. Returns false when v was
    // already in the span; throws NonMonomialPivot when the residue has no
    // unit entry to pivot on.
    bool insert(const SparseVec& v) {
        SparseVec r = reduce(v);
        if (r.empty()) return false;
        int pivot = -1;
        for (const auto& [col, c] : r)
            if (c.is_monomial()) {
                pivot = col;
                break;
            }
        if (pivot < 0) throw NonMonomialPivot();
        ParamScalar inv = r[pivot].inverse();
        SparseVec row;
        for (const auto& [col, c] : r) row[col] = inv * c;
        // keep stored rows fully reduced against the new pivot
        for (auto& old : rows_) {
            auto it = old.find(pivot);
            if (it == old.end()) continue;
            ParamScalar c = it->second;
            old.erase(it);
            for (const auto& [col, rc] : row) {
                if (col == pivot) continue;
                auto oit = old.find(col);
                if (oit == old.end()) {
                    ParamScalar nc = -(c * rc);
                    if (!nc.is_zero()) old[col] = nc;
                } else {
                    oit->second -= c * rc;
                    if (oit->second.is_zero()) old.erase(oit);
                }
            }
        }
        pivot_rows_[pivot] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(row));
        return true;
    }

    bool contains(const SparseVec& v) const { return reduce(v).empty(); }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::map<int, int>& pivots() const { return pivot_rows_; }
    const SparseVec& row(int i) const { return rows_[i]; }

private:
    std::vector<SparseVec> rows_;
    std::map<int, int> pivot_rows_;  // pivot column -> row index
};

// Kernel of the linear system given by `rows` (each row is one equation
// sum_j row[j] * x_j = 0) in `ncols` unknowns. Basis vectors are canonical:
// one per free column, with unit in that column.
inline std::vector<std::vector<ParamScalar>> kernel_basis(const std::vector<SparseVec>& rows,
                                                          int ncols) {
    Echelon ech;
    // a row without a unit pivot may unlock once another row is inserted;
    // defer such rows and retry until the set stabilizes
    std::vector<SparseVec> pending(rows.begin(), rows.end());
    bool progress = true;
    while (progress && !pending.empty()) {
        progress = false;
        std::vector<SparseVec> next;
        for (auto& r : pending) {
            try {
                ech.insert(r);
                progress = true;
            } catch (const NonMonomialPivot&) {
                next.push_back(std::move(r));
            }
        }
        pending = std::move(next);
    }
    if (!pending.empty()) throw NonMonomialPivot();
    std::vector<char> is_pivot(ncols, 0);
    for (const auto& [p, ri] : ech.pivots()) is_pivot[p] = 1;
    std::vector<std::vector<ParamScalar>> basis;
    for (int f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<ParamScalar> v(ncols);
        v[f] = ParamScalar::one();
        for (const auto& [p, ri] : ech.pivots()) {
            const SparseVec& row = ech.row(ri);
            auto it = row.find(f);
            if (it != row.end()) v[p] = -it->second;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace qpb
