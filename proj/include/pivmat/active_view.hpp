#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "pivmat/errors.hpp"
#include "pivmat/matrix.hpp"

namespace pivmat {

/// Storage accounting snapshot for the order-reduction claim: the base buffer
/// and label capacities must stay constant over a run while the active
/// dimension shrinks by one per iteration.
struct SpaceStats {
    std::size_t active_dim;
    std::size_t base_entry_capacity;
    std::size_t row_label_capacity;
    std::size_t col_label_capacity;

    friend bool operator==(const SpaceStats&, const SpaceStats&) = default;
};

/// Live sub-matrix over an exclusively-held base matrix, addressed by active
/// position. Shrinks in place: removals drop labels, never reallocate, and a
/// removed row or column cannot be addressed again.
template <class S>
class ActiveView {
public:
    explicit ActiveView(Matrix<S> base)
        : base_(std::move(base)), rows_(base_.order()), cols_(base_.order()) {
        for (std::size_t i = 0; i < base_.order(); ++i) {
            rows_[i] = i + 1;
            cols_[i] = i + 1;
        }
    }

    std::size_t dim() const { return rows_.size(); }

    const S& entry(std::size_t p, std::size_t k) const {
        contract(p < dim() && k < dim(), "active position out of range");
        return base_.at(rows_[p] - 1, cols_[k] - 1);
    }
    S& entry(std::size_t p, std::size_t k) {
        contract(p < dim() && k < dim(), "active position out of range");
        return base_.at(rows_[p] - 1, cols_[k] - 1);
    }

    /// Original 1-based labels of the surviving rows/columns.
    std::size_t row_label(std::size_t p) const {
        contract(p < dim(), "active row position out of range");
        return rows_[p];
    }
    std::size_t col_label(std::size_t k) const {
        contract(k < dim(), "active column position out of range");
        return cols_[k];
    }

    void remove(std::size_t p, std::size_t k) {
        contract(p < dim() && k < dim(), "active position out of range");
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(p));
        cols_.erase(cols_.begin() + static_cast<std::ptrdiff_t>(k));
    }

    SpaceStats stats() const {
        return {dim(), base_.order() * base_.order(), rows_.capacity(), cols_.capacity()};
    }

    /// Dense copy of the active part (trace snapshots). Requires dim() >= 1.
    Matrix<S> snapshot() const {
        contract(dim() >= 1, "cannot snapshot an empty view");
        Matrix<S> m(dim());
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < dim(); ++j) m.at(i, j) = entry(i, j);
        return m;
    }

private:
    Matrix<S> base_;
    std::vector<std::size_t> rows_;  // surviving original labels, increasing
    std::vector<std::size_t> cols_;
};

}  // namespace pivmat
