#pragma once

#include <cstddef>
#include <optional>
#include <ranges>
#include <utility>
#include <vector>

#include "pivmat/active_view.hpp"
#include "pivmat/arith.hpp"
#include "pivmat/errors.hpp"
#include "pivmat/matrix.hpp"
#include "pivmat/strategies.hpp"

namespace pivmat {

/// Single order-reduction step: eliminate against the pivot at active
/// position (p, k), then drop the pivot row and column from the view.
/// Every surviving entry is updated as a_ij - a_ik * a_pj / a_pk.
template <class S, ArithModel A>
void eliminate(ActiveView<S>& view, std::size_t p, std::size_t k, const A& arith) {
    const std::size_t dim = view.dim();
    contract(p < dim && k < dim, "pivot position out of range");
    const S pivot = view.entry(p, k);
    contract(!arith.is_zero(pivot), "eliminate requires a non-zero pivot");

    for (std::size_t i = 0; i < dim; ++i) {
        if (i == p) continue;
        const S factor = view.entry(i, k) / pivot;
        for (std::size_t j = 0; j < dim; ++j) {
            if (j == k) continue;
            view.entry(i, j) -= factor * view.entry(p, j);
        }
    }
    view.remove(p, k);
}

template <class S>
struct DetPivotRecord {
    std::size_t row_label;  // original 1-based labels of the chosen cell
    std::size_t col_label;
    std::size_t p;          // 0-based active positions at selection time
    std::size_t k;
    S value;
    int sign;               // (-1)^(p+k) in the 1-based convention
    S d_after;              // accumulator after this iteration
};

template <class S>
struct DetTraceStep {
    std::size_t step;                          // 1-based iteration index
    std::optional<DetPivotRecord<S>> pivot;    // nullopt: no non-zero candidate left
    SpaceStats stats;                          // after the reduction
    std::optional<Matrix<S>> snapshot;         // active part after the step, if requested
};

template <class S>
struct DetRun {
    S value;
    std::vector<DetTraceStep<S>> steps;
};

namespace detail {

/// Candidate presentation of an active view: every active cell.
template <class S>
struct DetState {
    const ActiveView<S>& view;

    auto rows() const { return std::views::iota(std::size_t{0}, view.dim()); }
    auto cols() const { return std::views::iota(std::size_t{0}, view.dim()); }
    const S& entry(std::size_t p, std::size_t k) const { return view.entry(p, k); }
    bool row_ok(std::size_t p) const { return p < view.dim(); }
    bool col_ok(std::size_t k) const { return k < view.dim(); }
};

inline int pivot_sign(std::size_t p, std::size_t k) {
    return (p + k) % 2 == 0 ? 1 : -1;  // parity of 0-based p+k equals the 1-based rule
}

template <ArithModel A, class Strategy>
typename A::Scalar det_impl(const Matrix<typename A::Scalar>& a, Strategy& strategy,
                            const A& arith, std::vector<DetTraceStep<typename A::Scalar>>* steps,
                            bool snapshots) {
    using S = typename A::Scalar;
    ActiveView<S> view{a};
    S d(1);
    for (std::size_t step = 1; view.dim() > 0; ++step) {
        DetState<S> state{view};
        auto choice = strategy.choose(state, arith);
        if (!choice) {
            // Sound only if some active row really is all zero.
            bool zero_row = false;
            for (std::size_t i = 0; i < view.dim() && !zero_row; ++i) {
                zero_row = true;
                for (std::size_t j = 0; j < view.dim(); ++j)
                    if (!arith.is_zero(view.entry(i, j))) { zero_row = false; break; }
            }
            contract(zero_row, "strategy reported no candidates but no active row is zero");
            if (steps) steps->push_back({step, std::nullopt, view.stats(), std::nullopt});
            return S(0);
        }
        const std::size_t p = choice->p;
        const std::size_t k = choice->k;
        contract(p < view.dim() && k < view.dim(), "strategy chose an out-of-range pivot");
        const S value = view.entry(p, k);  // authoritative, never the reported copy
        contract(!arith.is_zero(value), "strategy chose a zero pivot");

        const std::size_t row_label = view.row_label(p);
        const std::size_t col_label = view.col_label(k);
        const int sign = pivot_sign(p, k);

        eliminate(view, p, k, arith);
        d = d * value;
        if (sign < 0) d = -d;

        if (steps) {
            std::optional<Matrix<S>> snap;
            if (snapshots && view.dim() >= 1) snap = view.snapshot();
            steps->push_back({step,
                              DetPivotRecord<S>{row_label, col_label, p, k, value, sign, d},
                              view.stats(), std::move(snap)});
        }
    }
    return d;
}

}  // namespace detail

/// Determinant by repeated single-pivot elimination and order reduction:
/// d accumulates (-1)^(p+k) * pivot per iteration; a candidate-free state
/// (an all-zero active row) yields 0.
template <ArithModel A, class Strategy>
typename A::Scalar determinant(const Matrix<typename A::Scalar>& a, Strategy&& strategy,
                               const A& arith) {
    return detail::det_impl(a, strategy, arith, nullptr, false);
}

template <ArithModel A, class Strategy>
DetRun<typename A::Scalar> determinant_trace(const Matrix<typename A::Scalar>& a,
                                             Strategy&& strategy, const A& arith,
                                             bool with_snapshots = false) {
    DetRun<typename A::Scalar> run{typename A::Scalar{}, {}};
    run.value = detail::det_impl(a, strategy, arith, &run.steps, with_snapshots);
    return run;
}

}  // namespace pivmat
