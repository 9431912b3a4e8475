#pragma once

#include <cstddef>
#include <optional>
#include <ranges>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pivmat/arith.hpp"
#include "pivmat/errors.hpp"
#include "pivmat/matrix.hpp"
#include "pivmat/strategies.hpp"

namespace pivmat {

enum class VarKind { X, Y };

struct VarLabel {
    VarKind kind;
    std::size_t index;  // 1-based

    bool operator==(const VarLabel&) const = default;
    std::string to_string() const {
        return (kind == VarKind::X ? "x" : "y") + std::to_string(index);
    }
};

/// A system y = A x presented as a tableau with row labels (currently basic
/// variables) and column labels (currently non-basic variables). Pivoting on
/// (p, k) exchanges the two labels at those positions.
template <class S>
class Dictionary {
public:
    explicit Dictionary(Matrix<S> tableau)
        : tableau_(std::move(tableau)), row_labels_(), col_labels_() {
        const std::size_t n = tableau_.order();
        row_labels_.reserve(n);
        col_labels_.reserve(n);
        for (std::size_t i = 1; i <= n; ++i) {
            row_labels_.push_back({VarKind::Y, i});
            col_labels_.push_back({VarKind::X, i});
        }
    }

    std::size_t order() const { return tableau_.order(); }
    const S& at(std::size_t p, std::size_t k) const { return tableau_.at(p, k); }
    S& at(std::size_t p, std::size_t k) { return tableau_.at(p, k); }
    const Matrix<S>& tableau() const { return tableau_; }
    const VarLabel& row_label(std::size_t p) const { return row_labels_.at(p); }
    const VarLabel& col_label(std::size_t k) const { return col_labels_.at(k); }

    void swap_labels(std::size_t p, std::size_t k) {
        std::swap(row_labels_.at(p), col_labels_.at(k));
    }

private:
    Matrix<S> tableau_;
    std::vector<VarLabel> row_labels_;
    std::vector<VarLabel> col_labels_;
};

template <class S>
Dictionary<S> dictionary_of(const Matrix<S>& a) {
    return Dictionary<S>{a};
}

/// In-place exchange pivot at (p, k). Update order: multipliers
/// m_i = -a_ik / a_pk first, then the interior a_ij += a_pj * m_i, then the
/// pivot row a_pj /= a_pk, the pivot column a_ik = m_i, the pivot cell
/// a_pk = 1 / a_pk, and finally the label swap.
template <class S, ArithModel A>
void pivot(Dictionary<S>& d, std::size_t p, std::size_t k, const A& arith) {
    const std::size_t n = d.order();
    contract(p < n && k < n, "pivot position out of range");
    const S pivot_value = d.at(p, k);
    contract(!arith.is_zero(pivot_value), "pivot requires a non-zero pivot cell");

    std::vector<S> m(n, S{});
    for (std::size_t i = 0; i < n; ++i) {
        if (i == p) continue;
        m[i] = -(d.at(i, k) / pivot_value);
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (i == p) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == k) continue;
            d.at(i, j) += d.at(p, j) * m[i];
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (j == k) continue;
        d.at(p, j) /= pivot_value;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (i == p) continue;
        d.at(i, k) = m[i];
    }
    d.at(p, k) = S(1) / pivot_value;
    d.swap_labels(p, k);
}

/// Read the inverse out of a fully exchanged dictionary: the cell in the row
/// labelled x_i and the column labelled y_j is entry (i, j) of the inverse.
template <class S>
Matrix<S> gather_inverse(const Dictionary<S>& d) {
    const std::size_t n = d.order();
    Matrix<S> out{n};
    for (std::size_t r = 0; r < n; ++r) {
        contract(d.row_label(r).kind == VarKind::X, "gather requires every row label to be x");
        for (std::size_t c = 0; c < n; ++c) {
            contract(d.col_label(c).kind == VarKind::Y,
                     "gather requires every column label to be y");
            out.at(d.row_label(r).index - 1, d.col_label(c).index - 1) = d.at(r, c);
        }
    }
    return out;
}

struct Singular {
    std::size_t row_pos;  // 0-based tableau row that blocks the exchange
    VarLabel label;       // the y variable stuck in the basis
};

template <class S>
struct InvTraceStep {
    std::size_t step;  // 1-based
    std::size_t p;     // 0-based tableau positions
    std::size_t k;
    S value;
    VarLabel entering;  // x label moving into the rows
    VarLabel leaving;   // y label moving out
    std::vector<VarLabel> basis_after;     // row labels after the swap
    std::vector<VarLabel> nonbasis_after;  // column labels after the swap
    std::optional<Matrix<S>> snapshot;
};

template <class S>
struct InvRun {
    std::variant<Matrix<S>, Singular> outcome;
    std::vector<InvTraceStep<S>> steps;
};

namespace detail {

/// Candidate presentation of a dictionary: rows still labelled y crossed
/// with columns still labelled x.
template <class S>
struct DictState {
    const Dictionary<S>& dict;

    auto rows() const {
        return std::views::iota(std::size_t{0}, dict.order()) |
               std::views::filter([this](std::size_t i) {
                   return dict.row_label(i).kind == VarKind::Y;
               });
    }
    auto cols() const {
        return std::views::iota(std::size_t{0}, dict.order()) |
               std::views::filter([this](std::size_t j) {
                   return dict.col_label(j).kind == VarKind::X;
               });
    }
    const S& entry(std::size_t p, std::size_t k) const { return dict.at(p, k); }
    bool row_ok(std::size_t p) const {
        return p < dict.order() && dict.row_label(p).kind == VarKind::Y;
    }
    bool col_ok(std::size_t k) const {
        return k < dict.order() && dict.col_label(k).kind == VarKind::X;
    }
};

template <ArithModel A, class Strategy>
std::variant<Matrix<typename A::Scalar>, Singular> inverse_impl(
    const Matrix<typename A::Scalar>& a, Strategy& strategy, const A& arith,
    std::vector<InvTraceStep<typename A::Scalar>>* steps, bool snapshots) {
    using S = typename A::Scalar;
    const std::size_t n = a.order();
    Dictionary<S> dict = dictionary_of(a);

    for (std::size_t step = 1; step <= n; ++step) {
        DictState<S> state{dict};
        auto choice = strategy.choose(state, arith);
        if (!choice) {
            // Sound only if some y row is zero across every x column.
            for (std::size_t i = 0; i < n; ++i) {
                if (dict.row_label(i).kind != VarKind::Y) continue;
                bool zero_row = true;
                for (std::size_t j = 0; j < n; ++j) {
                    if (dict.col_label(j).kind != VarKind::X) continue;
                    if (!arith.is_zero(dict.at(i, j))) { zero_row = false; break; }
                }
                if (zero_row) return Singular{i, dict.row_label(i)};
            }
            contract(false, "strategy reported no candidates but no candidate row is zero");
        }
        const std::size_t p = choice->p;
        const std::size_t k = choice->k;
        contract(state.row_ok(p) && state.col_ok(k), "strategy chose an ineligible pivot cell");
        const S value = dict.at(p, k);  // authoritative, never the reported copy
        contract(!arith.is_zero(value), "strategy chose a zero pivot");

        const VarLabel entering = dict.col_label(k);
        const VarLabel leaving = dict.row_label(p);
        pivot(dict, p, k, arith);

        if (steps) {
            std::vector<VarLabel> basis;
            std::vector<VarLabel> nonbasis;
            basis.reserve(n);
            nonbasis.reserve(n);
            for (std::size_t i = 0; i < n; ++i) basis.push_back(dict.row_label(i));
            for (std::size_t j = 0; j < n; ++j) nonbasis.push_back(dict.col_label(j));
            std::optional<Matrix<S>> snap;
            if (snapshots) snap = dict.tableau();
            steps->push_back({step, p, k, value, entering, leaving, std::move(basis),
                              std::move(nonbasis), std::move(snap)});
        }
    }
    return gather_inverse(dict);
}

}  // namespace detail

/// Inverse by n exchange pivots. A state with no admissible pivot means some
/// basic variable cannot leave: the matrix is singular.
template <ArithModel A, class Strategy>
std::variant<Matrix<typename A::Scalar>, Singular> inverse(
    const Matrix<typename A::Scalar>& a, Strategy&& strategy, const A& arith) {
    return detail::inverse_impl(a, strategy, arith, nullptr, false);
}

template <ArithModel A, class Strategy>
InvRun<typename A::Scalar> inverse_trace(const Matrix<typename A::Scalar>& a, Strategy&& strategy,
                                         const A& arith, bool with_snapshots = false) {
    InvRun<typename A::Scalar> run{Singular{0, {VarKind::Y, 1}}, {}};
    run.outcome = detail::inverse_impl(a, strategy, arith, &run.steps, with_snapshots);
    return run;
}

}  // namespace pivmat
