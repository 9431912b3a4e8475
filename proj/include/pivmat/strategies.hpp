#pragma once

#include <concepts>
#include <cstddef>
#include <istream>
#include <optional>
#include <ranges>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "pivmat/arith.hpp"
#include "pivmat/errors.hpp"

namespace pivmat {

/// A committed pivot: 0-based positions in the consulted state plus the
/// (non-zero) entry found there.
template <class S>
struct PivotChoice {
    std::size_t p;
    std::size_t k;
    S value;
};

/// Engines present candidates to strategies through this shape: ordered
/// candidate row/column positions and entry access by position. The
/// determinant engine exposes its active view; the inverse engine exposes the
/// still-basic rows and still-non-basic columns of its dictionary.
template <class St, class A>
concept PivotState = ArithModel<A> && requires(const St s, std::size_t i) {
    { s.entry(i, i) } -> std::convertible_to<typename A::Scalar>;
    { s.row_ok(i) } -> std::convertible_to<bool>;
    { s.col_ok(i) } -> std::convertible_to<bool>;
    requires std::ranges::input_range<decltype(s.rows())>;
    requires std::ranges::input_range<decltype(s.cols())>;
    requires std::convertible_to<std::ranges::range_value_t<decltype(s.rows())>, std::size_t>;
    requires std::convertible_to<std::ranges::range_value_t<decltype(s.cols())>, std::size_t>;
};

/// Smallest candidate row with any non-zero entry; within it, the smallest
/// non-zero column. Reproduces the worked-example pivot order.
struct FirstNonzero {
    template <class St, ArithModel A>
        requires PivotState<St, A>
    std::optional<PivotChoice<typename A::Scalar>> choose(const St& state, const A& arith) const {
        for (std::size_t p : state.rows())
            for (std::size_t k : state.cols())
                if (!arith.is_zero(state.entry(p, k))) return PivotChoice{p, k, state.entry(p, k)};
        return std::nullopt;
    }
};

/// Smallest candidate row with any non-zero entry; within it, the column of
/// maximal magnitude (ties to the smallest column position).
struct RowMaxMagnitude {
    template <class St, ArithModel A>
        requires PivotState<St, A>
    std::optional<PivotChoice<typename A::Scalar>> choose(const St& state, const A& arith) const {
        for (std::size_t p : state.rows()) {
            std::optional<PivotChoice<typename A::Scalar>> best;
            for (std::size_t k : state.cols()) {
                const auto& v = state.entry(p, k);
                if (arith.is_zero(v)) continue;
                if (!best || arith.abs_less(best->value, v)) best = PivotChoice{p, k, v};
            }
            if (best) return best;
        }
        return std::nullopt;
    }
};

/// Maximal magnitude over all candidate cells (full pivoting); ties to the
/// lexicographically smallest (row, column).
struct GlobalMaxMagnitude {
    template <class St, ArithModel A>
        requires PivotState<St, A>
    std::optional<PivotChoice<typename A::Scalar>> choose(const St& state, const A& arith) const {
        std::optional<PivotChoice<typename A::Scalar>> best;
        for (std::size_t p : state.rows())
            for (std::size_t k : state.cols()) {
                const auto& v = state.entry(p, k);
                if (arith.is_zero(v)) continue;
                if (!best || arith.abs_less(best->value, v)) best = PivotChoice{p, k, v};
            }
        return best;
    }
};

/// Replays a fixed pivot sequence; each consumed choice must be a valid
/// non-zero candidate when its turn comes.
class Scripted {
public:
    /// Steps are 0-based positions.
    explicit Scripted(std::vector<std::pair<std::size_t, std::size_t>> steps)
        : steps_(std::move(steps)) {}

    /// Script file format: one "p k" pair per line, 1-based; '#' comments and
    /// blank lines allowed.
    static Scripted parse(std::istream& in);

    std::size_t consumed() const { return cursor_; }

    template <class St, ArithModel A>
        requires PivotState<St, A>
    std::optional<PivotChoice<typename A::Scalar>> choose(const St& state, const A& arith) {
        const std::size_t step = cursor_ + 1;
        if (cursor_ >= steps_.size())
            throw ScriptedPivotError(step, "script exhausted but another pivot is required");
        auto [p, k] = steps_[cursor_];
        if (!state.row_ok(p))
            throw ScriptedPivotError(step, "row " + std::to_string(p + 1) + " is not a candidate");
        if (!state.col_ok(k))
            throw ScriptedPivotError(step, "column " + std::to_string(k + 1) + " is not a candidate");
        if (arith.is_zero(state.entry(p, k)))
            throw ScriptedPivotError(step, "zero pivot at (" + std::to_string(p + 1) + ", " +
                                               std::to_string(k + 1) + ")");
        ++cursor_;
        return PivotChoice{p, k, state.entry(p, k)};
    }

private:
    std::vector<std::pair<std::size_t, std::size_t>> steps_;
    std::size_t cursor_ = 0;
};

using StrategyVariant = std::variant<FirstNonzero, RowMaxMagnitude, GlobalMaxMagnitude, Scripted>;

/// Resolves a CLI strategy name: "first-nonzero", "row-max", "global-max",
/// or "scripted:<file>". Throws std::invalid_argument for unknown names,
/// Error for an unreadable script file, ParseError for a malformed one.
StrategyVariant make_strategy(std::string_view name);

}  // namespace pivmat
