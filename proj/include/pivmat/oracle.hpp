#pragma once

#include <cstddef>
#include <optional>

#include "pivmat/errors.hpp"
#include "pivmat/matrix.hpp"
#include "pivmat/rational.hpp"

namespace pivmat::oracle {

inline constexpr std::size_t kLaplaceMaxOrder = 10;
inline constexpr std::size_t kAdjugateMaxOrder = 8;

namespace detail {

inline Matrix<Rational> minor_of(const Matrix<Rational>& a, std::size_t drop_row,
                                 std::size_t drop_col) {
    const std::size_t n = a.order();
    contract(n >= 2, "minor of a 1x1 matrix does not exist");
    Matrix<Rational> m{n - 1};
    std::size_t r = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == drop_row) continue;
        std::size_t c = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == drop_col) continue;
            m.at(r, c) = a.at(i, j);
            ++c;
        }
        ++r;
    }
    return m;
}

inline Rational laplace_det_unchecked(const Matrix<Rational>& a) {
    const std::size_t n = a.order();
    if (n == 1) return a.at(0, 0);
    Rational det(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (a.at(0, j).is_zero()) continue;
        Rational term = a.at(0, j) * laplace_det_unchecked(minor_of(a, 0, j));
        if (j % 2 == 1) term = -term;
        det += term;
    }
    return det;
}

}  // namespace detail

/// Cofactor expansion along the first row. Factorial cost, so the order is
/// capped; the cap throwing keeps accidental large calls from hanging tests.
inline Rational laplace_det(const Matrix<Rational>& a) {
    if (a.order() > kLaplaceMaxOrder)
        throw OracleGuardError("laplace_det is capped at order 10");
    return detail::laplace_det_unchecked(a);
}

/// Inverse via the adjugate: entry (i, j) is (-1)^(i+j) det(minor(j, i)) / det(A).
/// Returns nullopt when det(A) == 0.
inline std::optional<Matrix<Rational>> adjugate_inverse(const Matrix<Rational>& a) {
    if (a.order() > kAdjugateMaxOrder)
        throw OracleGuardError("adjugate_inverse is capped at order 8");
    const std::size_t n = a.order();
    const Rational det = detail::laplace_det_unchecked(a);
    if (det.is_zero()) return std::nullopt;
    Matrix<Rational> inv{n};
    if (n == 1) {
        inv.at(0, 0) = Rational(1) / det;
        return inv;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Rational cof = detail::laplace_det_unchecked(detail::minor_of(a, j, i));
            if ((i + j) % 2 == 1) cof = -cof;
            inv.at(i, j) = cof / det;
        }
    }
    return inv;
}

}  // namespace pivmat::oracle
