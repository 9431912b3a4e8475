#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pivmat/arith.hpp"
#include "pivmat/errors.hpp"

namespace pivmat {

/// Dense square matrix. Storage is 0-indexed; rows and columns are named by
/// their original 1-based labels wherever they surface in traces or reports.
template <class S>
class Matrix {
public:
    explicit Matrix(std::size_t n) : n_(n), e_(n * n) {
        contract(n >= 1, "matrix order must be at least 1");
    }

    Matrix(std::size_t n, std::vector<S> entries) : n_(n), e_(std::move(entries)) {
        contract(n >= 1, "matrix order must be at least 1");
        contract(e_.size() == n * n, "entry count must be n*n");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = S(1);
        return m;
    }

    std::size_t order() const { return n_; }

    S& at(std::size_t i, std::size_t j) {
        contract(i < n_ && j < n_, "matrix index out of range");
        return e_[i * n_ + j];
    }
    const S& at(std::size_t i, std::size_t j) const {
        contract(i < n_ && j < n_, "matrix index out of range");
        return e_[i * n_ + j];
    }

    Matrix transpose() const {
        Matrix t(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t n_;
    std::vector<S> e_;
};

template <class S>
Matrix<S> multiply(const Matrix<S>& a, const Matrix<S>& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("matrix product of mismatched orders");
    const std::size_t n = a.order();
    Matrix<S> p(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            S acc{};
            for (std::size_t k = 0; k < n; ++k) acc += a.at(i, k) * b.at(k, j);
            p.at(i, j) = acc;
        }
    return p;
}

/// Max-magnitude deviation of a matrix from the identity, with the position
/// (1-based labels) of the worst entry. Deviation 0 with no position means
/// the matrix is the identity, entry for entry.
template <class S>
struct ResidualReport {
    S max_abs_deviation{};
    std::optional<std::pair<std::size_t, std::size_t>> deviating_position;
};

template <class S>
ResidualReport<S> residual_vs_identity(const Matrix<S>& product) {
    const std::size_t n = product.order();
    ResidualReport<S> report;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            S dev = abs_of(product.at(i, j) - (i == j ? S(1) : S{}));
            if (report.max_abs_deviation < dev) {
                report.max_abs_deviation = dev;
                report.deviating_position = {i + 1, j + 1};
            }
        }
    return report;
}

/// Hilbert matrix: entry (i, j) = 1/(i + j - 1) in 1-based labels.
template <ArithModel A>
Matrix<typename A::Scalar> hilbert(std::size_t n, const A& arith) {
    Matrix<typename A::Scalar> h(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            h.at(i, j) = arith.from_fraction(1, static_cast<long>(i + j + 1));
    return h;
}

}  // namespace pivmat
