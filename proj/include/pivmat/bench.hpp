#pragma once

#include <chrono>
#include <cstddef>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "pivmat/arith.hpp"
#include "pivmat/det.hpp"
#include "pivmat/dict.hpp"
#include "pivmat/matrix.hpp"
#include "pivmat/rational.hpp"
#include "pivmat/strategies.hpp"

namespace pivmat::bench {

struct BenchOptions {
    std::string family = "hilbert";  // hilbert | random-int | rank-deficient
    std::size_t order_lo = 2;
    std::size_t order_hi = 6;
    std::vector<std::string> strategies = {"first-nonzero", "row-max", "global-max"};
    std::vector<std::string> modes = {"exact", "float"};
    double zero_tolerance = kDefaultZeroTolerance;
};

/// One (family, order, strategy, mode) inversion measurement. The residual
/// is measured in exact arithmetic even for float runs: the float inverse is
/// lifted entry-wise to rationals (every double is one), multiplied by the
/// exact family matrix, and compared against the identity.
struct BenchCell {
    std::string family;
    std::size_t order = 0;
    std::string strategy;
    std::string mode;
    bool singular = false;
    std::string residual;      // decimal rendering of the exact measurement
    double residual_value = 0.0;
    std::size_t pivots = 0;
    double elapsed_ms = 0.0;
    std::size_t peak_active_dim = 0;
    std::vector<std::size_t> dim_profile;  // candidate dimension before each pivot
};

namespace detail {

inline std::uint64_t family_seed(std::size_t order) {
    return 0x5eedULL ^ (static_cast<std::uint64_t>(order) * 0x9E3779B97F4A7C15ULL);
}

inline Matrix<Rational> random_int_matrix(std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> dist(-9, 9);
    Matrix<Rational> m{n};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = Rational(dist(rng));
    return m;
}

inline Matrix<Rational> family_matrix(const std::string& family, std::size_t n) {
    const ExactArith exact;
    if (family == "hilbert") return hilbert(n, exact);
    std::mt19937_64 rng(family_seed(n));
    if (family == "random-int") {
        // Redraw until nonsingular so residual rows stay comparable.
        for (int attempt = 0; attempt < 64; ++attempt) {
            Matrix<Rational> m = random_int_matrix(n, rng);
            FirstNonzero probe;
            if (!determinant(m, probe, exact).is_zero()) return m;
        }
        throw std::runtime_error("random-int family failed to produce a nonsingular draw");
    }
    if (family == "rank-deficient") {
        if (n == 1) return Matrix<Rational>{1};  // [[0]]
        Matrix<Rational> m = random_int_matrix(n, rng);
        for (std::size_t j = 0; j < n; ++j) {
            Rational sum(0);
            for (std::size_t i = 0; i + 1 < n; ++i) sum += m.at(i, j);
            m.at(n - 1, j) = sum;
        }
        return m;
    }
    throw std::invalid_argument("unknown bench family: " + family +
                                " (expected hilbert, random-int, or rank-deficient)");
}

inline Matrix<double> to_float(const Matrix<Rational>& a) {
    Matrix<double> m{a.order()};
    for (std::size_t i = 0; i < a.order(); ++i)
        for (std::size_t j = 0; j < a.order(); ++j) m.at(i, j) = a.at(i, j).to_double();
    return m;
}

inline Matrix<Rational> lift(const Matrix<double>& a) {
    Matrix<Rational> m{a.order()};
    for (std::size_t i = 0; i < a.order(); ++i)
        for (std::size_t j = 0; j < a.order(); ++j) m.at(i, j) = Rational::from_double(a.at(i, j));
    return m;
}

template <ArithModel A>
InvRun<typename A::Scalar> timed_inverse(const Matrix<typename A::Scalar>& m,
                                         const std::string& strategy_name, const A& arith,
                                         double& elapsed_ms) {
    StrategyVariant strategy = make_strategy(strategy_name);
    const auto t0 = std::chrono::steady_clock::now();
    InvRun<typename A::Scalar> run = std::visit(
        [&](auto& s) { return inverse_trace(m, s, arith); }, strategy);
    const auto t1 = std::chrono::steady_clock::now();
    elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return run;
}

}  // namespace detail

inline std::vector<BenchCell> run_bench(const BenchOptions& opts) {
    if (opts.order_lo < 1 || opts.order_lo > opts.order_hi || opts.order_hi > 64)
        throw std::invalid_argument("bench order range must satisfy 1 <= lo <= hi <= 64");
    for (const auto& s : opts.strategies)
        if (s.rfind("scripted", 0) == 0)
            throw std::invalid_argument("bench does not accept the scripted strategy");

    const ExactArith exact;
    const FloatArith approx{opts.zero_tolerance};

    std::vector<BenchCell> cells;
    for (std::size_t n = opts.order_lo; n <= opts.order_hi; ++n) {
        const Matrix<Rational> a = detail::family_matrix(opts.family, n);
        const Matrix<double> af = detail::to_float(a);
        for (const auto& strategy : opts.strategies) {
            for (const auto& mode : opts.modes) {
                BenchCell cell;
                cell.family = opts.family;
                cell.order = n;
                cell.strategy = strategy;
                cell.mode = mode;
                cell.peak_active_dim = n;

                Rational deviation(0);
                if (mode == "exact") {
                    auto run = detail::timed_inverse(a, strategy, exact, cell.elapsed_ms);
                    cell.pivots = run.steps.size();
                    if (std::holds_alternative<Singular>(run.outcome)) {
                        cell.singular = true;
                    } else {
                        auto report =
                            residual_vs_identity(multiply(a, std::get<Matrix<Rational>>(run.outcome)));
                        deviation = report.max_abs_deviation;
                    }
                } else if (mode == "float") {
                    auto run = detail::timed_inverse(af, strategy, approx, cell.elapsed_ms);
                    cell.pivots = run.steps.size();
                    if (std::holds_alternative<Singular>(run.outcome)) {
                        cell.singular = true;
                    } else {
                        auto lifted = detail::lift(std::get<Matrix<double>>(run.outcome));
                        auto report = residual_vs_identity(multiply(a, lifted));
                        deviation = report.max_abs_deviation;
                    }
                } else {
                    throw std::invalid_argument("unknown bench mode: " + mode);
                }

                for (std::size_t t = 0; t < cell.pivots; ++t) cell.dim_profile.push_back(n - t);
                if (!cell.singular) {
                    cell.residual_value = deviation.to_double();
                    cell.residual = approx.format(cell.residual_value);
                }
                cells.push_back(std::move(cell));
            }
        }
    }
    return cells;
}

inline std::string bench_table(const std::vector<BenchCell>& cells) {
    std::ostringstream out;
    out << "family          order  strategy       mode   pivots  residual      elapsed_ms\n";
    for (const auto& c : cells) {
        std::ostringstream row;
        row.setf(std::ios::left);
        row.width(16);
        row << c.family;
        std::string order = std::to_string(c.order);
        order.resize(7, ' ');
        row << order;
        std::string strat = c.strategy;
        strat.resize(15, ' ');
        row << strat;
        std::string mode = c.mode;
        mode.resize(7, ' ');
        row << mode;
        std::string pivots = std::to_string(c.pivots);
        pivots.resize(8, ' ');
        row << pivots;
        std::string res = c.singular ? "singular" : c.residual;
        if (res.size() < 14) res.resize(14, ' ');
        else res += ' ';
        row << res << c.elapsed_ms;
        out << row.str() << "\n";
    }
    return out.str();
}

inline nlohmann::json bench_json(const std::vector<BenchCell>& cells) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& c : cells) {
        nlohmann::json row;
        row["family"] = c.family;
        row["order"] = c.order;
        row["strategy"] = c.strategy;
        row["mode"] = c.mode;
        row["singular"] = c.singular;
        if (!c.singular) {
            row["residual"] = c.residual;
            row["residual_value"] = c.residual_value;
        }
        row["pivots"] = c.pivots;
        row["elapsed_ms"] = c.elapsed_ms;
        row["peak_active_dim"] = c.peak_active_dim;
        row["dim_profile"] = c.dim_profile;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace pivmat::bench
