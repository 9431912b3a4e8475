#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "pivmat/arith.hpp"
#include "pivmat/det.hpp"
#include "pivmat/dict.hpp"
#include "pivmat/matrix.hpp"

namespace pivmat {

/// Trace documents use one shape for both algorithms:
///   {"algorithm": ..., "n": ..., "iterations": [...], "result": ...}
/// Scalars are carried as formatted strings so exact values survive
/// serialization. Positions are 1-based. Iterations list completed pivots
/// only; a run that stops early shows up through "result" alone.

template <class S, ArithModel A>
nlohmann::json matrix_json(const Matrix<S>& m, const A& arith) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.order(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.order(); ++j) row.push_back(arith.format(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class S, ArithModel A>
nlohmann::json det_trace_json(const DetRun<S>& run, std::size_t n, const A& arith) {
    nlohmann::json doc;
    doc["algorithm"] = "det";
    doc["n"] = n;
    nlohmann::json iters = nlohmann::json::array();
    for (const auto& step : run.steps) {
        if (!step.pivot) continue;
        const auto& rec = *step.pivot;
        nlohmann::json it;
        it["step"] = step.step;
        it["p"] = rec.p + 1;
        it["k"] = rec.k + 1;
        it["pivot"] = arith.format(rec.value);
        it["sign"] = rec.sign;
        it["d_accum"] = arith.format(rec.d_after);
        iters.push_back(std::move(it));
    }
    doc["iterations"] = std::move(iters);
    doc["result"] = arith.format(run.value);
    return doc;
}

template <class S, ArithModel A>
nlohmann::json inv_trace_json(const InvRun<S>& run, std::size_t n, const A& arith) {
    nlohmann::json doc;
    doc["algorithm"] = "inv";
    doc["n"] = n;
    nlohmann::json iters = nlohmann::json::array();
    for (const auto& step : run.steps) {
        nlohmann::json it;
        it["step"] = step.step;
        it["p"] = step.p + 1;
        it["k"] = step.k + 1;
        it["pivot"] = arith.format(step.value);
        it["sign"] = (step.p + step.k) % 2 == 0 ? 1 : -1;
        nlohmann::json basis = nlohmann::json::array();
        for (const auto& label : step.basis_after) basis.push_back(label.to_string());
        it["basis"] = std::move(basis);
        iters.push_back(std::move(it));
    }
    doc["iterations"] = std::move(iters);
    if (std::holds_alternative<Singular>(run.outcome)) {
        doc["result"] = nlohmann::json{{"singular", true}};
    } else {
        doc["result"] = matrix_json(std::get<Matrix<S>>(run.outcome), arith);
    }
    return doc;
}

}  // namespace pivmat
