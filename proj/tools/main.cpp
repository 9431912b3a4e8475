#include <cstddef>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "CLI11.hpp"

#include "pivmat/arith.hpp"
#include "pivmat/bench.hpp"
#include "pivmat/det.hpp"
#include "pivmat/dict.hpp"
#include "pivmat/errors.hpp"
#include "pivmat/matrix.hpp"
#include "pivmat/matrix_io.hpp"
#include "pivmat/oracle.hpp"
#include "pivmat/strategies.hpp"
#include "pivmat/trace_json.hpp"

namespace {

using namespace pivmat;

constexpr int kExitOk = 0;
constexpr int kExitSingular = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitMismatch = 4;

struct CmdOpts {
    std::string input;
    std::string arith = "exact";
    std::string strategy = "first-nonzero";
    double epsilon = kDefaultZeroTolerance;
    bool oracle = false;
    std::string algorithm = "det";  // trace: det|inv; validate: det|inv|both
    std::string format = "text";
    std::string orders = "2..6";
};

template <ArithModel A>
Matrix<typename A::Scalar> load_matrix(const std::string& path, const A& arith) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open input file: " + path);
    return parse_matrix(in, arith);
}

std::string lpad(const std::string& s, std::size_t w) {
    return s.size() >= w ? s : std::string(w - s.size(), ' ') + s;
}

/// Aligned display of a matrix, optionally with row/column label headers.
template <ArithModel A>
std::string grid_text(const Matrix<typename A::Scalar>& m,
                      const std::vector<std::string>& row_heads,
                      const std::vector<std::string>& col_heads, const A& arith) {
    const std::size_t n = m.order();
    std::vector<std::vector<std::string>> cells(n, std::vector<std::string>(n));
    std::vector<std::size_t> width(n, 0);
    for (std::size_t j = 0; j < n; ++j)
        if (!col_heads.empty()) width[j] = col_heads[j].size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            cells[i][j] = arith.format(m.at(i, j));
            if (cells[i][j].size() > width[j]) width[j] = cells[i][j].size();
        }
    std::size_t head_w = 0;
    for (const auto& h : row_heads)
        if (h.size() > head_w) head_w = h.size();

    std::ostringstream out;
    if (!col_heads.empty()) {
        out << "  " << std::string(head_w, ' ');
        for (std::size_t j = 0; j < n; ++j) out << ' ' << lpad(col_heads[j], width[j]);
        out << '\n';
    }
    for (std::size_t i = 0; i < n; ++i) {
        out << "  ";
        if (!row_heads.empty()) out << lpad(row_heads[i], head_w);
        else if (head_w) out << std::string(head_w, ' ');
        for (std::size_t j = 0; j < n; ++j) out << ' ' << lpad(cells[i][j], width[j]);
        out << '\n';
    }
    return out.str();
}

StrategyVariant strategy_or_usage(const std::string& name) {
    return make_strategy(name);  // invalid names raise invalid_argument -> exit 2
}

template <ArithModel A>
int cmd_det(const CmdOpts& o, const A& arith) {
    const auto m = load_matrix(o.input, arith);
    auto strategy = strategy_or_usage(o.strategy);
    const auto value =
        std::visit([&](auto& s) { return determinant(m, s, arith); }, strategy);
    if (o.oracle) {
        if constexpr (!A::exact) {
            throw std::invalid_argument("--oracle requires --arith exact");
        } else {
            const Rational reference = oracle::laplace_det(m);
            if (!(reference == value)) {
                std::cerr << "oracle mismatch: engine " << arith.format(value) << ", oracle "
                          << reference.to_string() << "\n";
                return kExitMismatch;
            }
        }
    }
    std::cout << arith.format(value) << "\n";
    return kExitOk;
}

template <ArithModel A>
int cmd_inv(const CmdOpts& o, const A& arith) {
    const auto m = load_matrix(o.input, arith);
    auto strategy = strategy_or_usage(o.strategy);
    auto outcome = std::visit([&](auto& s) { return inverse(m, s, arith); }, strategy);
    const bool singular = std::holds_alternative<Singular>(outcome);

    if (o.oracle) {
        if constexpr (!A::exact) {
            throw std::invalid_argument("--oracle requires --arith exact");
        } else {
            const auto reference = oracle::adjugate_inverse(m);
            const bool agree = reference.has_value() != singular &&
                               (singular || *reference == std::get<Matrix<Rational>>(outcome));
            if (!agree) {
                std::cerr << "oracle mismatch on " << o.input << "\n";
                return kExitMismatch;
            }
        }
    }
    if (singular) {
        const auto& s = std::get<Singular>(outcome);
        std::cerr << "row " << s.row_pos + 1 << " (" << s.label.to_string()
                  << ") has no admissible pivot\n";
        std::cout << "singular\n";
        return kExitSingular;
    }
    write_matrix(std::cout, std::get<Matrix<typename A::Scalar>>(outcome), arith);
    return kExitOk;
}

template <ArithModel A>
int cmd_trace_det(const CmdOpts& o, const A& arith) {
    const auto m = load_matrix(o.input, arith);
    auto strategy = strategy_or_usage(o.strategy);
    const bool text = o.format == "text";
    const auto run = std::visit(
        [&](auto& s) { return determinant_trace(m, s, arith, text); }, strategy);

    if (!text) {
        std::cout << det_trace_json(run, m.order(), arith).dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "determinant trace: n = " << m.order() << ", strategy = " << o.strategy
              << ", arithmetic = " << A::name() << "\n";
    for (const auto& step : run.steps) {
        if (!step.pivot) {
            std::cout << "step " << step.step
                      << ": no admissible pivot (a remaining active row is zero)\n";
            break;
        }
        const auto& r = *step.pivot;
        std::cout << "step " << step.step << ": pivot (" << r.p + 1 << "," << r.k + 1 << ") = "
                  << arith.format(r.value) << " [original entry (" << r.row_label << ","
                  << r.col_label << ")], sign " << (r.sign > 0 ? "+1" : "-1") << ", d = "
                  << arith.format(r.d_after) << "\n";
        std::cout << "active dim " << step.stats.active_dim << " (base buffer "
                  << step.stats.base_entry_capacity << " entries)\n";
        if (step.snapshot) std::cout << grid_text(*step.snapshot, {}, {}, arith);
    }
    std::cout << "determinant = " << arith.format(run.value) << "\n";
    return kExitOk;
}

template <ArithModel A>
int cmd_trace_inv(const CmdOpts& o, const A& arith) {
    const auto m = load_matrix(o.input, arith);
    auto strategy = strategy_or_usage(o.strategy);
    const bool text = o.format == "text";
    const auto run =
        std::visit([&](auto& s) { return inverse_trace(m, s, arith, text); }, strategy);
    const bool singular = std::holds_alternative<Singular>(run.outcome);

    if (!text) {
        std::cout << inv_trace_json(run, m.order(), arith).dump(2) << "\n";
        return singular ? kExitSingular : kExitOk;
    }
    std::cout << "inverse trace: n = " << m.order() << ", strategy = " << o.strategy
              << ", arithmetic = " << A::name() << "\n";
    for (const auto& step : run.steps) {
        std::cout << "step " << step.step << ": pivot (" << step.p + 1 << "," << step.k + 1
                  << ") = " << arith.format(step.value) << "; " << step.entering.to_string()
                  << " enters, " << step.leaving.to_string() << " leaves\n";
        if (step.snapshot) {
            std::vector<std::string> row_heads, col_heads;
            for (const auto& l : step.basis_after) row_heads.push_back(l.to_string());
            for (const auto& l : step.nonbasis_after) col_heads.push_back(l.to_string());
            std::cout << grid_text(*step.snapshot, row_heads, col_heads, arith);
        }
    }
    if (singular) {
        const auto& s = std::get<Singular>(run.outcome);
        std::cout << "singular: row " << s.row_pos + 1 << " (" << s.label.to_string()
                  << ") has no admissible pivot\n";
        return kExitSingular;
    }
    std::cout << "inverse:\n";
    write_matrix(std::cout, std::get<Matrix<typename A::Scalar>>(run.outcome), arith);
    return kExitOk;
}

std::pair<std::size_t, std::size_t> parse_orders(const std::string& s) {
    const auto is_digits = [](std::string_view v) {
        return !v.empty() && v.size() <= 4 &&
               v.find_first_not_of("0123456789") == std::string_view::npos;
    };
    const auto dots = s.find("..");
    std::string lo = dots == std::string::npos ? s : s.substr(0, dots);
    std::string hi = dots == std::string::npos ? s : s.substr(dots + 2);
    if (!is_digits(lo) || !is_digits(hi))
        throw std::invalid_argument("--orders must be N or N..M with integer orders");
    return {std::stoul(lo), std::stoul(hi)};
}

int cmd_bench(const CmdOpts& o, const std::string& family, bool arith_given,
              bool strategy_given) {
    bench::BenchOptions opts;
    opts.family = family;
    std::tie(opts.order_lo, opts.order_hi) = parse_orders(o.orders);
    if (strategy_given) opts.strategies = {o.strategy};
    if (arith_given) opts.modes = {o.arith};
    opts.zero_tolerance = o.epsilon;

    const auto cells = bench::run_bench(opts);
    if (o.format == "json")
        std::cout << bench::bench_json(cells).dump(2) << "\n";
    else
        std::cout << bench::bench_table(cells);
    return kExitOk;
}

int cmd_validate(const CmdOpts& o) {
    const ExactArith arith;
    const auto m = load_matrix(o.input, arith);
    const bool do_det = o.algorithm == "det" || o.algorithm == "both";
    const bool do_inv = o.algorithm == "inv" || o.algorithm == "both";
    bool all_agree = true;

    if (do_det) {
        auto strategy = strategy_or_usage(o.strategy);
        const Rational engine =
            std::visit([&](auto& s) { return determinant(m, s, arith); }, strategy);
        const Rational reference = oracle::laplace_det(m);
        const bool agree = engine == reference;
        all_agree = all_agree && agree;
        std::cout << "det engine: " << engine.to_string() << "\n";
        std::cout << "det oracle: " << reference.to_string() << "\n";
        std::cout << "det: " << (agree ? "agree" : "disagree") << "\n";
    }
    if (do_inv) {
        auto strategy = strategy_or_usage(o.strategy);
        auto outcome = std::visit([&](auto& s) { return inverse(m, s, arith); }, strategy);
        const auto reference = oracle::adjugate_inverse(m);
        const bool engine_singular = std::holds_alternative<Singular>(outcome);

        std::cout << "inv engine:";
        if (engine_singular) std::cout << " singular\n";
        else std::cout << "\n" << format_matrix(std::get<Matrix<Rational>>(outcome), arith);
        std::cout << "inv oracle:";
        if (!reference) std::cout << " singular\n";
        else std::cout << "\n" << format_matrix(*reference, arith);

        const bool agree = engine_singular == !reference.has_value() &&
                           (engine_singular || std::get<Matrix<Rational>>(outcome) == *reference);
        all_agree = all_agree && agree;
        std::cout << "inv: " << (agree ? "agree" : "disagree") << "\n";
    }
    return all_agree ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pivot-style exact and floating-point determinant/inverse toolkit"};
    app.require_subcommand(1);
    CmdOpts o;

    const auto add_arith = [&](CLI::App* cmd) {
        cmd->add_option("--arith", o.arith, "arithmetic mode")
            ->check(CLI::IsMember({"exact", "float"}));
    };
    const auto add_strategy = [&](CLI::App* cmd) {
        cmd->add_option("--strategy", o.strategy,
                        "first-nonzero | row-max | global-max | scripted:<file>");
    };
    const auto add_epsilon = [&](CLI::App* cmd) {
        cmd->add_option("--epsilon", o.epsilon, "float-mode zero tolerance");
    };

    auto* det_cmd = app.add_subcommand("det", "determinant of a matrix file");
    det_cmd->add_option("input", o.input, "matrix file")->required();
    add_arith(det_cmd);
    add_strategy(det_cmd);
    add_epsilon(det_cmd);
    det_cmd->add_flag("--oracle", o.oracle, "cross-check against the slow reference (exact mode)");

    auto* inv_cmd = app.add_subcommand("inv", "inverse of a matrix file");
    inv_cmd->add_option("input", o.input, "matrix file")->required();
    add_arith(inv_cmd);
    add_strategy(inv_cmd);
    add_epsilon(inv_cmd);
    inv_cmd->add_flag("--oracle", o.oracle, "cross-check against the slow reference (exact mode)");

    auto* trace_cmd = app.add_subcommand("trace", "step-by-step run of either algorithm");
    trace_cmd->add_option("input", o.input, "matrix file")->required();
    trace_cmd->add_option("--algorithm", o.algorithm, "det | inv")
        ->check(CLI::IsMember({"det", "inv"}));
    trace_cmd->add_option("--format", o.format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
    add_arith(trace_cmd);
    add_strategy(trace_cmd);
    add_epsilon(trace_cmd);

    std::string family;
    auto* bench_cmd = app.add_subcommand("bench", "inversion benchmark over a matrix family");
    bench_cmd->add_option("family", family, "hilbert | random-int | rank-deficient")->required();
    bench_cmd->add_option("--orders", o.orders, "order range N..M (default 2..6)");
    bench_cmd->add_option("--format", o.format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
    add_arith(bench_cmd);
    add_strategy(bench_cmd);
    add_epsilon(bench_cmd);

    auto* validate_cmd = app.add_subcommand("validate", "engine vs oracle agreement report");
    validate_cmd->add_option("input", o.input, "matrix file")->required();
    validate_cmd->add_option("--algorithm", o.algorithm, "det | inv | both")
        ->check(CLI::IsMember({"det", "inv", "both"}));
    add_arith(validate_cmd);
    add_strategy(validate_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        const bool is_float = o.arith == "float";
        const auto epsilon_given = [&](CLI::App* cmd) { return cmd->count("--epsilon") > 0; };

        if (*det_cmd || *inv_cmd || *trace_cmd) {
            CLI::App* active = *det_cmd ? det_cmd : *inv_cmd ? inv_cmd : trace_cmd;
            if (epsilon_given(active) && !is_float)
                throw std::invalid_argument("--epsilon requires --arith float");
        }

        if (*det_cmd) {
            if (is_float) return cmd_det(o, FloatArith{o.epsilon});
            return cmd_det(o, ExactArith{});
        }
        if (*inv_cmd) {
            if (is_float) return cmd_inv(o, FloatArith{o.epsilon});
            return cmd_inv(o, ExactArith{});
        }
        if (*trace_cmd) {
            if (o.algorithm == "inv") {
                if (is_float) return cmd_trace_inv(o, FloatArith{o.epsilon});
                return cmd_trace_inv(o, ExactArith{});
            }
            if (is_float) return cmd_trace_det(o, FloatArith{o.epsilon});
            return cmd_trace_det(o, ExactArith{});
        }
        if (*bench_cmd) {
            return cmd_bench(o, family, bench_cmd->count("--arith") > 0,
                             bench_cmd->count("--strategy") > 0);
        }
        if (*validate_cmd) {
            if (validate_cmd->count("--arith") > 0 && is_float)
                throw std::invalid_argument("validate runs in exact arithmetic only");
            if (validate_cmd->count("--algorithm") == 0) o.algorithm = "both";
            return cmd_validate(o);
        }
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const ScriptedPivotError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const OracleGuardError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
}
