#include "pivmat/strategies.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace pivmat {

Scripted Scripted::parse(std::istream& in) {
    std::vector<std::pair<std::size_t, std::size_t>> steps;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t i = 0;
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i == line.size() || line[i] == '#') continue;
        std::istringstream ls(line);
        long p = 0, k = 0;
        std::string trailing;
        if (!(ls >> p >> k) || (ls >> trailing) || p < 1 || k < 1)
            throw ParseError(lineno, 1, "expected one 1-based 'p k' pair, got '" + line + "'");
        steps.emplace_back(static_cast<std::size_t>(p - 1), static_cast<std::size_t>(k - 1));
    }
    return Scripted(std::move(steps));
}

StrategyVariant make_strategy(std::string_view name) {
    if (name == "first-nonzero") return FirstNonzero{};
    if (name == "row-max") return RowMaxMagnitude{};
    if (name == "global-max") return GlobalMaxMagnitude{};
    constexpr std::string_view prefix = "scripted:";
    if (name.starts_with(prefix)) {
        std::string path(name.substr(prefix.size()));
        std::ifstream in(path);
        if (!in) throw Error("cannot open script file '" + path + "'");
        return Scripted::parse(in);
    }
    throw std::invalid_argument("unknown strategy '" + std::string(name) +
                                "' (expected first-nonzero, row-max, global-max, or scripted:<file>)");
}

}  // namespace pivmat
