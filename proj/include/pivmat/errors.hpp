#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pivmat {

// Base for all recoverable pivmat errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed matrix or script input; carries the 1-based source position.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error("parse error at line " + std::to_string(line) + ", column " +
                std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// A scripted pivot that cannot be played (exhausted script, out-of-range
// position, or zero pivot). Names the offending 1-based step.
class ScriptedPivotError : public Error {
public:
    ScriptedPivotError(std::size_t step, const std::string& what)
        : Error("scripted pivot, step " + std::to_string(step) + ": " + what),
          step_(step) {}

    std::size_t step() const { return step_; }

private:
    std::size_t step_;
};

// Oracle order guards (factorial-cost routines refuse large inputs).
class OracleGuardError : public Error {
public:
    using Error::Error;
};

// Precondition violation inside the library: an engine or strategy bug, not
// a user input problem. Thrown instead of aborting so tests can observe it.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void contract(bool condition, const char* what) {
    if (!condition) throw ContractViolation(what);
}

}  // namespace pivmat
