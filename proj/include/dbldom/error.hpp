#pragma once

#include <stdexcept>
#include <string>

namespace dbldom {

enum class Errc {
    InvalidGraph,
    ParseError,
    PreconditionViolated,
    InfeasibleParameter,
    RequiredSetInfeasible,
    GraphTooLargeForOracle,
    EmptyDemand,
    InvalidFamilyParameters,
    OrderTooLargeForExhaustive,
    PairNotApplicable,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

/// Input text that could not be parsed. Line and column are 1-based;
/// column 0 means the whole line.
class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& message)
        : Error(Errc::ParseError, "line " + std::to_string(line) + ", column " +
                                      std::to_string(column) + ": " + message),
          line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace dbldom
