#pragma once

#include <stdexcept>
#include <string>

namespace visagg {

/// Violated precondition or type invariant (caller bug).
struct contract_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed input data; carries a 1-based line and column where known.
struct ingestion_error : std::runtime_error {
    ingestion_error(std::string message, std::size_t line = 0, std::size_t column = 0)
        : std::runtime_error(locate(message, line, column)), line(line), column(column) {}

    std::size_t line;
    std::size_t column;

  private:
    static std::string locate(const std::string& message, std::size_t line, std::size_t column) {
        if (line == 0) return message;
        std::string s = "line " + std::to_string(line);
        if (column != 0) s += ", column " + std::to_string(column);
        return s + ": " + message;
    }
};

/// Numerical solve did not produce an acceptable root.
struct solver_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace visagg
