#pragma once

#include <stdexcept>
#include <string>

namespace boxi {

// Bad caller input: malformed files, out-of-range ids, violated preconditions.
// The CLI maps this to exit code 3.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// A parse failure in one of the text formats; carries a 1-based line number.
struct ParseError : InputError {
    ParseError(int line, const std::string& msg)
        : InputError("line " + std::to_string(line) + ": " + msg), line_number(line) {}
    int line_number;
};

// A search exceeded its work budget. Never a wrong answer: the caller learns
// that the computation was abandoned, not that the answer is "no".
// The CLI maps this to exit code 4.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace boxi
