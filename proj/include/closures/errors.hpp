#ifndef CLOSURES_ERRORS_HPP
#define CLOSURES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace closures {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A word mentions a token that is not in the declared alphabet.
struct SymbolError : Error {
    using Error::Error;
};

// Two operands live over different alphabets.
struct AlphabetMismatchError : Error {
    using Error::Error;
};

// Subset construction / configuration exploration passed its state budget.
// Signals a desk-scale limit, not a defect of the input.
struct BudgetExceededError : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(what + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line(line),
          column(column) {}
    std::size_t line;
    std::size_t column;
};

// The two words commute, so no clopen separator exists.
struct CommuteError : Error {
    using Error::Error;
};

// u is a power of v, so no open separator exists.
struct PowerError : Error {
    using Error::Error;
};

struct EqualWordsError : Error {
    using Error::Error;
};

struct EmptyWordError : Error {
    using Error::Error;
};

struct NotClosedError : Error {
    using Error::Error;
};

}  // namespace closures

#endif  // CLOSURES_ERRORS_HPP
