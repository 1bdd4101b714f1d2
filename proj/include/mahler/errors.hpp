#pragma once

#include <stdexcept>
#include <string>

namespace mahler {

// Input text does not conform to a grammar.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, std::size_t line = 0, std::size_t column = 0)
        : std::runtime_error(format(msg, line, column)), line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    static std::string format(const std::string& msg, std::size_t line, std::size_t column) {
        if (line == 0) return msg;
        return msg + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")";
    }

    std::size_t line_;
    std::size_t column_;
};

// A precondition of an operation is violated by the supplied data.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal exactness check failed; the input data was inconsistent.
class InconsistencyError : public std::runtime_error {
public:
    explicit InconsistencyError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace mahler
