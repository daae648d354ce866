#ifndef POLYCONE_ERRORS_HPP
#define POLYCONE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polycone {

/// Shapes of two operands (or an operand and an operation) do not fit together.
class DimensionError : public std::invalid_argument {
public:
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// A documented precondition of an operation was violated by the caller.
class ContractError : public std::logic_error {
public:
    explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

/// A value-level input check failed (e.g. a point claimed to lie in a cone does not).
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Subdeterminant enumeration would exceed the configured cap.
class EnumerationLimitError : public std::runtime_error {
public:
    EnumerationLimitError(const std::string& what, unsigned long long required, unsigned long long cap)
        : std::runtime_error(what), required_(required), cap_(cap) {}
    unsigned long long required() const { return required_; }
    unsigned long long cap() const { return cap_; }

private:
    unsigned long long required_;
    unsigned long long cap_;
};

/// The double description oracle refused an instance above its size limits.
class OracleUnavailableError : public std::runtime_error {
public:
    explicit OracleUnavailableError(const std::string& what) : std::runtime_error(what) {}
};

/// Text input could not be parsed; carries a 1-based source position.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                             ": " + message),
          line_(line), column_(column), message_(message) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& message() const { return message_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

} // namespace polycone

#endif
