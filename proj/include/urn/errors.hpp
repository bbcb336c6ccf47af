#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace urn {

/// Malformed scheme text. Line and column are 1-based; zero when the
/// position is not known (e.g. a semantic error inside a JSON value).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0);
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// A well-formed scheme that violates one of the model invariants.
class InvariantError : public std::runtime_error {
public:
    InvariantError(std::string invariant, const std::string& detail);
    const std::string& invariant() const noexcept { return invariant_; }

private:
    std::string invariant_;
};

class BalanceViolation : public InvariantError {
public:
    BalanceViolation(std::size_t row, std::string realization, long long sum, long long theta);
    std::size_t row() const noexcept { return row_; }
    long long sum() const noexcept { return sum_; }

private:
    std::size_t row_;
    long long sum_;
};

class NegativeBalance : public InvariantError {
public:
    explicit NegativeBalance(long long theta);
};

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace urn
