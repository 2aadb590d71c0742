#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace dqa {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text. Carries the 1-based line number of the offending line.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A configured size ceiling was hit. `partial_counts` holds what was counted
/// up to the abort (per dimension, for simplex enumeration).
class GuardExceeded : public Error {
public:
    GuardExceeded(const std::string& message, std::vector<std::size_t> partial_counts = {})
        : Error(message), partial_counts_(std::move(partial_counts)) {}

    const std::vector<std::size_t>& partial_counts() const noexcept { return partial_counts_; }

private:
    std::vector<std::size_t> partial_counts_;
};

/// No simplices of dimension >= q exist, so there is nothing to connect.
class EmptyLevel : public Error {
public:
    using Error::Error;
};

/// Path augmentation failed for every candidate within the retry bound.
class InfeasiblePath : public Error {
public:
    using Error::Error;
};

}  // namespace dqa
