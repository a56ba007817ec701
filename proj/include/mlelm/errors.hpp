#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mlelm {

// Base of every failure the library reports.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad call arguments: shape mismatches, out-of-range indices, invalid config.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// Malformed input text (ARFF files, label lists, prediction files, manifests).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
    ParseError(const std::string& what, std::size_t line)
        : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}

    // 0 when the error is not tied to a specific line.
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_ = 0;
};

// Numeric kernel failures: non-finite values, SVD non-convergence.
class NumericError : public Error {
public:
    using Error::Error;
};

// Filesystem failures.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace mlelm
