#ifndef PFMED_ERROR_HPP
#define PFMED_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pfmed {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad input data: unreadable files, malformed points, invalid fronts.
class DataError : public Error {
public:
    using Error::Error;
};

/// A caller passed an argument outside an operation's domain.
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// A solver refused to run (size guards, cluster count out of range).
class GuardError : public Error {
public:
    using Error::Error;
};

class EmptyInput : public DataError {
public:
    EmptyInput() : DataError("empty input: at least one point is required") {}
};

class NonFinitePoint : public DataError {
public:
    explicit NonFinitePoint(std::size_t index)
        : DataError("point " + std::to_string(index) + " has a non-finite coordinate"), index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// Two input points (positions in the caller's sequence) that are not
/// mutually incomparable.
class NotAParetoFront : public DataError {
public:
    NotAParetoFront(std::size_t first, std::size_t second)
        : DataError("not a Pareto front: input points " + std::to_string(first) + " and " +
                    std::to_string(second) + " are not mutually incomparable"),
          first_(first), second_(second) {}
    std::size_t first() const noexcept { return first_; }
    std::size_t second() const noexcept { return second_; }

private:
    std::size_t first_;
    std::size_t second_;
};

class ParseError : public DataError {
public:
    ParseError(std::size_t line, const std::string& what)
        : DataError("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class IoError : public DataError {
public:
    using DataError::DataError;
};

class NonPositiveAlpha : public ArgumentError {
public:
    explicit NonPositiveAlpha(double alpha)
        : ArgumentError("alpha must be a positive finite real, got " + std::to_string(alpha)) {}
};

class IndexOutOfRange : public ArgumentError {
public:
    using ArgumentError::ArgumentError;
};

class InvalidBound : public ArgumentError {
public:
    using ArgumentError::ArgumentError;
};

class MalformedPartition : public ArgumentError {
public:
    using ArgumentError::ArgumentError;
};

class KOutOfRange : public GuardError {
public:
    KOutOfRange(std::size_t k, std::size_t n)
        : GuardError("cluster count k=" + std::to_string(k) + " must satisfy 1 <= k <= n=" +
                     std::to_string(n)) {}
};

class TooFewPoints : public GuardError {
public:
    using GuardError::GuardError;
};

class TooManyCandidates : public GuardError {
public:
    using GuardError::GuardError;
};

class InstanceTooLarge : public GuardError {
public:
    using GuardError::GuardError;
};

}  // namespace pfmed

#endif  // PFMED_ERROR_HPP
