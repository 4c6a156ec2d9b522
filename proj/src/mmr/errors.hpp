#pragma once

#include <stdexcept>
#include <string>

namespace mmr {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class MalformedInstance : public Error {
public:
    using Error::Error;
};

// Format-level failure; carries the 1-based line number of the offending line.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& reason)
        : Error("line " + std::to_string(line) + ": " + reason), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class LambdaOutOfRange : public Error {
public:
    using Error::Error;
};

class InvalidScenario : public Error {
public:
    using Error::Error;
};

class InvalidParams : public Error {
public:
    using Error::Error;
};

class InfeasibleSolution : public Error {
public:
    using Error::Error;
};

class InfeasibleInstance : public Error {
public:
    using Error::Error;
};

class EmptyPool : public Error {
public:
    using Error::Error;
};

// Raised when the decomposition re-derives a pooled cut while the gap is
// still open; indicates a tolerance bug rather than a model property.
class StalledDecomposition : public Error {
public:
    using Error::Error;
};

class NumericalBreakdown : public Error {
public:
    using Error::Error;
};

class UnboundedModel : public Error {
public:
    using Error::Error;
};

class TooLarge : public Error {
public:
    using Error::Error;
};

class ZeroBaseline : public Error {
public:
    using Error::Error;
};

}  // namespace mmr
