#pragma once

#include <stdexcept>
#include <string>

namespace trec {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed JSON or a missing/ill-typed field.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Input data violates a model invariant (self-loop, duplicate edge, range).
class InvalidInputError : public Error {
public:
    using Error::Error;
};

/// A configured resource cap (work units, oracle states, solver node cap)
/// would be exceeded. The operation refuses rather than degrading.
class CapExceededError : public Error {
public:
    using Error::Error;
};

/// A snapshot (or static graph) admits no proper 2-colouring.
/// timestep() is 1-based; 0 means the error refers to a static graph.
class NonBipartiteError : public Error {
public:
    explicit NonBipartiteError(const std::string& msg, int timestep = 0)
        : Error(msg), timestep_(timestep) {}

    int timestep() const { return timestep_; }

private:
    int timestep_;
};

}  // namespace trec
