#pragma once

#include <stdexcept>
#include <string>

namespace homtoric {

/// Input that violates an operation's precondition (bad vertex, wrong graph class, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed text input (graph, poset or basis files, named graph specs).
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured resource cap (search space, monomial count, element count) was hit.
class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. Always a bug, never a math outcome.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace homtoric
