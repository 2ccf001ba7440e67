#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace excessive {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text (graph6, edge list, CAT notation).
struct ParseError : Error {
    using Error::Error;
};

// Structurally invalid graph: loop, duplicate edge, disconnected, over capacity.
struct ValidationError : Error {
    using Error::Error;
};

// An operation that only makes sense on trees got a non-tree.
struct NotATreeError : Error {
    using Error::Error;
};

// Some edge lies in no m-matching, so no finite cover exists.
struct NotCoverableError : Error {
    using Error::Error;
};

// Caller violated a documented precondition (bad class sizes, bad m, ...).
struct PreconditionError : Error {
    using Error::Error;
};

// The exact search ran out of its node budget. Carries what was proven so far:
// every cover size below proven_lower was exhausted without success.
struct BudgetExceededError : Error {
    int proven_lower;
    BudgetExceededError(const std::string& msg, int lower) : Error(msg), proven_lower(lower) {}
};

// A built-in construction failed its own self-checks. Should never happen.
struct ReconstructionError : Error {
    using Error::Error;
};

}  // namespace excessive
