#pragma once

#include <stdexcept>
#include <string>

namespace netrate {

/// Malformed input text (files, rational literals). Messages carry
/// file:line context where available.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A domain invariant was violated at construction time
/// (empty voter set, customer with no visible voter, ...).
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// An operation was called outside its contract (budget violation,
/// overlapping composition, greedy restriction of a voter, ...).
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// The exhaustive search space exceeds the configured cap. There is no
/// silent fallback to sampling.
struct EnumerationCapError : std::runtime_error {
    explicit EnumerationCapError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace netrate
