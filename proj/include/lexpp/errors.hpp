#pragma once

#include <stdexcept>
#include <string>

namespace lexpp {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Two monomials (or an ideal and a monomial) live in rings with a
/// different number of variables.
class RingMismatchError : public Error {
public:
    explicit RingMismatchError(const std::string& what) : Error(what) {}
};

/// An operation was called with arguments violating its stated
/// preconditions (invalid indices, missing pure power, non-lex
/// component, containment hypothesis not satisfied, ...).
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

/// A truncated computation cannot certify its result: a minimal
/// generator was detected in the top two tracked degrees.  Callers
/// retry with a larger truncation degree.
class TruncationError : public Error {
public:
    explicit TruncationError(const std::string& what) : Error(what) {}
};

/// A graded monomial space that was expected to be an ideal is not
/// closed under multiplication by the variables.
class ClosureError : public Error {
public:
    explicit ClosureError(const std::string& what) : Error(what) {}
};

/// A transformation produced an output whose Hilbert function differs
/// from the input's.  This signals that the operation's hypotheses do
/// not hold for the given arguments (or a bug).
class HypothesisError : public Error {
public:
    explicit HypothesisError(const std::string& what) : Error(what) {}
};

/// A transformation step decreased a graded Betti number while
/// auditing was enabled.  Carries a full description of the offending
/// step; this is a counterexample-grade event.
class MonotonicityError : public Error {
public:
    explicit MonotonicityError(const std::string& what) : Error(what) {}
};

/// The stabilization pipeline exhausted its step budget (or reached a
/// fixed point without the target property).  Carries the last ideal
/// and the step log rendered as text.
class StepCapError : public Error {
public:
    explicit StepCapError(const std::string& what) : Error(what) {}
};

/// Input text could not be parsed.  Message includes the line number.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace lexpp
