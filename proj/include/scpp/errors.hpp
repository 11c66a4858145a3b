#ifndef SCPP_ERRORS_HPP
#define SCPP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace scpp
{

/// Base of every error raised by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// The input does not satisfy the promise an operation relies on
/// (odd permutation handed to the commutator solver, non n-cycle handed to
/// the conjugator, nonzero exponent sum, ...).
class PromiseViolation : public Error
{
public:
  explicit PromiseViolation(std::string const &what)
  : Error("promise violated: " + what)
  {}
};

/// Syntactically or structurally invalid input: letters out of range,
/// non-bijective image arrays, unparsable wire strings.
class MalformedInput : public Error
{
public:
  using Error::Error;
};

/// A postcondition the library checks on its own output failed. Seeing one
/// of these means there is a bug in the library.
class InvariantBreach : public Error
{
public:
  explicit InvariantBreach(std::string const &what)
  : Error("internal invariant breached: " + what)
  {}
};

/// Knuth-Bendix completion hit its rule-addition cap.
class CompletionDiverged : public Error
{
public:
  using Error::Error;
};

} // namespace scpp

#endif // SCPP_ERRORS_HPP
