#ifndef KLEINJET_ERRORS_HPP
#define KLEINJET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kleinjet {

/// Operands live in different ambient spaces (or have incompatible shapes).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A precondition on mathematical content failed (e.g. a subspace that should
/// be a subalgebra is not, or a representation is not a homomorphism).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed serialized input. The message names the offending source and
/// JSON pointer.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kleinjet

#endif  // KLEINJET_ERRORS_HPP
