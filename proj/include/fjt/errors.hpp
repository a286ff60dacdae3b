#ifndef FJT_ERRORS_HPP_
#define FJT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace fjt {

// Every failure raised by the library derives from Error. The CLI maps the
// concrete type to its exit code (2 usage, 3 refusal, 4 internal).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed parameters: bad Cartan type, rank out of bounds, bad tuple.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A well-formed request outside the range where the encoded theorems apply.
class OutOfScope : public Error {
 public:
  using Error::Error;
};

// A zeta argument falls where the profile declines to answer.
class UnsupportedRegion : public OutOfScope {
 public:
  using OutOfScope::OutOfScope;
};

// Numeric evaluation hit a pole of a factor.
class Singularity : public OutOfScope {
 public:
  using OutOfScope::OutOfScope;
};

// A structural invariant failed (Pierce grid, uniqueness of a tower factor).
class InconsistentData : public Error {
 public:
  using Error::Error;
};

}  // namespace fjt

#endif  // FJT_ERRORS_HPP_
