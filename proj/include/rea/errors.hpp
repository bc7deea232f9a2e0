#pragma once

#include <stdexcept>
#include <string>

namespace rea {

// Base of every error raised by the library. The CLI maps the two
// subclasses below to distinct exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input: malformed text, out-of-range indices, unsupported arguments.
class InputError : public Error {
 public:
  using Error::Error;
};

// An exact check failed, i.e. an identity that should hold does not.
class VerificationError : public Error {
 public:
  using Error::Error;
};

#define REA_DEFINE_ERROR(Name, Base)       \
  class Name : public Base {               \
   public:                                 \
    explicit Name(const std::string& what) \
        : Base(#Name ": " + what) {}       \
  };

REA_DEFINE_ERROR(ParseError, InputError)
REA_DEFINE_ERROR(PoleAtPoint, InputError)
REA_DEFINE_ERROR(PoleAtOne, InputError)
REA_DEFINE_ERROR(DivisionByZero, InputError)
REA_DEFINE_ERROR(PositionOutOfRange, InputError)
REA_DEFINE_ERROR(IndexOutOfRange, InputError)
REA_DEFINE_ERROR(StrandMismatch, InputError)
REA_DEFINE_ERROR(InvolutiveUnsupported, InputError)
REA_DEFINE_ERROR(ZeroSymmetrizer, InputError)
REA_DEFINE_ERROR(NotSkewInvertible, VerificationError)
REA_DEFINE_ERROR(NotInSpan, VerificationError)
REA_DEFINE_ERROR(NotPolynomial, VerificationError)
REA_DEFINE_ERROR(RepresentationCheckFailed, VerificationError)
REA_DEFINE_ERROR(NotScalar, VerificationError)
REA_DEFINE_ERROR(CharacterMismatch, VerificationError)
REA_DEFINE_ERROR(AxiomViolation, VerificationError)
REA_DEFINE_ERROR(NotCentral, VerificationError)
REA_DEFINE_ERROR(FormMismatch, VerificationError)

#undef REA_DEFINE_ERROR

// Resource error: a computation needs a larger degree bound than supplied.
class DegreeBoundExceeded : public Error {
 public:
  DegreeBoundExceeded(int needed, int bound)
      : Error("DegreeBoundExceeded: degree " + std::to_string(needed) +
              " exceeds bound " + std::to_string(bound)),
        needed_(needed),
        bound_(bound) {}
  int needed() const { return needed_; }
  int bound() const { return bound_; }

 private:
  int needed_;
  int bound_;
};

}  // namespace rea
