#pragma once

#include <stdexcept>
#include <string>

namespace ff {

/// Base of every domain error raised by the library. `name()` is the stable
/// error identifier printed by the command-line tool.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

#define FF_DEFINE_ERROR(Type)                                             \
  class Type : public Error {                                             \
   public:                                                                \
    explicit Type(const std::string& what) : Error(#Type, what) {}        \
  }

FF_DEFINE_ERROR(NotPrime);
FF_DEFINE_ERROR(ModulusMismatch);
FF_DEFINE_ERROR(DivisionByZero);
FF_DEFINE_ERROR(NotMonic);
FF_DEFINE_ERROR(ConstantPolynomial);
FF_DEFINE_ERROR(ScaleLimitExceeded);
FF_DEFINE_ERROR(DegreeMismatch);
FF_DEFINE_ERROR(FieldMismatch);
FF_DEFINE_ERROR(DegreeNotDividing);
FF_DEFINE_ERROR(OrderMismatch);
FF_DEFINE_ERROR(InternalError);

#undef FF_DEFINE_ERROR

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& reason)
      : Error("ParseError", "at position " + std::to_string(position) + ": " + reason),
        position_(position),
        reason_(reason) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t position_;
  std::string reason_;
};

/// Raised by construct_field when the proposed modulus factors; carries a
/// proper monic factor as witness (formatted text).
class ReduciblePolynomial : public Error {
 public:
  ReduciblePolynomial(const std::string& poly, const std::string& witness)
      : Error("ReduciblePolynomial", poly + " is reducible, divisible by " + witness),
        witness_(witness) {}

  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

}  // namespace ff
