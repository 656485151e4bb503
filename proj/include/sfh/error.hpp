#pragma once

#include <stdexcept>
#include <string>

namespace sfh {

enum class Errc {
  NotPrime,
  ReducibleModulus,
  NoDefaultModulus,
  NonPrimitiveAlpha,
  DivisionByZero,
  NotInAlgebra,
  LengthMismatch,
  AlphabetMismatch,
  TooManyErasures,
  CapacityTooLarge,
  ShapeMismatch,
  ShapeUnsupported,
  IndexOutOfRange,
  QueryUnsupported,
  UnsupportedHash,
  OutOfRange,
  PlacementFailed,
  InvalidArgument,
  ParseError,
};

const char* errc_name(Errc code) noexcept;

/// Thrown for contract violations. Decoding failures are not errors and are
/// reported through std::optional instead.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace sfh
