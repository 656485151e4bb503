#include "sfh/error.hpp"

namespace sfh {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::NoDefaultModulus: return "NoDefaultModulus";
    case Errc::NonPrimitiveAlpha: return "NonPrimitiveAlpha";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotInAlgebra: return "NotInAlgebra";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::AlphabetMismatch: return "AlphabetMismatch";
    case Errc::TooManyErasures: return "TooManyErasures";
    case Errc::CapacityTooLarge: return "CapacityTooLarge";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::ShapeUnsupported: return "ShapeUnsupported";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::QueryUnsupported: return "QueryUnsupported";
    case Errc::UnsupportedHash: return "UnsupportedHash";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::PlacementFailed: return "PlacementFailed";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace sfh
