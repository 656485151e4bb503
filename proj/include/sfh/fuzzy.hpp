#pragma once

// Syndrome fuzzy hashing: a datum x is represented by (hash(x), Hx). A fresh
// reading y is accepted when decoding Hx - Hy recovers some v with
// hash(y + v) equal to the stored digest.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sfh/construction.hpp"

namespace sfh {

using Bytes = std::vector<std::uint8_t>;

/// Supported identifiers: "sha-256" (default) and "sha-512".
Bytes hash_bytes(std::string_view alg, std::span<const std::uint8_t> data);
std::size_t digest_size(std::string_view alg);

std::string to_hex(std::span<const std::uint8_t> bytes);
/// Throws ParseError on odd length or non-hex characters.
Bytes from_hex(std::string_view hex);

/// Bytes needed to hold any value below `order`, at least 1.
std::size_t symbol_width(std::uint64_t order) noexcept;

/// "gf(p)", ';', rows and cols as 32-bit big-endian, then each symbol
/// row-major as a fixed-width big-endian group.
Bytes canonical_bytes(std::uint32_t p, const Grid& word);

Bytes serialize_syndrome(const Construction& code, const Syndrome& s);
/// Throws LengthMismatch / AlphabetMismatch.
Syndrome parse_syndrome(const Construction& code, std::span<const std::uint8_t> bytes);

struct Template {
  int scheme_version = 1;
  std::string code_spec;
  std::string hash_alg = "sha-256";
  Bytes digest;
  Bytes syndrome;

  /// Line-oriented text: sfh1, code=, hash=, digest=, syndrome=.
  std::string serialize() const;
  /// Throws ParseError on malformed or truncated input.
  static Template parse(std::string_view text);

  bool operator==(const Template&) const = default;
};

/// Throws ShapeMismatch / AlphabetMismatch / UnsupportedHash.
Template enroll(const Grid& x, const Construction& code, std::string_view hash_alg = "sha-256");

enum class VerifyStatus { Accept, DecodeFailure, HashMismatch };

struct VerifyResult {
  VerifyStatus status = VerifyStatus::DecodeFailure;
  std::optional<Grid> recovered;

  bool accepted() const noexcept { return status == VerifyStatus::Accept; }
};

const char* status_name(VerifyStatus status) noexcept;

/// Checks the template against `code` (spec, digest and syndrome lengths)
/// and throws on inconsistency; otherwise never throws for a well-shaped y.
VerifyResult verify(const Grid& y, const Template& t, const Construction& code);
/// Parses t.code_spec first.
VerifyResult verify(const Grid& y, const Template& t);

}  // namespace sfh
