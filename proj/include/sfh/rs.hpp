#pragma once

// Reed-Solomon codes in cyclic form and narrow-sense BCH codes, with
// syndrome computation and Peterson-Gorenstein-Zierler errors-and-erasures
// decoding from the syndrome alone.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sfh/gf.hpp"

namespace sfh {

/// Syndrome values S_j = r(alpha^(fcr + j)), j = 0, 1, ...
struct Syndrome {
  std::vector<Elem> values;

  bool is_zero() const noexcept {
    for (auto v : values) {
      if (v != 0) return false;
    }
    return true;
  }
  bool operator==(const Syndrome&) const = default;
};

/// Decodes syndromes S_j = sum_i e_i X_i^(fcr + j), X_i = alpha^i, over
/// positions 0..n-1. Returns the error vector, or nullopt when no pattern with
/// 2 * errors + erasures <= syndromes.size() reproduces the syndromes.
/// Throws TooManyErasures or IndexOutOfRange on bad erasure sets.
std::optional<std::vector<Elem>> gpz_decode(const ExtField& field, std::size_t n, std::int64_t fcr,
                                            std::span<const Elem> syndromes,
                                            std::span<const std::size_t> erasures = {});

class RsCode {
 public:
  /// RS(n, k) over `field`; n below p^m - 1 gives the shortened code.
  RsCode(FieldPtr field, std::size_t n, std::size_t k, std::int64_t first_consecutive_root = 1);

  const ExtField& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t redundancy() const noexcept { return n_ - k_; }
  std::size_t min_distance() const noexcept { return n_ - k_ + 1; }
  /// floor((n - k) / 2)
  std::size_t t() const noexcept { return (n_ - k_) / 2; }
  std::int64_t first_consecutive_root() const noexcept { return fcr_; }
  bool shortened() const noexcept { return n_ + 1 < field_->order(); }
  const std::vector<Elem>& generator() const noexcept { return generator_; }

  /// Systematic encoding: message in positions n-k..n-1, parity below.
  std::vector<Elem> encode(std::span<const Elem> message) const;
  Syndrome syndrome(std::span<const Elem> word) const;
  std::optional<std::vector<Elem>> decode_syndrome(const Syndrome& s,
                                                   std::span<const std::size_t> erasures = {}) const;
  /// Message symbols of a codeword (the high-order positions).
  std::vector<Elem> message_part(std::span<const Elem> codeword) const;

  std::string spec() const;

 private:
  FieldPtr field_;
  std::size_t n_;
  std::size_t k_;
  std::int64_t fcr_;
  std::vector<Elem> generator_;
};

class BchCode {
 public:
  /// Narrow-sense primitive BCH code of length p^m - 1 and designed
  /// capability design_t, using the built-in modulus for the splitting field.
  BchCode(std::uint32_t p, unsigned m, std::size_t design_t);
  BchCode(FieldPtr splitting_field, std::size_t design_t);

  const ExtField& ext() const noexcept { return *ext_; }
  const PrimeField& base() const noexcept { return ext_->base(); }
  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t design_t() const noexcept { return design_t_; }
  std::size_t syndrome_length() const noexcept { return 2 * design_t_; }
  /// Generator polynomial, coefficients in F_p.
  const std::vector<Elem>& generator() const noexcept { return generator_; }
  /// Cyclotomic cosets (mod n, under multiplication by p) that contribute to
  /// the generator.
  const std::vector<std::vector<std::size_t>>& cosets() const noexcept { return cosets_; }

  std::vector<Elem> encode(std::span<const Elem> message) const;
  /// Throws LengthMismatch or AlphabetMismatch (symbols outside F_p).
  Syndrome syndrome(std::span<const Elem> word) const;
  std::optional<std::vector<Elem>> decode_syndrome(const Syndrome& s) const;

  std::string spec() const;

 private:
  void build();

  FieldPtr ext_;
  std::size_t n_;
  std::size_t k_ = 0;
  std::size_t design_t_;
  std::vector<Elem> generator_;
  std::vector<std::vector<std::size_t>> cosets_;
};

}  // namespace sfh
