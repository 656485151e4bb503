#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sfh/grid.hpp"
#include "sfh/rs.hpp"

namespace sfh {

/// A linear code over F_p together with the parity-check map used by the
/// fuzzy template. Implementations are immutable after construction.
class Construction {
 public:
  virtual ~Construction() = default;

  /// Canonical spec string; parse_construction(spec()) rebuilds the same code.
  virtual std::string spec() const = 0;
  virtual std::uint32_t characteristic() const = 0;
  /// Shape of data words over F_p.
  virtual Shape shape() const = 0;
  /// Dimension over F_p.
  virtual std::size_t dimension() const = 0;

  /// Alphabet order of every syndrome component. Each alphabet is F_{p^d} for
  /// some d, so componentwise subtraction is digitwise mod p.
  virtual std::vector<std::uint32_t> syndrome_orders() const = 0;
  /// Linear in `word`; zero exactly on codewords.
  virtual Syndrome syndrome(const Grid& word) const = 0;
  /// Error pattern reproducing `s`, or nullopt.
  virtual std::optional<Grid> decode(const Syndrome& s) const = 0;

  virtual std::size_t message_length() const = 0;
  virtual std::uint32_t message_order() const = 0;
  virtual Grid encode(std::span<const Elem> message) const = 0;

  /// Human-readable guaranteed-capability lines.
  virtual std::vector<std::string> capability_report() const = 0;
  /// When this construction is a good fit.
  virtual std::string recommendation() const = 0;

  std::size_t length() const { return shape().size(); }
  double rate() const { return static_cast<double>(dimension()) / static_cast<double>(length()); }

  /// Throws ShapeMismatch / AlphabetMismatch when `word` is not a data word.
  void check_word(const Grid& word) const;
  /// Throws LengthMismatch / AlphabetMismatch for malformed syndromes.
  void check_syndrome(const Syndrome& s) const;
};

/// a - b digitwise mod p. Valid for any mix of F_{p^d} components.
Elem sub_digits(std::uint32_t p, Elem a, Elem b) noexcept;
Elem add_digits(std::uint32_t p, Elem a, Elem b) noexcept;
Syndrome subtract(std::uint32_t p, const Syndrome& a, const Syndrome& b);

/// A narrow-sense BCH code used directly on words of length n.
class BchConstruction final : public Construction {
 public:
  explicit BchConstruction(BchCode code) : code_(std::move(code)) {}

  const BchCode& code() const noexcept { return code_; }

  std::string spec() const override { return code_.spec(); }
  std::uint32_t characteristic() const override { return code_.ext().characteristic(); }
  Shape shape() const override { return {1, code_.n()}; }
  std::size_t dimension() const override { return code_.k(); }
  std::vector<std::uint32_t> syndrome_orders() const override;
  Syndrome syndrome(const Grid& word) const override;
  std::optional<Grid> decode(const Syndrome& s) const override;
  std::size_t message_length() const override { return code_.k(); }
  std::uint32_t message_order() const override { return characteristic(); }
  Grid encode(std::span<const Elem> message) const override;
  std::vector<std::string> capability_report() const override;
  std::string recommendation() const override;

 private:
  BchCode code_;
};

}  // namespace sfh
