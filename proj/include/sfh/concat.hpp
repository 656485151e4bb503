#pragma once

// Concatenated codes with identical inner codes over F_p, an outer RS code
// over F_{p^k}, two-step decoding, and the interleaving arrays IV, V and VI.

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sfh/construction.hpp"
#include "sfh/rs.hpp"

namespace sfh {

/// A systematic q-ary inner code with a linear syndrome map.
class InnerCode {
 public:
  virtual ~InnerCode() = default;

  virtual std::size_t n() const = 0;
  virtual std::size_t k() const = 0;
  /// Errors corrected per block.
  virtual std::size_t t() const = 0;
  virtual std::uint32_t characteristic() const = 0;
  virtual std::vector<std::uint32_t> syndrome_orders() const = 0;

  virtual std::vector<Elem> encode(std::span<const Elem> digits) const = 0;
  virtual std::vector<Elem> syndrome(std::span<const Elem> block) const = 0;
  /// The k positions that carry the message digits.
  virtual std::vector<Elem> message_part(std::span<const Elem> block) const = 0;
  /// Block error pattern with at most t() errors matching the syndrome.
  virtual std::optional<std::vector<Elem>> decode(std::span<const Elem> syndrome) const = 0;
  /// The unique block whose message part is `digits` and whose syndrome is
  /// `syndrome`, if one exists.
  virtual std::optional<std::vector<Elem>> reconstruct(std::span<const Elem> digits,
                                                       std::span<const Elem> syndrome) const = 0;
  virtual std::string spec() const = 0;
};

/// Pass-through inner code (n = k, t = 0).
class IdentityInner final : public InnerCode {
 public:
  IdentityInner(std::uint32_t p, std::size_t k);

  std::size_t n() const override { return k_; }
  std::size_t k() const override { return k_; }
  std::size_t t() const override { return 0; }
  std::uint32_t characteristic() const override { return p_; }
  std::vector<std::uint32_t> syndrome_orders() const override { return {}; }
  std::vector<Elem> encode(std::span<const Elem> digits) const override;
  std::vector<Elem> syndrome(std::span<const Elem>) const override { return {}; }
  std::vector<Elem> message_part(std::span<const Elem> block) const override;
  std::optional<std::vector<Elem>> decode(std::span<const Elem> syndrome) const override;
  std::optional<std::vector<Elem>> reconstruct(std::span<const Elem> digits,
                                               std::span<const Elem> syndrome) const override;
  std::string spec() const override;

 private:
  std::uint32_t p_;
  std::size_t k_;
};

/// Narrow-sense BCH inner code; the message sits in the high-order positions.
class BchInner final : public InnerCode {
 public:
  explicit BchInner(BchCode code);

  const BchCode& code() const noexcept { return code_; }
  std::size_t n() const override { return code_.n(); }
  std::size_t k() const override { return code_.k(); }
  std::size_t t() const override { return code_.design_t(); }
  std::uint32_t characteristic() const override { return code_.ext().characteristic(); }
  std::vector<std::uint32_t> syndrome_orders() const override;
  std::vector<Elem> encode(std::span<const Elem> digits) const override;
  std::vector<Elem> syndrome(std::span<const Elem> block) const override;
  std::vector<Elem> message_part(std::span<const Elem> block) const override;
  std::optional<std::vector<Elem>> decode(std::span<const Elem> syndrome) const override;
  std::optional<std::vector<Elem>> reconstruct(std::span<const Elem> digits,
                                               std::span<const Elem> syndrome) const override;
  std::string spec() const override { return code_.spec(); }

 private:
  BchCode code_;
  ModPSolver parity_solver_;  // syndrome digits -> parity-position values
};

/// The companion-matrix encoding F_{p^m} -> F_p^{m x m} (row-major), with the
/// first column as message part and the deviation from F_p[P] as syndrome.
/// Corrects nothing itself (t = 0).
class CompanionInner final : public InnerCode {
 public:
  explicit CompanionInner(FieldPtr field);

  const ExtField& field() const noexcept { return *field_; }
  std::size_t n() const override { return m_ * m_; }
  std::size_t k() const override { return m_; }
  std::size_t t() const override { return 0; }
  std::uint32_t characteristic() const override { return field_->characteristic(); }
  std::vector<std::uint32_t> syndrome_orders() const override;
  std::vector<Elem> encode(std::span<const Elem> digits) const override;
  std::vector<Elem> syndrome(std::span<const Elem> block) const override;
  std::vector<Elem> message_part(std::span<const Elem> block) const override;
  std::optional<std::vector<Elem>> decode(std::span<const Elem> syndrome) const override;
  std::optional<std::vector<Elem>> reconstruct(std::span<const Elem> digits,
                                               std::span<const Elem> syndrome) const override;
  std::string spec() const override;

 private:
  FieldPtr field_;
  std::size_t m_;
};

enum class LayoutKind { Flat, IV, V, VI };

struct Layout {
  LayoutKind kind = LayoutKind::Flat;
  std::size_t a = 0;
  std::size_t b = 0;

  static Layout flat() { return {LayoutKind::Flat, 0, 0}; }
  static Layout iv(std::size_t a, std::size_t b) { return {LayoutKind::IV, a, b}; }
  static Layout v(std::size_t a, std::size_t b) { return {LayoutKind::V, a, b}; }
  static Layout vi() { return {LayoutKind::VI, 0, 0}; }
};

/// What happens to blocks whose inner decode fails.
enum class InnerFailurePolicy { CountAsError, Erasure };

struct ConcatDecodeReport {
  std::optional<Grid> error;
  /// Blocks whose inner decode failed (0-based block index).
  std::vector<bool> inner_failed;
  /// Blocks the outer decoder had to change (0-based).
  std::vector<std::size_t> outer_error_positions;
};

struct Rect {
  std::size_t rows = 0;
  std::size_t cols = 0;
  bool operator==(const Rect&) const = default;
};

/// One maximal rectangle of the Construction V bound.
struct VRectangle {
  std::size_t s1 = 0;
  std::size_t s2 = 0;
  Rect rect;
};

class ConcatCode final : public Construction {
 public:
  ConcatCode(std::shared_ptr<const InnerCode> inner, RsCode outer, Layout layout,
             InnerFailurePolicy policy = InnerFailurePolicy::CountAsError);

  const InnerCode& inner() const noexcept { return *inner_; }
  const RsCode& outer() const noexcept { return outer_; }
  Layout layout() const noexcept { return layout_; }
  InnerFailurePolicy policy() const noexcept { return policy_; }
  /// Outer capability s.
  std::size_t outer_t() const noexcept { return outer_.t(); }

  /// 1-based (inner code i, position p) to 0-based (row, col).
  /// Throws IndexOutOfRange.
  std::pair<std::size_t, std::size_t> layout_index(std::size_t i, std::size_t p) const;

  std::string spec() const override;
  std::uint32_t characteristic() const override { return inner_->characteristic(); }
  Shape shape() const override { return shape_; }
  std::size_t dimension() const override { return outer_.k() * inner_->k(); }
  std::vector<std::uint32_t> syndrome_orders() const override;
  /// N inner syndromes followed by the outer syndrome of the blocks' message
  /// parts.
  Syndrome syndrome(const Grid& word) const override;
  std::optional<Grid> decode(const Syndrome& s) const override { return decode_detailed(s).error; }
  ConcatDecodeReport decode_detailed(const Syndrome& s) const;
  std::size_t message_length() const override { return outer_.k(); }
  std::uint32_t message_order() const override { return outer_.field().order(); }
  Grid encode(std::span<const Elem> message) const override;
  std::vector<std::string> capability_report() const override;
  std::string recommendation() const override;

  /// Flat: bursts strictly shorter than n(s-1)+2t+1 are corrected; returns
  /// that exclusive limit.
  std::size_t flat_burst_limit() const;
  /// IV: t bursts of this size plus s random errors.
  Rect iv_burst() const;
  /// V: maximal rectangles over factor pairs s1 * s2 <= s.
  std::vector<VRectangle> v_rectangles() const;
  /// VI: 1 x n and n x 1 bursts are corrected up to t of them.
  std::pair<Rect, Rect> vi_bursts() const;

  /// Row-major cell index of every (block, position), 0-based.
  std::size_t cell_of(std::size_t block, std::size_t pos) const noexcept { return cells_[block * inner_->n() + pos]; }

 private:
  void require_layout(LayoutKind kind, const char* query) const;

  std::shared_ptr<const InnerCode> inner_;
  RsCode outer_;
  Layout layout_;
  InnerFailurePolicy policy_;
  Shape shape_;
  std::vector<std::size_t> cells_;
};

}  // namespace sfh
