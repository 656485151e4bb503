#pragma once

// Base-field views of a Reed-Solomon code: row-vector expansion (with an
// optional per-symbol parity check), square-tile arrays, and
// companion-matrix arrays.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sfh/construction.hpp"
#include "sfh/rs.hpp"

namespace sfh {

enum class ExpansionKind { RowVector, RowVectorParity, SquareArray, CompanionArray };
enum class BurstShape { OneD, Square };
/// How the parity variant uses its per-block parity syndromes.
enum class ParityMode { Ignore, ErasureAssist };

class ExpandedCode final : public Construction {
 public:
  /// n1, n2 give the tile grid for the array kinds (n1 * n2 == n) and are
  /// ignored by the row-vector kinds.
  ExpandedCode(RsCode rs, ExpansionKind kind, std::size_t n1 = 0, std::size_t n2 = 0);

  const RsCode& rs() const noexcept { return rs_; }
  ExpansionKind kind() const noexcept { return kind_; }
  std::size_t n1() const noexcept { return n1_; }
  std::size_t n2() const noexcept { return n2_; }
  /// Side of the square tile holding one symbol (array kinds).
  std::size_t tile_side() const noexcept { return side_; }
  bool is_array() const noexcept {
    return kind_ == ExpansionKind::SquareArray || kind_ == ExpansionKind::CompanionArray;
  }

  Grid expand(std::span<const Elem> word) const;
  /// Inverse of expand on valid images. Throws NotInAlgebra for a companion
  /// tile outside F_p[P].
  std::vector<Elem> contract(const Grid& base_word) const;
  /// Linear blockwise contraction; companion tiles are read through their
  /// first column.
  std::vector<Elem> project(const Grid& base_word) const;

  /// RS syndrome of the projection followed by the per-block parity sums
  /// (parity variant) or the per-tile deviation from F_p[P] (companion
  /// arrays, row-major inside each tile, first column skipped).
  Syndrome syndrome(const Grid& base_word) const override;
  std::optional<Grid> decode(const Syndrome& s) const override { return decode(s, ParityMode::Ignore); }
  std::optional<Grid> decode(const Syndrome& s, ParityMode mode) const;

  /// Guaranteed length (OneD) or side (Square) for `bursts` bursts; 0 when
  /// nothing is guaranteed. Square needs an array kind (ShapeUnsupported).
  std::size_t capability(std::size_t bursts, BurstShape shape) const;

  std::string spec() const override;
  std::uint32_t characteristic() const override { return rs_.field().characteristic(); }
  Shape shape() const override { return shape_; }
  std::size_t dimension() const override { return rs_.k() * rs_.field().degree(); }
  std::vector<std::uint32_t> syndrome_orders() const override;
  std::size_t message_length() const override { return rs_.k(); }
  std::uint32_t message_order() const override { return rs_.field().order(); }
  Grid encode(std::span<const Elem> message) const override { return expand(rs_.encode(message)); }
  std::vector<std::string> capability_report() const override;
  std::string recommendation() const override;

  /// Top-left cell of the tile holding symbol i (array kinds).
  std::pair<std::size_t, std::size_t> tile_origin(std::size_t i) const noexcept {
    return {(i / n2_) * side_, (i % n2_) * side_};
  }

 private:
  void check_shape(const Grid& g) const;
  void write_symbol(Grid& out, std::size_t i, Elem value) const;

  RsCode rs_;
  ExpansionKind kind_;
  std::size_t n1_ = 1;
  std::size_t n2_ = 0;
  std::size_t side_ = 0;
  Shape shape_;
};

/// floor(sqrt(v)) for integers.
std::size_t isqrt(std::size_t v) noexcept;

}  // namespace sfh
