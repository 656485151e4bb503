#pragma once

// Seeded error-pattern generation: 1D bursts, 2D rectangular bursts and
// mixed burst-plus-random patterns over F_p.

#include <cstdint>
#include <string>
#include <vector>

#include "sfh/grid.hpp"

namespace sfh {

/// SplitMix64 (Steele, Lea, Flood 2014): a 64-bit counter advanced by the
/// golden-ratio increment and passed through a finalizing mix. split()
/// derives an independent stream from the next output.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t operator()() noexcept { return next(); }
  static constexpr std::uint64_t min() noexcept { return 0; }
  static constexpr std::uint64_t max() noexcept { return ~std::uint64_t{0}; }

  /// Uniform in [0, bound) by rejection; bound must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t limit = max() - max() % bound;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

  SplitMix64 split() noexcept { return SplitMix64(next() ^ 0x6a09e667f3bcc909ULL); }
  /// Stream for trial `index`, independent of how many trials ran before.
  static SplitMix64 for_trial(std::uint64_t seed, std::uint64_t index) noexcept {
    SplitMix64 g(seed ^ (index * 0xd1342543de82ef95ULL));
    g.next();
    return g;
  }

 private:
  std::uint64_t state_;
};

struct BurstPlacement {
  std::size_t row = 0;
  std::size_t col = 0;
  std::size_t rows = 1;
  std::size_t cols = 1;

  bool overlaps(const BurstPlacement& o) const noexcept {
    return row < o.row + o.rows && o.row < row + rows && col < o.col + o.cols && o.col < col + cols;
  }
  bool operator==(const BurstPlacement&) const = default;
};

struct ErrorPattern {
  Grid cells;
  std::vector<BurstPlacement> bursts;
  std::size_t random_errors = 0;

  std::size_t weight() const noexcept;
  /// One-line form, e.g. "shape=6x10 bursts=[3x3@1,2] random=2 weight=7".
  std::string describe() const;
};

/// Length-`len` burst starting at `position` in a 1 x word_len word. Ends are
/// nonzero, interior uniform over F_p. Throws OutOfRange.
ErrorPattern gen_burst_1d(SplitMix64& rng, std::uint32_t p, std::size_t word_len, std::size_t len,
                          std::size_t position);

/// rows x cols burst with top-left corner (row, col) in an array of `shape`.
/// Every border row and column holds a nonzero. Throws OutOfRange.
ErrorPattern gen_burst_2d(SplitMix64& rng, std::uint32_t p, Shape shape, std::size_t rows, std::size_t cols,
                          std::size_t row, std::size_t col);

/// Pairwise-disjoint bursts of the given dimensions at random positions plus
/// `random_errors` nonzero symbols off the bursts. Throws PlacementFailed.
ErrorPattern gen_mixed(SplitMix64& rng, std::uint32_t p, Shape shape, const std::vector<Shape>& bursts,
                       std::size_t random_errors);

/// Writes a burst's contents into `cells` (which must be zero there).
void fill_burst(SplitMix64& rng, std::uint32_t p, Grid& cells, const BurstPlacement& where);

/// Burst definition check for the rectangle `where` in `cells`.
bool satisfies_burst_definition(const Grid& cells, const BurstPlacement& where) noexcept;

}  // namespace sfh
