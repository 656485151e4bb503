#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sfh/error.hpp"

namespace sfh {

/// Canonical integer encoding of a field element: base-p digit i is the
/// coefficient of x^i.
using Elem = std::uint32_t;

struct Shape {
  std::size_t rows = 0;
  std::size_t cols = 0;

  std::size_t size() const noexcept { return rows * cols; }
  bool operator==(const Shape&) const = default;
};

/// Row-major matrix of symbols. One-dimensional words are 1 x n grids.
class Grid {
 public:
  Grid() = default;
  Grid(std::size_t rows, std::size_t cols, Elem fill = 0)
      : shape_{rows, cols}, cells_(rows * cols, fill) {}
  Grid(Shape shape, std::vector<Elem> cells) : shape_(shape), cells_(std::move(cells)) {
    if (cells_.size() != shape_.size()) {
      throw Error(Errc::ShapeMismatch, "cell count does not match grid shape");
    }
  }

  static Grid row(std::vector<Elem> cells) {
    const auto n = cells.size();
    return Grid({1, n}, std::move(cells));
  }

  Shape shape() const noexcept { return shape_; }
  std::size_t rows() const noexcept { return shape_.rows; }
  std::size_t cols() const noexcept { return shape_.cols; }
  std::size_t size() const noexcept { return cells_.size(); }

  Elem& at(std::size_t r, std::size_t c) { return cells_[r * shape_.cols + c]; }
  Elem at(std::size_t r, std::size_t c) const { return cells_[r * shape_.cols + c]; }
  Elem& operator[](std::size_t i) { return cells_[i]; }
  Elem operator[](std::size_t i) const { return cells_[i]; }

  std::span<const Elem> cells() const noexcept { return cells_; }
  std::span<Elem> cells() noexcept { return cells_; }

  bool is_zero() const noexcept {
    for (auto v : cells_) {
      if (v != 0) return false;
    }
    return true;
  }

  bool operator==(const Grid&) const = default;

 private:
  Shape shape_;
  std::vector<Elem> cells_;
};

}  // namespace sfh
