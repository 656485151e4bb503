#include "sfh/channel.hpp"

#include <sstream>

#include "sfh/error.hpp"

namespace sfh {

namespace {

constexpr int kPlacementAttempts = 1000;

Elem nonzero(SplitMix64& rng, std::uint32_t p) { return static_cast<Elem>(1 + rng.below(p - 1)); }

}  // namespace

std::size_t ErrorPattern::weight() const noexcept {
  std::size_t w = 0;
  for (auto v : cells.cells()) w += v != 0;
  return w;
}

std::string ErrorPattern::describe() const {
  std::ostringstream os;
  os << "shape=" << cells.rows() << 'x' << cells.cols() << " bursts=[";
  for (std::size_t i = 0; i < bursts.size(); ++i) {
    if (i) os << ';';
    os << bursts[i].rows << 'x' << bursts[i].cols << '@' << bursts[i].row << ',' << bursts[i].col;
  }
  os << "] random=" << random_errors << " weight=" << weight();
  return os.str();
}

void fill_burst(SplitMix64& rng, std::uint32_t p, Grid& cells, const BurstPlacement& w) {
  for (std::size_t r = 0; r < w.rows; ++r) {
    for (std::size_t c = 0; c < w.cols; ++c) cells.at(w.row + r, w.col + c) = static_cast<Elem>(rng.below(p));
  }
  auto ensure_line = [&](bool is_row, std::size_t index) {
    const std::size_t len = is_row ? w.cols : w.rows;
    for (std::size_t k = 0; k < len; ++k) {
      const Elem v = is_row ? cells.at(w.row + index, w.col + k) : cells.at(w.row + k, w.col + index);
      if (v != 0) return;
    }
    const std::size_t k = rng.below(len);
    Elem& cell = is_row ? cells.at(w.row + index, w.col + k) : cells.at(w.row + k, w.col + index);
    cell = nonzero(rng, p);
  };
  if (w.rows == 1) {
    // A horizontal 1D burst: both end symbols are nonzero.
    if (cells.at(w.row, w.col) == 0) cells.at(w.row, w.col) = nonzero(rng, p);
    if (cells.at(w.row, w.col + w.cols - 1) == 0) cells.at(w.row, w.col + w.cols - 1) = nonzero(rng, p);
    return;
  }
  if (w.cols == 1) {
    if (cells.at(w.row, w.col) == 0) cells.at(w.row, w.col) = nonzero(rng, p);
    if (cells.at(w.row + w.rows - 1, w.col) == 0) cells.at(w.row + w.rows - 1, w.col) = nonzero(rng, p);
    return;
  }
  ensure_line(true, 0);
  ensure_line(true, w.rows - 1);
  ensure_line(false, 0);
  ensure_line(false, w.cols - 1);
}

bool satisfies_burst_definition(const Grid& cells, const BurstPlacement& w) noexcept {
  if (w.rows == 0 || w.cols == 0) return false;
  if (w.rows == 1 || w.cols == 1) {
    const Elem first = cells.at(w.row, w.col);
    const Elem last = cells.at(w.row + w.rows - 1, w.col + w.cols - 1);
    return first != 0 && last != 0;
  }
  auto line_has_nonzero = [&](bool is_row, std::size_t index) {
    const std::size_t len = is_row ? w.cols : w.rows;
    for (std::size_t k = 0; k < len; ++k) {
      const Elem v = is_row ? cells.at(w.row + index, w.col + k) : cells.at(w.row + k, w.col + index);
      if (v != 0) return true;
    }
    return false;
  };
  return line_has_nonzero(true, 0) && line_has_nonzero(true, w.rows - 1) && line_has_nonzero(false, 0) &&
         line_has_nonzero(false, w.cols - 1);
}

ErrorPattern gen_burst_1d(SplitMix64& rng, std::uint32_t p, std::size_t word_len, std::size_t len,
                          std::size_t position) {
  if (len == 0 || position + len > word_len) throw Error(Errc::OutOfRange, "1D burst does not fit the word");
  ErrorPattern out{Grid(1, word_len), {{0, position, 1, len}}, 0};
  fill_burst(rng, p, out.cells, out.bursts.front());
  return out;
}

ErrorPattern gen_burst_2d(SplitMix64& rng, std::uint32_t p, Shape shape, std::size_t rows, std::size_t cols,
                          std::size_t row, std::size_t col) {
  if (rows == 0 || cols == 0 || row + rows > shape.rows || col + cols > shape.cols) {
    throw Error(Errc::OutOfRange, "2D burst does not fit the array");
  }
  ErrorPattern out{Grid(shape.rows, shape.cols), {{row, col, rows, cols}}, 0};
  fill_burst(rng, p, out.cells, out.bursts.front());
  return out;
}

ErrorPattern gen_mixed(SplitMix64& rng, std::uint32_t p, Shape shape, const std::vector<Shape>& bursts,
                       std::size_t random_errors) {
  ErrorPattern out{Grid(shape.rows, shape.cols), {}, random_errors};
  std::vector<bool> occupied(shape.size(), false);
  std::size_t burst_area = 0;
  for (const auto& dims : bursts) {
    if (dims.rows == 0 || dims.cols == 0 || dims.rows > shape.rows || dims.cols > shape.cols) {
      throw Error(Errc::PlacementFailed, "burst larger than the array");
    }
    bool placed = false;
    for (int attempt = 0; attempt < kPlacementAttempts && !placed; ++attempt) {
      const BurstPlacement where{rng.below(shape.rows - dims.rows + 1), rng.below(shape.cols - dims.cols + 1),
                                 dims.rows, dims.cols};
      bool clash = false;
      for (const auto& other : out.bursts) clash = clash || where.overlaps(other);
      if (clash) continue;
      out.bursts.push_back(where);
      fill_burst(rng, p, out.cells, where);
      for (std::size_t r = 0; r < where.rows; ++r) {
        for (std::size_t c = 0; c < where.cols; ++c) occupied[(where.row + r) * shape.cols + where.col + c] = true;
      }
      burst_area += where.rows * where.cols;
      placed = true;
    }
    if (!placed) throw Error(Errc::PlacementFailed, "could not place bursts disjointly");
  }
  if (burst_area + random_errors > shape.size()) throw Error(Errc::PlacementFailed, "too many random errors");
  for (std::size_t e = 0; e < random_errors;) {
    const std::size_t idx = rng.below(shape.size());
    if (occupied[idx]) continue;
    occupied[idx] = true;
    out.cells[idx] = nonzero(rng, p);
    ++e;
  }
  return out;
}

}  // namespace sfh
