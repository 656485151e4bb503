#include "sfh/expand.hpp"

#include <sstream>

namespace sfh {

std::size_t isqrt(std::size_t v) noexcept {
  std::size_t r = 0;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

ExpandedCode::ExpandedCode(RsCode rs, ExpansionKind kind, std::size_t n1, std::size_t n2)
    : rs_(std::move(rs)), kind_(kind) {
  const std::size_t n = rs_.n();
  const std::size_t m = rs_.field().degree();
  switch (kind_) {
    case ExpansionKind::RowVector:
      shape_ = {1, n * m};
      break;
    case ExpansionKind::RowVectorParity:
      shape_ = {1, n * (m + 1)};
      break;
    case ExpansionKind::SquareArray:
    case ExpansionKind::CompanionArray: {
      if (n1 == 0 || n2 == 0 || n1 * n2 != n) {
        throw Error(Errc::ShapeMismatch, "tile grid must satisfy n1 * n2 = n");
      }
      n1_ = n1;
      n2_ = n2;
      if (kind_ == ExpansionKind::SquareArray) {
        side_ = isqrt(m);
        if (side_ * side_ != m) throw Error(Errc::ShapeMismatch, "square tiles need m to be a perfect square");
      } else {
        side_ = m;
      }
      shape_ = {n1_ * side_, n2_ * side_};
      break;
    }
  }
}

void ExpandedCode::check_shape(const Grid& g) const {
  if (g.shape() != shape_) throw Error(Errc::ShapeMismatch, "base word does not match the expanded shape");
}

void ExpandedCode::write_symbol(Grid& out, std::size_t i, Elem value) const {
  const ExtField& f = rs_.field();
  const std::size_t m = f.degree();
  switch (kind_) {
    case ExpansionKind::RowVector: {
      const auto digits = f.to_base_vector(value);
      for (std::size_t d = 0; d < m; ++d) out[i * m + d] = digits[d];
      break;
    }
    case ExpansionKind::RowVectorParity: {
      const auto digits = f.to_base_vector(value);
      Elem sum = 0;
      for (std::size_t d = 0; d < m; ++d) {
        out[i * (m + 1) + d] = digits[d];
        sum = f.base().add(sum, digits[d]);
      }
      out[i * (m + 1) + m] = f.base().neg(sum);
      break;
    }
    case ExpansionKind::SquareArray: {
      const auto digits = f.to_base_vector(value);
      const auto [r0, c0] = tile_origin(i);
      for (std::size_t d = 0; d < m; ++d) out.at(r0 + d / side_, c0 + d % side_) = digits[d];
      break;
    }
    case ExpansionKind::CompanionArray: {
      const Grid tile = f.to_companion_matrix(value);
      const auto [r0, c0] = tile_origin(i);
      for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < m; ++c) out.at(r0 + r, c0 + c) = tile.at(r, c);
      }
      break;
    }
  }
}

Grid ExpandedCode::expand(std::span<const Elem> word) const {
  if (word.size() != rs_.n()) throw Error(Errc::ShapeMismatch, "expand needs n symbols");
  Grid out(shape_.rows, shape_.cols);
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!rs_.field().contains(word[i])) throw Error(Errc::AlphabetMismatch, "symbol outside the field");
    write_symbol(out, i, word[i]);
  }
  return out;
}

std::vector<Elem> ExpandedCode::project(const Grid& g) const {
  check_shape(g);
  const ExtField& f = rs_.field();
  const std::size_t m = f.degree();
  const std::size_t n = rs_.n();
  std::vector<Elem> out(n);
  std::vector<Elem> digits(m);
  for (std::size_t i = 0; i < n; ++i) {
    switch (kind_) {
      case ExpansionKind::RowVector:
        for (std::size_t d = 0; d < m; ++d) digits[d] = g[i * m + d];
        out[i] = f.from_base_vector(digits);
        break;
      case ExpansionKind::RowVectorParity:
        for (std::size_t d = 0; d < m; ++d) digits[d] = g[i * (m + 1) + d];
        out[i] = f.from_base_vector(digits);
        break;
      case ExpansionKind::SquareArray: {
        const auto [r0, c0] = tile_origin(i);
        for (std::size_t d = 0; d < m; ++d) digits[d] = g.at(r0 + d / side_, c0 + d % side_);
        out[i] = f.from_base_vector(digits);
        break;
      }
      case ExpansionKind::CompanionArray: {
        const auto [r0, c0] = tile_origin(i);
        for (std::size_t d = 0; d < m; ++d) digits[d] = g.at(r0 + d, c0);
        out[i] = f.from_base_vector(digits);
        break;
      }
    }
  }
  return out;
}

std::vector<Elem> ExpandedCode::contract(const Grid& g) const {
  auto word = project(g);
  if (kind_ == ExpansionKind::CompanionArray) {
    const std::size_t m = rs_.field().degree();
    for (std::size_t i = 0; i < word.size(); ++i) {
      const auto [r0, c0] = tile_origin(i);
      Grid tile(m, m);
      for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < m; ++c) tile.at(r, c) = g.at(r0 + r, c0 + c);
      }
      word[i] = rs_.field().from_companion_matrix(tile);
    }
  }
  return word;
}

std::vector<std::uint32_t> ExpandedCode::syndrome_orders() const {
  const ExtField& f = rs_.field();
  std::vector<std::uint32_t> orders(rs_.redundancy(), f.order());
  const std::size_t m = f.degree();
  if (kind_ == ExpansionKind::RowVectorParity) orders.resize(orders.size() + rs_.n(), f.characteristic());
  if (kind_ == ExpansionKind::CompanionArray) {
    orders.resize(orders.size() + rs_.n() * (m * m - m), f.characteristic());
  }
  return orders;
}

Syndrome ExpandedCode::syndrome(const Grid& g) const {
  check_word(g);
  const std::vector<Elem> word = project(g);
  Syndrome s = rs_.syndrome(word);
  const ExtField& f = rs_.field();
  const PrimeField& base = f.base();
  const std::size_t m = f.degree();
  if (kind_ == ExpansionKind::RowVectorParity) {
    for (std::size_t i = 0; i < rs_.n(); ++i) {
      Elem sum = 0;
      for (std::size_t d = 0; d <= m; ++d) sum = base.add(sum, g[i * (m + 1) + d]);
      s.values.push_back(sum);
    }
  } else if (kind_ == ExpansionKind::CompanionArray) {
    for (std::size_t i = 0; i < rs_.n(); ++i) {
      const Grid expected = f.to_companion_matrix(word[i]);
      const auto [r0, c0] = tile_origin(i);
      for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 1; c < m; ++c) s.values.push_back(base.sub(g.at(r0 + r, c0 + c), expected.at(r, c)));
      }
    }
  }
  return s;
}

std::optional<Grid> ExpandedCode::decode(const Syndrome& s, ParityMode mode) const {
  check_syndrome(s);
  const ExtField& f = rs_.field();
  const PrimeField& base = f.base();
  const std::size_t m = f.degree();
  const std::size_t r = rs_.redundancy();
  Syndrome rs_part{{s.values.begin(), s.values.begin() + static_cast<std::ptrdiff_t>(r)}};

  std::vector<std::size_t> erasures;
  if (kind_ == ExpansionKind::RowVectorParity && mode == ParityMode::ErasureAssist) {
    for (std::size_t i = 0; i < rs_.n(); ++i) {
      if (s.values[r + i] != 0) erasures.push_back(i);
    }
    if (erasures.size() > r) erasures.clear();
  }
  auto symbols = rs_.decode_syndrome(rs_part, erasures);
  if (!symbols) return std::nullopt;

  Grid out = expand(*symbols);
  if (kind_ == ExpansionKind::RowVectorParity) {
    // The parity cell carries whatever the block sum still needs.
    for (std::size_t i = 0; i < rs_.n(); ++i) {
      Elem sum = 0;
      for (std::size_t d = 0; d < m; ++d) sum = base.add(sum, out[i * (m + 1) + d]);
      out[i * (m + 1) + m] = base.sub(s.values[r + i], sum);
    }
  } else if (kind_ == ExpansionKind::CompanionArray) {
    std::size_t idx = r;
    for (std::size_t i = 0; i < rs_.n(); ++i) {
      const auto [r0, c0] = tile_origin(i);
      for (std::size_t row = 0; row < m; ++row) {
        for (std::size_t c = 1; c < m; ++c) {
          out.at(r0 + row, c0 + c) = base.add(out.at(r0 + row, c0 + c), s.values[idx++]);
        }
      }
    }
  }
  return out;
}

std::size_t ExpandedCode::capability(std::size_t bursts, BurstShape burst_shape) const {
  if (bursts == 0) throw Error(Errc::InvalidArgument, "burst count must be at least 1");
  const std::size_t m = rs_.field().degree();
  const std::size_t r = rs_.redundancy();
  const std::size_t unit = kind_ == ExpansionKind::SquareArray ? side_ : m;
  if (burst_shape == BurstShape::OneD) {
    const std::size_t per_burst = r / (2 * bursts);
    if (per_burst == 0) return 0;
    return unit * (per_burst - 1) + 1;
  }
  if (!is_array()) throw Error(Errc::ShapeUnsupported, "square bursts need an array expansion");
  // Largest a with a^2 <= (n - k) / (2 * bursts).
  std::size_t a = 0;
  while (2 * bursts * (a + 1) * (a + 1) <= r) ++a;
  if (a == 0) return 0;
  return unit * (a - 1) + 1;
}

std::string ExpandedCode::spec() const {
  std::ostringstream os;
  switch (kind_) {
    case ExpansionKind::RowVector: os << "cI(" << rs_.spec() << ')'; break;
    case ExpansionKind::RowVectorParity: os << "cI+parity(" << rs_.spec() << ')'; break;
    case ExpansionKind::SquareArray: os << "cII(" << rs_.spec() << ';' << n1_ << ',' << n2_ << ')'; break;
    case ExpansionKind::CompanionArray: os << "cIII(" << rs_.spec() << ';' << n1_ << ',' << n2_ << ')'; break;
  }
  return os.str();
}

std::vector<std::string> ExpandedCode::capability_report() const {
  std::vector<std::string> lines;
  {
    std::ostringstream os;
    os << "random symbol errors (over F_" << rs_.field().order() << "): " << rs_.t();
    lines.push_back(os.str());
  }
  for (std::size_t l = 1; l <= rs_.t() && l <= 4; ++l) {
    std::ostringstream os;
    os << l << (l == 1 ? " burst" : " bursts") << " (1D), max length: " << capability(l, BurstShape::OneD);
    lines.push_back(os.str());
  }
  if (is_array()) {
    for (std::size_t l = 1; l <= rs_.t() && l <= 4; ++l) {
      const std::size_t side = capability(l, BurstShape::Square);
      if (side == 0) break;
      std::ostringstream os;
      os << l << (l == 1 ? " square burst" : " square bursts") << ", max side: " << side << " (area "
         << side * side << ')';
      lines.push_back(os.str());
    }
  }
  return lines;
}

std::string ExpandedCode::recommendation() const {
  switch (kind_) {
    case ExpansionKind::RowVector:
    case ExpansionKind::RowVectorParity:
    case ExpansionKind::SquareArray:
      return "bursts with little isolated noise; cheapest decoding";
    case ExpansionKind::CompanionArray:
      return "square bursts on small verifiers: lower rate than cII, cheaper decoding";
  }
  return {};
}

}  // namespace sfh
