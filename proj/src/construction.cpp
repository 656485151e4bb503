#include "sfh/construction.hpp"

#include <sstream>

namespace sfh {

Elem sub_digits(std::uint32_t p, Elem a, Elem b) noexcept {
  if (p == 2) return a ^ b;
  Elem result = 0, scale = 1;
  while (a != 0 || b != 0) {
    result += ((a % p + p - b % p) % p) * scale;
    scale *= p;
    a /= p;
    b /= p;
  }
  return result;
}

Elem add_digits(std::uint32_t p, Elem a, Elem b) noexcept {
  if (p == 2) return a ^ b;
  Elem result = 0, scale = 1;
  while (a != 0 || b != 0) {
    result += ((a % p + b % p) % p) * scale;
    scale *= p;
    a /= p;
    b /= p;
  }
  return result;
}

Syndrome subtract(std::uint32_t p, const Syndrome& a, const Syndrome& b) {
  if (a.values.size() != b.values.size()) throw Error(Errc::LengthMismatch, "syndrome lengths differ");
  Syndrome out;
  out.values.resize(a.values.size());
  for (std::size_t i = 0; i < a.values.size(); ++i) out.values[i] = sub_digits(p, a.values[i], b.values[i]);
  return out;
}

void Construction::check_word(const Grid& word) const {
  if (word.shape() != shape()) {
    std::ostringstream os;
    os << "expected " << shape().rows << 'x' << shape().cols << " word, got " << word.rows() << 'x'
       << word.cols();
    throw Error(Errc::ShapeMismatch, os.str());
  }
  const auto p = characteristic();
  for (auto v : word.cells()) {
    if (v >= p) throw Error(Errc::AlphabetMismatch, "data symbol outside F_p");
  }
}

void Construction::check_syndrome(const Syndrome& s) const {
  const auto orders = syndrome_orders();
  if (s.values.size() != orders.size()) throw Error(Errc::LengthMismatch, "syndrome length");
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (s.values[i] >= orders[i]) throw Error(Errc::AlphabetMismatch, "syndrome component out of range");
  }
}

std::vector<std::uint32_t> BchConstruction::syndrome_orders() const {
  return std::vector<std::uint32_t>(code_.syndrome_length(), code_.ext().order());
}

Syndrome BchConstruction::syndrome(const Grid& word) const {
  check_word(word);
  return code_.syndrome(word.cells());
}

std::optional<Grid> BchConstruction::decode(const Syndrome& s) const {
  check_syndrome(s);
  auto error = code_.decode_syndrome(s);
  if (!error) return std::nullopt;
  return Grid::row(std::move(*error));
}

Grid BchConstruction::encode(std::span<const Elem> message) const {
  return Grid::row(code_.encode(message));
}

std::vector<std::string> BchConstruction::capability_report() const {
  std::ostringstream os;
  os << "random errors: " << code_.design_t();
  return {os.str()};
}

std::string BchConstruction::recommendation() const {
  return "isolated errors only";
}

}  // namespace sfh
