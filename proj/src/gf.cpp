#include "sfh/gf.hpp"

#include <algorithm>
#include <sstream>

namespace sfh {

namespace detail {
thread_local std::uint64_t tl_mul_count = 0;
}

namespace {

// Fields larger than this are not supported (tables and exhaustive checks).
constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 20;

using Digits = std::vector<Elem>;

// Remainder of num modulo a monic divisor, both low-to-high over F_p.
Digits poly_rem(Digits num, const Digits& monic, const PrimeField& f) {
  const std::size_t dd = monic.size() - 1;
  for (std::size_t d = num.size(); d-- > dd;) {
    const Elem c = num[d];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= dd; ++i) {
      num[d - dd + i] = f.sub(num[d - dd + i], f.mul(c, monic[i]));
    }
  }
  num.resize(dd);
  return num;
}

bool is_irreducible(const Digits& modulus, const PrimeField& f) {
  const unsigned m = static_cast<unsigned>(modulus.size() - 1);
  const std::uint32_t p = f.p();
  for (unsigned d = 1; d <= m / 2; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Digits divisor(d + 1, 0);
      divisor[d] = 1;
      std::uint64_t c = code;
      for (unsigned i = 0; i < d; ++i) {
        divisor[i] = static_cast<Elem>(c % p);
        c /= p;
      }
      const Digits r = poly_rem(modulus, divisor, f);
      if (std::all_of(r.begin(), r.end(), [](Elem v) { return v == 0; })) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(std::uint32_t p) noexcept {
  if (p < 2) return false;
  for (std::uint32_t d = 2; std::uint64_t{d} * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (p > 65521) throw Error(Errc::InvalidArgument, "characteristic too large");
}

Elem PrimeField::inv(Elem a) const {
  if (a % p_ == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
  // Fermat: a^(p-2)
  std::uint64_t result = 1, base = a % p_;
  for (std::uint32_t e = p_ - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
  }
  return static_cast<Elem>(result);
}

std::optional<std::vector<Elem>> default_modulus(std::uint32_t p, unsigned m) {
  // Standard primitive polynomials, low-order coefficient first.
  static const std::vector<std::vector<Elem>> binary = {
      {1, 1},
      {1, 1, 1},
      {1, 1, 0, 1},
      {1, 1, 0, 0, 1},
      {1, 0, 1, 0, 0, 1},
      {1, 1, 0, 0, 0, 0, 1},
      {1, 1, 0, 0, 0, 0, 0, 1},
      {1, 0, 1, 1, 1, 0, 0, 0, 1},
      {1, 0, 0, 0, 1, 0, 0, 0, 0, 1},
      {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1},
      {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1},
      {1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1},
      {1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1},
      {1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1},
      {1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
      {1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1},
  };
  if (p == 2 && m >= 1 && m <= binary.size()) return binary[m - 1];
  // A few small odd characteristics, used by the non-binary tests.
  switch (p) {
    case 3:
      if (m == 1) return std::vector<Elem>{1, 1};
      if (m == 2) return std::vector<Elem>{2, 1, 1};
      if (m == 3) return std::vector<Elem>{1, 2, 0, 1};
      if (m == 4) return std::vector<Elem>{2, 1, 0, 0, 1};
      break;
    case 5:
      if (m == 1) return std::vector<Elem>{3, 1};
      if (m == 2) return std::vector<Elem>{2, 1, 1};
      if (m == 3) return std::vector<Elem>{2, 3, 0, 1};
      break;
    case 7:
      if (m == 1) return std::vector<Elem>{4, 1};
      if (m == 2) return std::vector<Elem>{3, 1, 1};
      break;
    default:
      break;
  }
  return std::nullopt;
}

ExtField::ExtField(std::uint32_t p, unsigned m, std::optional<std::vector<Elem>> modulus,
                   bool require_primitive)
    : base_(p), m_(m) {
  if (m == 0) throw Error(Errc::InvalidArgument, "extension degree must be at least 1");
  std::uint64_t order = 1;
  for (unsigned i = 0; i < m; ++i) {
    order *= p;
    if (order > kMaxOrder) throw Error(Errc::InvalidArgument, "field order too large");
  }
  order_ = static_cast<std::uint32_t>(order);

  const auto fallback = default_modulus(p, m);
  if (modulus) {
    if (modulus->size() != m + 1 || modulus->back() != 1) {
      throw Error(Errc::InvalidArgument, "modulus must be monic of degree m");
    }
    for (Elem c : *modulus) {
      if (c >= p) throw Error(Errc::InvalidArgument, "modulus coefficient out of range");
    }
    modulus_ = *modulus;
  } else {
    if (!fallback) {
      throw Error(Errc::NoDefaultModulus,
                  "no built-in modulus for gf(" + std::to_string(p) + "^" + std::to_string(m) + ")");
    }
    modulus_ = *fallback;
  }
  default_modulus_ = fallback && *fallback == modulus_;

  if (!is_irreducible(modulus_, base_)) {
    throw Error(Errc::ReducibleModulus, "modulus is reducible over F_" + std::to_string(p));
  }

  alpha_ = m == 1 ? base_.neg(modulus_[0]) : p;

  // Walk the powers of alpha; alpha is primitive iff the first return to 1
  // happens at p^m - 1.
  const std::uint32_t group = order_ - 1;
  std::vector<Elem> powers;
  powers.reserve(group);
  Elem x = 1;
  bool cycled_early = false;
  for (std::uint32_t i = 0; i < group; ++i) {
    if (i > 0 && x == 1) {
      cycled_early = true;
      break;
    }
    powers.push_back(x);
    x = mul_poly(x, alpha_);
  }
  primitive_ = !cycled_early && x == 1;
  if (primitive_) {
    exp_.resize(2 * std::size_t{group});
    log_.assign(order_, 0);
    for (std::uint32_t i = 0; i < group; ++i) {
      exp_[i] = powers[i];
      exp_[i + group] = powers[i];
      log_[powers[i]] = i;
    }
  } else if (require_primitive) {
    throw Error(Errc::NonPrimitiveAlpha, "alpha is not primitive for " + spec());
  }
}

Elem ExtField::add_digits(Elem a, Elem b, bool subtract) const noexcept {
  const std::uint32_t p = base_.p();
  Elem result = 0, scale = 1;
  for (unsigned i = 0; i < m_; ++i) {
    const Elem da = a % p, db = b % p;
    const Elem d = subtract ? (da + p - db) % p : (da + db) % p;
    result += d * scale;
    scale *= p;
    a /= p;
    b /= p;
  }
  return result;
}

Elem ExtField::mul_poly(Elem a, Elem b) const noexcept {
  const std::uint32_t p = base_.p();
  Digits da(m_), db(m_);
  for (unsigned i = 0; i < m_; ++i) {
    da[i] = a % p;
    a /= p;
    db[i] = b % p;
    b /= p;
  }
  Digits prod(2 * m_ - 1, 0);
  for (unsigned i = 0; i < m_; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < m_; ++j) {
      prod[i + j] = base_.add(prod[i + j], base_.mul(da[i], db[j]));
    }
  }
  const Digits r = prod.size() > m_ ? poly_rem(std::move(prod), modulus_, base_) : prod;
  Elem result = 0, scale = 1;
  for (unsigned i = 0; i < m_; ++i) {
    result += (i < r.size() ? r[i] : 0) * scale;
    scale *= p;
  }
  return result;
}

Elem ExtField::inv(Elem a) const {
  if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
  if (primitive_) {
    const std::uint32_t group = order_ - 1;
    return exp_[(group - log_[a]) % group];
  }
  return pow(a, order_ - 2);
}

Elem ExtField::pow(Elem a, std::uint64_t e) const noexcept {
  Elem result = 1, base = a;
  for (; e > 0; e >>= 1) {
    if (e & 1) result = mul(result, base);
    if (e > 1) base = mul(base, base);
  }
  return result;
}

Elem ExtField::alpha_pow(std::int64_t e) const {
  if (!primitive_) throw Error(Errc::NonPrimitiveAlpha, "alpha_pow needs a primitive alpha");
  const std::int64_t group = order_ - 1;
  std::int64_t r = e % group;
  if (r < 0) r += group;
  return exp_[static_cast<std::size_t>(r)];
}

std::uint32_t ExtField::log_alpha(Elem a) const {
  if (!primitive_) throw Error(Errc::NonPrimitiveAlpha, "log needs a primitive alpha");
  if (a == 0) throw Error(Errc::DivisionByZero, "log of zero");
  return log_[a];
}

std::vector<Elem> ExtField::to_base_vector(Elem a) const {
  std::vector<Elem> digits(m_);
  const std::uint32_t p = base_.p();
  for (unsigned i = 0; i < m_; ++i) {
    digits[i] = a % p;
    a /= p;
  }
  return digits;
}

Elem ExtField::from_base_vector(std::span<const Elem> digits) const {
  if (digits.size() != m_) throw Error(Errc::LengthMismatch, "expected m digits");
  Elem result = 0, scale = 1;
  for (Elem d : digits) {
    if (d >= base_.p()) throw Error(Errc::AlphabetMismatch, "digit outside base field");
    result += d * scale;
    scale *= base_.p();
  }
  return result;
}

Grid ExtField::companion() const {
  Grid pm(m_, m_);
  for (unsigned i = 1; i < m_; ++i) pm.at(i, i - 1) = 1;
  for (unsigned i = 0; i < m_; ++i) pm.at(i, m_ - 1) = base_.neg(modulus_[i]);
  return pm;
}

Grid ExtField::to_companion_matrix(Elem a) const {
  Grid out(m_, m_);
  // Column j holds the coordinates of a * x^j.
  Elem col = a;
  for (unsigned j = 0; j < m_; ++j) {
    const auto digits = to_base_vector(col);
    for (unsigned i = 0; i < m_; ++i) out.at(i, j) = digits[i];
    col = mul_poly(col, alpha_);
  }
  return out;
}

Elem ExtField::project_companion_tile(const Grid& tile, std::size_t row0, std::size_t col0) const {
  Elem result = 0, scale = 1;
  for (unsigned i = 0; i < m_; ++i) {
    result += (tile.at(row0 + i, col0) % base_.p()) * scale;
    scale *= base_.p();
  }
  return result;
}

Elem ExtField::from_companion_matrix(const Grid& matrix) const {
  if (matrix.rows() != m_ || matrix.cols() != m_) {
    throw Error(Errc::ShapeMismatch, "companion image must be m x m");
  }
  const Elem a = project_companion_tile(matrix, 0, 0);
  if (to_companion_matrix(a) != matrix) {
    throw Error(Errc::NotInAlgebra, "matrix is not a polynomial in the companion matrix");
  }
  return a;
}

std::string ExtField::spec() const {
  std::ostringstream os;
  os << "gf(" << base_.p();
  if (m_ != 1 || !default_modulus_) os << '^' << m_;
  if (!default_modulus_) {
    os << ";modulus=";
    for (std::size_t i = 0; i < modulus_.size(); ++i) {
      if (i) os << ',';
      os << modulus_[i];
    }
  }
  os << ')';
  return os.str();
}

FieldPtr build_ext_field(std::uint32_t p, unsigned m, std::optional<std::vector<Elem>> modulus,
                         bool require_primitive) {
  return std::make_shared<const ExtField>(p, m, std::move(modulus), require_primitive);
}

ModPSolver::ModPSolver(const PrimeField& field, const Grid& a)
    : field_(field), rows_(a.rows()), cols_(a.cols()), reduced_(a), transform_(a.rows(), a.rows()) {
  for (std::size_t i = 0; i < rows_; ++i) transform_.at(i, i) = 1;
  auto swap_rows = [](Grid& g, std::size_t r1, std::size_t r2) {
    for (std::size_t c = 0; c < g.cols(); ++c) std::swap(g.at(r1, c), g.at(r2, c));
  };
  auto axpy = [this](Grid& g, std::size_t dst, std::size_t src, Elem factor) {
    for (std::size_t c = 0; c < g.cols(); ++c) {
      g.at(dst, c) = field_.sub(g.at(dst, c), field_.mul(factor, g.at(src, c)));
    }
  };
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t pivot = row;
    while (pivot < rows_ && reduced_.at(pivot, col) == 0) ++pivot;
    if (pivot == rows_) continue;
    swap_rows(reduced_, row, pivot);
    swap_rows(transform_, row, pivot);
    const Elem scale = field_.inv(reduced_.at(row, col));
    for (std::size_t c = 0; c < cols_; ++c) reduced_.at(row, c) = field_.mul(scale, reduced_.at(row, c));
    for (std::size_t c = 0; c < rows_; ++c) transform_.at(row, c) = field_.mul(scale, transform_.at(row, c));
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || reduced_.at(r, col) == 0) continue;
      const Elem factor = reduced_.at(r, col);
      axpy(reduced_, r, row, factor);
      axpy(transform_, r, row, factor);
    }
    pivots_.push_back(col);
    ++row;
  }
}

std::optional<std::vector<Elem>> ModPSolver::solve(std::span<const Elem> b) const {
  if (b.size() != rows_) throw Error(Errc::LengthMismatch, "right-hand side length");
  std::vector<Elem> tb(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    Elem acc = 0;
    for (std::size_t c = 0; c < rows_; ++c) acc = field_.add(acc, field_.mul(transform_.at(r, c), b[c]));
    tb[r] = acc;
  }
  for (std::size_t r = pivots_.size(); r < rows_; ++r) {
    if (tb[r] != 0) return std::nullopt;
  }
  std::vector<Elem> x(cols_, 0);
  for (std::size_t r = 0; r < pivots_.size(); ++r) x[pivots_[r]] = tb[r];
  return x;
}

}  // namespace sfh
