#pragma once

// Prime fields F_p and extension fields F_{p^m} with coefficient-vector and
// companion-matrix views of their elements.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sfh/error.hpp"
#include "sfh/grid.hpp"

namespace sfh {

namespace detail {
extern thread_local std::uint64_t tl_mul_count;
}

/// Number of extension-field multiplications performed on this thread.
inline std::uint64_t mul_count() noexcept { return detail::tl_mul_count; }
inline void reset_mul_count() noexcept { detail::tl_mul_count = 0; }

bool is_prime(std::uint32_t p) noexcept;

class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const noexcept { return p_; }
  Elem add(Elem a, Elem b) const noexcept { return (a + b) % p_; }
  Elem sub(Elem a, Elem b) const noexcept { return (a + p_ - b) % p_; }
  Elem neg(Elem a) const noexcept { return (p_ - a) % p_; }
  Elem mul(Elem a, Elem b) const noexcept {
    return static_cast<Elem>((std::uint64_t{a} * b) % p_);
  }
  Elem inv(Elem a) const;

 private:
  std::uint32_t p_;
};

/// Built-in primitive modulus for (p, m), coefficients c_0..c_m (monic).
std::optional<std::vector<Elem>> default_modulus(std::uint32_t p, unsigned m);

class ExtField {
 public:
  /// Builds F_{p^m}. Without a modulus the built-in table is consulted.
  /// Throws NotPrime, ReducibleModulus, NoDefaultModulus, or
  /// NonPrimitiveAlpha (only when require_primitive is set).
  ExtField(std::uint32_t p, unsigned m, std::optional<std::vector<Elem>> modulus = std::nullopt,
           bool require_primitive = false);

  const PrimeField& base() const noexcept { return base_; }
  std::uint32_t characteristic() const noexcept { return base_.p(); }
  unsigned degree() const noexcept { return m_; }
  /// p^m
  std::uint32_t order() const noexcept { return order_; }
  const std::vector<Elem>& modulus() const noexcept { return modulus_; }
  bool alpha_is_primitive() const noexcept { return primitive_; }
  bool uses_default_modulus() const noexcept { return default_modulus_; }

  bool contains(Elem a) const noexcept { return a < order_; }

  Elem add(Elem a, Elem b) const noexcept {
    if (base_.p() == 2) return a ^ b;
    return add_digits(a, b, false);
  }
  Elem sub(Elem a, Elem b) const noexcept {
    if (base_.p() == 2) return a ^ b;
    return add_digits(a, b, true);
  }
  Elem neg(Elem a) const noexcept { return sub(0, a); }

  Elem mul(Elem a, Elem b) const noexcept {
    ++detail::tl_mul_count;
    if (a == 0 || b == 0) return 0;
    if (primitive_) {
      return exp_[log_[a] + log_[b]];
    }
    return mul_poly(a, b);
  }

  /// Multiplicative inverse. Throws DivisionByZero for 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  /// Square-and-multiply; counts multiplications.
  Elem pow(Elem a, std::uint64_t e) const noexcept;

  /// The class of x.
  Elem alpha() const noexcept { return alpha_; }
  /// alpha^e by table lookup (any integer e). Requires a primitive alpha.
  Elem alpha_pow(std::int64_t e) const;
  /// Discrete log base alpha. Requires a primitive alpha and a != 0.
  std::uint32_t log_alpha(Elem a) const;

  /// Embeds a base-field constant c in [0, p).
  Elem from_base(Elem c) const noexcept { return c; }
  bool in_base_field(Elem a) const noexcept { return a < base_.p(); }

  std::vector<Elem> to_base_vector(Elem a) const;
  Elem from_base_vector(std::span<const Elem> digits) const;

  /// The m x m companion matrix P: ones on the subdiagonal, last column the
  /// negated low-order modulus coefficients.
  Grid companion() const;
  /// Matrix of multiplication by a in the basis 1, x, ..., x^{m-1}; equals
  /// sum_i c_i P^i.
  Grid to_companion_matrix(Elem a) const;
  /// Reads the first column and checks the matrix lies in F_p[P].
  /// Throws NotInAlgebra or ShapeMismatch.
  Elem from_companion_matrix(const Grid& matrix) const;
  /// First-column projection without the membership check.
  Elem project_companion_tile(const Grid& tile, std::size_t row0, std::size_t col0) const;

  /// "gf(p^m)" with a modulus clause when the modulus is not the default.
  std::string spec() const;

  bool operator==(const ExtField& other) const noexcept {
    return base_.p() == other.base_.p() && modulus_ == other.modulus_;
  }

 private:
  Elem add_digits(Elem a, Elem b, bool subtract) const noexcept;
  Elem mul_poly(Elem a, Elem b) const noexcept;

  PrimeField base_;
  unsigned m_;
  std::uint32_t order_;
  std::vector<Elem> modulus_;
  bool primitive_ = false;
  bool default_modulus_ = false;
  Elem alpha_ = 0;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
};

using FieldPtr = std::shared_ptr<const ExtField>;

FieldPtr build_ext_field(std::uint32_t p, unsigned m,
                         std::optional<std::vector<Elem>> modulus = std::nullopt,
                         bool require_primitive = false);

/// Solves A x = b over F_p. A is fixed at construction so repeated solves
/// reuse the elimination.
class ModPSolver {
 public:
  ModPSolver(const PrimeField& field, const Grid& a);

  std::size_t rank() const noexcept { return pivots_.size(); }
  /// Returns the solution when b lies in the column space of A (the unique
  /// one when A has full column rank; free variables are set to zero).
  std::optional<std::vector<Elem>> solve(std::span<const Elem> b) const;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  Grid reduced_;    // row-reduced A
  Grid transform_;  // T with T * A = reduced_
  std::vector<std::size_t> pivots_;  // pivot column for each leading row
};

}  // namespace sfh
