#include "sfh/rs.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "sfh/poly.hpp"

namespace sfh {

namespace {

// Gaussian elimination for a square system over the extension field.
// `a` is row-major size x size; returns nullopt when singular.
std::optional<std::vector<Elem>> solve_square(const ExtField& f, std::vector<Elem> a,
                                              std::vector<Elem> b) {
  const std::size_t size = b.size();
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t pivot = col;
    while (pivot < size && a[pivot * size + col] == 0) ++pivot;
    if (pivot == size) return std::nullopt;
    if (pivot != col) {
      for (std::size_t c = 0; c < size; ++c) std::swap(a[pivot * size + c], a[col * size + c]);
      std::swap(b[pivot], b[col]);
    }
    const Elem scale = f.inv(a[col * size + col]);
    for (std::size_t c = col; c < size; ++c) a[col * size + c] = f.mul(scale, a[col * size + c]);
    b[col] = f.mul(scale, b[col]);
    for (std::size_t r = 0; r < size; ++r) {
      const Elem factor = a[r * size + col];
      if (r == col || factor == 0) continue;
      for (std::size_t c = col; c < size; ++c) {
        a[r * size + c] = f.sub(a[r * size + c], f.mul(factor, a[col * size + c]));
      }
      b[r] = f.sub(b[r], f.mul(factor, b[col]));
    }
  }
  return b;
}

}  // namespace

std::optional<std::vector<Elem>> gpz_decode(const ExtField& f, std::size_t n, std::int64_t fcr,
                                            std::span<const Elem> syn,
                                            std::span<const std::size_t> erasures) {
  const std::size_t r = syn.size();
  const std::size_t n_erase = erasures.size();
  if (n_erase > r) throw Error(Errc::TooManyErasures, "more erasures than redundancy");
  {
    std::set<std::size_t> seen;
    for (auto pos : erasures) {
      if (pos >= n) throw Error(Errc::IndexOutOfRange, "erasure position outside the code");
      if (!seen.insert(pos).second) throw Error(Errc::InvalidArgument, "duplicate erasure position");
    }
  }

  // Erasure locator Gamma(x) = prod (1 - X_e x).
  poly::Poly gamma{1};
  for (auto pos : erasures) {
    const Elem factor[2] = {1, f.neg(f.alpha_pow(static_cast<std::int64_t>(pos)))};
    gamma = poly::mul(f, gamma, factor);
  }

  // Modified syndromes T_u = sum_l Gamma_l S_{f+u-l}; erased positions drop out.
  const std::size_t n_mod = r - n_erase;
  std::vector<Elem> t(n_mod, 0);
  for (std::size_t u = 0; u < n_mod; ++u) {
    Elem acc = 0;
    for (std::size_t l = 0; l <= n_erase; ++l) {
      acc = f.add(acc, f.mul(gamma[l], syn[n_erase + u - l]));
    }
    t[u] = acc;
  }

  // Largest nu whose Peterson matrix is nonsingular fixes the locator degree.
  std::vector<Elem> locator{1};
  std::size_t nu = n_mod / 2;
  for (; nu > 0; --nu) {
    std::vector<Elem> m(nu * nu);
    std::vector<Elem> rhs(nu);
    for (std::size_t a = 0; a < nu; ++a) {
      for (std::size_t l = 1; l <= nu; ++l) m[a * nu + (l - 1)] = t[nu + a - l];
      rhs[a] = f.neg(t[nu + a]);
    }
    if (auto lambda = solve_square(f, std::move(m), std::move(rhs))) {
      locator.insert(locator.end(), lambda->begin(), lambda->end());
      break;
    }
  }
  if (nu == 0) {
    for (auto v : t) {
      if (v != 0) return std::nullopt;
    }
  }

  // Root search over every position: Lambda(X_i^{-1}) == 0.
  std::vector<std::size_t> positions;
  if (nu > 0) {
    const Elem step = f.alpha_pow(-1);
    Elem x_inv = 1;
    for (std::size_t pos = 0; pos < n; ++pos) {
      if (poly::eval(f, locator, x_inv) == 0) positions.push_back(pos);
      x_inv = f.mul(x_inv, step);
    }
    if (positions.size() != nu) return std::nullopt;
  }
  positions.insert(positions.end(), erasures.begin(), erasures.end());
  std::sort(positions.begin(), positions.end());
  positions.erase(std::unique(positions.begin(), positions.end()), positions.end());

  std::vector<Elem> error(n, 0);
  const std::size_t count = positions.size();
  std::vector<Elem> first(count);  // X_i^fcr
  std::vector<Elem> xs(count);
  for (std::size_t i = 0; i < count; ++i) {
    xs[i] = f.alpha_pow(static_cast<std::int64_t>(positions[i]));
    first[i] = f.alpha_pow(fcr * static_cast<std::int64_t>(positions[i]));
  }

  if (count > 0) {
    // Magnitudes from the first `count` syndrome equations.
    std::vector<Elem> a(count * count);
    std::vector<Elem> power = first;
    for (std::size_t j = 0; j < count; ++j) {
      for (std::size_t i = 0; i < count; ++i) {
        a[j * count + i] = power[i];
        power[i] = f.mul(power[i], xs[i]);
      }
    }
    auto magnitudes = solve_square(f, std::move(a), std::vector<Elem>(syn.begin(), syn.begin() + count));
    if (!magnitudes) return std::nullopt;
    for (std::size_t i = 0; i < count; ++i) error[positions[i]] = (*magnitudes)[i];
  }

  // The answer must reproduce every syndrome, not just the ones solved for.
  std::vector<Elem> term(count);
  for (std::size_t i = 0; i < count; ++i) term[i] = f.mul(error[positions[i]], first[i]);
  for (std::size_t j = 0; j < r; ++j) {
    Elem acc = 0;
    for (std::size_t i = 0; i < count; ++i) {
      acc = f.add(acc, term[i]);
      term[i] = f.mul(term[i], xs[i]);
    }
    if (acc != syn[j]) return std::nullopt;
  }
  return error;
}

RsCode::RsCode(FieldPtr field, std::size_t n, std::size_t k, std::int64_t fcr)
    : field_(std::move(field)), n_(n), k_(k), fcr_(fcr) {
  if (!field_) throw Error(Errc::InvalidArgument, "null field");
  if (!field_->alpha_is_primitive()) {
    throw Error(Errc::NonPrimitiveAlpha, "RS codes need a primitive alpha");
  }
  if (n_ == 0 || n_ > field_->order() - 1) {
    throw Error(Errc::InvalidArgument, "RS length must be in [1, p^m - 1]");
  }
  if (k_ == 0 || k_ >= n_) throw Error(Errc::InvalidArgument, "RS dimension must satisfy 0 < k < n");

  generator_ = {1};
  for (std::size_t j = 0; j < n_ - k_; ++j) {
    const Elem root = field_->alpha_pow(fcr_ + static_cast<std::int64_t>(j));
    const Elem factor[2] = {field_->neg(root), 1};
    generator_ = poly::mul(*field_, generator_, factor);
  }
}

std::vector<Elem> RsCode::encode(std::span<const Elem> message) const {
  if (message.size() != k_) throw Error(Errc::LengthMismatch, "RS message must have k symbols");
  const std::size_t r = n_ - k_;
  poly::Poly shifted(n_, 0);
  for (std::size_t i = 0; i < k_; ++i) {
    if (!field_->contains(message[i])) throw Error(Errc::AlphabetMismatch, "symbol outside the field");
    shifted[r + i] = message[i];
  }
  const poly::Poly rem = poly::rem_monic(*field_, shifted, generator_);
  for (std::size_t i = 0; i < r; ++i) shifted[i] = field_->neg(rem[i]);
  return shifted;
}

Syndrome RsCode::syndrome(std::span<const Elem> word) const {
  if (word.size() != n_) throw Error(Errc::LengthMismatch, "RS word must have n symbols");
  for (auto v : word) {
    if (!field_->contains(v)) throw Error(Errc::AlphabetMismatch, "symbol outside the field");
  }
  Syndrome s;
  s.values.resize(n_ - k_);
  for (std::size_t j = 0; j < n_ - k_; ++j) {
    s.values[j] = poly::eval(*field_, word, field_->alpha_pow(fcr_ + static_cast<std::int64_t>(j)));
  }
  return s;
}

std::optional<std::vector<Elem>> RsCode::decode_syndrome(const Syndrome& s,
                                                         std::span<const std::size_t> erasures) const {
  if (s.values.size() != n_ - k_) throw Error(Errc::LengthMismatch, "syndrome length");
  return gpz_decode(*field_, n_, fcr_, s.values, erasures);
}

std::vector<Elem> RsCode::message_part(std::span<const Elem> codeword) const {
  if (codeword.size() != n_) throw Error(Errc::LengthMismatch, "RS word must have n symbols");
  return {codeword.begin() + static_cast<std::ptrdiff_t>(n_ - k_), codeword.end()};
}

std::string RsCode::spec() const {
  std::ostringstream os;
  os << "rs(" << n_ << ',' << k_ << ';' << field_->spec() << ')';
  return os.str();
}

BchCode::BchCode(std::uint32_t p, unsigned m, std::size_t design_t)
    : BchCode(build_ext_field(p, m, std::nullopt, true), design_t) {}

BchCode::BchCode(FieldPtr splitting_field, std::size_t design_t)
    : ext_(std::move(splitting_field)), n_(0), design_t_(design_t) {
  if (!ext_) throw Error(Errc::InvalidArgument, "null field");
  if (!ext_->alpha_is_primitive()) throw Error(Errc::NonPrimitiveAlpha, "BCH codes need a primitive alpha");
  n_ = ext_->order() - 1;
  if (design_t_ == 0) throw Error(Errc::InvalidArgument, "designed capability must be at least 1");
  if (2 * design_t_ >= n_) throw Error(Errc::CapacityTooLarge, "2t must be below p^m - 1");
  build();
}

void BchCode::build() {
  const std::uint32_t p = ext_->characteristic();
  std::vector<bool> covered(n_, false);
  generator_ = {1};
  for (std::size_t i = 1; i <= 2 * design_t_; ++i) {
    if (covered[i]) continue;
    std::vector<std::size_t> coset;
    std::size_t j = i;
    do {
      coset.push_back(j);
      covered[j] = true;
      j = (j * p) % n_;
    } while (j != i);
    poly::Poly minimal{1};
    for (auto e : coset) {
      const Elem factor[2] = {ext_->neg(ext_->alpha_pow(static_cast<std::int64_t>(e))), 1};
      minimal = poly::mul(*ext_, minimal, factor);
    }
    for (auto c : minimal) {
      if (!ext_->in_base_field(c)) throw Error(Errc::InvalidArgument, "minimal polynomial left F_p");
    }
    generator_ = poly::mul(*ext_, generator_, minimal);
    cosets_.push_back(std::move(coset));
  }
  k_ = n_ - (generator_.size() - 1);
}

std::vector<Elem> BchCode::encode(std::span<const Elem> message) const {
  if (message.size() != k_) throw Error(Errc::LengthMismatch, "BCH message must have k symbols");
  const std::size_t r = n_ - k_;
  poly::Poly shifted(n_, 0);
  for (std::size_t i = 0; i < k_; ++i) {
    if (!ext_->in_base_field(message[i])) throw Error(Errc::AlphabetMismatch, "symbol outside F_p");
    shifted[r + i] = message[i];
  }
  const poly::Poly rem = poly::rem_monic(*ext_, shifted, generator_);
  for (std::size_t i = 0; i < r; ++i) shifted[i] = ext_->neg(rem[i]);
  return shifted;
}

Syndrome BchCode::syndrome(std::span<const Elem> word) const {
  if (word.size() != n_) throw Error(Errc::LengthMismatch, "BCH word must have n symbols");
  for (auto v : word) {
    if (!ext_->in_base_field(v)) throw Error(Errc::AlphabetMismatch, "symbol outside F_p");
  }
  Syndrome s;
  s.values.resize(2 * design_t_);
  for (std::size_t j = 0; j < 2 * design_t_; ++j) {
    s.values[j] = poly::eval(*ext_, word, ext_->alpha_pow(static_cast<std::int64_t>(j + 1)));
  }
  return s;
}

std::optional<std::vector<Elem>> BchCode::decode_syndrome(const Syndrome& s) const {
  if (s.values.size() != 2 * design_t_) throw Error(Errc::LengthMismatch, "syndrome length");
  auto error = gpz_decode(*ext_, n_, 1, s.values);
  if (!error) return std::nullopt;
  for (auto v : *error) {
    if (!ext_->in_base_field(v)) return std::nullopt;
  }
  return error;
}

std::string BchCode::spec() const {
  std::ostringstream os;
  os << "bch(" << n_ << ',' << design_t_ << ";gf(" << ext_->characteristic() << "))";
  return os.str();
}

}  // namespace sfh
