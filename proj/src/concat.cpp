#include "sfh/concat.hpp"

#include <algorithm>
#include <sstream>

namespace sfh {

namespace {

Grid bch_parity_matrix(const BchCode& code) {
  const std::size_t m = code.ext().degree();
  const std::size_t r = code.n() - code.k();
  Grid a(code.syndrome_length() * m, r);
  std::vector<Elem> unit(code.n(), 0);
  for (std::size_t j = 0; j < r; ++j) {
    unit[j] = 1;
    const Syndrome s = code.syndrome(unit);
    unit[j] = 0;
    for (std::size_t c = 0; c < s.values.size(); ++c) {
      const auto digits = code.ext().to_base_vector(s.values[c]);
      for (std::size_t d = 0; d < m; ++d) a.at(c * m + d, j) = digits[d];
    }
  }
  return a;
}

void check_digits(std::span<const Elem> digits, std::size_t k, std::uint32_t p) {
  if (digits.size() != k) throw Error(Errc::LengthMismatch, "inner message must have k digits");
  for (auto d : digits) {
    if (d >= p) throw Error(Errc::AlphabetMismatch, "digit outside F_p");
  }
}

}  // namespace

// --- IdentityInner ---------------------------------------------------------

IdentityInner::IdentityInner(std::uint32_t p, std::size_t k) : p_(p), k_(k) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (k == 0) throw Error(Errc::InvalidArgument, "identity code needs k >= 1");
}

std::vector<Elem> IdentityInner::encode(std::span<const Elem> digits) const {
  check_digits(digits, k_, p_);
  return {digits.begin(), digits.end()};
}

std::vector<Elem> IdentityInner::message_part(std::span<const Elem> block) const {
  return {block.begin(), block.end()};
}

std::optional<std::vector<Elem>> IdentityInner::decode(std::span<const Elem>) const {
  return std::vector<Elem>(k_, 0);
}

std::optional<std::vector<Elem>> IdentityInner::reconstruct(std::span<const Elem> digits,
                                                            std::span<const Elem>) const {
  return std::vector<Elem>(digits.begin(), digits.end());
}

std::string IdentityInner::spec() const {
  return "id(" + std::to_string(k_) + ";gf(" + std::to_string(p_) + "))";
}

// --- BchInner --------------------------------------------------------------

BchInner::BchInner(BchCode code)
    : code_(std::move(code)), parity_solver_(code_.base(), bch_parity_matrix(code_)) {
  if (parity_solver_.rank() != code_.n() - code_.k()) {
    throw Error(Errc::InvalidArgument, "BCH syndrome map is not injective on parity positions");
  }
}

std::vector<std::uint32_t> BchInner::syndrome_orders() const {
  return std::vector<std::uint32_t>(code_.syndrome_length(), code_.ext().order());
}

std::vector<Elem> BchInner::encode(std::span<const Elem> digits) const { return code_.encode(digits); }

std::vector<Elem> BchInner::syndrome(std::span<const Elem> block) const {
  return code_.syndrome(block).values;
}

std::vector<Elem> BchInner::message_part(std::span<const Elem> block) const {
  const std::size_t r = code_.n() - code_.k();
  return {block.begin() + static_cast<std::ptrdiff_t>(r), block.end()};
}

std::optional<std::vector<Elem>> BchInner::decode(std::span<const Elem> syndrome) const {
  return code_.decode_syndrome(Syndrome{{syndrome.begin(), syndrome.end()}});
}

std::optional<std::vector<Elem>> BchInner::reconstruct(std::span<const Elem> digits,
                                                       std::span<const Elem> syndrome) const {
  // The codeword carrying `digits` has zero syndrome, so the parity-position
  // correction alone must produce `syndrome`.
  std::vector<Elem> block = code_.encode(digits);
  const std::size_t m = code_.ext().degree();
  std::vector<Elem> rhs;
  rhs.reserve(syndrome.size() * m);
  for (auto v : syndrome) {
    const auto d = code_.ext().to_base_vector(v);
    rhs.insert(rhs.end(), d.begin(), d.end());
  }
  auto parity = parity_solver_.solve(rhs);
  if (!parity) return std::nullopt;
  for (std::size_t j = 0; j < parity->size(); ++j) block[j] = code_.base().add(block[j], (*parity)[j]);
  return block;
}

// --- CompanionInner --------------------------------------------------------

CompanionInner::CompanionInner(FieldPtr field) : field_(std::move(field)), m_(0) {
  if (!field_) throw Error(Errc::InvalidArgument, "null field");
  m_ = field_->degree();
}

std::vector<std::uint32_t> CompanionInner::syndrome_orders() const {
  return std::vector<std::uint32_t>(m_ * m_ - m_, field_->characteristic());
}

std::vector<Elem> CompanionInner::encode(std::span<const Elem> digits) const {
  check_digits(digits, m_, field_->characteristic());
  const Grid tile = field_->to_companion_matrix(field_->from_base_vector(digits));
  return {tile.cells().begin(), tile.cells().end()};
}

std::vector<Elem> CompanionInner::message_part(std::span<const Elem> block) const {
  std::vector<Elem> digits(m_);
  for (std::size_t r = 0; r < m_; ++r) digits[r] = block[r * m_];
  return digits;
}

std::vector<Elem> CompanionInner::syndrome(std::span<const Elem> block) const {
  const auto expected = encode(message_part(block));
  const PrimeField& base = field_->base();
  std::vector<Elem> s;
  s.reserve(m_ * m_ - m_);
  for (std::size_t r = 0; r < m_; ++r) {
    for (std::size_t c = 1; c < m_; ++c) s.push_back(base.sub(block[r * m_ + c], expected[r * m_ + c]));
  }
  return s;
}

std::optional<std::vector<Elem>> CompanionInner::decode(std::span<const Elem> syndrome) const {
  for (auto v : syndrome) {
    if (v != 0) return std::nullopt;
  }
  return std::vector<Elem>(m_ * m_, 0);
}

std::optional<std::vector<Elem>> CompanionInner::reconstruct(std::span<const Elem> digits,
                                                             std::span<const Elem> syndrome) const {
  auto block = encode(digits);
  const PrimeField& base = field_->base();
  std::size_t idx = 0;
  for (std::size_t r = 0; r < m_; ++r) {
    for (std::size_t c = 1; c < m_; ++c) block[r * m_ + c] = base.add(block[r * m_ + c], syndrome[idx++]);
  }
  return block;
}

std::string CompanionInner::spec() const { return "companion(" + field_->spec() + ")"; }

// --- ConcatCode ------------------------------------------------------------

ConcatCode::ConcatCode(std::shared_ptr<const InnerCode> inner, RsCode outer, Layout layout,
                       InnerFailurePolicy policy)
    : inner_(std::move(inner)), outer_(std::move(outer)), layout_(layout), policy_(policy) {
  if (!inner_) throw Error(Errc::InvalidArgument, "null inner code");
  if (inner_->characteristic() != outer_.field().characteristic()) {
    throw Error(Errc::InvalidArgument, "inner and outer codes must share the prime base field");
  }
  if (inner_->k() != outer_.field().degree()) {
    throw Error(Errc::InvalidArgument, "inner dimension k=" + std::to_string(inner_->k()) +
                                           " must equal the outer field degree " +
                                           std::to_string(outer_.field().degree()));
  }
  if (const auto* comp = dynamic_cast<const CompanionInner*>(inner_.get())) {
    if (!(comp->field() == outer_.field())) {
      throw Error(Errc::InvalidArgument, "companion inner code must use the outer field");
    }
  }
  const std::size_t big_n = outer_.n();
  const std::size_t n = inner_->n();
  const std::size_t a = layout_.a;
  const std::size_t b = layout_.b;
  switch (layout_.kind) {
    case LayoutKind::Flat:
      shape_ = {1, big_n * n};
      break;
    case LayoutKind::IV:
      if (a == 0 || b == 0 || big_n % b != 0 || n % a != 0) {
        throw Error(Errc::ShapeMismatch, "layout iv(a,b) needs b | N and a | n");
      }
      shape_ = {big_n * a / b, n * b / a};
      break;
    case LayoutKind::V:
      if (a == 0 || b == 0 || big_n % a != 0 || n % b != 0) {
        throw Error(Errc::ShapeMismatch, "layout v(a,b) needs a | N and b | n");
      }
      shape_ = {big_n * n / (a * b), a * b};
      break;
    case LayoutKind::VI:
      if (big_n < n) throw Error(Errc::ShapeMismatch, "layout vi needs N >= n");
      shape_ = {n, big_n};
      break;
  }
  cells_.resize(big_n * n);
  for (std::size_t i = 0; i < big_n; ++i) {
    for (std::size_t p = 0; p < n; ++p) {
      const auto [row, col] = layout_index(i + 1, p + 1);
      cells_[i * n + p] = row * shape_.cols + col;
    }
  }
}

std::pair<std::size_t, std::size_t> ConcatCode::layout_index(std::size_t i, std::size_t p) const {
  const std::size_t big_n = outer_.n();
  const std::size_t n = inner_->n();
  if (i < 1 || i > big_n || p < 1 || p > n) throw Error(Errc::IndexOutOfRange, "(i, p) outside the code");
  const std::size_t i0 = i - 1, p0 = p - 1;
  const std::size_t a = layout_.a, b = layout_.b;
  switch (layout_.kind) {
    case LayoutKind::Flat:
      return {0, i0 * n + p0};
    case LayoutKind::IV: {
      const std::size_t r = i0 / b, j = i0 % b;
      const std::size_t w = p0 / (n / a), cb = p0 % (n / a);
      return {w * (big_n / b) + r, cb * b + j};
    }
    case LayoutKind::V: {
      const std::size_t w = i0 / a, g = i0 % a;
      const std::size_t r = p0 / b, j = p0 % b;
      return {w * (n / b) + r, g * b + j};
    }
    case LayoutKind::VI:
      return {p0, (i0 + p0) % big_n};
  }
  throw Error(Errc::IndexOutOfRange, "unknown layout");
}

std::string ConcatCode::spec() const {
  std::ostringstream os;
  os << "concat(inner=" << inner_->spec() << ", outer=" << outer_.spec() << ", layout=";
  switch (layout_.kind) {
    case LayoutKind::Flat: os << "flat"; break;
    case LayoutKind::IV: os << "iv(" << layout_.a << ',' << layout_.b << ')'; break;
    case LayoutKind::V: os << "v(" << layout_.a << ',' << layout_.b << ')'; break;
    case LayoutKind::VI: os << "vi"; break;
  }
  os << ')';
  return os.str();
}

std::vector<std::uint32_t> ConcatCode::syndrome_orders() const {
  std::vector<std::uint32_t> orders;
  const auto inner_orders = inner_->syndrome_orders();
  orders.reserve(outer_.n() * inner_orders.size() + outer_.redundancy());
  for (std::size_t i = 0; i < outer_.n(); ++i) orders.insert(orders.end(), inner_orders.begin(), inner_orders.end());
  orders.resize(orders.size() + outer_.redundancy(), outer_.field().order());
  return orders;
}

Syndrome ConcatCode::syndrome(const Grid& word) const {
  check_word(word);
  const std::size_t big_n = outer_.n();
  const std::size_t n = inner_->n();
  Syndrome s;
  std::vector<Elem> outer_word(big_n);
  std::vector<Elem> block(n);
  for (std::size_t i = 0; i < big_n; ++i) {
    for (std::size_t p = 0; p < n; ++p) block[p] = word[cells_[i * n + p]];
    const auto inner_syn = inner_->syndrome(block);
    s.values.insert(s.values.end(), inner_syn.begin(), inner_syn.end());
    outer_word[i] = outer_.field().from_base_vector(inner_->message_part(block));
  }
  const Syndrome outer_syn = outer_.syndrome(outer_word);
  s.values.insert(s.values.end(), outer_syn.values.begin(), outer_syn.values.end());
  return s;
}

ConcatDecodeReport ConcatCode::decode_detailed(const Syndrome& s) const {
  check_syndrome(s);
  const std::size_t big_n = outer_.n();
  const std::size_t n = inner_->n();
  const std::size_t inner_len = inner_->syndrome_orders().size();
  const ExtField& outer_field = outer_.field();
  const PrimeField& base = outer_field.base();

  ConcatDecodeReport report;
  report.inner_failed.assign(big_n, false);

  // Step 1: inner decoding, block by block.
  std::vector<std::vector<Elem>> estimates(big_n);
  std::vector<Elem> known(big_n, 0);
  for (std::size_t i = 0; i < big_n; ++i) {
    const std::span<const Elem> syn(s.values.data() + i * inner_len, inner_len);
    auto e = inner_->decode(syn);
    if (!e) {
      report.inner_failed[i] = true;
      e = std::vector<Elem>(n, 0);
    }
    known[i] = outer_field.from_base_vector(inner_->message_part(*e));
    estimates[i] = std::move(*e);
  }

  // Step 2: the outer decoder sees what the inner estimates leave unexplained.
  Syndrome outer_syn{{s.values.begin() + static_cast<std::ptrdiff_t>(big_n * inner_len), s.values.end()}};
  const Syndrome explained = outer_.syndrome(known);
  for (std::size_t j = 0; j < outer_syn.values.size(); ++j) {
    outer_syn.values[j] = outer_field.sub(outer_syn.values[j], explained.values[j]);
  }
  std::vector<std::size_t> erasures;
  if (policy_ == InnerFailurePolicy::Erasure) {
    for (std::size_t i = 0; i < big_n; ++i) {
      if (report.inner_failed[i]) erasures.push_back(i);
    }
    if (erasures.size() > outer_.redundancy()) return report;
  }
  const auto outer_error = outer_.decode_syndrome(outer_syn, erasures);
  if (!outer_error) return report;

  // Step 3: rebuild every block the outer decoder touched.
  Grid error(shape_.rows, shape_.cols);
  for (std::size_t i = 0; i < big_n; ++i) {
    const Elem delta = (*outer_error)[i];
    std::vector<Elem> block;
    if (delta == 0 && !report.inner_failed[i]) {
      block = std::move(estimates[i]);
    } else {
      if (delta != 0) report.outer_error_positions.push_back(i);
      auto digits = inner_->message_part(estimates[i]);
      const auto delta_digits = outer_field.to_base_vector(delta);
      for (std::size_t d = 0; d < digits.size(); ++d) digits[d] = base.add(digits[d], delta_digits[d]);
      const std::span<const Elem> syn(s.values.data() + i * inner_len, inner_len);
      auto rebuilt = inner_->reconstruct(digits, syn);
      if (!rebuilt) {
        report.outer_error_positions.clear();
        return report;
      }
      block = std::move(*rebuilt);
    }
    for (std::size_t p = 0; p < n; ++p) error[cells_[i * n + p]] = block[p];
  }
  if (syndrome(error) != s) {
    report.outer_error_positions.clear();
    return report;
  }
  report.error = std::move(error);
  return report;
}

Grid ConcatCode::encode(std::span<const Elem> message) const {
  const auto outer_word = outer_.encode(message);
  const std::size_t n = inner_->n();
  Grid out(shape_.rows, shape_.cols);
  for (std::size_t i = 0; i < outer_word.size(); ++i) {
    const auto block = inner_->encode(outer_.field().to_base_vector(outer_word[i]));
    for (std::size_t p = 0; p < n; ++p) out[cells_[i * n + p]] = block[p];
  }
  return out;
}

void ConcatCode::require_layout(LayoutKind kind, const char* query) const {
  if (layout_.kind != kind) throw Error(Errc::QueryUnsupported, std::string(query) + " does not apply to this layout");
}

std::size_t ConcatCode::flat_burst_limit() const {
  require_layout(LayoutKind::Flat, "flat burst bound");
  const std::size_t n = inner_->n(), s = outer_.t(), t = inner_->t();
  if (s == 0) return 0;
  return n * (s - 1) + 2 * t + 1;
}

Rect ConcatCode::iv_burst() const {
  require_layout(LayoutKind::IV, "iv burst bound");
  return {outer_.n() / layout_.b, layout_.b};
}

std::vector<VRectangle> ConcatCode::v_rectangles() const {
  require_layout(LayoutKind::V, "v rectangle bound");
  const std::size_t s = outer_.t();
  const std::size_t tile_rows = inner_->n() / layout_.b;
  std::vector<VRectangle> out;
  // s2 = floor(s / s1) is the widest choice for each s1; keep the pairs no
  // other pair dominates.
  for (std::size_t s1 = 1; s1 <= s; ++s1) {
    const std::size_t s2 = s / s1;
    if (s1 < s && (s / (s1 + 1)) == s2) continue;
    out.push_back({s1, s2, {(s1 - 1) * tile_rows + 1, (s2 - 1) * layout_.b + 1}});
  }
  return out;
}

std::pair<Rect, Rect> ConcatCode::vi_bursts() const {
  require_layout(LayoutKind::VI, "vi burst shapes");
  return {{1, inner_->n()}, {inner_->n(), 1}};
}

std::vector<std::string> ConcatCode::capability_report() const {
  std::vector<std::string> lines;
  const std::size_t t = inner_->t(), s = outer_.t(), n = inner_->n();
  {
    std::ostringstream os;
    os << "inner errors per block t: " << t << ", outer symbol errors s: " << s;
    lines.push_back(os.str());
  }
  std::ostringstream os;
  switch (layout_.kind) {
    case LayoutKind::Flat: {
      const std::size_t limit = flat_burst_limit();
      os << "single burst bound n(s-1)+2t+1 = " << limit << "; guaranteed lengths up to "
         << (limit == 0 ? 0 : limit - 1);
      lines.push_back(os.str());
      break;
    }
    case LayoutKind::IV: {
      const Rect r = iv_burst();
      os << t << " rectangular burst(s) of " << r.rows << 'x' << r.cols << " plus " << s << " random errors";
      lines.push_back(os.str());
      break;
    }
    case LayoutKind::V: {
      for (const auto& v : v_rectangles()) {
        std::ostringstream line;
        line << "single burst up to " << v.rect.rows << 'x' << v.rect.cols << " (s1=" << v.s1 << ", s2=" << v.s2
             << ")";
        lines.push_back(line.str());
      }
      os << "each " << n / layout_.b << 'x' << layout_.b
         << " tile not intersecting the burst may hold up to " << t << " more errors";
      lines.push_back(os.str());
      break;
    }
    case LayoutKind::VI: {
      os << "up to " << t << " bursts of 1x" << n << " or " << n << "x1";
      lines.push_back(os.str());
      std::ostringstream diag;
      diag << "up to " << s << " fully corrupted diagonals (one outer error each)";
      lines.push_back(diag.str());
      break;
    }
  }
  return lines;
}

std::string ConcatCode::recommendation() const {
  switch (layout_.kind) {
    case LayoutKind::Flat:
      return "a single long 1D burst plus isolated errors";
    case LayoutKind::IV:
      return "many big rectangular bursts, little isolated noise";
    case LayoutKind::V:
      return "one big burst on top of widespread isolated noise";
    case LayoutKind::VI:
      return "long thin bursts (single rows or columns) plus isolated noise";
  }
  return {};
}

}  // namespace sfh
