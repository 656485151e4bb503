#include "sfh/fuzzy.hpp"

#include <openssl/evp.h>

#include <sstream>

#include "sfh/spec.hpp"

namespace sfh {

namespace {

const EVP_MD* digest_for(std::string_view alg) {
  if (alg == "sha-256") return EVP_sha256();
  if (alg == "sha-512") return EVP_sha512();
  throw Error(Errc::UnsupportedHash, "unsupported hash '" + std::string(alg) + "'");
}

void put_be(Bytes& out, std::uint64_t value, std::size_t width) {
  for (std::size_t i = width; i-- > 0;) out.push_back(static_cast<std::uint8_t>(value >> (8 * i)));
}

}  // namespace

Bytes hash_bytes(std::string_view alg, std::span<const std::uint8_t> data) {
  const EVP_MD* md = digest_for(alg);
  Bytes out(static_cast<std::size_t>(EVP_MD_size(md)));
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), out.data(), &len, md, nullptr) != 1) {
    throw Error(Errc::UnsupportedHash, "digest computation failed");
  }
  out.resize(len);
  return out;
}

std::size_t digest_size(std::string_view alg) { return static_cast<std::size_t>(EVP_MD_size(digest_for(alg))); }

std::string to_hex(std::span<const std::uint8_t> bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xf]);
  }
  return out;
}

Bytes from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw Error(Errc::ParseError, "odd-length hex string");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  Bytes out;
  out.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    const int hi = nibble(hex[i]), lo = nibble(hex[i + 1]);
    if (hi < 0 || lo < 0) throw Error(Errc::ParseError, "invalid hex character");
    out.push_back(static_cast<std::uint8_t>(hi << 4 | lo));
  }
  return out;
}

std::size_t symbol_width(std::uint64_t order) noexcept {
  std::size_t width = 1;
  for (std::uint64_t max = order > 0 ? order - 1 : 0; max > 0xff; max >>= 8) ++width;
  return width;
}

Bytes canonical_bytes(std::uint32_t p, const Grid& word) {
  const std::string field = "gf(" + std::to_string(p) + ")";
  Bytes out(field.begin(), field.end());
  out.push_back(';');
  put_be(out, word.rows(), 4);
  put_be(out, word.cols(), 4);
  const std::size_t width = symbol_width(p);
  for (auto v : word.cells()) put_be(out, v, width);
  return out;
}

Bytes serialize_syndrome(const Construction& code, const Syndrome& s) {
  code.check_syndrome(s);
  const auto orders = code.syndrome_orders();
  Bytes out;
  for (std::size_t i = 0; i < orders.size(); ++i) put_be(out, s.values[i], symbol_width(orders[i]));
  return out;
}

Syndrome parse_syndrome(const Construction& code, std::span<const std::uint8_t> bytes) {
  const auto orders = code.syndrome_orders();
  Syndrome s;
  s.values.reserve(orders.size());
  std::size_t pos = 0;
  for (auto order : orders) {
    const std::size_t width = symbol_width(order);
    if (pos + width > bytes.size()) throw Error(Errc::LengthMismatch, "syndrome bytes too short");
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < width; ++i) v = v << 8 | bytes[pos + i];
    pos += width;
    if (v >= order) throw Error(Errc::AlphabetMismatch, "syndrome component out of range");
    s.values.push_back(static_cast<Elem>(v));
  }
  if (pos != bytes.size()) throw Error(Errc::LengthMismatch, "syndrome bytes too long");
  return s;
}

std::string Template::serialize() const {
  std::ostringstream os;
  os << "sfh" << scheme_version << '\n'
     << "code=" << code_spec << '\n'
     << "hash=" << hash_alg << '\n'
     << "digest=" << to_hex(digest) << '\n'
     << "syndrome=" << to_hex(syndrome) << '\n';
  return os.str();
}

Template Template::parse(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    if (nl == std::string_view::npos) throw Error(Errc::ParseError, "template is truncated (missing newline)");
    auto line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    text.remove_prefix(nl + 1);
  }
  if (lines.size() != 5) throw Error(Errc::ParseError, "template must have exactly 5 lines");
  if (lines[0] != "sfh1") throw Error(Errc::ParseError, "bad magic, expected sfh1");
  auto field = [&](std::size_t i, std::string_view key) {
    if (lines[i].substr(0, key.size()) != key) {
      throw Error(Errc::ParseError, "expected '" + std::string(key) + "' on line " + std::to_string(i + 1));
    }
    return lines[i].substr(key.size());
  };
  Template t;
  t.scheme_version = 1;
  t.code_spec = std::string(field(1, "code="));
  t.hash_alg = std::string(field(2, "hash="));
  t.digest = from_hex(field(3, "digest="));
  t.syndrome = from_hex(field(4, "syndrome="));
  if (t.code_spec.empty()) throw Error(Errc::ParseError, "empty code spec");
  if (t.digest.size() != digest_size(t.hash_alg)) throw Error(Errc::ParseError, "digest length does not match hash");
  return t;
}

Template enroll(const Grid& x, const Construction& code, std::string_view hash_alg) {
  code.check_word(x);
  Template t;
  t.code_spec = code.spec();
  t.hash_alg = std::string(hash_alg);
  t.digest = hash_bytes(hash_alg, canonical_bytes(code.characteristic(), x));
  t.syndrome = serialize_syndrome(code, code.syndrome(x));
  return t;
}

const char* status_name(VerifyStatus status) noexcept {
  switch (status) {
    case VerifyStatus::Accept: return "ACCEPT";
    case VerifyStatus::DecodeFailure: return "DecodeFailure";
    case VerifyStatus::HashMismatch: return "HashMismatch";
  }
  return "?";
}

namespace {

VerifyResult verify_with(const Grid& y, const Template& t, const Construction& code) {
  if (t.digest.size() != digest_size(t.hash_alg)) throw Error(Errc::LengthMismatch, "digest length");
  const Syndrome stored = parse_syndrome(code, t.syndrome);
  code.check_word(y);

  // Stored minus presented: the decoded v satisfies x = y + v.
  const Syndrome diff = subtract(code.characteristic(), stored, code.syndrome(y));
  const auto v = code.decode(diff);
  if (!v) return {VerifyStatus::DecodeFailure, std::nullopt};

  Grid candidate = y;
  const std::uint32_t p = code.characteristic();
  for (std::size_t i = 0; i < candidate.size(); ++i) candidate[i] = static_cast<Elem>((candidate[i] + (*v)[i]) % p);
  if (hash_bytes(t.hash_alg, canonical_bytes(p, candidate)) != t.digest) {
    return {VerifyStatus::HashMismatch, std::nullopt};
  }
  return {VerifyStatus::Accept, std::move(candidate)};
}

}  // namespace

VerifyResult verify(const Grid& y, const Template& t, const Construction& code) {
  if (t.code_spec != code.spec()) throw Error(Errc::InvalidArgument, "template was enrolled with another code");
  return verify_with(y, t, code);
}

VerifyResult verify(const Grid& y, const Template& t) {
  const auto code = parse_construction(t.code_spec);
  return verify_with(y, t, *code);
}

}  // namespace sfh
