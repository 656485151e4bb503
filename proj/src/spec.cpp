#include "sfh/spec.hpp"

#include <cctype>
#include <charconv>
#include <string>

namespace sfh {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(std::string_view lit) {
    skip_ws();
    if (text_.substr(pos_, lit.size()) == lit) {
      pos_ += lit.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view lit) {
    if (!consume(lit)) fail("expected '" + std::string(lit) + "'");
  }

  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '+' || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::uint64_t number() {
    skip_ws();
    std::uint64_t value = 0;
    const auto* begin = text_.data() + pos_;
    const auto* end = text_.data() + text_.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) fail("expected a number");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  std::size_t size() {
    const auto v = number();
    if (v > (std::uint64_t{1} << 32)) fail("number too large");
    return static_cast<std::size_t>(v);
  }

  bool at_end() {
    skip_ws();
    return pos_ == text_.size();
  }

  void finish() {
    if (!at_end()) fail("trailing characters");
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::ParseError, what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  FieldPtr field() {
    expect("gf(");
    const auto p = number();
    std::uint64_t m = 1;
    if (consume("^")) m = number();
    std::optional<std::vector<Elem>> modulus;
    if (consume(";")) {
      expect("modulus");
      expect("=");
      modulus.emplace();
      do {
        modulus->push_back(static_cast<Elem>(number()));
      } while (consume(","));
    }
    expect(")");
    if (p > 65521 || m == 0 || m > 64) fail("field parameters out of range");
    return build_ext_field(static_cast<std::uint32_t>(p), static_cast<unsigned>(m), std::move(modulus));
  }

  RsCode rs() {
    expect("rs(");
    const auto n = size();
    expect(",");
    const auto k = size();
    expect(";");
    auto f = field();
    expect(")");
    return RsCode(std::move(f), n, k);
  }

  BchCode bch() {
    expect("bch(");
    const auto n = size();
    expect(",");
    const auto t = size();
    expect(";");
    expect("gf(");
    const auto p = number();
    if (p < 2 || p > 65521) fail("bad characteristic");
    std::optional<std::uint64_t> declared_m;
    if (consume("^")) declared_m = number();
    std::optional<std::vector<Elem>> modulus;
    if (consume(";")) {
      expect("modulus");
      expect("=");
      modulus.emplace();
      do {
        modulus->push_back(static_cast<Elem>(number()));
      } while (consume(","));
    }
    expect(")");
    expect(")");
    unsigned m = 0;
    std::uint64_t power = 1;
    while (power - 1 < n && m < 32) {
      power *= p;
      ++m;
    }
    if (power - 1 != n) fail("BCH length must be p^m - 1");
    if (declared_m && *declared_m != m && *declared_m != 1) fail("BCH length does not match the field degree");
    if (modulus && (!declared_m || *declared_m != m)) fail("modulus needs the splitting-field degree");
    return BchCode(build_ext_field(static_cast<std::uint32_t>(p), m, std::move(modulus), true), t);
  }

  std::shared_ptr<const InnerCode> inner() {
    skip_ws();
    const std::size_t mark = pos_;
    const auto name = identifier();
    pos_ = mark;
    if (name == "bch") return std::make_shared<BchInner>(bch());
    if (name == "id") {
      expect("id(");
      const auto k = size();
      expect(";");
      auto f = field();
      expect(")");
      if (f->degree() != 1) fail("identity inner code takes the prime field gf(p)");
      return std::make_shared<IdentityInner>(f->characteristic(), k);
    }
    if (name == "companion") {
      expect("companion(");
      auto f = field();
      expect(")");
      return std::make_shared<CompanionInner>(std::move(f));
    }
    fail("unknown inner code '" + name + "'");
  }

  Layout layout() {
    const auto name = identifier();
    if (name == "flat") return Layout::flat();
    if (name == "vi") return Layout::vi();
    if (name == "iv" || name == "v") {
      expect("(");
      const auto a = size();
      expect(",");
      const auto b = size();
      expect(")");
      return name == "iv" ? Layout::iv(a, b) : Layout::v(a, b);
    }
    fail("unknown layout '" + name + "'");
  }

  std::shared_ptr<const Construction> construction() {
    skip_ws();
    const std::size_t mark = pos_;
    const auto name = identifier();
    if (name == "bch") {
      pos_ = mark;
      return std::make_shared<BchConstruction>(bch());
    }
    expect("(");
    if (name == "cI" || name == "cI+parity") {
      auto code = rs();
      expect(")");
      return std::make_shared<ExpandedCode>(std::move(code),
                                            name == "cI" ? ExpansionKind::RowVector : ExpansionKind::RowVectorParity);
    }
    if (name == "cII" || name == "cIII") {
      auto code = rs();
      expect(";");
      const auto n1 = size();
      expect(",");
      const auto n2 = size();
      expect(")");
      return std::make_shared<ExpandedCode>(
          std::move(code), name == "cII" ? ExpansionKind::SquareArray : ExpansionKind::CompanionArray, n1, n2);
    }
    if (name == "concat") {
      std::shared_ptr<const InnerCode> in;
      std::optional<RsCode> out;
      std::optional<Layout> lay;
      do {
        const auto key = identifier();
        expect("=");
        if (key == "inner" && !in) {
          in = inner();
        } else if (key == "outer" && !out) {
          out.emplace(rs());
        } else if (key == "layout" && !lay) {
          lay = layout();
        } else {
          fail("unexpected or repeated key '" + key + "'");
        }
      } while (consume(","));
      expect(")");
      if (!in || !out) fail("concat needs inner= and outer=");
      return std::make_shared<ConcatCode>(std::move(in), std::move(*out), lay.value_or(Layout::flat()));
    }
    fail("unknown construction '" + name + "'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FieldPtr parse_field(std::string_view text) {
  Parser p(text);
  auto f = p.field();
  p.finish();
  return f;
}

RsCode parse_rs(std::string_view text) {
  Parser p(text);
  auto code = p.rs();
  p.finish();
  return code;
}

BchCode parse_bch(std::string_view text) {
  Parser p(text);
  auto code = p.bch();
  p.finish();
  return code;
}

std::shared_ptr<const InnerCode> parse_inner(std::string_view text) {
  Parser p(text);
  auto code = p.inner();
  p.finish();
  return code;
}

std::shared_ptr<const Construction> parse_construction(std::string_view text) {
  Parser p(text);
  auto c = p.construction();
  p.finish();
  return c;
}

}  // namespace sfh
