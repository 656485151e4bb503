#include <doctest.h>

#include "sfh/spec.hpp"
#include "support.hpp"

using namespace sfh;
using testing::error_of;

TEST_CASE("field specs") {
  const auto f = parse_field("gf(2^8;modulus=1,0,1,1,1,0,0,0,1)");
  CHECK(f->order() == 256);
  CHECK(f->spec() == "gf(2^8)");
  CHECK(parse_field("gf(2)")->order() == 2);
  CHECK(parse_field("gf(3^2)")->order() == 9);
  CHECK(parse_field(" gf( 2 ^ 4 ) ")->order() == 16);
  const auto custom = parse_field("gf(2^4;modulus=1,0,0,1,1)");
  CHECK(custom->spec() == "gf(2^4;modulus=1,0,0,1,1)");
  CHECK(parse_field(custom->spec())->modulus() == custom->modulus());
  CHECK(error_of([] { (void)parse_field("gf(2^3;modulus=1,0,0,1)"); }) == Errc::ReducibleModulus);
  CHECK(error_of([] { (void)parse_field("gf(6)"); }) == Errc::NotPrime);
  CHECK(error_of([] { (void)parse_field("gf(2^3"); }) == Errc::ParseError);
  CHECK(error_of([] { (void)parse_field("gf(2^3) x"); }) == Errc::ParseError);
  CHECK(error_of([] { (void)parse_field("field(2)"); }) == Errc::ParseError);
}

TEST_CASE("code specs") {
  const auto rs = parse_rs("rs(15,7;gf(2^4))");
  CHECK(rs.n() == 15);
  CHECK(rs.k() == 7);
  CHECK(rs.spec() == "rs(15,7;gf(2^4))");
  const auto bch = parse_bch("bch(15,2;gf(2))");
  CHECK(bch.k() == 7);
  CHECK(parse_bch("bch(4,1;gf(5))").k() == 2);
  CHECK(error_of([] { (void)parse_bch("bch(14,2;gf(2))"); }) == Errc::ParseError);
  CHECK(error_of([] { (void)parse_rs("rs(15;gf(2^4))"); }) == Errc::ParseError);
  CHECK(error_of([] { (void)parse_rs("rs(15,15;gf(2^4))"); }) == Errc::InvalidArgument);
  CHECK(parse_inner("id(4;gf(2))")->spec() == "id(4;gf(2))");
  CHECK(parse_inner("companion(gf(2^4))")->n() == 16);
  CHECK(error_of([] { (void)parse_inner("rs(15,7;gf(2^4))"); }) == Errc::ParseError);
}

TEST_CASE("construction specs round-trip") {
  const char* specs[] = {
      "cI(rs(7,3;gf(2^3)))",
      "cI+parity(rs(7,3;gf(2^3)))",
      "cII(rs(15,7;gf(2^4));3,5)",
      "cIII(rs(15,5;gf(2^4));3,5)",
      "bch(15,2;gf(2))",
      "concat(inner=bch(15,2;gf(2)), outer=rs(127,109;gf(2^7)), layout=flat)",
      "concat(inner=bch(7,1;gf(2)), outer=rs(15,11;gf(2^4)), layout=iv(7,5))",
      "concat(inner=bch(15,2;gf(2)), outer=rs(40,32;gf(2^7)), layout=v(4,5))",
      "concat(inner=bch(4,1;gf(5)), outer=rs(8,4;gf(5^2)), layout=vi)",
      "concat(inner=id(4;gf(2)), outer=rs(15,7;gf(2^4)), layout=v(5,2))",
      "concat(inner=companion(gf(2^4)), outer=rs(15,7;gf(2^4)), layout=v(5,4))",
      "cI(rs(8,4;gf(3^2)))",
  };
  for (const char* s : specs) {
    CAPTURE(s);
    const auto c = parse_construction(s);
    CHECK(c->spec() == s);
    CHECK(parse_construction(c->spec())->spec() == c->spec());
  }
  // key order and spacing are free; the canonical form is not
  const auto c = parse_construction("concat(layout=vi,outer=rs(8,4;gf(5^2)),inner=bch(4,1;gf(5)))");
  CHECK(c->spec() == "concat(inner=bch(4,1;gf(5)), outer=rs(8,4;gf(5^2)), layout=vi)");
  CHECK(parse_construction("concat(inner=bch(7,1;gf(2)), outer=rs(15,11;gf(2^4)))")->spec() ==
        "concat(inner=bch(7,1;gf(2)), outer=rs(15,11;gf(2^4)), layout=flat)");

  CHECK(error_of([] { (void)parse_construction("cIV(rs(7,3;gf(2^3)))"); }) == Errc::ParseError);
  CHECK(error_of([] { (void)parse_construction("cII(rs(7,3;gf(2^3)))"); }) == Errc::ParseError);
  CHECK(error_of([] { (void)parse_construction("cII(rs(15,7;gf(2^4));4,4)"); }) == Errc::ShapeMismatch);
  CHECK(error_of([] { (void)parse_construction("concat(inner=bch(7,1;gf(2)), inner=bch(7,1;gf(2)))"); }) ==
        Errc::ParseError);
  CHECK(error_of([] { (void)parse_construction("concat(inner=bch(7,1;gf(2)), outer=rs(15,11;gf(2^4)), layout=zz)"); }) ==
        Errc::ParseError);
  CHECK(error_of([] { (void)parse_construction(""); }) == Errc::ParseError);
}
