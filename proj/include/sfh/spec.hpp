#pragma once

// Spec strings:
//   gf(p^m[;modulus=c0,...,cm])      gf(p) is shorthand for gf(p^1)
//   rs(n,k;gf(...))                  n < p^m - 1 selects the shortened code
//   bch(n,t;gf(p))
//   cI(rs(...))  cI+parity(rs(...))  cII(rs(...);n1,n2)  cIII(rs(...);n1,n2)
//   concat(inner=<inner>, outer=rs(...), layout=flat|iv(a,b)|v(a,b)|vi)
//   <inner> := bch(...) | id(k;gf(p)) | companion(gf(p^m))

#include <memory>
#include <string_view>

#include "sfh/concat.hpp"
#include "sfh/construction.hpp"
#include "sfh/expand.hpp"
#include "sfh/gf.hpp"
#include "sfh/rs.hpp"

namespace sfh {

/// All parse functions throw Error(ParseError) on malformed input and the
/// usual construction errors on invalid parameters.
FieldPtr parse_field(std::string_view text);
RsCode parse_rs(std::string_view text);
BchCode parse_bch(std::string_view text);
std::shared_ptr<const InnerCode> parse_inner(std::string_view text);
std::shared_ptr<const Construction> parse_construction(std::string_view text);

}  // namespace sfh
