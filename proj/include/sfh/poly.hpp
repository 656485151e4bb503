#pragma once

// Dense polynomials over an extension field, coefficients low order first.

#include <span>
#include <vector>

#include "sfh/gf.hpp"

namespace sfh::poly {

using Poly = std::vector<Elem>;

inline void trim(Poly& a) {
  while (a.size() > 1 && a.back() == 0) a.pop_back();
}

inline std::size_t degree(const Poly& a) {
  std::size_t d = a.size();
  while (d > 1 && a[d - 1] == 0) --d;
  return d == 0 ? 0 : d - 1;
}

inline Poly mul(const ExtField& f, std::span<const Elem> a, std::span<const Elem> b) {
  if (a.empty() || b.empty()) return {0};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
    }
  }
  return out;
}

/// Remainder of a modulo a monic divisor; result has exactly deg(divisor)
/// coefficients.
inline Poly rem_monic(const ExtField& f, Poly a, std::span<const Elem> divisor) {
  const std::size_t dd = divisor.size() - 1;
  if (a.size() < dd) a.resize(dd, 0);
  for (std::size_t d = a.size(); d-- > dd;) {
    const Elem c = a[d];
    if (c == 0) continue;
    for (std::size_t i = 0; i < dd; ++i) {
      if (divisor[i] != 0) a[d - dd + i] = f.sub(a[d - dd + i], f.mul(c, divisor[i]));
    }
    a[d] = 0;
  }
  a.resize(dd);
  return a;
}

/// Horner evaluation.
inline Elem eval(const ExtField& f, std::span<const Elem> a, Elem x) {
  Elem acc = 0;
  for (std::size_t i = a.size(); i-- > 0;) acc = f.add(f.mul(acc, x), a[i]);
  return acc;
}

}  // namespace sfh::poly
