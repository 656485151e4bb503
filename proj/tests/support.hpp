#pragma once

#include <doctest.h>

#include <random>
#include <vector>

#include "sfh/error.hpp"
#include "sfh/grid.hpp"

namespace testing {

template <class F>
sfh::Errc error_of(F&& fn) {
  try {
    fn();
  } catch (const sfh::Error& e) {
    return e.code();
  }
  FAIL("expected an sfh::Error");
  return sfh::Errc::InvalidArgument;
}

inline std::vector<sfh::Elem> random_word(std::mt19937_64& gen, std::size_t n, std::uint32_t order) {
  std::vector<sfh::Elem> w(n);
  for (auto& v : w) v = static_cast<sfh::Elem>(gen() % order);
  return w;
}

inline sfh::Grid random_grid(std::mt19937_64& gen, sfh::Shape shape, std::uint32_t p) {
  return sfh::Grid(shape, random_word(gen, shape.size(), p));
}

}  // namespace testing
