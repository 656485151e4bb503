#include <doctest.h>

#include <set>

#include "sfh/channel.hpp"
#include "support.hpp"

using namespace sfh;
using testing::error_of;

TEST_CASE("SplitMix64 reference outputs") {
  SplitMix64 g(0);
  CHECK(g.next() == 0xe220a8397b1dcdafULL);
  CHECK(g.next() == 0x6e789e6aa1b965f4ULL);
  CHECK(g.next() == 0x06c45d188009454fULL);
  SplitMix64 h(1234567);
  CHECK(h() == 0x599ed017fb08fc85ULL);
  CHECK(h() == 0x2c73f08458540fa5ULL);

  SplitMix64 b(9);
  std::vector<int> counts(5, 0);
  for (int i = 0; i < 5000; ++i) ++counts[b.below(5)];
  for (int c : counts) CHECK(c > 800);

  // per-trial streams do not depend on order of use
  auto t3 = SplitMix64::for_trial(42, 3);
  auto t3b = SplitMix64::for_trial(42, 3);
  auto t4 = SplitMix64::for_trial(42, 4);
  const auto v = t3.next();
  CHECK(v == t3b.next());
  CHECK(v != t4.next());
  SplitMix64 parent(5);
  auto child = parent.split();
  CHECK(child.next() != parent.next());
}

TEST_CASE("1D bursts") {
  SplitMix64 rng(1);
  const auto one = gen_burst_1d(rng, 2, 10, 1, 0);
  CHECK(one.weight() == 1);
  CHECK(one.cells[0] == 1);
  for (int i = 0; i < 500; ++i) {
    const std::size_t pos = rng.below(7);
    const auto e = gen_burst_1d(rng, 3, 10, 4, pos);
    CHECK(e.cells[pos] != 0);
    CHECK(e.cells[pos + 3] != 0);
    for (std::size_t j = 0; j < 10; ++j)
      if (j < pos || j > pos + 3) CHECK(e.cells[j] == 0);
    CHECK(satisfies_burst_definition(e.cells, e.bursts[0]));
  }
  CHECK(error_of([&] { (void)gen_burst_1d(rng, 2, 10, 4, 7); }) == Errc::OutOfRange);
  CHECK(error_of([&] { (void)gen_burst_1d(rng, 2, 10, 0, 0); }) == Errc::OutOfRange);

  SplitMix64 a(77), b(77);
  CHECK(gen_burst_1d(a, 5, 40, 9, 3).cells == gen_burst_1d(b, 5, 40, 9, 3).cells);
}

TEST_CASE("2D bursts") {
  SplitMix64 rng(2);
  const auto single = gen_burst_2d(rng, 2, {6, 10}, 1, 1, 2, 2);
  CHECK(single.weight() == 1);
  CHECK(single.cells.at(2, 2) == 1);
  for (int i = 0; i < 2000; ++i) {
    const auto e = gen_burst_2d(rng, 2, {6, 10}, 3, 3, rng.below(4), rng.below(8));
    const auto& w = e.bursts[0];
    // every border row and column holds a nonzero
    for (std::size_t k : {std::size_t{0}, std::size_t{2}}) {
      bool row = false, col = false;
      for (std::size_t j = 0; j < 3; ++j) {
        row = row || e.cells.at(w.row + k, w.col + j) != 0;
        col = col || e.cells.at(w.row + j, w.col + k) != 0;
      }
      CHECK(row);
      CHECK(col);
    }
    CHECK(e.weight() <= 9);
  }
  CHECK(error_of([&] { (void)gen_burst_2d(rng, 2, {6, 10}, 3, 3, 4, 0); }) == Errc::OutOfRange);
  Grid g(3, 3);
  g.at(0, 0) = 1;
  CHECK_FALSE(satisfies_burst_definition(g, {0, 0, 3, 3}));
  g.at(2, 2) = 1;
  CHECK(satisfies_burst_definition(g, {0, 0, 3, 3}));
}

TEST_CASE("mixed patterns") {
  SplitMix64 rng(3);
  const auto zero = gen_mixed(rng, 2, {6, 10}, {}, 0);
  CHECK(zero.cells.is_zero());
  CHECK(zero.describe() == "shape=6x10 bursts=[] random=0 weight=0");

  const auto e = gen_mixed(rng, 2, {6, 10}, {{2, 2}, {1, 3}}, 3);
  CHECK(e.bursts.size() == 2);
  CHECK(e.random_errors == 3);
  std::size_t outside = 0;
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 10; ++c) {
      bool inside = false;
      for (const auto& b : e.bursts) inside = inside || (r >= b.row && r < b.row + b.rows && c >= b.col && c < b.col + b.cols);
      if (!inside && e.cells.at(r, c) != 0) ++outside;
    }
  CHECK(outside == 3);

  for (int i = 0; i < 10000; ++i) {
    const auto m = gen_mixed(rng, 3, {8, 8}, {{2, 3}, {3, 2}, {1, 4}}, 2);
    for (std::size_t a = 0; a < m.bursts.size(); ++a) {
      CHECK(satisfies_burst_definition(m.cells, m.bursts[a]));
      for (std::size_t b = a + 1; b < m.bursts.size(); ++b) CHECK_FALSE(m.bursts[a].overlaps(m.bursts[b]));
    }
  }
  CHECK(error_of([&] { (void)gen_mixed(rng, 2, {4, 4}, {{3, 3}, {3, 3}}, 0); }) == Errc::PlacementFailed);
  CHECK(error_of([&] { (void)gen_mixed(rng, 2, {4, 4}, {{5, 1}}, 0); }) == Errc::PlacementFailed);
  CHECK(error_of([&] { (void)gen_mixed(rng, 2, {4, 4}, {{4, 4}}, 1); }) == Errc::PlacementFailed);
}
