#include <gtest/gtest.h>

#include "braidforge/brick.hpp"
#include "oracles.hpp"

using namespace braidforge;

namespace {

std::vector<std::tuple<int, std::size_t, std::size_t>> footprint(const BrickDiagram& d) {
  std::vector<std::tuple<int, std::size_t, std::size_t>> out;
  for (const auto& b : d.bricks()) out.emplace_back(b.column, b.lo, b.hi);
  return out;
}

}  // namespace

TEST(Brick, AlphaTilde) {
  const BrickDiagram d(parse_word("1 2 1 1 2 1"));
  // Hand oracle: one-based pairs (1,3),(3,4),(4,6) in column 1 and (2,5) in column 2.
  using T = std::tuple<int, std::size_t, std::size_t>;
  EXPECT_EQ(footprint(d), (std::vector<T>{{1, 0, 2}, {1, 2, 3}, {1, 3, 5}, {2, 1, 4}}));
  for (std::size_t k = 0; k < d.size(); ++k) EXPECT_EQ(d[k].id, static_cast<int>(k));
}

TEST(Brick, SingleLetterHasNoBricks) {
  EXPECT_EQ(brick_count(parse_word("1", 4)), 0u);
  EXPECT_EQ(BrickDiagram(parse_word("1", 4)).size(), 0u);
  EXPECT_EQ(brick_count(BraidWord(3)), 0u);
}

TEST(Brick, FourStrandSample) {
  const BrickDiagram d(parse_word("1 3 1 2 1 3 1 3 1 2 3 1 3 2"));
  EXPECT_EQ(d.column(1).size(), 5u);
  EXPECT_EQ(d.column(2).size(), 2u);
  EXPECT_EQ(d.column(3).size(), 4u);
  EXPECT_EQ(d.size(), 11u);
}

TEST(Brick, PowersOfOneGenerator) {
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(brick_count(BraidWord(2, std::vector<int>(static_cast<std::size_t>(n), 1))),
              static_cast<std::size_t>(n - 1));
  }
}

TEST(Brick, TorusWords) {
  for (int q = 1; q <= 6; ++q) {
    std::vector<int> w;
    for (int k = 0; k < q; ++k) {
      w.push_back(1);
      w.push_back(2);
    }
    EXPECT_EQ(brick_count(BraidWord(3, w)), static_cast<std::size_t>(2 * q - 2));
  }
}

TEST(Brick, AgreesWithDirectScan) {
  oracle::Gen gen(21);
  for (int i = 0; i < 300; ++i) {
    const int n = gen.uniform(2, 6);
    const auto letters = gen.word(n, gen.uniform(0, 16));
    const BrickDiagram d(BraidWord(n, letters));
    const auto raw = oracle::scan_bricks(letters);
    ASSERT_EQ(d.size(), raw.size());
    EXPECT_EQ(brick_count(d.word()), raw.size());
    for (std::size_t k = 0; k < raw.size(); ++k) {
      EXPECT_EQ(d[k].column, raw[k].column);
      EXPECT_EQ(d[k].lo, raw[k].lo);
      EXPECT_EQ(d[k].hi, raw[k].hi);
      // No same-column letter strictly inside a brick.
      for (std::size_t p = d[k].lo + 1; p < d[k].hi; ++p) EXPECT_NE(letters[p], d[k].column);
    }
  }
}

TEST(Brick, InvariantUnderFarCommutationAndMarkov) {
  oracle::Gen gen(8);
  for (int i = 0; i < 200; ++i) {
    const BraidWord w(5, gen.word(5, gen.uniform(2, 12)));
    for (const auto& m : enumerate_moves(w)) {
      if (m.kind != MoveKind::FarComm && m.kind != MoveKind::MarkovStab &&
          m.kind != MoveKind::MarkovDestab) {
        continue;
      }
      EXPECT_EQ(brick_count(apply_move(w, m)), brick_count(w));
    }
  }
}

TEST(Brick, Deterministic) {
  const BraidWord w = parse_word("2 1 2 2 1 3 3 2");
  EXPECT_EQ(BrickDiagram(w).bricks(), BrickDiagram(w).bricks());
}
