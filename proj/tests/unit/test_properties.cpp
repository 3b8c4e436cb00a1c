#include <gtest/gtest.h>

#include "braidforge/isomap.hpp"
#include "oracles.hpp"

using namespace braidforge;

namespace {

struct Invariants {
  Abelianization ab;
  std::uint64_t s3 = 0;
  std::uint64_t s4 = 0;

  friend bool operator==(const Invariants&, const Invariants&) = default;
};

Invariants invariants_of(const Presentation& p) {
  static const FiniteTarget s3 = builtin_target("S3"), s4 = builtin_target("S4");
  HomCountOptions o;
  o.generator_cap = 16;
  return {abelianization(p), hom_count(p, s3, o).count, hom_count(p, s4, o).count};
}

WordMove pick(oracle::Gen& gen, const BraidWord& w, int max_strands) {
  std::vector<WordMove> moves;
  for (const auto& m : enumerate_moves(w)) {
    if (m.kind == MoveKind::MarkovStab && w.strands() >= max_strands) continue;
    moves.push_back(m);
  }
  return moves[static_cast<std::size_t>(gen.uniform(0, static_cast<int>(moves.size()) - 1))];
}

}  // namespace

TEST(Properties, InvariantsSurviveRandomWalks) {
  oracle::Gen gen(71);
  for (int walk = 0; walk < 40; ++walk) {
    const int n = gen.uniform(2, 4);
    BraidWord w(n, gen.word(n, gen.uniform(2, 8)));
    const Invariants start = invariants_of(presentation_of(w));
    for (int step = 0; step < 25; ++step) {
      const WordMove m = pick(gen, w, n + 1);
      w = apply_move(w, m);
      ASSERT_EQ(invariants_of(presentation_of(w)), start) << serialize_word(w) << " after " << format_move(m);
    }
  }
}

TEST(Properties, MovesAreUndoneByTheirInverse) {
  oracle::Gen gen(72);
  for (int i = 0; i < 300; ++i) {
    const int n = gen.uniform(2, 5);
    const BraidWord w(n, gen.word(n, gen.uniform(0, 10)));
    for (const auto& m : enumerate_moves(w)) {
      const BraidWord v = apply_move(w, m);
      ASSERT_EQ(apply_move(v, inverse_move(w, m)), w) << serialize_word(w) << " " << format_move(m);
    }
  }
}

TEST(Properties, CycleShiftsGiveEquivalentPresentations) {
  oracle::Gen gen(73);
  const FiniteTarget s3 = builtin_target("S3");
  int regions = 0;
  for (int i = 0; i < 80; ++i) {
    const int n = gen.uniform(3, 4);
    const Presentation p = presentation_of(BraidWord(n, gen.word(n, gen.uniform(6, 12))));
    const auto ab = abelianization(p);
    const auto c3 = hom_count(p, s3).count;
    for (std::size_t r = 0; r < p.count(RelatorKind::Cycle); ++r) {
      ++regions;
      const int len = static_cast<int>(p.relators()[p.cycle_relator_index(static_cast<int>(r))].bricks.size());
      for (int shift = 1; shift < len; ++shift) {
        const Presentation q = with_cycle_shift(p, static_cast<int>(r), shift);
        EXPECT_EQ(abelianization(q), ab);
        EXPECT_EQ(hom_count(q, s3).count, c3);
      }
    }
  }
  EXPECT_GT(regions, 10);
}

TEST(Properties, ComposedWalkMapsStayConsistent) {
  oracle::Gen gen(74);
  const std::vector<FiniteTarget> targets{builtin_target("S3")};
  for (int walk = 0; walk < 10; ++walk) {
    const int n = gen.uniform(2, 4);
    const BraidWord start(n, gen.word(n, gen.uniform(3, 8)));
    BraidWord w = start;
    std::vector<WordMove> moves;
    for (int step = 0; step < 8; ++step) {
      moves.push_back(pick(gen, w, n));
      w = apply_move(w, moves.back());
    }
    const GeneratorMap m = map_for_moves(start, moves);
    EXPECT_EQ(m.target_word, w);
    EXPECT_TRUE(check_map(m, targets).consistent()) << serialize_word(start);
  }
}

TEST(Properties, BrickCountMatchesGeneratorCount) {
  oracle::Gen gen(75);
  for (int i = 0; i < 200; ++i) {
    const int n = gen.uniform(2, 6);
    const BraidWord w(n, gen.word(n, gen.uniform(0, 16)));
    std::size_t expected = 0;
    for (int c = 1; c < n; ++c) expected += std::max<std::size_t>(w.occurrences(c), 1) - 1;
    EXPECT_EQ(static_cast<std::size_t>(presentation_of(w).generators()), expected);
  }
}
