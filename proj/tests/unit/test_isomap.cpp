#include <gtest/gtest.h>

#include "braidforge/error.hpp"
#include "braidforge/garside.hpp"
#include "braidforge/isomap.hpp"
#include "oracles.hpp"

using namespace braidforge;

namespace {

const std::vector<FiniteTarget>& small_targets() {
  static const std::vector<FiniteTarget> t{builtin_target("S3"), builtin_target("S4")};
  return t;
}

GroupWord gw(std::initializer_list<int> l) { return GroupWord(l); }

GeneratorMap worked_example_map() {
  GeneratorMap m = identity_map(parse_word("1 2 1 1 2 1"));
  m.target_word = parse_word("1 1 2 1 1 2");
  m.target = presentation_of(m.target_word);
  m.images[3] = gw({3, 2, 4, -2, -3});
  m.inverse_images[3] = gw({-2, -3, 4, 3, 2});
  return m;
}

bool changes_only(const GeneratorMap& m, std::size_t count) {
  std::size_t changed = 0;
  for (std::size_t g = 0; g < m.images.size(); ++g) {
    changed += m.images[g] != GroupWord::generator(static_cast<int>(g) + 1);
  }
  return changed == count;
}

}  // namespace

TEST(Isomap, WorkedExampleMapIsConsistent) {
  const GeneratorMap m = worked_example_map();
  m.validate();
  const MapReport r = check_map(m, small_targets());
  EXPECT_TRUE(r.consistent()) << r.violation_count;
  EXPECT_EQ(r.targets, (std::vector<std::string>{"S3", "S4"}));
  EXPECT_GT(r.source_homs, 0u);
  EXPECT_EQ(r.source_homs, r.target_homs);
}

TEST(Isomap, CorruptedMapIsDetected) {
  GeneratorMap m = worked_example_map();
  m.images[3] = m.images[3] * gw({1});
  const MapReport r = check_map(m, small_targets());
  EXPECT_FALSE(r.consistent());
  ASSERT_FALSE(r.violations.empty());
  EXPECT_LE(r.violations.size(), 20u);
}

TEST(Isomap, ViolationListIsCapped) {
  GeneratorMap m = worked_example_map();
  m.images[3] = gw({1, 1});
  CheckOptions o;
  o.max_listed = 2;
  const MapReport r = check_map(m, small_targets(), o);
  EXPECT_GT(r.violation_count, 2u);
  EXPECT_EQ(r.violations.size(), 2u);
}

TEST(Isomap, ComputedConjugationMapIsConsistent) {
  const GeneratorMap m = conjugation_map(parse_word("1 2 1 1 2 1"), ConjugationEnd::Right);
  EXPECT_EQ(m.target_word, parse_word("1 1 2 1 1 2"));
  EXPECT_TRUE(check_map(m, small_targets()).consistent());
}

TEST(Isomap, IdentityMapIsConsistent) {
  for (const char* w : {"1 2 1 1 2 1", "1 1 1", "1 2 2 1 2 2", "1 2"}) {
    EXPECT_TRUE(check_map(identity_map(parse_word(w)), small_targets()).consistent()) << w;
  }
}

TEST(Isomap, ValidateRejectsForeignGenerators) {
  GeneratorMap m = identity_map(parse_word("1 1 1"));
  m.images[0] = gw({5});
  EXPECT_THROW(m.validate(), Error);
  m = identity_map(parse_word("1 1 1"));
  m.images.pop_back();
  EXPECT_THROW(m.validate(), Error);
}

TEST(Isomap, ConjugationWithoutBricksInColumn) {
  // s2 is the only letter in its column: no bricks move.
  const GeneratorMap m = conjugation_map(parse_word("1 1 2"), ConjugationEnd::Right);
  EXPECT_EQ(m.target_word, parse_word("2 1 1"));
  EXPECT_TRUE(changes_only(m, 0));
  EXPECT_TRUE(check_map(m, small_targets()).consistent());
}

TEST(Isomap, ConjugationWithOneBrick) {
  const GeneratorMap m = conjugation_map(parse_word("1 1"), ConjugationEnd::Right);
  EXPECT_EQ(m.images, (std::vector<GroupWord>{gw({1})}));
  EXPECT_TRUE(check_map(m, small_targets()).consistent());
}

TEST(Isomap, TopBrickOfColumnIsConjugated) {
  // Column 1 has three bricks; the top one is conjugated by the two below.
  const GeneratorMap m = conjugation_map(parse_word("1 1 1 1"), ConjugationEnd::Right);
  ASSERT_EQ(m.images.size(), 3u);
  EXPECT_EQ(m.images[2].size(), 5u);
  EXPECT_TRUE(check_map(m, small_targets()).consistent());
}

TEST(Isomap, LeftAndRightConjugationsAreInverse) {
  const BraidWord w = parse_word("1 2 1 3 2 2 1 3 1");
  const GeneratorMap right = conjugation_map(w, ConjugationEnd::Right);
  const GeneratorMap left = conjugation_map(right.target_word, ConjugationEnd::Left);
  const GeneratorMap both = compose(right, left);
  EXPECT_EQ(both.target_word, w);
  EXPECT_TRUE(check_map(both, small_targets()).consistent());
}

TEST(Isomap, MinimalBraidRelationMap) {
  const BraidWord w = parse_word("1 1 2 1");
  const GeneratorMap m = braid_relation_map(w, 1);
  EXPECT_EQ(m.target_word, parse_word("1 2 1 2"));
  EXPECT_TRUE(changes_only(m, 1) || changes_only(m, 2));
  EXPECT_TRUE(check_map(m, small_targets()).consistent());
}

TEST(Isomap, BraidRelationThereAndBackIsIdentityUpToRelations) {
  const BraidWord w = parse_word("2 1 1 2 1 3 2");
  const GeneratorMap there = braid_relation_map(w, 2);
  const GeneratorMap back = braid_relation_map(there.target_word, 2);
  const GeneratorMap loop = compose(there, back);
  EXPECT_EQ(loop.target_word, w);
  EXPECT_TRUE(check_map(loop, small_targets()).consistent());
}

TEST(Isomap, FarCommutationAndMarkovAreIdentities) {
  const BraidWord w = parse_word("1 3 2 1 3");
  const GeneratorMap far = map_for_move(w, WordMove{MoveKind::FarComm, 0});
  EXPECT_EQ(far.target_word, parse_word("3 1 2 1 3"));
  EXPECT_TRUE(changes_only(far, 0));
  const GeneratorMap stab = map_for_move(w, WordMove{MoveKind::MarkovStab, w.size()});
  EXPECT_EQ(stab.target_word.strands(), 5);
  EXPECT_TRUE(changes_only(stab, 0));
}

TEST(Isomap, InverseSwapsSides) {
  const GeneratorMap m = worked_example_map();
  const GeneratorMap inv = inverse(m);
  EXPECT_EQ(inv.source_word, m.target_word);
  EXPECT_EQ(inv.images, m.inverse_images);
  EXPECT_TRUE(check_map(inv, small_targets()).consistent());
}

TEST(Isomap, ComposeRequiresMatchingWords) {
  const GeneratorMap a = identity_map(parse_word("1 1 1"));
  const GeneratorMap b = identity_map(parse_word("1 2 1"));
  EXPECT_THROW(compose(a, b), Error);
}

TEST(IsomapProperty, EverySingleMoveMapIsConsistent) {
  oracle::Gen gen(61);
  for (auto convention : {SignConvention::LeftPositive, SignConvention::RightPositive}) {
    for (int i = 0; i < 60; ++i) {
      const int n = gen.uniform(2, 4);
      const BraidWord w(n, gen.word(n, gen.uniform(1, 9)));
      const auto moves = enumerate_moves(w);
      const WordMove m = moves[static_cast<std::size_t>(gen.uniform(0, static_cast<int>(moves.size()) - 1))];
      const GeneratorMap map = map_for_move(w, m, convention);
      EXPECT_EQ(map.target_word, apply_move(w, m));
      map.validate();
      const MapReport r = check_map(map, small_targets());
      EXPECT_TRUE(r.consistent()) << serialize_word(w) << " " << format_move(m);
    }
  }
}

TEST(IsomapProperty, CorruptingAnImageIsCaught) {
  oracle::Gen gen(62);
  int caught = 0, tried = 0;
  for (int i = 0; i < 40; ++i) {
    const int n = gen.uniform(3, 4);
    const BraidWord w(n, gen.word(n, gen.uniform(5, 9)));
    const auto moves = enumerate_moves(w);
    GeneratorMap map = map_for_move(w, moves[static_cast<std::size_t>(gen.uniform(0, static_cast<int>(moves.size()) - 1))]);
    if (map.images.size() < 2) continue;
    const auto g = static_cast<std::size_t>(gen.uniform(0, static_cast<int>(map.images.size()) - 1));
    map.images[g] = map.images[g] * map.images[g];
    ++tried;
    caught += !check_map(map, small_targets()).consistent();
  }
  ASSERT_GT(tried, 10);
  EXPECT_EQ(caught, tried);  // squaring a generator image breaks the abelian check
}

TEST(IsomapProperty, MapAlongConjugacySequenceIsConsistent) {
  const BraidWord a = parse_word("1 2 1 1 2 1 2"), b = parse_word("2 1 2 2 1 1 2");
  ASSERT_TRUE(are_conjugate(a, b));
  const MoveSequence seq = conjugacy_move_sequence(a, b);
  const GeneratorMap m = map_for_moves(a, seq.moves);
  EXPECT_EQ(m.target_word, b);
  EXPECT_TRUE(check_map(m, small_targets()).consistent());
}
