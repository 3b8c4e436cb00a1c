#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "braidforge/error.hpp"
#include "braidforge/invariants.hpp"
#include "oracles.hpp"

using namespace braidforge;

namespace {

std::vector<std::vector<int>> relator_letters(const Presentation& p) {
  std::vector<std::vector<int>> out;
  for (const auto& r : p.relators()) out.push_back(r.word.letters());
  return out;
}

Presentation random_presentation(oracle::Gen& gen, int generators, int relators) {
  std::vector<Relator> rels;
  for (int r = 0; r < relators; ++r) {
    std::vector<int> w;
    const int len = gen.uniform(1, 6);
    for (int k = 0; k < len; ++k) w.push_back(gen.uniform(1, generators) * (gen.uniform(0, 1) ? 1 : -1));
    rels.push_back(Relator::make(RelatorKind::Comm, GroupWord(w), GroupWord{}, {}));
  }
  return Presentation(generators, rels);
}

}  // namespace

TEST(Targets, BuiltinOrders) {
  const std::map<std::string, std::size_t> orders{{"S3", 6}, {"S4", 24}, {"S5", 120}, {"D4", 8},
                                                  {"D5", 10}, {"D6", 12}, {"Q8", 8}};
  for (const auto& name : builtin_target_names()) EXPECT_EQ(builtin_target(name).order(), orders.at(name));
  EXPECT_THROW(builtin_target("A7"), Error);
}

TEST(Targets, TablesAreValidated) {
  EXPECT_EQ(load_target_file(BRAIDFORGE_TEST_DATA "/z3.txt").order(), 3u);
  EXPECT_THROW(load_target_file(BRAIDFORGE_TEST_DATA "/not_a_group.txt"), Error);
  EXPECT_THROW(parse_target_table("bad", "2\n0 1\n1"), Error);
  EXPECT_THROW(parse_target_table("bad", "2\n1 0\n0 1"), Error);  // 0 is not the identity
  EXPECT_THROW(load_target_file("/nonexistent/table.txt"), Error);
}

TEST(Targets, QuaternionIsNotAbelianAndHasOneInvolution) {
  const FiniteTarget q = builtin_target("Q8");
  int involutions = 0;
  bool abelian = true;
  for (FiniteTarget::Element a = 0; a < 8; ++a) {
    involutions += a != 0 && q.mul(a, a) == 0;
    for (FiniteTarget::Element b = 0; b < 8; ++b) abelian = abelian && q.mul(a, b) == q.mul(b, a);
  }
  EXPECT_EQ(involutions, 1);
  EXPECT_FALSE(abelian);
}

TEST(Smith, KnownMatrices) {
  EXPECT_EQ(smith_invariants({{2, 4}, {6, 8}}, 2), (std::vector<long long>{2, 4}));
  EXPECT_EQ(smith_invariants({{1, -1}}, 2), (std::vector<long long>{1, 0}));
  EXPECT_EQ(smith_invariants({}, 3), (std::vector<long long>{0, 0, 0}));
  EXPECT_EQ(smith_invariants({{6, 0}, {0, 4}}, 2), (std::vector<long long>{2, 12}));
  EXPECT_EQ(smith_invariants({{0, 0}, {0, 0}}, 2), (std::vector<long long>{0, 0}));
}

TEST(Abelianization, WorkedExamples) {
  EXPECT_EQ(abelianization(presentation_of(parse_word("1 2 2 1"))).invariant_factors,
            (std::vector<long long>{0, 0}));
  EXPECT_EQ(abelianization(presentation_of(parse_word("1 2 2 1 2 2"))).invariant_factors,
            (std::vector<long long>{1, 1, 1, 0}));
  EXPECT_EQ(abelianization(presentation_of(parse_word("1 1"))).invariant_factors, (std::vector<long long>{0}));
  const Abelianization trivial = abelianization(presentation_of(parse_word("1 2 3")));
  EXPECT_TRUE(trivial.invariant_factors.empty());
  EXPECT_EQ(trivial.rank(), 0);
  EXPECT_EQ(trivial.to_string(), "1");
  EXPECT_EQ(abelianization(presentation_of(parse_word("1 2 2 1"))).to_string(), "Z^2");
}

TEST(Abelianization, ComponentsRank) {
  EXPECT_EQ(connected_components_abelian_rank(presentation_of(parse_word("1 2 3"))), 0);
  for (int n = 2; n <= 7; ++n) {
    EXPECT_EQ(connected_components_abelian_rank(
                  presentation_of(BraidWord(2, std::vector<int>(static_cast<std::size_t>(n), 1)))),
              1);
  }
  EXPECT_EQ(connected_components_abelian_rank(presentation_of(parse_word("1 2 2 1"))), 2);
}

TEST(Abelianization, RankAtLeastOneWithBricks) {
  oracle::Gen gen(51);
  for (int i = 0; i < 300; ++i) {
    const int n = gen.uniform(2, 5);
    const BraidWord w(n, gen.word(n, gen.uniform(0, 14)));
    const Presentation p = presentation_of(w);
    const Abelianization ab = abelianization(p);
    ASSERT_EQ(ab.invariant_factors.size(), static_cast<std::size_t>(p.generators()));
    for (std::size_t k = 1; k < ab.invariant_factors.size(); ++k) {
      const long long a = ab.invariant_factors[k - 1], b = ab.invariant_factors[k];
      EXPECT_TRUE(b == 0 || (a != 0 && b % a == 0));
    }
    if (p.generators() > 0) EXPECT_GE(ab.rank(), 1);
  }
}

TEST(RelationLattice, Membership) {
  const Presentation p = presentation_of(parse_word("1 2 1 1 2 1"));
  const RelationLattice lattice(p);
  EXPECT_TRUE(lattice.trivial(GroupWord{1, -2}));
  EXPECT_TRUE(lattice.trivial(GroupWord{1, 3, -4, -2}));
  EXPECT_FALSE(lattice.trivial(GroupWord{1}));
  EXPECT_FALSE(lattice.trivial(GroupWord{1, 1, -2}));
  for (const auto& r : p.relators()) EXPECT_TRUE(lattice.trivial(r.word));
}

TEST(HomCount, FreeGroupOnOneGenerator) {
  const Presentation p(1, {});
  EXPECT_EQ(hom_count(p, builtin_target("S3")).count, 6u);
}

TEST(HomCount, B3IntoS3) {
  const Presentation b3 = presentation_of(parse_word("1 1 1"));
  const auto brute = oracle::brute_hom_count(3, 2, relator_letters(b3));
  EXPECT_EQ(brute, 12u);
  EXPECT_EQ(hom_count(b3, builtin_target("S3")).count, brute);
}

TEST(HomCount, WorkedPairAgree) {
  const Presentation a = presentation_of(parse_word("1 2 1 1 2 1"));
  const Presentation b = presentation_of(parse_word("1 1 2 1 1 2"));
  for (const auto& t : builtin_target_names()) {
    EXPECT_EQ(hom_count(a, builtin_target(t)).count, hom_count(b, builtin_target(t)).count) << t;
  }
}

TEST(HomCount, UpToConjugacy) {
  HomCountOptions o;
  o.up_to_conjugacy = true;
  const HomCount one = hom_count(Presentation(1, {}), builtin_target("S3"), o);
  EXPECT_EQ(one.count, 6u);
  EXPECT_EQ(one.up_to_conjugacy, 3u);  // conjugacy classes of S3
  const HomCount b3 = hom_count(presentation_of(parse_word("1 1 1")), builtin_target("S3"), o);
  // trivial, equal transpositions, equal 3-cycles, distinct transpositions
  EXPECT_EQ(b3.up_to_conjugacy, 4u);
}

TEST(HomCount, CapIsEnforced) {
  HomCountOptions o;
  o.generator_cap = 2;
  EXPECT_THROW(hom_count(presentation_of(parse_word("1 1 1 1")), builtin_target("S3"), o), ResourceCapError);
  EXPECT_EQ(default_generator_cap(6), 14);
}

TEST(HomCount, ThreadCountDoesNotMatter) {
  const Presentation p = presentation_of(parse_word("1 2 1 3 2 1 2 3 3 1", 4));
  HomCountOptions one, many;
  one.threads = 1;
  many.threads = 4;
  const FiniteTarget s4 = builtin_target("S4");
  EXPECT_EQ(hom_count(p, s4, one).count, hom_count(p, s4, many).count);
}

TEST(HomCountProperty, MatchesBruteForce) {
  oracle::Gen gen(52);
  for (int i = 0; i < 40; ++i) {
    const int k = gen.uniform(1, 4);
    const Presentation p = random_presentation(gen, k, gen.uniform(0, 4));
    EXPECT_EQ(hom_count(p, builtin_target("S3")).count, oracle::brute_hom_count(3, k, relator_letters(p)));
  }
  for (int i = 0; i < 10; ++i) {
    const int k = gen.uniform(1, 3);
    const Presentation p = random_presentation(gen, k, gen.uniform(1, 3));
    EXPECT_EQ(hom_count(p, builtin_target("S4")).count, oracle::brute_hom_count(4, k, relator_letters(p)));
  }
}

TEST(HomCountProperty, ForEachHomListsExactlyTheCount) {
  oracle::Gen gen(53);
  for (int i = 0; i < 20; ++i) {
    const int n = gen.uniform(2, 4);
    const Presentation p = presentation_of(BraidWord(n, gen.word(n, gen.uniform(2, 9))));
    const FiniteTarget s3 = builtin_target("S3");
    const auto homs = all_homs(p, s3);
    EXPECT_EQ(homs.size(), hom_count(p, s3).count);
    EXPECT_TRUE(std::is_sorted(homs.begin(), homs.end()));
    for (const auto& h : homs) {
      for (const auto& r : p.relators()) EXPECT_EQ(s3.evaluate(r.word, h), s3.identity());
    }
  }
}

TEST(HomCountProperty, InvariantUnderPresentationChanges) {
  oracle::Gen gen(54);
  const FiniteTarget s3 = builtin_target("S3");
  for (int i = 0; i < 40; ++i) {
    const int n = gen.uniform(2, 4);
    const Presentation p = presentation_of(BraidWord(n, gen.word(n, gen.uniform(2, 11))));
    const auto base = hom_count(p, s3).count;
    const int k = p.generators();

    // Reordered relators.
    std::vector<Relator> rels = p.relators();
    std::shuffle(rels.begin(), rels.end(), gen.rng);
    EXPECT_EQ(hom_count(Presentation(k, rels), s3).count, base);

    // Renumbered generators.
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), gen.rng);
    std::vector<GroupWord> images;
    for (int g : perm) images.push_back(GroupWord::generator(g));
    std::vector<Relator> renamed;
    for (const auto& r : p.relators()) {
      renamed.push_back(Relator::make(r.kind, substitute(r.lhs, images), substitute(r.rhs, images), {}));
    }
    EXPECT_EQ(hom_count(Presentation(k, renamed), s3).count, base);

    // Unreduced relators (inserted cancelling pairs) are reduced on construction.
    std::vector<Relator> padded;
    for (const auto& r : p.relators()) {
      const int g = gen.uniform(1, std::max(k, 1));
      padded.push_back(Relator::make(r.kind, r.lhs * GroupWord{g, -g}, r.rhs, {}));
    }
    EXPECT_EQ(hom_count(Presentation(k, padded), s3).count, base);
  }
}

TEST(HomCountProperty, DirectProductsMultiply) {
  oracle::Gen gen(55);
  const FiniteTarget s3 = builtin_target("S3"), q8 = builtin_target("Q8"), z3 = load_target_file(BRAIDFORGE_TEST_DATA "/z3.txt");
  const FiniteTarget s3z3 = direct_product(s3, z3), s3q8 = direct_product(s3, q8);
  for (int i = 0; i < 15; ++i) {
    const int n = gen.uniform(2, 3);
    const Presentation p = presentation_of(BraidWord(n, gen.word(n, gen.uniform(2, 7))));
    if (p.generators() > 4) continue;
    EXPECT_EQ(hom_count(p, s3z3).count, hom_count(p, s3).count * hom_count(p, z3).count);
    EXPECT_EQ(hom_count(p, s3q8).count, hom_count(p, s3).count * hom_count(p, q8).count);
  }
}

TEST(HomCountProperty, SingleMovesKeepInvariants) {
  oracle::Gen gen(56);
  const FiniteTarget s3 = builtin_target("S3"), s4 = builtin_target("S4");
  HomCountOptions o;
  o.generator_cap = 12;
  for (int i = 0; i < 40; ++i) {
    const int n = gen.uniform(2, 4);
    const BraidWord w(n, gen.word(n, gen.uniform(1, 9)));
    const Presentation p = presentation_of(w);
    const auto ab = abelianization(p);
    const auto c3 = hom_count(p, s3, o).count, c4 = hom_count(p, s4, o).count;
    for (const auto& m : enumerate_moves(w)) {
      const Presentation q = presentation_of(apply_move(w, m));
      EXPECT_EQ(abelianization(q), ab);
      EXPECT_EQ(hom_count(q, s3, o).count, c3);
      EXPECT_EQ(hom_count(q, s4, o).count, c4);
    }
  }
}
