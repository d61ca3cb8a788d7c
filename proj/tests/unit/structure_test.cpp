#include <gtest/gtest.h>

#include "mla/hom_search.hpp"
#include "mla/morphism.hpp"
#include "mla/structure.hpp"
#include "test_support.hpp"

namespace mla {
namespace {

using testing::cat;

TEST(StructureTest, CentersOfSmallGroups) {
  EXPECT_EQ(center(cat("q8_commutator")).members, (std::vector<Elem>{0, 1}));
  EXPECT_EQ(center(cat("s3_trivial")).members, (std::vector<Elem>{0}));
  EXPECT_EQ(center(cat("d4_trivial")).members, (std::vector<Elem>{0, 2}));
  EXPECT_EQ(center(cat("klein4_trivial")).size(), 4u);
  // With the trivial star everything is Lie central; with the commutator star
  // the Lie center is the center.
  EXPECT_EQ(lie_center(cat("s3_trivial")).size(), 6u);
  EXPECT_EQ(lie_center(cat("s3_commutator")).members, (std::vector<Elem>{0}));
  EXPECT_EQ(lie_center(cat("q8_commutator")).members, (std::vector<Elem>{0, 1}));
  // [a, b] = b leaves only the identity Lie central in the 2-dim ring.
  EXPECT_EQ(lie_center(cat("lie_f2_2d")).members, (std::vector<Elem>{0}));
}

TEST(StructureTest, IdealsAndSubgroups) {
  auto s3 = cat("s3_commutator");
  EXPECT_TRUE(is_ideal(*s3, {0, 1, 2}));
  EXPECT_TRUE(is_subgroup(*s3, {0, 3}));
  EXPECT_FALSE(is_ideal(*s3, {0, 3}));
  EXPECT_TRUE(ideal_violation(*s3, {0, 3}).has_value());
  EXPECT_FALSE(is_subgroup(*s3, {0, 1}));
  EXPECT_EQ(subgroups(*cat("z4_trivial")).size(), 3u);
  EXPECT_EQ(subgroups(*cat("klein4_trivial")).size(), 5u);
  EXPECT_EQ(subgroups(*s3).size(), 6u);
  EXPECT_EQ(generated_subgroup(cat("z6_trivial"), {2}).members, (std::vector<Elem>{0, 2, 4}));
  // A subgroup of an abelian group need not be an ideal when the bracket moves it.
  EXPECT_TRUE(is_ideal(*cat("lie_f2_2d"), {0, 1}));
  EXPECT_FALSE(is_ideal(*cat("lie_f2_2d"), {0, 2}));
}

TEST(StructureTest, QuaternionModCenterIsKlein) {
  auto q8 = cat("q8_commutator");
  auto q = quotient(q8, center(q8));
  EXPECT_EQ(q.algebra->order(), 4);
  EXPECT_TRUE(find_isomorphism(*q.algebra, *cat("klein4_trivial")).has_value());
  EXPECT_FALSE(find_isomorphism(*q.algebra, *cat("z4_trivial")).has_value());
  EXPECT_EQ(check_morphism(q.projection), MorphismKind::mla_hom);
  for (Elem x = 0; x < 8; ++x) EXPECT_EQ(q.projection(q.representative[q.projection(x)]), q.projection(x));
}

TEST(StructureTest, QuotientRejectsNonIdeals) {
  auto s3 = cat("s3_trivial");
  EXPECT_THROW(quotient(s3, make_subset(s3, {0, 3})), QuotientError);
}

TEST(MorphismTest, Certification) {
  auto z4 = cat("z4_trivial");
  Morphism swap{z4, z4, {0, 2, 1, 3}};
  EXPECT_EQ(check_morphism(swap), MorphismKind::raw);
  Morphism neg{z4, z4, {0, 3, 2, 1}};
  EXPECT_EQ(certify(neg).kind, MorphismKind::mla_automorphism);
  Morphism dbl{z4, z4, {0, 2, 0, 2}};
  EXPECT_EQ(check_morphism(dbl), MorphismKind::mla_hom);
  EXPECT_TRUE(is_identity_map(compose(certify(neg), certify(neg)).map));
  EXPECT_EQ(inverse(certify(neg)).map, neg.map);
  // Group automorphisms preserve the commutator star.
  auto s3 = cat("s3_commutator");
  Morphism conj_s{s3, s3, {0, 2, 1, 3, 5, 4}};
  EXPECT_TRUE(is_group_hom(*s3, *s3, conj_s.map));
  EXPECT_TRUE(is_mla_hom(*s3, *s3, conj_s.map));
}

TEST(HomSearchTest, CountsAgreeWithBruteForce) {
  auto count_brute = [](const MultLieAlgebra& a, const MultLieAlgebra& b) {
    std::size_t total = 0;
    std::vector<Elem> map(static_cast<std::size_t>(a.order()), 0);
    std::function<void(int)> go = [&](int i) {
      if (i == a.order()) {
        total += is_mla_hom(a, b, map);
        return;
      }
      for (Elem v = 0; v < b.order(); ++v) {
        map[i] = v;
        go(i + 1);
      }
    };
    go(0);
    return total;
  };
  const std::vector<std::pair<const char*, const char*>> cases = {
      {"z4_trivial", "z2_trivial"}, {"klein4_trivial", "z4_trivial"}, {"s3_commutator", "z6_trivial"},
      {"z6_trivial", "z6_trivial"}, {"lie_f2_2d", "lie_f2_2d"},       {"s3_commutator", "s3_commutator"}};
  for (auto [src, dst] : cases) {
    auto a = cat(src), b = cat(dst);
    EXPECT_EQ(all_homomorphisms(*a, *b).size(), count_brute(*a, *b)) << src << " -> " << dst;
  }
}

TEST(HomSearchTest, GreedyGeneratorsGenerate) {
  for (auto a : testing::catalog_upto(16)) {
    auto gens = greedy_generators(*a);
    EXPECT_EQ(generated_subgroup(a, gens).size(), static_cast<std::size_t>(a->order())) << a->label();
  }
  EXPECT_EQ(greedy_generators(*cat("z8_trivial")).size(), 1u);
  EXPECT_EQ(greedy_generators(*cat("klein4_trivial")).size(), 2u);
}

TEST(HomSearchTest, IsomorphismsDistinguishStars) {
  EXPECT_TRUE(find_isomorphism(*cat("s3_trivial"), *cat("s3_trivial")).has_value());
  EXPECT_FALSE(find_isomorphism(*cat("s3_trivial"), *cat("s3_commutator")).has_value());
  EXPECT_FALSE(find_isomorphism(*cat("d4_commutator"), *cat("q8_commutator")).has_value());
}

}  // namespace
}  // namespace mla
