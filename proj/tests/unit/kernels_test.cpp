#include <gtest/gtest.h>

#include "mla/cocycle.hpp"
#include "mla/kernels.hpp"
#include "test_support.hpp"

namespace mla {
namespace {

void expect_same(const ValidityReport& a, const ValidityReport& b) {
  ASSERT_EQ(a.rules(), b.rules());
  for (const auto& r : a.rules()) EXPECT_EQ(a.count(r), b.count(r)) << r;
  ASSERT_EQ(a.violations().size(), b.violations().size());
  for (std::size_t i = 0; i < a.violations().size(); ++i) {
    EXPECT_EQ(a.violations()[i].rule, b.violations()[i].rule);
    EXPECT_EQ(a.violations()[i].witness, b.violations()[i].witness);
  }
}

TEST(KernelsTest, GroupAxiomsAgree) {
  std::mt19937_64 rng(3);
  for (auto a : testing::catalog_upto(16)) {
    std::vector<Elem> t(a->mul_table().begin(), a->mul_table().end());
    expect_same(kernels::serial::group_axioms(t, a->order(), 0),
                kernels::parallel::group_axioms(t, a->order(), 0));
    if (a->order() < 2) continue;
    t[rng() % t.size()] = static_cast<Elem>(rng() % a->order());
    expect_same(kernels::serial::group_axioms(t, a->order(), 0),
                kernels::parallel::group_axioms(t, a->order(), 0));
  }
}

TEST(KernelsTest, StarAxiomsAgreeOnValidAndBrokenTables) {
  std::mt19937_64 rng(5);
  for (auto a : testing::catalog_upto(16)) {
    expect_same(kernels::serial::star_axioms(*a), kernels::parallel::star_axioms(*a));
    if (a->order() < 2) continue;
    for (int i = 0; i < 3; ++i) {
      std::vector<Elem> star(a->star_table().begin(), a->star_table().end());
      star[rng() % star.size()] = static_cast<Elem>(rng() % a->order());
      auto b = a->with_star(star);
      expect_same(kernels::serial::star_axioms(b), kernels::parallel::star_axioms(b));
    }
  }
}

TEST(KernelsTest, WitnessesAreCappedButCountsAreNot) {
  // Changing every star entry breaks axiom-1 at every element.
  auto z8 = testing::cyclic(8);
  std::vector<Elem> star(64, 1);
  auto b = z8->with_star(star);
  auto r = kernels::serial::star_axioms(b);
  EXPECT_EQ(r.count("axiom-1"), 8u);
  std::size_t kept = 0;
  for (const auto& v : r.violations()) kept += v.rule == "axiom-2";
  EXPECT_LE(kept, ValidityReport::kMaxWitnesses);
  EXPECT_GT(r.count("axiom-2"), ValidityReport::kMaxWitnesses);
}

TEST(KernelsTest, CocycleIdentitiesAgreeOnRandomTriples) {
  std::mt19937_64 rng(11);
  for (const char* k_name : {"klein4_trivial", "z4_trivial", "s3_commutator", "lie_f2_2d"}) {
    auto k = testing::cat(k_name);
    for (int hn : {2, 3}) {
      auto h = testing::cyclic(hn);
      for (int trial = 0; trial < 5; ++trial) {
        auto c = trivial_triple(k, h, trivial_gamma(k->order(), hn));
        for (Elem x = 1; x < k->order(); ++x)
          for (Elem y = 1; y < k->order(); ++y) {
            c.f[c.cell(x, y)] = static_cast<Elem>(rng() % hn);
            c.h[c.cell(x, y)] = static_cast<Elem>(rng() % hn);
          }
        expect_same(kernels::serial::cocycle_identities(c.view()),
                    kernels::parallel::cocycle_identities(c.view()));
      }
    }
  }
}

}  // namespace
}  // namespace mla
