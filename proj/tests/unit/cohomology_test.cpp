#include <gtest/gtest.h>

#include <set>

#include "mla/abelian.hpp"
#include "mla/cocycle.hpp"
#include "mla/cohomology.hpp"
#include "test_support.hpp"

namespace mla {
namespace {

using testing::cat;
using testing::cyclic;

// Scalar action x -> (v -> x v) on Z/n for K = Z/n with trivial star.
std::vector<Endomap> scalar_gamma(int n) {
  std::vector<Endomap> g(static_cast<std::size_t>(n), Endomap(static_cast<std::size_t>(n)));
  for (int x = 0; x < n; ++x)
    for (int v = 0; v < n; ++v) g[x][v] = (x * v) % n;
  return g;
}

using Key = std::pair<std::vector<Elem>, std::vector<Elem>>;

std::set<Key> brute_Z2(const AlgebraPtr& k, const AlgebraPtr& h, const std::vector<Endomap>& gamma) {
  const int nk = k->order(), nh = h->order();
  std::vector<std::size_t> cells;
  for (Elem x = 1; x < nk; ++x)
    for (Elem y = 1; y < nk; ++y) cells.push_back(static_cast<std::size_t>(x * nk + y));
  auto c = trivial_triple(k, h, gamma);
  std::set<Key> out;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == 2 * cells.size()) {
      if (testing::triple_oracle(c)) out.insert({c.f, c.h});
      return;
    }
    auto& slot = i < cells.size() ? c.f[cells[i]] : c.h[cells[i - cells.size()]];
    for (Elem v = 0; v < nh; ++v) {
      slot = v;
      go(i + 1);
    }
    slot = 0;
  };
  go(0);
  return out;
}

std::set<Key> brute_B2(const AlgebraPtr& k, const AlgebraPtr& h, const std::vector<Endomap>& gamma) {
  const int nk = k->order(), nh = h->order();
  std::set<Key> out;
  std::vector<Elem> l(static_cast<std::size_t>(nk), 0);
  std::function<void(int)> go = [&](int i) {
    if (i == nk) {
      Key key;
      for (Elem x = 0; x < nk; ++x)
        for (Elem y = 0; y < nk; ++y) {
          key.first.push_back(h->mul(h->mul(l[x], l[y]), h->inv(l[k->mul(x, y)])));
          const Elem a = h->mul(gamma[x][l[y]], gamma[y][h->inv(l[x])]);
          key.second.push_back(h->mul(a, h->inv(l[k->star(x, y)])));
        }
      out.insert(key);
      return;
    }
    for (Elem v = 0; v < nh; ++v) {
      l[i] = v;
      go(i + 1);
    }
  };
  go(1);
  return out;
}

std::size_t brute_Z1(const AlgebraPtr& k, const AlgebraPtr& h, const std::vector<Endomap>& gamma) {
  const int nk = k->order(), nh = h->order();
  std::size_t count = 0;
  std::vector<Elem> nu(static_cast<std::size_t>(nk), 0);
  std::function<void(int)> go = [&](int i) {
    if (i == nk) {
      bool ok = true;
      for (Elem x = 0; x < nk && ok; ++x)
        for (Elem y = 0; y < nk && ok; ++y) {
          ok = nu[k->mul(x, y)] == h->mul(nu[x], nu[y]) &&
               nu[k->star(x, y)] == h->mul(gamma[x][nu[y]], h->inv(gamma[y][nu[x]]));
        }
      count += ok;
      return;
    }
    for (Elem v = 0; v < nh; ++v) {
      nu[i] = v;
      go(i + 1);
    }
  };
  go(1);
  return count;
}

struct Case {
  const char* name;
  AlgebraPtr k, h;
  std::vector<Endomap> gamma;
};

std::vector<Case> small_cases() {
  return {
      {"Z2,Z2", cyclic(2), cyclic(2), trivial_gamma(2, 2)},
      {"Z3,Z2", cyclic(3), cyclic(2), trivial_gamma(3, 2)},
      {"Z2,Z3", cyclic(2), cyclic(3), trivial_gamma(2, 3)},
      {"Z3,Z3", cyclic(3), cyclic(3), trivial_gamma(3, 3)},
      {"Z2,Z2 acting", cyclic(2), cyclic(2), scalar_gamma(2)},
      {"Z3,Z3 acting", cyclic(3), cyclic(3), scalar_gamma(3)},
      {"Z2,Z4", cyclic(2), cyclic(4), trivial_gamma(2, 4)},
  };
}

std::set<Key> keys(const std::vector<CocycleTriple>& v) {
  std::set<Key> out;
  for (const auto& c : v) out.insert({c.f, c.h});
  return out;
}

TEST(CohomologyTest, OneCocyclesMatchBruteForce) {
  EXPECT_EQ(enumerate_Z1(cyclic(2), cyclic(2), trivial_gamma(2, 2)).size(), 2u);
  EXPECT_EQ(enumerate_Z1(cyclic(3), cyclic(2), trivial_gamma(3, 2)).size(), 1u);
  for (const auto& c : small_cases()) {
    const auto z1 = enumerate_Z1(c.k, c.h, c.gamma);
    EXPECT_EQ(z1.size(), brute_Z1(c.k, c.h, c.gamma)) << c.name;
    for (const auto& nu : z1) EXPECT_TRUE(is_one_cocycle(*c.k, *c.h, c.gamma, nu));
  }
  auto k = cat("lie_f2_2d");
  auto ext = build_extension(k, {0, 1});
  auto t = induced_triple(ext);
  EXPECT_EQ(enumerate_Z1(t.K, t.H, t.gamma).size(), brute_Z1(t.K, t.H, t.gamma));
}

TEST(CohomologyTest, TwoCocyclesMatchBruteForce) {
  for (const auto& c : small_cases()) {
    const auto oracle = brute_Z2(c.k, c.h, c.gamma);
    EXPECT_EQ(keys(enumerate_Z2(c.k, c.h, c.gamma, {}, CohomologyMethod::search)), oracle) << c.name;
    if (elementary_abelian(*c.h))
      EXPECT_EQ(keys(enumerate_Z2(c.k, c.h, c.gamma, {}, CohomologyMethod::linear)), oracle) << c.name;
    const auto group = compute_H2(c.k, c.h, c.gamma);
    const auto b2 = brute_B2(c.k, c.h, c.gamma);
    EXPECT_EQ(group.z2_order, oracle.size()) << c.name;
    EXPECT_EQ(group.b2_order, b2.size()) << c.name;
    EXPECT_EQ(group.h2_order, oracle.size() / b2.size()) << c.name;
    EXPECT_EQ(group.z2_order, group.b2_order * group.h2_order);
  }
}

TEST(CohomologyTest, KnownGroups) {
  auto coprime = compute_H2(cyclic(3), cyclic(2), trivial_gamma(3, 2));
  EXPECT_EQ(coprime.h2_order, 1u);
  EXPECT_TRUE(coprime.invariant_factors.empty());
  // Z/2 by Z/2: the Klein and cyclic extensions.
  auto z2 = compute_H2(cyclic(2), cyclic(2), trivial_gamma(2, 2));
  EXPECT_EQ(z2.z2_order, 2u);
  EXPECT_EQ(z2.b2_order, 1u);
  EXPECT_EQ(z2.h2_order, 2u);
  EXPECT_EQ(z2.invariant_factors, (std::vector<long long>{2}));
  ASSERT_EQ(z2.representatives.size(), 2u);
  EXPECT_FALSE(is_coboundary(z2.representatives[1]).has_value());
  EXPECT_TRUE(is_coboundary(z2.representatives[0]).has_value());
}

TEST(CohomologyTest, LinearAndSearchAgree) {
  std::vector<Case> cases = {
      {"K4,Z2", cat("klein4_trivial"), cyclic(2), trivial_gamma(4, 2)},
      {"Z2,K4", cyclic(2), cat("klein4_trivial"), trivial_gamma(2, 4)},
      {"Z4,Z2", cyclic(4), cyclic(2), trivial_gamma(4, 2)},
      {"S3c,Z2", cat("s3_commutator"), cyclic(2), trivial_gamma(6, 2)},
      {"Z3,Z3 acting", cyclic(3), cyclic(3), scalar_gamma(3)},
  };
  auto lie = induced_triple(build_extension(cat("lie_f2_2d"), {0, 1}));
  cases.push_back({"lie_f2_2d", lie.K, lie.H, lie.gamma});
  auto lie2 = induced_triple(build_extension(cat("lie_f2_2d_double"), {0, 1, 2, 3}));
  cases.push_back({"lie_f2_2d_double", lie2.K, lie2.H, lie2.gamma});
  for (const auto& c : cases) {
    auto lin = compute_H2(c.k, c.h, c.gamma, {}, CohomologyMethod::linear);
    auto srch = compute_H2(c.k, c.h, c.gamma, {}, CohomologyMethod::search);
    EXPECT_EQ(lin.method, CohomologyMethod::linear);
    EXPECT_EQ(lin.z2_order, srch.z2_order) << c.name;
    EXPECT_EQ(lin.b2_order, srch.b2_order) << c.name;
    EXPECT_EQ(lin.h2_order, srch.h2_order) << c.name;
    EXPECT_EQ(lin.invariant_factors, srch.invariant_factors) << c.name;
    ASSERT_EQ(lin.representatives.size(), lin.h2_order);
    for (std::size_t i = 0; i < lin.representatives.size(); ++i) {
      EXPECT_TRUE(validate_cocycle(lin.representatives[i], ValidationMode::direct).ok());
      for (std::size_t j = 0; j < i; ++j)
        EXPECT_FALSE(cohomologous(lin.representatives[i], lin.representatives[j]).has_value()) << c.name;
    }
  }
}

TEST(CohomologyTest, CoboundariesAreRecognized) {
  std::mt19937_64 rng(29);
  for (const char* name : {"klein4_trivial", "s3_commutator", "z6_trivial"}) {
    auto k = cat(name);
    for (int hn : {2, 3, 4}) {
      auto h = cyclic(hn);
      for (int trial = 0; trial < 5; ++trial) {
        LambdaMap l(static_cast<std::size_t>(k->order()), 0);
        for (Elem x = 1; x < k->order(); ++x) l[x] = static_cast<Elem>(rng() % hn);
        const auto b = coboundary_of(l, k, h, trivial_gamma(k->order(), hn));
        EXPECT_TRUE(validate_cocycle(b, ValidationMode::direct).ok());
        for (auto method : {CohomologyMethod::search, CohomologyMethod::automatic}) {
          auto found = is_coboundary(b, method);
          ASSERT_TRUE(found.has_value()) << name;
          EXPECT_EQ(coboundary_of(*found, k, h, b.gamma), b);
        }
      }
    }
  }
}

TEST(CohomologyTest, NonSplitExtensionHasNontrivialClass) {
  auto c = induced_triple(build_extension(cat("z4_trivial"), {0, 2}));
  EXPECT_FALSE(is_coboundary(c).has_value());
  EXPECT_FALSE(is_coboundary(c, CohomologyMethod::search).has_value());
  auto klein = induced_triple(build_extension(cat("klein4_trivial"), {0, 1}));
  EXPECT_TRUE(is_coboundary(klein).has_value());
  // Same base, different classes.
  EXPECT_FALSE(cohomologous(c, klein).has_value());
  auto q8 = induced_triple(build_extension(cat("q8_commutator"), {0, 1}));
  EXPECT_FALSE(is_coboundary(q8).has_value());
  EXPECT_TRUE(cohomologous(q8, induced_triple(with_seed(build_extension(cat("q8_commutator"), {0, 1}), 3)))
                  .has_value());
}

TEST(CohomologyTest, InducedTriplesLieInTheirCocycleGroups) {
  for (const auto& ce : catalog_extensions(16)) {
    const auto c = induced_triple(ce.ext);
    std::vector<CocycleTriple> z2;
    try {
      z2 = enumerate_Z2(c.K, c.H, c.gamma);
    } catch (const SizeLimitError&) {
      continue;
    }
    EXPECT_EQ(keys(z2).count({c.f, c.h}), 1u) << ce.label();
  }
}

TEST(CohomologyTest, ClassCountMatchesCatalogExtensions) {
  // Extensions of Z/2 by Z/2 in the catalog: Klein four and Z/4, one per class.
  auto k = cyclic(2), h = cyclic(2);
  std::vector<CocycleTriple> classes;
  for (const auto& ce : catalog_extensions(16)) {
    if (ce.ext.K->order() != 2 || ce.ext.Hsub->order() != 2) continue;
    auto c = induced_triple(ce.ext);
    c.K = k;
    c.H = h;
    if (c.gamma != trivial_gamma(2, 2)) continue;
    bool seen = false;
    for (const auto& r : classes) seen = seen || cohomologous(c, r).has_value();
    if (!seen) classes.push_back(c);
  }
  EXPECT_EQ(classes.size(), compute_H2(k, h, trivial_gamma(2, 2)).h2_order);
}

TEST(CohomologyTest, InputsAreChecked) {
  auto bad = trivial_gamma(2, 2);
  bad[0] = {0, 1};
  EXPECT_THROW(enumerate_Z2(cyclic(2), cyclic(2), bad), StructuralError);
  EXPECT_THROW(compute_H2(cyclic(8), cyclic(8), trivial_gamma(8, 8)), SizeLimitError);
  CohomologyLimits tight;
  tight.max_list = 2;
  EXPECT_THROW(enumerate_Z2(cyclic(3), cyclic(3), trivial_gamma(3, 3), tight), SizeLimitError);
  EXPECT_THROW(cohomologous(induced_triple(build_extension(cat("z4_trivial"), {0, 2})),
                            trivial_triple(cyclic(3), cyclic(2), trivial_gamma(3, 2))),
               StructuralError);
}

}  // namespace
}  // namespace mla
