#include <gtest/gtest.h>

#include "mla/algebra.hpp"
#include "mla/io.hpp"
#include "test_support.hpp"

namespace mla {
namespace {

using testing::cat;
using testing::cyclic;

TEST(AlgebraTest, RelabelsTheIdentityToZero) {
  // Z/3 written with the identity at index 2: a + b - 2 mod 3.
  std::vector<Elem> mul;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) mul.push_back(((a + b - 2) % 3 + 3) % 3);
  auto a = MultLieAlgebra::from_tables(mul, trivial_star(3), 2, {"a", "b", "e"});
  EXPECT_EQ(a.order(), 3);
  EXPECT_EQ(a.element_name(0), "e");
  for (Elem x = 0; x < 3; ++x) {
    EXPECT_EQ(a.mul(0, x), x);
    EXPECT_EQ(a.mul(x, a.inv(x)), 0);
  }
}

TEST(AlgebraTest, GroupAxiomsCatchAQuasigroup) {
  // x - y mod 3 is a Latin square without identity or associativity.
  std::vector<Elem> t;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) t.push_back(((a - b) % 3 + 3) % 3);
  auto r = verify_group(t, 3, 0);
  EXPECT_FALSE(r.ok());
  EXPECT_GT(r.count("associativity"), 0u);
  EXPECT_GT(r.count("identity"), 0u);
  EXPECT_THROW(MultLieAlgebra::from_tables(t, trivial_star(3)), InvalidAlgebra);
}

TEST(AlgebraTest, RejectsMalformedTables) {
  EXPECT_THROW(verify_group(std::vector<Elem>{0, 1, 1}, 2, 0), StructuralError);
  EXPECT_THROW(verify_group(std::vector<Elem>{0, 1, 1, 5}, 2, 0), StructuralError);
}

TEST(AlgebraTest, EveryCatalogAlgebraIsValid) {
  for (const auto& name : catalog_names()) {
    auto a = cat(name);
    EXPECT_TRUE(verify_mla(*a).ok()) << name;
    EXPECT_TRUE(testing::is_mla_oracle(testing::tables_of(*a))) << name;
  }
}

TEST(AlgebraTest, CommutatorStarIsTheGroupCommutator) {
  auto s3 = cat("s3_commutator");
  for (Elem x = 0; x < 6; ++x)
    for (Elem y = 0; y < 6; ++y)
      EXPECT_EQ(s3->star(x, y), s3->mul(s3->mul(x, y), s3->mul(s3->inv(x), s3->inv(y))));
  EXPECT_FALSE(s3->has_trivial_star());
  EXPECT_TRUE(cat("s3_trivial")->has_trivial_star());
}

TEST(AlgebraTest, StarPerturbationsAreRejectedWithTrueWitnesses) {
  std::mt19937_64 rng(7);
  for (auto a : testing::catalog_upto(8)) {
    const int n = a->order();
    if (n == 1) continue;
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Elem> star(a->star_table().begin(), a->star_table().end());
      const auto cell = rng() % star.size();
      star[cell] = static_cast<Elem>((star[cell] + 1 + rng() % (n - 1)) % n);
      auto b = a->with_star(star);
      auto r = verify_mla(b);
      ASSERT_FALSE(r.ok()) << a->label();
      const auto t = testing::tables_of(b);
      for (const auto& v : r.violations())
        EXPECT_TRUE(testing::axiom_fails(t, v.rule, v.witness)) << a->label() << " " << v.rule;
      EXPECT_THROW(make_mla({a->mul_table().begin(), a->mul_table().end()}, star), InvalidAlgebra);
    }
  }
}

TEST(AlgebraTest, PowersAndOrders) {
  auto z8 = cyclic(8);
  EXPECT_EQ(z8->element_order(2), 4);
  EXPECT_EQ(z8->element_order(1), 8);
  EXPECT_EQ(z8->power(3, 3), 1);
  EXPECT_EQ(z8->power(3, -1), 5);
  auto q8 = cat("q8_trivial");
  for (Elem x = 2; x < 8; ++x) EXPECT_EQ(q8->element_order(x), 4);
}

TEST(AlgebraTest, OrderCapIsEnforced) {
  std::vector<Elem> mul;
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) mul.push_back((a + b) % 5);
  EXPECT_THROW(make_mla(mul, trivial_star(5), 0, {}, "", AlgebraLimits{4}), SizeLimitError);
}

TEST(IoTest, RoundTripsThroughJson) {
  for (const char* name : {"q8_commutator", "lie_f2_2d", "z6_trivial"}) {
    auto a = cat(name);
    const auto text = to_json_text(to_file(*a, name));
    const auto back = to_algebra(parse_algebra_file(text));
    EXPECT_EQ(*back, *a) << name;
    EXPECT_EQ(back->names(), a->names());
  }
}

TEST(IoTest, ReportsWhereParsingFailed) {
  try {
    parse_algebra_file("{\n  \"order\": 2,\n  \"mul\": [[0,1],\n", "x.json");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("x.json"), std::string::npos);
  }
  try {
    parse_algebra_file(R"({"name":"b","order":2,"identity":0,"mul":[[0,1],[1]],"star":[[0,0],[0,0]]})");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("mul[1]"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_algebra_file(R"({"name":"b","order":2,"identity":0,"mul":[[0,1],[1,2]],"star":[[0,0],[0,0]]})"),
               ParseError);
  EXPECT_THROW(load_algebra_file("/nonexistent/file.json"), ParseError);
}

TEST(IoTest, NonGroupTablesAreInvalidAlgebras) {
  auto f = parse_algebra_file(R"({"name":"b","order":2,"identity":0,"mul":[[0,1],[1,1]],"star":[[0,0],[0,0]]})");
  EXPECT_THROW(to_algebra(f), InvalidAlgebra);
}

}  // namespace
}  // namespace mla
