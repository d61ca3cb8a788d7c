#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "mla/io.hpp"
#include "mla/structure.hpp"
#include "test_support.hpp"

namespace mla {
namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(CatalogTest, FilesAreInSyncWithTheBuilders) {
  const std::filesystem::path dir = MLA_DEFAULT_CATALOG_DIR;
  std::set<std::string> on_disk;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.path().extension() == ".json") on_disk.insert(entry.path().stem().string());
  const auto names = catalog_names();
  EXPECT_EQ(on_disk, std::set<std::string>(names.begin(), names.end()))
      << "regenerate with mla_gen_catalog " << dir;
  for (const auto& name : names) {
    const auto a = catalog_algebra(name);
    EXPECT_EQ(slurp(dir / (name + ".json")), to_json_text(to_file(*a, name))) << name;
  }
}

TEST(CatalogTest, NamesAreUniqueAndKnown) {
  const auto names = catalog_names();
  EXPECT_EQ(std::set<std::string>(names.begin(), names.end()).size(), names.size());
  EXPECT_THROW(catalog_algebra("no_such_algebra"), MlaError);
  for (const auto& name : names) EXPECT_EQ(catalog_algebra(name)->label(), name);
}

TEST(CatalogTest, ExtensionsCoverTheCenters) {
  const auto exts = catalog_extensions(16);
  EXPECT_GT(exts.size(), 30u);
  std::size_t central = 0, nontrivial_action = 0;
  for (const auto& ce : exts) {
    auto g = catalog_algebra(ce.algebra);
    const auto z = center(g);
    for (Elem h : ce.ideal) EXPECT_TRUE(z.contains(h)) << ce.label();
    central += ce.ext.central();
    bool acts = false;
    for (Elem x = 0; x < ce.ext.K->order(); ++x)
      for (Elem v : ce.ext.H.members) acts = acts || g->star(ce.ext.t(x), v) != kIdentity;
    nontrivial_action += acts;
  }
  EXPECT_GT(central, 0u);
  EXPECT_GT(nontrivial_action, 0u);
  EXPECT_LT(central, exts.size());
}

}  // namespace
}  // namespace mla
