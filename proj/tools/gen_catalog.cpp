// Writes every built-in catalog algebra as <dir>/<name>.json.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "mla/catalog.hpp"
#include "mla/io.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: mla_gen_catalog <output-dir>\n";
    return 2;
  }
  const std::filesystem::path dir(argv[1]);
  std::filesystem::create_directories(dir);
  for (const auto& name : mla::catalog_names()) {
    const auto a = mla::catalog_algebra(name);
    std::ofstream out(dir / (name + ".json"));
    out << mla::to_json_text(mla::to_file(*a, name));
    if (!out) {
      std::cerr << "cannot write " << (dir / (name + ".json")) << "\n";
      return 1;
    }
  }
  return 0;
}
