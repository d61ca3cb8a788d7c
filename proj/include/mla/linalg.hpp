#pragma once

#include <optional>
#include <vector>

namespace mla::linalg {

// Dense matrix over Z/p, p prime, entries kept in [0, p).
struct ModMatrix {
  int rows = 0;
  int cols = 0;
  int p = 2;
  std::vector<int> data;

  ModMatrix() = default;
  ModMatrix(int r, int c, int prime) : rows(r), cols(c), p(prime), data(static_cast<std::size_t>(r * c), 0) {}
  int& at(int r, int c) { return data[static_cast<std::size_t>(r * cols + c)]; }
  int at(int r, int c) const { return data[static_cast<std::size_t>(r * cols + c)]; }
};

int inverse_mod(int a, int p);

// Reduced row echelon form in place; returns the pivot column of each nonzero row.
std::vector<int> row_reduce(ModMatrix& m);
int rank(ModMatrix m);
// Basis of {v : m v = 0}.
std::vector<std::vector<int>> nullspace(ModMatrix m);
// Some x with m x = b, if the system is consistent.
std::optional<std::vector<int>> solve(ModMatrix m, const std::vector<int>& b);

}  // namespace mla::linalg
