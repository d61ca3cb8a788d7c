#include "mla/linalg.hpp"

#include <stdexcept>

namespace mla::linalg {

int inverse_mod(int a, int p) {
  // Fermat; p is small.
  int result = 1, base = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

std::vector<int> row_reduce(ModMatrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int sel = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
    const int inv = inverse_mod(m.at(r, c), m.p);
    for (int j = 0; j < m.cols; ++j) m.at(r, j) = m.at(r, j) * inv % m.p;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      const int factor = m.at(i, c);
      for (int j = 0; j < m.cols; ++j)
        m.at(i, j) = ((m.at(i, j) - factor * m.at(r, j)) % m.p + m.p) % m.p;
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(ModMatrix m) { return static_cast<int>(row_reduce(m).size()); }

std::vector<std::vector<int>> nullspace(ModMatrix m) {
  const auto pivots = row_reduce(m);
  std::vector<char> is_pivot(static_cast<std::size_t>(m.cols), 0);
  for (int c : pivots) is_pivot[c] = 1;
  std::vector<std::vector<int>> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<int> v(static_cast<std::size_t>(m.cols), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = (m.p - m.at(static_cast<int>(r), free)) % m.p;
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<int>> solve(ModMatrix m, const std::vector<int>& b) {
  if (static_cast<int>(b.size()) != m.rows) throw std::invalid_argument("solve: size mismatch");
  ModMatrix aug(m.rows, m.cols + 1, m.p);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = ((b[i] % m.p) + m.p) % m.p;
  }
  const auto pivots = row_reduce(aug);
  std::vector<int> x(static_cast<std::size_t>(m.cols), 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == m.cols) return std::nullopt;
    x[pivots[r]] = aug.at(static_cast<int>(r), m.cols);
  }
  return x;
}

}  // namespace mla::linalg
