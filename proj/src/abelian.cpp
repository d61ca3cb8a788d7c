#include "mla/abelian.hpp"

#include <algorithm>

namespace mla {

int ElementaryAbelian::code(std::span<const int> c) const {
  int out = 0;
  for (int i = dim - 1; i >= 0; --i) out = out * p + ((c[i] % p) + p) % p;
  return out;
}

Elem ElementaryAbelian::element(std::span<const int> c) const {
  return by_code[static_cast<std::size_t>(code(c))];
}

std::optional<ElementaryAbelian> elementary_abelian(const MultLieAlgebra& h) {
  if (!h.is_abelian()) return std::nullopt;
  const int n = h.order();
  ElementaryAbelian out;
  if (n > 1) out.p = h.element_order(1);
  for (Elem x = 1; x < n; ++x)
    if (h.element_order(x) != out.p) return std::nullopt;
  for (int d = 2; d * d <= out.p; ++d)
    if (out.p % d == 0) return std::nullopt;

  std::vector<std::vector<int>> coords(static_cast<std::size_t>(n));
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  std::vector<Elem> span{kIdentity};
  in[kIdentity] = 1;
  for (Elem g = 1; g < n; ++g) {
    if (in[g]) continue;
    out.basis.push_back(g);
    ++out.dim;
    const auto old = span;
    for (Elem s : old) coords[s].push_back(0);
    for (Elem s : old) {
      Elem cur = s;
      for (int k = 1; k < out.p; ++k) {
        cur = h.mul(cur, g);
        in[cur] = 1;
        coords[cur] = coords[s];
        coords[cur].back() = k;
        span.push_back(cur);
      }
    }
  }
  out.by_code.assign(static_cast<std::size_t>(n), -1);
  out.coords = std::move(coords);
  for (Elem x = 0; x < n; ++x) out.by_code[static_cast<std::size_t>(out.code(out.coords[x]))] = x;
  return out;
}

std::vector<long long> invariant_factors(std::span<const Elem> table, int n) {
  // Work on the current quotient, represented by its own Cayley table.
  std::vector<Elem> t(table.begin(), table.end());
  std::vector<long long> factors;
  while (n > 1) {
    auto mul = [&](Elem a, Elem b) { return t[static_cast<std::size_t>(a * n + b)]; };
    Elem best = 0;
    int best_order = 1;
    for (Elem x = 1; x < n; ++x) {
      int k = 1;
      for (Elem y = x; y != 0; y = mul(y, x)) ++k;
      if (k > best_order) {
        best_order = k;
        best = x;
      }
    }
    factors.push_back(best_order);
    // Quotient by <best>.
    std::vector<Elem> cyclic{0};
    for (Elem y = best; y != 0; y = mul(y, best)) cyclic.push_back(y);
    std::vector<Elem> coset(static_cast<std::size_t>(n), -1), reps;
    for (Elem g = 0; g < n; ++g) {
      if (coset[g] != -1) continue;
      for (Elem c : cyclic) coset[mul(g, c)] = static_cast<Elem>(reps.size());
      reps.push_back(g);
    }
    const int m = static_cast<int>(reps.size());
    std::vector<Elem> next(static_cast<std::size_t>(m * m));
    for (Elem a = 0; a < m; ++a)
      for (Elem b = 0; b < m; ++b) next[a * m + b] = coset[mul(reps[a], reps[b])];
    t = std::move(next);
    n = m;
  }
  std::reverse(factors.begin(), factors.end());
  return factors;
}

std::vector<long long> invariant_factors(const MultLieAlgebra& a) {
  return invariant_factors(a.mul_table(), a.order());
}

}  // namespace mla
