#include "mla/algebra.hpp"

#include <numeric>
#include <utility>

#include <fmt/format.h>

#include "mla/errors.hpp"
#include "mla/kernels.hpp"

namespace mla {
namespace {

void check_shape(std::span<const Elem> table, int n, std::string_view what) {
  if (n <= 0) throw StructuralError(fmt::format("{}: order must be positive", what));
  if (table.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw StructuralError(fmt::format("{}: expected {}x{} entries, got {}", what, n, n,
                                      table.size()));
  for (std::size_t k = 0; k < table.size(); ++k) {
    if (table[k] < 0 || table[k] >= n)
      throw StructuralError(fmt::format("{}: entry ({}, {}) = {} is outside [0, {})", what,
                                        k / static_cast<std::size_t>(n),
                                        k % static_cast<std::size_t>(n), table[k], n));
  }
}

int exact_sqrt(std::size_t size) {
  int n = 0;
  while (static_cast<std::size_t>(n) * static_cast<std::size_t>(n) < size) ++n;
  if (static_cast<std::size_t>(n) * static_cast<std::size_t>(n) != size)
    throw StructuralError(fmt::format("table with {} entries is not square", size));
  return n;
}

// Applies the relabelling x -> perm[x] to a table.
std::vector<Elem> relabel(const std::vector<Elem>& t, const std::vector<Elem>& perm, int n) {
  std::vector<Elem> out(t.size());
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      out[static_cast<std::size_t>(perm[x] * n + perm[y])] = perm[t[static_cast<std::size_t>(x * n + y)]];
  return out;
}

}  // namespace

ValidityReport verify_group(std::span<const Elem> table, int n, Elem identity) {
  check_shape(table, n, "group table");
  if (identity < 0 || identity >= n)
    throw StructuralError(fmt::format("identity {} is outside [0, {})", identity, n));
  return kernels::parallel::group_axioms(table, n, identity);
}

MultLieAlgebra MultLieAlgebra::from_tables(std::vector<Elem> mul, std::vector<Elem> star,
                                           Elem identity, std::vector<std::string> names,
                                           std::string label, const AlgebraLimits& limits) {
  const int n = exact_sqrt(mul.size());
  if (n > limits.max_order)
    throw SizeLimitError(
        fmt::format("order {} exceeds the configured cap of {}", n, limits.max_order));
  check_shape(mul, n, "mul");
  check_shape(star, n, "star");
  if (!names.empty() && names.size() != static_cast<std::size_t>(n))
    throw StructuralError(fmt::format("expected {} element names, got {}", n, names.size()));
  ValidityReport group = verify_group(mul, n, identity);
  if (!group.ok()) throw InvalidAlgebra("mul is not a group table: " + group.summary(), group);

  std::vector<Elem> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[0], perm[static_cast<std::size_t>(identity)]);
  if (identity != 0) {
    mul = relabel(mul, perm, n);
    star = relabel(star, perm, n);
    if (!names.empty()) std::swap(names[0], names[static_cast<std::size_t>(identity)]);
  }

  MultLieAlgebra a;
  a.n_ = n;
  a.mul_ = std::move(mul);
  a.star_ = std::move(star);
  a.names_ = std::move(names);
  a.label_ = std::move(label);
  a.inv_.assign(static_cast<std::size_t>(n), 0);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (a.mul(x, y) == kIdentity) a.inv_[static_cast<std::size_t>(x)] = y;
  a.orders_.assign(static_cast<std::size_t>(n), 1);
  for (Elem x = 0; x < n; ++x) {
    int k = 1;
    for (Elem p = x; p != kIdentity; p = a.mul(p, x)) ++k;
    a.orders_[static_cast<std::size_t>(x)] = k;
  }
  return a;
}

Elem MultLieAlgebra::power(Elem x, long long k) const {
  k %= element_order(x);
  if (k < 0) k += element_order(x);
  Elem r = kIdentity;
  for (long long j = 0; j < k; ++j) r = mul(r, x);
  return r;
}

std::string MultLieAlgebra::element_name(Elem x) const {
  if (!names_.empty()) return names_[static_cast<std::size_t>(x)];
  return std::to_string(x);
}

bool MultLieAlgebra::is_abelian() const {
  for (Elem x = 0; x < n_; ++x)
    for (Elem y = x + 1; y < n_; ++y)
      if (mul(x, y) != mul(y, x)) return false;
  return true;
}

bool MultLieAlgebra::has_trivial_star() const {
  for (Elem s : star_)
    if (s != kIdentity) return false;
  return true;
}

MultLieAlgebra MultLieAlgebra::with_star(std::vector<Elem> star, std::string label) const {
  check_shape(star, n_, "star");
  MultLieAlgebra a = *this;
  a.star_ = std::move(star);
  if (!label.empty()) a.label_ = std::move(label);
  return a;
}

ValidityReport verify_mla(const MultLieAlgebra& a) { return kernels::parallel::star_axioms(a); }

AlgebraPtr make_mla(std::vector<Elem> mul, std::vector<Elem> star, Elem identity,
                    std::vector<std::string> names, std::string label,
                    const AlgebraLimits& limits) {
  auto a = MultLieAlgebra::from_tables(std::move(mul), std::move(star), identity,
                                       std::move(names), std::move(label), limits);
  ValidityReport r = verify_mla(a);
  if (!r.ok()) throw InvalidAlgebra("star violates the product axioms: " + r.summary(), r);
  return share(std::move(a));
}

std::vector<Elem> trivial_star(int n) {
  return std::vector<Elem>(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), kIdentity);
}

std::vector<Elem> commutator_star(const MultLieAlgebra& a) {
  const int n = a.order();
  std::vector<Elem> s(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      s[static_cast<std::size_t>(x * n + y)] = a.mul(a.mul(a.mul(x, y), a.inv(x)), a.inv(y));
  return s;
}

}  // namespace mla
