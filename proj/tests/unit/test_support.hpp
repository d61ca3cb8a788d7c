#pragma once

// Shared fixtures and brute-force oracles. The oracles restate the defining
// identities directly so they do not share code with the library kernels.

#include <random>
#include <string>
#include <vector>

#include "mla/algebra.hpp"
#include "mla/catalog.hpp"
#include "mla/cocycle.hpp"

namespace mla::testing {

inline AlgebraPtr cyclic(int n) {
  std::vector<Elem> mul;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul.push_back((a + b) % n);
  return make_mla(std::move(mul), trivial_star(n), 0, {}, "Z/" + std::to_string(n));
}

inline AlgebraPtr cat(const std::string& name) { return catalog_algebra(name); }

// Plain tables, read without going through MultLieAlgebra.
struct Tables {
  int n;
  std::vector<Elem> mul, star;
  Elem m(Elem a, Elem b) const { return mul[a * n + b]; }
  Elem s(Elem a, Elem b) const { return star[a * n + b]; }
  Elem inv(Elem a) const {
    for (Elem b = 0; b < n; ++b)
      if (m(a, b) == 0) return b;
    return -1;
  }
  Elem conj(Elem z, Elem x) const { return m(m(z, x), inv(z)); }
};

inline Tables tables_of(const MultLieAlgebra& a) {
  return {a.order(), {a.mul_table().begin(), a.mul_table().end()},
          {a.star_table().begin(), a.star_table().end()}};
}

// Does the named star axiom fail at this witness?
inline bool axiom_fails(const Tables& t, const std::string& rule, const std::vector<Elem>& w) {
  if (rule == "axiom-1") return t.s(w[0], w[0]) != 0;
  const Elem x = w[0], y = w[1], z = w[2];
  if (rule == "axiom-2") return t.s(x, t.m(y, z)) != t.m(t.s(x, y), t.conj(y, t.s(x, z)));
  if (rule == "axiom-3") return t.s(t.m(x, y), z) != t.m(t.conj(x, t.s(y, z)), t.s(x, z));
  if (rule == "axiom-4") {
    const Elem p = t.s(t.s(x, y), t.conj(y, z));
    const Elem q = t.s(t.s(y, z), t.conj(z, x));
    const Elem r = t.s(t.s(z, x), t.conj(x, y));
    return t.m(t.m(p, q), r) != 0;
  }
  if (rule == "axiom-5") return t.conj(z, t.s(x, y)) != t.s(t.conj(z, x), t.conj(z, y));
  return false;
}

// Exhaustive check of the group and star axioms (identity 0).
inline bool is_mla_oracle(const Tables& t) {
  const int n = t.n;
  for (Elem x = 0; x < n; ++x) {
    if (t.m(0, x) != x || t.m(x, 0) != x || t.inv(x) < 0) return false;
    if (axiom_fails(t, "axiom-1", {x})) return false;
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        if (t.m(t.m(x, y), z) != t.m(x, t.m(y, z))) return false;
        for (const char* r : {"axiom-2", "axiom-3", "axiom-4", "axiom-5"})
          if (axiom_fails(t, r, {x, y, z})) return false;
      }
  }
  return true;
}

// The carrier H x K with the twisted products, checked by the brute-force oracle.
inline bool triple_oracle(const CocycleTriple& c) {
  const int nh = c.H->order(), nk = c.K->order();
  Tables t{nh * nk, {}, {}};
  for (int a = 0; a < t.n; ++a)
    for (int b = 0; b < t.n; ++b) {
      const Elem v1 = a % nh, x = a / nh, v2 = b % nh, y = b / nh;
      t.mul.push_back(c.K->mul(x, y) * nh + c.H->mul(c.H->mul(v1, v2), c.f_at(x, y)));
      const Elem v = c.H->mul(c.H->mul(c.h_at(x, y), c.act(x, v2)), c.H->inv(c.act(y, v1)));
      t.star.push_back(c.K->star(x, y) * nh + v);
    }
  return is_mla_oracle(t);
}

// All catalog algebras up to the given order.
inline std::vector<AlgebraPtr> catalog_upto(int max_order) {
  std::vector<AlgebraPtr> out;
  for (const auto& name : catalog_names()) {
    auto a = catalog_algebra(name);
    if (a->order() <= max_order) out.push_back(a);
  }
  return out;
}

}  // namespace mla::testing
