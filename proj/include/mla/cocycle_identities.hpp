#pragma once

#include <array>
#include <string_view>

#include "mla/algebra.hpp"

namespace mla {

// The five product identities a center 2-cocycle (f, h, gamma) must satisfy,
// obtained by writing the group law and axioms 2-5 of the star product on
// transversal elements t(x), t(y), t(z) and projecting onto H.
enum CocycleIdentity : int {
  kAssociativity = 0,  // group law
  kLeftDistributive,   // axiom 2
  kRightDistributive,  // axiom 3
  kConjugation,        // axiom 5
  kJacobi,             // axiom 4, re-derived
  kCocycleIdentityCount
};

inline constexpr std::array<std::string_view, kCocycleIdentityCount> kCocycleIdentityNames = {
    "cocycle-associativity", "left-distributivity", "right-distributivity",
    "conjugation-invariance", "jacobi (derived)"};

// Residuals (lhs * rhs^-1, in H) of every identity at (x, y, z); an identity
// holds at that tuple iff its residual is the identity of H. `f(a, b)` and
// `h(a, b)` return H elements, `gamma(a, v)` applies the action of a in K to
// v in H. Accessors are templated so callers can trace which table entries
// an identity touches. With `only` >= 0 just that identity is evaluated and
// the other residuals are left at the identity.
template <class FAt, class HAt, class GammaAt>
std::array<Elem, kCocycleIdentityCount> cocycle_residuals(const MultLieAlgebra& K,
                                                         const MultLieAlgebra& H, FAt&& f,
                                                         HAt&& h, GammaAt&& gamma, Elem x,
                                                         Elem y, Elem z, int only = -1) {
  auto m = [&](Elem a, Elem b) { return H.mul(a, b); };
  auto i = [&](Elem a) { return H.inv(a); };
  auto km = [&](Elem a, Elem b) { return K.mul(a, b); };
  auto ks = [&](Elem a, Elem b) { return K.star(a, b); };
  // t(a) t(b) t(a)^-1 = corr(a, b) t(a b a^-1)
  auto corr = [&](Elem a, Elem b) {
    const Elem ab = km(a, b);
    return m(i(f(K.inv(a), ab)), f(ab, K.inv(a)));
  };

  std::array<Elem, kCocycleIdentityCount> r{};
  auto want = [only](int k) { return only < 0 || only == k; };

  if (want(kAssociativity))
    r[kAssociativity] = m(m(f(x, y), f(km(x, y), z)), i(m(f(y, z), f(x, km(y, z)))));

  if (want(kLeftDistributive)) {
    const Elem xz = ks(x, z);
    Elem lhs = m(m(h(x, y), h(x, z)), corr(y, xz));
    lhs = m(lhs, f(ks(x, y), K.conj(y, xz)));
    const Elem rhs = m(gamma(x, f(y, z)), h(x, km(y, z)));
    r[kLeftDistributive] = m(lhs, i(rhs));
  }
  if (want(kRightDistributive)) {
    const Elem yz = ks(y, z);
    Elem lhs = m(corr(x, yz), f(K.conj(x, yz), ks(x, z)));
    lhs = m(lhs, m(h(x, z), h(y, z)));
    const Elem rhs = m(gamma(z, i(f(x, y))), h(km(x, y), z));
    r[kRightDistributive] = m(lhs, i(rhs));
  }
  if (want(kConjugation)) {
    Elem lhs = m(gamma(x, corr(z, y)), gamma(y, i(corr(z, x))));
    lhs = m(lhs, h(K.conj(z, x), K.conj(z, y)));
    const Elem rhs = m(corr(z, ks(x, y)), h(x, y));
    r[kConjugation] = m(lhs, i(rhs));
  }
  if (want(kJacobi)) {
    const Elem xy = ks(x, y), yz = ks(y, z), zx = ks(z, x);
    const Elem a = ks(xy, K.conj(y, z));
    const Elem b = ks(yz, K.conj(z, x));
    const Elem c = ks(zx, K.conj(x, y));
    Elem acc = m(gamma(xy, corr(y, z)), gamma(yz, corr(z, x)));
    acc = m(acc, gamma(zx, corr(x, y)));
    acc = m(acc, i(gamma(z, h(x, y))));
    acc = m(acc, i(gamma(x, h(y, z))));
    acc = m(acc, i(gamma(y, h(z, x))));
    acc = m(acc, h(xy, K.conj(y, z)));
    acc = m(acc, h(yz, K.conj(z, x)));
    acc = m(acc, h(zx, K.conj(x, y)));
    acc = m(acc, f(a, b));
    acc = m(acc, f(K.inv(c), c));
    r[kJacobi] = acc;
  }
  return r;
}

}  // namespace mla
