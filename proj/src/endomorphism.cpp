#include "mla/endomorphism.hpp"

#include <algorithm>
#include <map>

#include <fmt/format.h>

#include "mla/hom_search.hpp"

namespace mla {

bool is_endomorphism(const MultLieAlgebra& h, std::span<const Elem> map) {
  if (map.size() != static_cast<std::size_t>(h.order())) return false;
  for (Elem a = 0; a < h.order(); ++a)
    for (Elem b = 0; b < h.order(); ++b)
      if (map[h.mul(a, b)] != h.mul(map[a], map[b])) return false;
  return true;
}

Endomap trivial_endomap(int n) { return Endomap(static_cast<std::size_t>(n), kIdentity); }

Endomap end_product(const Endomap& f, const Endomap& g, const MultLieAlgebra& h) {
  Endomap out(f.size());
  for (Elem x = 0; x < h.order(); ++x) out[x] = h.mul(f[x], g[x]);
  return out;
}

Endomap end_star_unchecked(const Endomap& f, const Endomap& g, const MultLieAlgebra& h) {
  Endomap out(f.size());
  for (Elem x = 0; x < h.order(); ++x) out[x] = h.mul(f[g[x]], g[f[h.inv(x)]]);
  return out;
}

Endomap end_star(const Endomap& f, const Endomap& g, const MultLieAlgebra& h) {
  if (!h.is_abelian()) throw StructuralError("End(H) star product needs an abelian H");
  Endomap out = end_star_unchecked(f, g, h);
  if (!is_endomorphism(h, out))
    throw NotEndomorphism(fmt::format("f * g is not an endomorphism of {}", h.label()));
  return out;
}

EndMonoid end_monoid(const AlgebraPtr& h) {
  if (!h->is_abelian() || !h->has_trivial_star())
    throw StructuralError("End(H) is only formed for abelian H with trivial star");
  HomSearchOptions opt;
  opt.preserve_star = false;
  auto maps = all_homomorphisms(*h, *h, opt);
  std::sort(maps.begin(), maps.end());
  return EndMonoid{h, std::move(maps)};
}

AlgebraPtr end_algebra(const EndMonoid& m, const AlgebraLimits& limits) {
  const int n = static_cast<int>(m.elements.size());
  if (n > limits.max_order)
    throw SizeLimitError(fmt::format("End(H) has {} elements, over the cap of {}", n, limits.max_order));
  std::map<Endomap, Elem> index;
  for (Elem k = 0; k < n; ++k) index.emplace(m.elements[k], k);
  auto lookup = [&](const Endomap& e) {
    auto it = index.find(e);
    if (it == index.end()) throw NotEndomorphism("End(H) is not closed under its operations");
    return it->second;
  };
  const Endomap zero = trivial_endomap(m.base->order());
  std::vector<Elem> mul(static_cast<std::size_t>(n * n)), star(static_cast<std::size_t>(n * n));
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      mul[a * n + b] = lookup(end_product(m.elements[a], m.elements[b], *m.base));
      star[a * n + b] = lookup(end_star_unchecked(m.elements[a], m.elements[b], *m.base));
    }
  }
  return share(MultLieAlgebra::from_tables(std::move(mul), std::move(star), lookup(zero), {},
                                           "End(" + m.base->label() + ")", limits));
}

}  // namespace mla
