#include "mla/morphism.hpp"

#include <numeric>

#include <fmt/format.h>

#include "mla/errors.hpp"

namespace mla {

const char* to_string(MorphismKind k) {
  switch (k) {
    case MorphismKind::raw: return "raw";
    case MorphismKind::group_hom: return "group-hom";
    case MorphismKind::mla_hom: return "mla-hom";
    case MorphismKind::mla_automorphism: return "mla-automorphism";
  }
  return "?";
}

bool is_group_hom(const MultLieAlgebra& src, const MultLieAlgebra& dst,
                  std::span<const Elem> map) {
  const int n = src.order();
  if (map.size() != static_cast<std::size_t>(n)) return false;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (map[static_cast<std::size_t>(src.mul(x, y))] != dst.mul(map[x], map[y])) return false;
  return true;
}

bool is_mla_hom(const MultLieAlgebra& src, const MultLieAlgebra& dst, std::span<const Elem> map) {
  if (!is_group_hom(src, dst, map)) return false;
  const int n = src.order();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (map[static_cast<std::size_t>(src.star(x, y))] != dst.star(map[x], map[y])) return false;
  return true;
}

bool is_bijection(std::span<const Elem> map, int codomain_order) {
  if (map.size() != static_cast<std::size_t>(codomain_order)) return false;
  std::vector<char> seen(map.size(), 0);
  for (Elem v : map) {
    if (v < 0 || v >= codomain_order || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

MorphismKind check_morphism(const Morphism& m) {
  if (!m.src || !m.dst) throw StructuralError("morphism without source or target");
  if (m.map.size() != static_cast<std::size_t>(m.src->order()))
    throw StructuralError("morphism map is not total on its source");
  for (Elem v : m.map)
    if (v < 0 || v >= m.dst->order()) throw StructuralError("morphism value outside target");
  if (!is_group_hom(*m.src, *m.dst, m.map)) return MorphismKind::raw;
  if (!is_mla_hom(*m.src, *m.dst, m.map)) return MorphismKind::group_hom;
  const bool endo = m.src == m.dst || *m.src == *m.dst;
  if (endo && is_bijection(m.map, m.dst->order())) return MorphismKind::mla_automorphism;
  return MorphismKind::mla_hom;
}

Morphism certify(Morphism m) {
  m.kind = check_morphism(m);
  return m;
}

Morphism identity_morphism(const AlgebraPtr& a) {
  return Morphism{a, a, identity_map(a->order()), MorphismKind::mla_automorphism};
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (f.dst->order() != g.src->order()) throw StructuralError("composing incompatible maps");
  Morphism out{f.src, g.dst, compose_maps(g.map, f.map), MorphismKind::raw};
  return out;
}

Morphism inverse(const Morphism& m) {
  if (!is_bijection(m.map, m.dst->order()))
    throw StructuralError("only bijective maps can be inverted");
  return Morphism{m.dst, m.src, invert_map(m.map), m.kind};
}

Perm compose_maps(std::span<const Elem> g, std::span<const Elem> f) {
  Perm out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = g[static_cast<std::size_t>(f[i])];
  return out;
}

Perm invert_map(std::span<const Elem> p) {
  Perm out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[static_cast<std::size_t>(p[i])] = static_cast<Elem>(i);
  return out;
}

Perm identity_map(int n) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

bool is_identity_map(std::span<const Elem> p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<Elem>(i)) return false;
  return true;
}

}  // namespace mla
