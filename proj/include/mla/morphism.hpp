#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mla/algebra.hpp"

namespace mla {

enum class MorphismKind { raw, group_hom, mla_hom, mla_automorphism };

const char* to_string(MorphismKind k);

// A total map between carriers. `kind` records the strongest property that
// has been certified; construct with `raw` and call certify() to upgrade.
struct Morphism {
  AlgebraPtr src;
  AlgebraPtr dst;
  std::vector<Elem> map;
  MorphismKind kind = MorphismKind::raw;

  Elem operator()(Elem x) const { return map[static_cast<std::size_t>(x)]; }
};

bool is_group_hom(const MultLieAlgebra& src, const MultLieAlgebra& dst, std::span<const Elem> map);
bool is_mla_hom(const MultLieAlgebra& src, const MultLieAlgebra& dst, std::span<const Elem> map);
bool is_bijection(std::span<const Elem> map, int codomain_order);

// Strongest kind that holds. mla_automorphism means src == dst (same tables)
// and the map is a bijective mla homomorphism.
MorphismKind check_morphism(const Morphism& m);
Morphism certify(Morphism m);

Morphism identity_morphism(const AlgebraPtr& a);
// g after f
Morphism compose(const Morphism& g, const Morphism& f);
// Requires a bijection; the result carries the same certification.
Morphism inverse(const Morphism& m);

// Plain map helpers used throughout for automorphism tables.
using Perm = std::vector<Elem>;
Perm compose_maps(std::span<const Elem> g, std::span<const Elem> f);  // g after f
Perm invert_map(std::span<const Elem> p);
Perm identity_map(int n);
bool is_identity_map(std::span<const Elem> p);

}  // namespace mla
