#pragma once

#include <span>
#include <vector>

#include "mla/algebra.hpp"
#include "mla/errors.hpp"

namespace mla {

using Endomap = std::vector<Elem>;

bool is_endomorphism(const MultLieAlgebra& h, std::span<const Elem> map);
Endomap trivial_endomap(int n);  // h -> e, the identity of End(H)

// (f . g)(h) = f(h) g(h)
Endomap end_product(const Endomap& f, const Endomap& g, const MultLieAlgebra& h);
// (f * g)(h) = f(g(h)) . g(f(h^-1)), without the endomorphism check.
Endomap end_star_unchecked(const Endomap& f, const Endomap& g, const MultLieAlgebra& h);

class NotEndomorphism : public MlaError {
 public:
  using MlaError::MlaError;
};

// Star product on End(H). Requires H abelian; throws NotEndomorphism if the
// result is not an endomorphism of (H, .).
Endomap end_star(const Endomap& f, const Endomap& g, const MultLieAlgebra& h);

// All endomorphisms of an abelian algebra with trivial star.
struct EndMonoid {
  AlgebraPtr base;
  std::vector<Endomap> elements;
};
EndMonoid end_monoid(const AlgebraPtr& h);

// End(H) itself as a multiplicative Lie algebra, with elements numbered as
// in end_monoid(h).elements. Subject to the usual order cap.
AlgebraPtr end_algebra(const EndMonoid& m, const AlgebraLimits& limits = {});

}  // namespace mla
