#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mla/algebra.hpp"

namespace mla {

// Coordinates identifying an elementary abelian group with (Z/p)^dim.
struct ElementaryAbelian {
  int p = 2;
  int dim = 0;
  std::vector<Elem> basis;
  std::vector<std::vector<int>> coords;  // per element
  std::vector<Elem> by_code;             // base-p code of coords -> element

  Elem element(std::span<const int> c) const;
  int code(std::span<const int> c) const;
};

// Present iff the group is abelian and every non-identity element has the
// same prime order.
std::optional<ElementaryAbelian> elementary_abelian(const MultLieAlgebra& h);

// Invariant factors d1 | d2 | ... of a finite abelian group given by its
// Cayley table (identity 0), by repeatedly splitting off a cyclic subgroup of
// maximal order. The trivial group has no factors.
std::vector<long long> invariant_factors(std::span<const Elem> table, int n);
std::vector<long long> invariant_factors(const MultLieAlgebra& a);

}  // namespace mla
