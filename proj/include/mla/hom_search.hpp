#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "mla/algebra.hpp"
#include "mla/morphism.hpp"

namespace mla {

struct HomSearchOptions {
  bool injective = false;
  bool preserve_star = true;
  // Optional filter on the image chosen for a generator.
  std::function<bool(Elem generator, Elem image)> allow_image;
};

// Generators picked greedily: repeatedly the element of largest order outside
// the subgroup generated so far.
std::vector<Elem> greedy_generators(const MultLieAlgebra& a);

// Backtracks over generator images, extending each partial assignment to the
// generated subgroup and pruning on the first inconsistency. `visit` returns
// false to stop the search.
void for_each_homomorphism(const MultLieAlgebra& src, const MultLieAlgebra& dst,
                           const HomSearchOptions& options,
                           const std::function<bool(const std::vector<Elem>&)>& visit);

std::vector<std::vector<Elem>> all_homomorphisms(const MultLieAlgebra& src,
                                                 const MultLieAlgebra& dst,
                                                 const HomSearchOptions& options = {});

// An isomorphism of multiplicative Lie algebras, if any.
std::optional<Perm> find_isomorphism(const MultLieAlgebra& a, const MultLieAlgebra& b);

}  // namespace mla
