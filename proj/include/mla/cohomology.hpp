#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mla/cocycle.hpp"

namespace mla {

using LambdaMap = std::vector<Elem>;   // K -> H, lambda(e) = e
using OneCocycle = std::vector<Elem>;  // K -> H

struct CohomologyLimits {
  int max_k_enum = 6;      // explicit enumeration
  int max_h_enum = 4;
  int max_k_linear = 10;   // linear path, H elementary abelian
  std::uint64_t max_list = 1u << 16;  // longest list ever materialized
};

enum class CohomologyMethod { automatic, search, linear };
const char* to_string(CohomologyMethod m);

// nu(xy) = nu(x) nu(y) and nu(x * y) = gamma_x(nu(y)) gamma_y(nu(x)^-1).
bool is_one_cocycle(const MultLieAlgebra& k, const MultLieAlgebra& h,
                    const std::vector<Endomap>& gamma, const OneCocycle& nu);
std::vector<OneCocycle> enumerate_Z1(const AlgebraPtr& k, const AlgebraPtr& h,
                                     const std::vector<Endomap>& gamma);

// f(x,y) = l(x) l(y) l(xy)^-1, h(x,y) = gamma_x(l(y)) gamma_y(l(x)^-1) l(x * y)^-1.
CocycleTriple coboundary_of(const LambdaMap& lambda, const AlgebraPtr& k, const AlgebraPtr& h,
                            const std::vector<Endomap>& gamma);

std::optional<LambdaMap> is_coboundary(const CocycleTriple& c,
                                       CohomologyMethod method = CohomologyMethod::automatic,
                                       const CohomologyLimits& limits = {});
// is_coboundary(c1 c2^-1); throws StructuralError on a shape or gamma mismatch.
std::optional<LambdaMap> cohomologous(const CocycleTriple& c1, const CocycleTriple& c2,
                                      CohomologyMethod method = CohomologyMethod::automatic,
                                      const CohomologyLimits& limits = {});

// Every normalized triple with the given gamma passing the direct checks.
// Throws StructuralError if gamma itself fails the action checks and
// SizeLimitError past the limits.
std::vector<CocycleTriple> enumerate_Z2(const AlgebraPtr& k, const AlgebraPtr& h,
                                        const std::vector<Endomap>& gamma,
                                        const CohomologyLimits& limits = {},
                                        CohomologyMethod method = CohomologyMethod::automatic);

struct CohomologyClassGroup {
  std::vector<Endomap> gamma;
  CohomologyMethod method = CohomologyMethod::search;
  std::uint64_t z2_order = 1;
  std::uint64_t b2_order = 1;
  std::uint64_t h2_order = 1;
  std::vector<long long> invariant_factors;
  std::vector<CocycleTriple> representatives;  // one per class, trivial class first; may be empty past max_list
};

CohomologyClassGroup compute_H2(const AlgebraPtr& k, const AlgebraPtr& h,
                                const std::vector<Endomap>& gamma,
                                const CohomologyLimits& limits = {},
                                CohomologyMethod method = CohomologyMethod::automatic);

}  // namespace mla
