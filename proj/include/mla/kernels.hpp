#pragma once

#include <span>
#include <vector>

#include "mla/algebra.hpp"

// Exhaustive verification kernels. Each kernel has a serial reference
// implementation and an OpenMP version that splits the outermost index range
// across threads; both produce identical reports (same witnesses, same order).
namespace mla::kernels {

// A cocycle triple laid out as flat tables over K (values are H indices).
struct CocycleView {
  const MultLieAlgebra& K;
  const MultLieAlgebra& H;
  std::span<const Elem> f;                  // |K| x |K|
  std::span<const Elem> h;                  // |K| x |K|
  const std::vector<std::vector<Elem>>& gamma;  // |K| endomaps of H
};

namespace serial {
ValidityReport group_axioms(std::span<const Elem> table, int n, Elem identity);
ValidityReport star_axioms(const MultLieAlgebra& a);
ValidityReport cocycle_identities(const CocycleView& c);
}  // namespace serial

namespace parallel {
ValidityReport group_axioms(std::span<const Elem> table, int n, Elem identity);
ValidityReport star_axioms(const MultLieAlgebra& a);
ValidityReport cocycle_identities(const CocycleView& c);
}  // namespace parallel

}  // namespace mla::kernels
