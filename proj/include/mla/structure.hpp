#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mla/algebra.hpp"
#include "mla/errors.hpp"
#include "mla/morphism.hpp"

namespace mla {

// A subset of an algebra's carrier, kept sorted. Despite the name, only
// `ideal_violation` certifies the ideal property; center and lie_center
// return subsets that are ideals by construction.
struct SubsetIdeal {
  AlgebraPtr parent;
  std::vector<Elem> members;

  bool contains(Elem x) const;
  std::size_t size() const { return members.size(); }
};

SubsetIdeal make_subset(const AlgebraPtr& a, std::vector<Elem> members);

SubsetIdeal center(const AlgebraPtr& a);      // {z : zx = xz for all x}
SubsetIdeal lie_center(const AlgebraPtr& a);  // {z : z * x = e for all x}

bool is_subgroup(const MultLieAlgebra& a, const std::vector<Elem>& s);

// Why `s` fails to be an ideal (normal subgroup absorbing x * h), or nullopt.
std::optional<std::string> ideal_violation(const MultLieAlgebra& a, const std::vector<Elem>& s);
bool is_ideal(const MultLieAlgebra& a, const std::vector<Elem>& s);

SubsetIdeal generated_subgroup(const AlgebraPtr& a, const std::vector<Elem>& gens);
// Every subgroup of `a` contained in `within` (all subgroups when within is empty).
std::vector<std::vector<Elem>> subgroups(const MultLieAlgebra& a, const std::vector<Elem>& within = {});

class QuotientError : public MlaError {
 public:
  using MlaError::MlaError;
};

struct Quotient {
  AlgebraPtr algebra;               // K = A/H
  Morphism projection;              // beta : A -> K, certified mla-hom
  std::vector<Elem> representative; // minimum element of each coset
};

// Cosets are numbered by increasing minimum element, so the coset of the
// identity is 0. Throws QuotientError if H is not an ideal or the star product
// does not descend.
Quotient quotient(const AlgebraPtr& a, const SubsetIdeal& h);

}  // namespace mla
