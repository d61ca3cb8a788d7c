#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mla/cocycle.hpp"
#include "mla/extension.hpp"
#include "mla/morphism.hpp"
#include "mla/structure.hpp"

namespace mla {

enum class AutFlavor {
  full,                 // Aut(G)
  setwise,              // Aut_H(G): phi(H) = H
  pointwise,            // Aut^H(G): phi(h) = h
  pointwise_k_trivial,  // Aut^{H,K}(G): phi(h) = h and phi(x)x^-1 in H
  setwise_k_trivial,    // Aut_H^K(G): phi(H) = H and phi(x)x^-1 in H
};
const char* to_string(AutFlavor f);

struct AutLimits {
  int max_order = 24;
};

/// A group of multiplicative Lie algebra automorphisms stored as sorted
/// image tables; the identity is always first.
struct AutGroup {
  AlgebraPtr base;
  std::vector<Perm> elements;
  AutFlavor flavor = AutFlavor::full;
  std::optional<SubsetIdeal> ideal;

  std::size_t size() const { return elements.size(); }
  bool contains(const Perm& p) const;
  Morphism morphism(std::size_t i) const;
};

// Throws SizeLimitError when |A| exceeds the cap.
AutGroup enumerate_aut(const AlgebraPtr& a, const AutLimits& limits = {});

bool has_flavor(const MultLieAlgebra& g, const Perm& phi, AutFlavor f, const SubsetIdeal& h);
// Throws InvariantViolation if the filtered set is not a subgroup.
AutGroup filter_aut(const AutGroup& full, AutFlavor f, const SubsetIdeal& h);

// Why a finite set of permutations fails to be a group, if it does. Checked
// against the subgroup generated by the set.
std::optional<std::string> subgroup_violation(const std::vector<Perm>& elements);

struct CompatiblePair {
  Perm alpha;  // automorphism of H
  Perm eta;    // automorphism of K
  friend auto operator<=>(const CompatiblePair&, const CompatiblePair&) = default;
};

// First x with alpha gamma_x alpha^-1 != gamma_{eta(x)}, if any.
std::optional<Elem> compatibility_witness(const std::vector<Endomap>& gamma, const Perm& alpha,
                                          const Perm& eta);
bool is_compatible(const std::vector<Endomap>& gamma, const Perm& alpha, const Perm& eta);

// (phi restricted to H, x -> beta(phi(t(x)))). Throws StructuralError unless phi(H) = H.
CompatiblePair project_pair(const Perm& phi, const CenterExtension& ext);

// Pairs composed componentwise; the group product on C^L.
CompatiblePair compose_pairs(const CompatiblePair& a, const CompatiblePair& b);

// All of Aut(H) x Aut(K) filtered by compatibility, sorted. Throws
// InvariantViolation if the result is not a subgroup.
std::vector<CompatiblePair> compatible_pairs(const std::vector<Endomap>& gamma,
                                             const AutGroup& aut_h, const AutGroup& aut_k);
std::vector<CompatiblePair> compatible_pairs(const CenterExtension& ext,
                                             const AutLimits& limits = {});

std::optional<std::string> pair_subgroup_violation(const std::vector<CompatiblePair>& pairs);

}  // namespace mla
