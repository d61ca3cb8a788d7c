#include "mla/automorphism.hpp"

#include <algorithm>
#include <set>

#include <fmt/format.h>

#include "mla/hom_search.hpp"

namespace mla {

const char* to_string(AutFlavor f) {
  switch (f) {
    case AutFlavor::full: return "Aut(G)";
    case AutFlavor::setwise: return "Aut_H(G)";
    case AutFlavor::pointwise: return "Aut^H(G)";
    case AutFlavor::pointwise_k_trivial: return "Aut^{H,K}(G)";
    case AutFlavor::setwise_k_trivial: return "Aut_H^K(G)";
  }
  return "?";
}

bool AutGroup::contains(const Perm& p) const {
  return std::binary_search(elements.begin(), elements.end(), p);
}

Morphism AutGroup::morphism(std::size_t i) const {
  return Morphism{base, base, elements.at(i), MorphismKind::mla_automorphism};
}

AutGroup enumerate_aut(const AlgebraPtr& a, const AutLimits& limits) {
  if (a->order() > limits.max_order)
    throw SizeLimitError(fmt::format("automorphism enumeration is capped at order {} (got {})",
                                     limits.max_order, a->order()));
  HomSearchOptions opt;
  opt.injective = true;
  opt.preserve_star = true;
  auto maps = all_homomorphisms(*a, *a, opt);
  std::sort(maps.begin(), maps.end());
  return AutGroup{a, std::move(maps), AutFlavor::full, std::nullopt};
}

bool has_flavor(const MultLieAlgebra& g, const Perm& phi, AutFlavor f, const SubsetIdeal& h) {
  const bool fixes_points = std::all_of(h.members.begin(), h.members.end(),
                                        [&](Elem x) { return phi[x] == x; });
  const bool fixes_set = std::all_of(h.members.begin(), h.members.end(),
                                     [&](Elem x) { return h.contains(phi[x]); });
  auto k_trivial = [&] {
    for (Elem x = 0; x < g.order(); ++x)
      if (!h.contains(g.mul(phi[x], g.inv(x)))) return false;
    return true;
  };
  switch (f) {
    case AutFlavor::full: return true;
    case AutFlavor::setwise: return fixes_set;
    case AutFlavor::pointwise: return fixes_points;
    case AutFlavor::pointwise_k_trivial: return fixes_points && k_trivial();
    case AutFlavor::setwise_k_trivial: return fixes_set && k_trivial();
  }
  return false;
}

AutGroup filter_aut(const AutGroup& full, AutFlavor f, const SubsetIdeal& h) {
  AutGroup out{full.base, {}, f, h};
  for (const auto& p : full.elements)
    if (has_flavor(*full.base, p, f, h)) out.elements.push_back(p);
  if (auto why = subgroup_violation(out.elements))
    throw InvariantViolation(fmt::format("{} is not a subgroup: {}", to_string(f), *why));
  return out;
}

std::optional<std::string> subgroup_violation(const std::vector<Perm>& elements) {
  if (elements.empty()) return "empty set";
  std::set<Perm> all(elements.begin(), elements.end());
  const int n = static_cast<int>(elements.front().size());
  if (!all.count(identity_map(n))) return "identity missing";
  // Grow the generated subgroup one generator at a time; every product must stay in the set.
  std::set<Perm> generated{identity_map(n)};
  std::vector<Perm> gens;
  for (const auto& s : elements) {
    if (generated.count(s)) continue;
    gens.push_back(s);
    std::vector<Perm> queue(generated.begin(), generated.end());
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (const auto& g : gens) {
        Perm p = compose_maps(g, queue[i]);
        if (!all.count(p)) return "not closed under composition";
        if (generated.insert(p).second) queue.push_back(std::move(p));
      }
    }
  }
  if (generated.size() != all.size()) return "set differs from the subgroup it generates";
  return std::nullopt;
}

std::optional<Elem> compatibility_witness(const std::vector<Endomap>& gamma, const Perm& alpha,
                                          const Perm& eta) {
  const Perm ai = invert_map(alpha);
  for (Elem x = 0; x < static_cast<Elem>(gamma.size()); ++x)
    for (Elem v = 0; v < static_cast<Elem>(alpha.size()); ++v)
      if (alpha[gamma[x][ai[v]]] != gamma[eta[x]][v]) return x;
  return std::nullopt;
}

bool is_compatible(const std::vector<Endomap>& gamma, const Perm& alpha, const Perm& eta) {
  return !compatibility_witness(gamma, alpha, eta).has_value();
}

CompatiblePair project_pair(const Perm& phi, const CenterExtension& ext) {
  CompatiblePair out;
  for (Elem v = 0; v < ext.Hsub->order(); ++v) {
    const Elem img = ext.to_h[phi[ext.incl(v)]];
    if (img < 0) throw StructuralError("automorphism does not map H onto H");
    out.alpha.push_back(img);
  }
  for (Elem x = 0; x < ext.K->order(); ++x) out.eta.push_back(ext.beta(phi[ext.t(x)]));
  return out;
}

CompatiblePair compose_pairs(const CompatiblePair& a, const CompatiblePair& b) {
  return {compose_maps(a.alpha, b.alpha), compose_maps(a.eta, b.eta)};
}

namespace {
Perm flatten(const CompatiblePair& p) {
  // The pair as one permutation of the disjoint union H + K.
  Perm out = p.alpha;
  const auto off = static_cast<Elem>(p.alpha.size());
  for (Elem e : p.eta) out.push_back(e + off);
  return out;
}
}  // namespace

std::optional<std::string> pair_subgroup_violation(const std::vector<CompatiblePair>& pairs) {
  std::vector<Perm> flat;
  flat.reserve(pairs.size());
  for (const auto& p : pairs) flat.push_back(flatten(p));
  std::sort(flat.begin(), flat.end());
  return subgroup_violation(flat);
}

std::vector<CompatiblePair> compatible_pairs(const std::vector<Endomap>& gamma,
                                             const AutGroup& aut_h, const AutGroup& aut_k) {
  std::vector<CompatiblePair> out;
  for (const auto& a : aut_h.elements)
    for (const auto& e : aut_k.elements)
      if (is_compatible(gamma, a, e)) out.push_back({a, e});
  std::sort(out.begin(), out.end());
  if (auto why = pair_subgroup_violation(out))
    throw InvariantViolation("compatible pairs do not form a subgroup: " + *why);
  return out;
}

std::vector<CompatiblePair> compatible_pairs(const CenterExtension& ext, const AutLimits& limits) {
  const auto gamma = induced_triple(ext).gamma;
  return compatible_pairs(gamma, enumerate_aut(ext.Hsub, limits), enumerate_aut(ext.K, limits));
}

}  // namespace mla
