#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mla/algebra.hpp"
#include "mla/errors.hpp"
#include "mla/morphism.hpp"
#include "mla/structure.hpp"

namespace mla {

enum class ExtensionKind { center, central };
const char* to_string(ExtensionKind k);

/// e -> H -> G -> K -> e with H an ideal inside Z(G) carrying trivial star.
///
/// H appears twice: as the subset `H` of G and as the standalone algebra
/// `Hsub`, whose element i is the G element H.members[i]. `kind` is central
/// exactly when H lies in the Lie center of G.
struct CenterExtension {
  AlgebraPtr G;
  SubsetIdeal H;
  AlgebraPtr K;
  AlgebraPtr Hsub;
  Morphism beta;                  // G -> K
  Morphism incl;                  // Hsub -> G
  std::vector<Elem> to_h;         // G element -> Hsub index, or -1 outside H
  std::vector<Elem> transversal;  // K -> G, t(e) = e
  ExtensionKind kind = ExtensionKind::center;

  bool central() const { return kind == ExtensionKind::central; }
  Elem t(Elem x) const { return transversal[static_cast<std::size_t>(x)]; }
  // Hsub index of a G element known to lie in H; throws InvariantViolation otherwise.
  Elem h_of(Elem g) const;
  // g = t(x) i(h); returns (x, h).
  std::pair<Elem, Elem> decompose(Elem g) const;
  Elem compose(Elem x, Elem h) const;
  std::vector<Elem> coset(Elem x) const;  // sorted members of beta^-1(x)
};

class ExtensionError : public StructuralError {
 public:
  enum class Reason { not_ideal, not_in_center, star_nontrivial, not_in_lie_center, bad_transversal };
  ExtensionError(Reason r, const std::string& what) : StructuralError(what), reason_(r) {}
  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

// Checks, in order: H is an ideal, H inside Z(G), star trivial on H x H, and
// H inside LZ(G) when central is required. Uses the canonical transversal.
CenterExtension build_extension(const AlgebraPtr& g, const std::vector<Elem>& h,
                                ExtensionKind required = ExtensionKind::center);

// Seed 0 gives the minimum of every coset. Any other seed draws each
// non-identity coset's representative from mt19937_64(seed), in coset order.
std::vector<Elem> choose_transversal(const CenterExtension& ext, std::uint64_t seed);
CenterExtension with_transversal(CenterExtension ext, std::vector<Elem> t);
CenterExtension with_seed(const CenterExtension& ext, std::uint64_t seed);

// Same K and H tables (indices identified), the conditions under which
// extensions can be compared.
bool same_base(const CenterExtension& a, const CenterExtension& b);

}  // namespace mla
