#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mla/automorphism.hpp"
#include "mla/cohomology.hpp"

namespace mla {

enum class Inducibility { inducible, obstructed, not_compatible };
const char* to_string(Inducibility s);

struct InducibilityResult {
  Inducibility status = Inducibility::obstructed;
  std::optional<Perm> phi;            // when inducible: phi in Aut_H(G) with projection (alpha, eta)
  std::optional<LambdaMap> lambda;
  std::optional<Elem> witness;        // when not compatible: an x breaking compatibility
  std::size_t nodes_visited = 0;      // partial lambdas tried by the search
};

// Searches lambda : K -> H with lambda(e) = e such that
//   f(eta x, eta y) alpha(f(x,y))^-1 = lambda(xy) lambda(x)^-1 lambda(y)^-1 and
//   h(eta x, eta y) alpha(h(x,y))^-1 = lambda(x*y) gamma_{eta y}(lambda x) gamma_{eta x}(lambda y)^-1,
// then builds phi(t(x) v) = alpha(v) lambda(x) t(eta x) and checks it.
InducibilityResult decide_inducible(const CompatiblePair& pair, const CenterExtension& ext);
InducibilityResult decide_inducible(const CompatiblePair& pair, const CenterExtension& ext,
                                    const CocycleTriple& triple);

struct WellsObstruction {
  CompatiblePair pair;
  CocycleTriple s_triple;  // (f(eta, eta) alpha(f)^-1, h(eta, eta) alpha(h)^-1, gamma)
  bool class_trivial = false;
  std::optional<LambdaMap> witness_lambda;
};

// The s-triple with gamma of the extension; throws InvariantViolation when it
// fails the cocycle checks.
CocycleTriple s_triple(const CompatiblePair& pair, const CocycleTriple& triple);
WellsObstruction wells_obstruction(const CompatiblePair& pair, const CenterExtension& ext);
WellsObstruction wells_obstruction(const CompatiblePair& pair, const CocycleTriple& triple);

struct RestrictedObstructions {
  std::vector<Perm> c1;                  // alpha with (alpha, id) compatible
  std::vector<Perm> c2;                  // eta with (id, eta) compatible
  std::vector<WellsObstruction> chi1;    // parallel to c1
  std::vector<WellsObstruction> chi2;    // parallel to c2
  std::vector<Perm> ker_chi1;
  std::vector<Perm> ker_chi2;
};
RestrictedObstructions restricted_obstructions(const CenterExtension& ext,
                                               const AutLimits& limits = {});

struct SequenceCheck {
  std::string name;
  bool exact = true;
  std::vector<std::string> failures;  // each names a witness
};

struct ExactnessReport {
  std::vector<SequenceCheck> sequences;
  std::vector<std::string> red_alerts;  // contradictions outside the sequence terms
  std::size_t z1 = 0, aut_h = 0, aut_pointwise = 0, aut_hk = 0, aut_setwise_k = 0;
  std::size_t cl = 0, ker_chi = 0, image_pi = 0;
  std::size_t c1 = 0, ker_chi1 = 0, c2 = 0, ker_chi2 = 0;
  bool exact() const;
};

// The sequence through C^L with the Z1 embedding, the two restricted sequences, and
// for central extensions C^L = Aut(H) x Aut(K). Everything is compared as
// explicit sets.
ExactnessReport verify_wells_sequence(const CenterExtension& ext, const AutLimits& limits = {});

struct Z1AutIsomorphism {
  std::vector<OneCocycle> z1;
  std::vector<Perm> image;  // phi_nu(v t(x)) = v nu(x) t(x), parallel to z1
  AutGroup target;          // Aut^{H,K}(G)
  bool bijective = false;
  bool homomorphism = false;
  bool roundtrip = false;   // nu(x) = phi_nu(t(x)) t(x)^-1 recovers nu
  std::vector<std::string> failures;
  bool ok() const { return bijective && homomorphism && roundtrip && failures.empty(); }
};
Perm phi_of_cocycle(const OneCocycle& nu, const CenterExtension& ext);
OneCocycle cocycle_of_phi(const Perm& phi, const CenterExtension& ext);
Z1AutIsomorphism z1_aut_isomorphism(const CenterExtension& ext, const AutLimits& limits = {});

struct SectionCheck {
  std::string name;
  std::size_t domain = 0;
  bool ok = true;
  std::vector<std::string> failures;
};
struct SplitSections {
  CenterExtension ext;  // re-based on the homomorphic section
  std::vector<std::pair<Perm, Perm>> delta1;                // alpha -> phi1
  std::vector<std::pair<Perm, Perm>> delta2;                // eta -> phi2
  std::vector<std::pair<CompatiblePair, Perm>> delta;       // central only
  std::vector<SectionCheck> checks;
  bool ok() const;
};
// phi1(t(x) v) = t(x) alpha(v), phi2(t(x) v) = t(eta x) v, phi(t(x) v) = t(eta x) alpha(v).
// Throws StructuralError when the extension does not split.
SplitSections split_sections(const CenterExtension& ext, const AutLimits& limits = {});

}  // namespace mla
