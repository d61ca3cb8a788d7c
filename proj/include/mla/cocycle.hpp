#pragma once

#include <optional>
#include <vector>

#include "mla/algebra.hpp"
#include "mla/endomorphism.hpp"
#include "mla/extension.hpp"
#include "mla/kernels.hpp"
#include "mla/report.hpp"

namespace mla {

/// (f, h, gamma) over K with values in an abelian H carrying trivial star.
/// f and h are |K| x |K| row-major tables of H indices; gamma[x] is the
/// endomap by which x acts on H.
struct CocycleTriple {
  AlgebraPtr K;
  AlgebraPtr H;
  std::vector<Elem> f;
  std::vector<Elem> h;
  std::vector<Endomap> gamma;

  Elem f_at(Elem x, Elem y) const { return f[cell(x, y)]; }
  Elem h_at(Elem x, Elem y) const { return h[cell(x, y)]; }
  Elem act(Elem x, Elem v) const {
    return gamma[static_cast<std::size_t>(x)][static_cast<std::size_t>(v)];
  }
  std::size_t cell(Elem x, Elem y) const {
    return static_cast<std::size_t>(x) * static_cast<std::size_t>(K->order()) +
           static_cast<std::size_t>(y);
  }
  kernels::CocycleView view() const { return {*K, *H, f, h, gamma}; }

  friend bool operator==(const CocycleTriple& a, const CocycleTriple& b) {
    return a.f == b.f && a.h == b.h && a.gamma == b.gamma;
  }
};

std::vector<Endomap> trivial_gamma(int k, int h);
CocycleTriple trivial_triple(const AlgebraPtr& k, const AlgebraPtr& h, std::vector<Endomap> gamma);

// Pointwise product and inverse. Both operands must share K, H and gamma.
CocycleTriple multiply(const CocycleTriple& a, const CocycleTriple& b);
CocycleTriple inverse(const CocycleTriple& a);
bool same_gamma(const CocycleTriple& a, const CocycleTriple& b);
// Throws StructuralError unless a and b live over the same K, H and gamma.
void require_same_shape(const CocycleTriple& a, const CocycleTriple& b);

// f(x,y) = t(x)t(y)t(xy)^-1, h(x,y) = (t(x)*t(y)) t(x*y)^-1, gamma_x(v) = t(x)*v,
// read off through the extension's transversal.
CocycleTriple induced_triple(const CenterExtension& ext);

enum class ValidationMode { direct, reconstruct, both };

// direct: normalization, the action checks on gamma and the five cocycle
// identities. reconstruct: builds the candidate extension and checks it.
// both: runs the two and adds "mode-disagreement" when exactly one passes.
ValidityReport validate_cocycle(const CocycleTriple& c, ValidationMode mode,
                                bool parallel = true);

// Normalization and gamma checks only, shared with the cohomology search.
void check_normalization(const CocycleTriple& c, ValidityReport& out);
void check_gamma(const CocycleTriple& c, ValidityReport& out);

class ReconstructionError : public InvalidAlgebra {
 public:
  using InvalidAlgebra::InvalidAlgebra;
};

struct Reconstruction {
  AlgebraPtr G;
  CenterExtension ext;
};

// Carrier pairs (v, x), v in H and x in K, stored at index x*|H| + v, with
// (v1,x)(v2,y) = (v1 v2 f(x,y), xy) and
// (v1,x)*(v2,y) = (h(x,y) gamma_x(v2) gamma_y(v1)^-1, x*y).
// The extension uses H = {(v,e)} and t(x) = (e,x). Throws
// ReconstructionError when the tables fail a group or star axiom.
Reconstruction reconstruct(const CocycleTriple& c);
// Just the tables, with the group law checked (ReconstructionError) but not the star axioms.
MultLieAlgebra reconstruct_tables(const CocycleTriple& c);

// A homomorphic section of beta, when one exists.
std::optional<Morphism> is_split(const CenterExtension& ext);

// An isomorphism G -> G' fixing H pointwise and commuting with the
// projections, found by searching over its values on the transversal.
// Requires same_base(a, b).
std::optional<Morphism> find_equivalence(const CenterExtension& a, const CenterExtension& b);

}  // namespace mla
