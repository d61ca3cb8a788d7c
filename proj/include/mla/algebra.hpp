#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "mla/errors.hpp"
#include "mla/report.hpp"

namespace mla {

inline constexpr Elem kIdentity = 0;
inline constexpr int kDefaultOrderCap = 64;

// Exhaustive checks are cubic in the order, so every algebra is capped.
struct AlgebraLimits {
  int max_order = kDefaultOrderCap;
};

// Checks the group axioms of an n x n row-major table with the given
// identity. Throws StructuralError if the table is not square or has entries
// outside [0, n).
ValidityReport verify_group(std::span<const Elem> table, int n, Elem identity);

/// A finite group carrying a second product, stored as two Cayley tables.
///
/// Elements are the indices 0..n-1 and the identity is always 0: tables are
/// relabelled on construction so that the given identity becomes index 0.
/// Construction checks the group axioms of `mul`; the star axioms are checked
/// separately by verify_mla (see make_mla for a constructor that does both).
class MultLieAlgebra {
 public:
  static MultLieAlgebra from_tables(std::vector<Elem> mul, std::vector<Elem> star,
                                    Elem identity = 0,
                                    std::vector<std::string> names = {},
                                    std::string label = {},
                                    const AlgebraLimits& limits = {});

  int order() const { return n_; }
  Elem mul(Elem x, Elem y) const { return mul_[index(x, y)]; }
  Elem star(Elem x, Elem y) const { return star_[index(x, y)]; }
  Elem inv(Elem x) const { return inv_[static_cast<std::size_t>(x)]; }
  // zxz^-1
  Elem conj(Elem z, Elem x) const { return mul(mul(z, x), inv(z)); }
  Elem power(Elem x, long long k) const;
  int element_order(Elem x) const { return orders_[static_cast<std::size_t>(x)]; }

  std::span<const Elem> mul_table() const { return mul_; }
  std::span<const Elem> star_table() const { return star_; }

  const std::string& label() const { return label_; }
  const std::vector<std::string>& names() const { return names_; }
  std::string element_name(Elem x) const;

  bool is_abelian() const;
  bool has_trivial_star() const;

  // Same group, new star table (indices as in this algebra).
  MultLieAlgebra with_star(std::vector<Elem> star, std::string label = {}) const;

  friend bool operator==(const MultLieAlgebra& a, const MultLieAlgebra& b) {
    return a.n_ == b.n_ && a.mul_ == b.mul_ && a.star_ == b.star_;
  }

 private:
  MultLieAlgebra() = default;
  std::size_t index(Elem x, Elem y) const {
    return static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(y);
  }

  int n_ = 0;
  std::vector<Elem> mul_;
  std::vector<Elem> star_;
  std::vector<Elem> inv_;
  std::vector<int> orders_;
  std::vector<std::string> names_;
  std::string label_;
};

using AlgebraPtr = std::shared_ptr<const MultLieAlgebra>;

// Checks the five defining identities of the star product over all tuples.
ValidityReport verify_mla(const MultLieAlgebra& a);

// from_tables followed by verify_mla; throws InvalidAlgebra on failure.
AlgebraPtr make_mla(std::vector<Elem> mul, std::vector<Elem> star, Elem identity = 0,
                    std::vector<std::string> names = {}, std::string label = {},
                    const AlgebraLimits& limits = {});

inline AlgebraPtr share(MultLieAlgebra a) {
  return std::make_shared<const MultLieAlgebra>(std::move(a));
}

class InvalidAlgebra : public MlaError {
 public:
  InvalidAlgebra(const std::string& what, ValidityReport report)
      : MlaError(what), report_(std::move(report)) {}
  const ValidityReport& report() const { return report_; }

 private:
  ValidityReport report_;
};

// Star tables derived from the group structure.
std::vector<Elem> trivial_star(int n);
std::vector<Elem> commutator_star(const MultLieAlgebra& a);  // x*y*x^-1*y^-1

}  // namespace mla
