#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mla/algebra.hpp"
#include "mla/extension.hpp"

namespace mla {

// Cyclic groups of order 1..8, the Klein four-group, Z/2 x Z/4, S3, D4 and
// Q8, each with trivial and commutator star ("<group>_trivial",
// "<group>_commutator"), plus a few Lie rings whose bracket gives an
// extension with nontrivial action.
std::vector<std::string> catalog_names();
AlgebraPtr catalog_algebra(std::string_view name);  // throws MlaError for unknown names

struct CatalogExtension {
  std::string algebra;
  std::vector<Elem> ideal;
  CenterExtension ext;
  std::string label() const;
};

// Every subgroup of the center of every catalog algebra of order at most
// `max_order` that passes build_extension, in catalog order and then by
// subgroup size.
std::vector<CatalogExtension> catalog_extensions(int max_order = 16);

}  // namespace mla
