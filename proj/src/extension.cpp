#include "mla/extension.hpp"

#include <algorithm>
#include <random>

#include <fmt/format.h>

namespace mla {

const char* to_string(ExtensionKind k) {
  return k == ExtensionKind::central ? "central" : "center";
}

Elem CenterExtension::h_of(Elem g) const {
  const Elem h = to_h[static_cast<std::size_t>(g)];
  if (h < 0) throw InvariantViolation(fmt::format("element {} of {} lies outside H", g, G->label()));
  return h;
}

std::pair<Elem, Elem> CenterExtension::decompose(Elem g) const {
  const Elem x = beta(g);
  return {x, h_of(G->mul(G->inv(t(x)), g))};
}

Elem CenterExtension::compose(Elem x, Elem h) const { return G->mul(t(x), incl(h)); }

std::vector<Elem> CenterExtension::coset(Elem x) const {
  std::vector<Elem> out;
  for (Elem g = 0; g < G->order(); ++g)
    if (beta(g) == x) out.push_back(g);
  return out;
}

CenterExtension build_extension(const AlgebraPtr& g, const std::vector<Elem>& members,
                                ExtensionKind required) {
  using R = ExtensionError::Reason;
  SubsetIdeal h = make_subset(g, members);
  if (auto why = ideal_violation(*g, h.members))
    throw ExtensionError(R::not_ideal, "H is not an ideal: " + *why);
  for (Elem a : h.members)
    for (Elem x = 0; x < g->order(); ++x)
      if (g->mul(a, x) != g->mul(x, a))
        throw ExtensionError(R::not_in_center,
                             fmt::format("H ⊄ Z(G): {} and {} do not commute", g->element_name(a),
                                         g->element_name(x)));
  for (Elem a : h.members)
    for (Elem b : h.members)
      if (g->star(a, b) != kIdentity)
        throw ExtensionError(R::star_nontrivial,
                             fmt::format("star is nontrivial on H: {} * {} = {}", g->element_name(a),
                                         g->element_name(b), g->element_name(g->star(a, b))));
  const SubsetIdeal lz = lie_center(g);
  const bool in_lz = std::includes(lz.members.begin(), lz.members.end(), h.members.begin(),
                                   h.members.end());
  if (required == ExtensionKind::central && !in_lz) {
    Elem bad = -1, y = -1;
    for (Elem a : h.members) {
      if (lz.contains(a)) continue;
      bad = a;
      for (y = 0; g->star(a, y) == kIdentity; ++y) {
      }
      break;
    }
    throw ExtensionError(R::not_in_lie_center,
                         fmt::format("H ⊄ LZ(G): {} * {} = {}", g->element_name(bad),
                                     g->element_name(y), g->element_name(g->star(bad, y))));
  }

  Quotient q = quotient(g, h);

  std::vector<Elem> hmul;
  const int hn = static_cast<int>(h.size());
  std::vector<Elem> to_h(static_cast<std::size_t>(g->order()), -1);
  std::vector<std::string> hnames;
  for (Elem i = 0; i < hn; ++i) {
    to_h[h.members[i]] = i;
    hnames.push_back(g->element_name(h.members[i]));
  }
  hmul.resize(static_cast<std::size_t>(hn * hn));
  for (Elem i = 0; i < hn; ++i)
    for (Elem j = 0; j < hn; ++j) hmul[i * hn + j] = to_h[g->mul(h.members[i], h.members[j])];
  auto hsub = share(MultLieAlgebra::from_tables(std::move(hmul), trivial_star(hn), 0,
                                                std::move(hnames), "H"));

  CenterExtension ext{g,
                      h,
                      q.algebra,
                      hsub,
                      q.projection,
                      certify(Morphism{hsub, g, h.members, MorphismKind::raw}),
                      std::move(to_h),
                      q.representative,
                      in_lz ? ExtensionKind::central : ExtensionKind::center};
  return ext;
}

std::vector<Elem> choose_transversal(const CenterExtension& ext, std::uint64_t seed) {
  const int k = ext.K->order();
  std::vector<std::vector<Elem>> cosets(static_cast<std::size_t>(k));
  for (Elem g = 0; g < ext.G->order(); ++g) cosets[ext.beta(g)].push_back(g);
  std::vector<Elem> t(static_cast<std::size_t>(k), kIdentity);
  std::mt19937_64 rng(seed);
  for (Elem x = 1; x < k; ++x) {
    const auto& c = cosets[x];
    t[x] = seed == 0 ? c.front() : c[rng() % c.size()];
  }
  return t;
}

CenterExtension with_transversal(CenterExtension ext, std::vector<Elem> t) {
  using R = ExtensionError::Reason;
  if (t.size() != static_cast<std::size_t>(ext.K->order()))
    throw ExtensionError(R::bad_transversal, "transversal has the wrong length");
  if (t[0] != kIdentity) throw ExtensionError(R::bad_transversal, "transversal must send e to e");
  for (Elem x = 0; x < ext.K->order(); ++x) {
    if (t[x] < 0 || t[x] >= ext.G->order() || ext.beta(t[x]) != x)
      throw ExtensionError(R::bad_transversal, fmt::format("t({}) is not in the coset of {}", x, x));
  }
  ext.transversal = std::move(t);
  return ext;
}

CenterExtension with_seed(const CenterExtension& ext, std::uint64_t seed) {
  return with_transversal(ext, choose_transversal(ext, seed));
}

bool same_base(const CenterExtension& a, const CenterExtension& b) {
  return *a.K == *b.K && *a.Hsub == *b.Hsub;
}

}  // namespace mla
