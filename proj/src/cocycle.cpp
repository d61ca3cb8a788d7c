#include "mla/cocycle.hpp"

#include <algorithm>
#include <functional>

#include <fmt/format.h>

#include "mla/hom_search.hpp"

namespace mla {
namespace {

void require_shape(const CocycleTriple& c) {
  const auto k = static_cast<std::size_t>(c.K->order());
  const int hn = c.H->order();
  if (!c.H->is_abelian() || !c.H->has_trivial_star())
    throw StructuralError("cocycle values must lie in an abelian H with trivial star");
  if (c.f.size() != k * k || c.h.size() != k * k)
    throw StructuralError(fmt::format("f and h must be {0} x {0} tables", k));
  if (c.gamma.size() != k) throw StructuralError(fmt::format("gamma must have {} entries", k));
  auto in_range = [hn](Elem v) { return v >= 0 && v < hn; };
  if (!std::all_of(c.f.begin(), c.f.end(), in_range) ||
      !std::all_of(c.h.begin(), c.h.end(), in_range))
    throw StructuralError(fmt::format("cocycle entries must lie in [0, {})", hn));
  for (const auto& g : c.gamma)
    if (g.size() != static_cast<std::size_t>(hn) || !std::all_of(g.begin(), g.end(), in_range))
      throw StructuralError("every gamma entry must be a map H -> H");
}

void prefixed_merge(ValidityReport& out, const ValidityReport& in, std::string_view prefix) {
  // Only retained witnesses are carried over.
  for (const auto& v : in.violations()) out.add(fmt::format("{}{}", prefix, v.rule), v.witness);
}

ValidityReport direct_report(const CocycleTriple& c, bool parallel) {
  ValidityReport out;
  check_normalization(c, out);
  check_gamma(c, out);
  out.merge(parallel ? kernels::parallel::cocycle_identities(c.view())
                     : kernels::serial::cocycle_identities(c.view()));
  return out;
}

struct RawTables {
  int n = 0;
  std::vector<Elem> mul, star;
};

// Carrier pair (v, x) at index x*|H| + v.
RawTables raw_tables(const CocycleTriple& c) {
  require_shape(c);
  const MultLieAlgebra& K = *c.K;
  const MultLieAlgebra& H = *c.H;
  const int hn = H.order();
  RawTables t;
  t.n = K.order() * hn;
  t.mul.resize(static_cast<std::size_t>(t.n * t.n));
  t.star.resize(t.mul.size());
  for (Elem a = 0; a < t.n; ++a) {
    const Elem v1 = a % hn, x = a / hn;
    for (Elem b = 0; b < t.n; ++b) {
      const Elem v2 = b % hn, y = b / hn;
      const Elem pm = H.mul(H.mul(v1, v2), c.f_at(x, y));
      const Elem ps = H.mul(H.mul(c.h_at(x, y), c.act(x, v2)), H.inv(c.act(y, v1)));
      t.mul[a * t.n + b] = K.mul(x, y) * hn + pm;
      t.star[a * t.n + b] = K.star(x, y) * hn + ps;
    }
  }
  return t;
}

ValidityReport reconstruct_report(const CocycleTriple& c) {
  ValidityReport out;
  auto raw = raw_tables(c);
  auto group = verify_group(raw.mul, raw.n, kIdentity);
  if (!group.ok()) {
    prefixed_merge(out, group, "reconstruct:");
    return out;
  }
  try {
    (void)reconstruct(c);
  } catch (const ReconstructionError& e) {
    prefixed_merge(out, e.report(), "reconstruct:");
  } catch (const ExtensionError&) {
    out.add("reconstruct:extension", {});
  }
  return out;
}

}  // namespace

std::vector<Endomap> trivial_gamma(int k, int h) {
  return std::vector<Endomap>(static_cast<std::size_t>(k), trivial_endomap(h));
}

CocycleTriple trivial_triple(const AlgebraPtr& k, const AlgebraPtr& h, std::vector<Endomap> gamma) {
  const auto cells = static_cast<std::size_t>(k->order() * k->order());
  return CocycleTriple{k, h, std::vector<Elem>(cells, kIdentity), std::vector<Elem>(cells, kIdentity),
                       std::move(gamma)};
}

bool same_gamma(const CocycleTriple& a, const CocycleTriple& b) { return a.gamma == b.gamma; }

void require_same_shape(const CocycleTriple& a, const CocycleTriple& b) {
  if (!(*a.K == *b.K) || !(*a.H == *b.H))
    throw StructuralError("cocycle triples live over different K or H");
  if (!same_gamma(a, b)) throw StructuralError("cocycle triples use different gamma");
}

CocycleTriple multiply(const CocycleTriple& a, const CocycleTriple& b) {
  require_same_shape(a, b);
  CocycleTriple out = a;
  for (std::size_t i = 0; i < a.f.size(); ++i) {
    out.f[i] = a.H->mul(a.f[i], b.f[i]);
    out.h[i] = a.H->mul(a.h[i], b.h[i]);
  }
  return out;
}

CocycleTriple inverse(const CocycleTriple& a) {
  CocycleTriple out = a;
  for (std::size_t i = 0; i < a.f.size(); ++i) {
    out.f[i] = a.H->inv(a.f[i]);
    out.h[i] = a.H->inv(a.h[i]);
  }
  return out;
}

CocycleTriple induced_triple(const CenterExtension& ext) {
  const MultLieAlgebra& G = *ext.G;
  const MultLieAlgebra& K = *ext.K;
  const int k = K.order();
  CocycleTriple c = trivial_triple(ext.K, ext.Hsub, trivial_gamma(k, ext.Hsub->order()));
  for (Elem x = 0; x < k; ++x) {
    for (Elem y = 0; y < k; ++y) {
      c.f[c.cell(x, y)] = ext.h_of(G.mul(G.mul(ext.t(x), ext.t(y)), G.inv(ext.t(K.mul(x, y)))));
      c.h[c.cell(x, y)] = ext.h_of(G.mul(G.star(ext.t(x), ext.t(y)), G.inv(ext.t(K.star(x, y)))));
    }
    for (Elem v = 0; v < ext.Hsub->order(); ++v)
      c.gamma[x][v] = ext.h_of(G.star(ext.t(x), ext.incl(v)));
  }
  return c;
}

void check_normalization(const CocycleTriple& c, ValidityReport& out) {
  for (Elem x = 0; x < c.K->order(); ++x) {
    if (c.f_at(kIdentity, x) != kIdentity || c.f_at(x, kIdentity) != kIdentity)
      out.add("normalization-f", {x});
    if (c.h_at(x, x) != kIdentity || c.h_at(x, kIdentity) != kIdentity ||
        c.h_at(kIdentity, x) != kIdentity)
      out.add("normalization-h", {x});
  }
}

void check_gamma(const CocycleTriple& c, ValidityReport& out) {
  const MultLieAlgebra& K = *c.K;
  const MultLieAlgebra& H = *c.H;
  const int k = K.order(), hn = H.order();
  for (Elem v = 0; v < hn; ++v)
    if (c.act(kIdentity, v) != kIdentity) out.add("gamma-identity", {v});
  for (Elem x = 0; x < k; ++x) {
    if (!is_endomorphism(H, c.gamma[x])) out.add("gamma-endomorphism", {x});
  }
  for (Elem x = 0; x < k; ++x) {
    for (Elem y = 0; y < k; ++y) {
      for (Elem v = 0; v < hn; ++v) {
        if (c.act(K.mul(x, y), v) != H.mul(c.act(x, v), c.act(y, v)))
          out.add("gamma-product", {x, y, v});
        const Elem star = H.mul(c.act(x, c.act(y, v)), c.act(y, c.act(x, H.inv(v))));
        if (c.act(K.star(x, y), v) != star) out.add("gamma-star", {x, y, v});
      }
    }
  }
}

ValidityReport validate_cocycle(const CocycleTriple& c, ValidationMode mode, bool parallel) {
  require_shape(c);
  if (mode == ValidationMode::direct) return direct_report(c, parallel);
  if (mode == ValidationMode::reconstruct) return reconstruct_report(c);
  ValidityReport d = direct_report(c, parallel);
  ValidityReport r = reconstruct_report(c);
  ValidityReport out = d;
  out.merge(r);
  if (d.ok() != r.ok()) out.add("mode-disagreement", {d.ok() ? 0 : 1, r.ok() ? 0 : 1});
  return out;
}

MultLieAlgebra reconstruct_tables(const CocycleTriple& c) {
  auto raw = raw_tables(c);
  std::vector<std::string> names;
  const int hn = c.H->order();
  for (Elem a = 0; a < raw.n; ++a)
    names.push_back(fmt::format("({},{})", c.H->element_name(a % hn), c.K->element_name(a / hn)));
  try {
    return MultLieAlgebra::from_tables(std::move(raw.mul), std::move(raw.star), 0, std::move(names),
                                       fmt::format("E({}, {})", c.H->label(), c.K->label()),
                                       AlgebraLimits{std::max(kDefaultOrderCap, raw.n)});
  } catch (const ReconstructionError&) {
    throw;
  } catch (const InvalidAlgebra& e) {
    throw ReconstructionError(std::string("reconstructed product is not a group: ") + e.what(), e.report());
  }
}

Reconstruction reconstruct(const CocycleTriple& c) {
  MultLieAlgebra tables = reconstruct_tables(c);
  ValidityReport axioms = verify_mla(tables);
  if (!axioms.ok())
    throw ReconstructionError("reconstructed tables violate the star axioms: " + axioms.summary(),
                              axioms);
  auto g = share(std::move(tables));
  const int hn = c.H->order();
  std::vector<Elem> h(static_cast<std::size_t>(hn));
  for (Elem v = 0; v < hn; ++v) h[v] = v;
  CenterExtension ext = build_extension(g, h);
  std::vector<Elem> t(static_cast<std::size_t>(c.K->order()));
  for (Elem x = 0; x < c.K->order(); ++x) t[x] = x * hn;
  ext = with_transversal(std::move(ext), std::move(t));
  // The quotient and H come out with the same tables as c.K and c.H; share
  // the caller's objects so results compare directly.
  ext.K = c.K;
  ext.Hsub = c.H;
  ext.beta.dst = c.K;
  ext.incl.src = c.H;
  return Reconstruction{g, std::move(ext)};
}

std::optional<Morphism> is_split(const CenterExtension& ext) {
  HomSearchOptions opt;
  opt.allow_image = [&](Elem gen, Elem img) { return ext.beta(img) == gen; };
  std::optional<Morphism> found;
  for_each_homomorphism(*ext.K, *ext.G, opt, [&](const std::vector<Elem>& map) {
    // beta o map is a homomorphism agreeing with the identity on generators.
    found = certify(Morphism{ext.K, ext.G, map, MorphismKind::raw});
    return false;
  });
  return found;
}

std::optional<Morphism> find_equivalence(const CenterExtension& a, const CenterExtension& b) {
  if (!same_base(a, b)) throw StructuralError("extensions over different K or H cannot be compared");
  const MultLieAlgebra& Ga = *a.G;
  const MultLieAlgebra& Gb = *b.G;
  const MultLieAlgebra& K = *a.K;
  const MultLieAlgebra& H = *a.Hsub;
  const int k = K.order();
  if (Ga.order() != Gb.order()) return std::nullopt;
  std::vector<Elem> lambda(static_cast<std::size_t>(k), -1);
  lambda[0] = kIdentity;
  // psi(t_a(x) v) = t_b(x) (lambda(x) v)
  auto image = [&](Elem g) {
    const auto [x, v] = a.decompose(g);
    return b.compose(x, H.mul(lambda[x], v));
  };
  auto known = [&](Elem g) { return lambda[a.beta(g)] >= 0; };
  auto consistent_at = [&](Elem x) {
    for (Elem p = 0; p <= x; ++p) {
      for (Elem q = 0; q <= x; ++q) {
        if (p != x && q != x) continue;
        const Elem tp = a.t(p), tq = a.t(q);
        const Elem m = Ga.mul(tp, tq), s = Ga.star(tp, tq);
        if (known(m) && image(m) != Gb.mul(image(tp), image(tq))) return false;
        if (known(s) && image(s) != Gb.star(image(tp), image(tq))) return false;
      }
    }
    return true;
  };
  std::optional<Morphism> found;
  std::function<void(Elem)> dfs = [&](Elem x) {
    if (found) return;
    if (x == k) {
      std::vector<Elem> map(static_cast<std::size_t>(Ga.order()));
      for (Elem g = 0; g < Ga.order(); ++g) map[g] = image(g);
      if (is_mla_hom(Ga, Gb, map) && is_bijection(map, Gb.order()))
        found = certify(Morphism{a.G, b.G, std::move(map), MorphismKind::raw});
      return;
    }
    for (Elem v = 0; v < H.order() && !found; ++v) {
      lambda[x] = v;
      if (consistent_at(x)) dfs(x + 1);
    }
    lambda[x] = -1;
  };
  if (consistent_at(0)) dfs(1);
  return found;
}

}  // namespace mla
