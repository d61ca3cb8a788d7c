#include "mla/wells.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace mla {
namespace {

std::string show(const Perm& p) { return fmt::format("[{}]", fmt::join(p, ",")); }
std::string show(const CompatiblePair& p) {
  return fmt::format("(alpha={}, eta={})", show(p.alpha), show(p.eta));
}

// Generators of a group of permutations (greedy, as in subgroup_violation).
std::vector<Perm> generating_set(const std::vector<Perm>& elements) {
  if (elements.empty()) return {};
  const int n = static_cast<int>(elements.front().size());
  std::set<Perm> generated{identity_map(n)};
  std::vector<Perm> gens;
  for (const auto& s : elements) {
    if (generated.count(s)) continue;
    gens.push_back(s);
    std::vector<Perm> queue(generated.begin(), generated.end());
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (const auto& g : gens) {
        Perm p = compose_maps(g, queue[i]);
        if (generated.insert(p).second) queue.push_back(std::move(p));
      }
  }
  return gens;
}

bool is_aut_of(const MultLieAlgebra& g, const Perm& phi) {
  return is_bijection(phi, g.order()) && is_mla_hom(g, g, phi);
}

template <class T>
std::vector<T> sorted_unique(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

template <class T, class Show>
void compare_sets(SequenceCheck& seq, const std::vector<T>& lhs, const char* lname,
                  const std::vector<T>& rhs, const char* rname, Show&& show_fn) {
  std::vector<T> only_l, only_r;
  std::set_difference(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(), std::back_inserter(only_l));
  std::set_difference(rhs.begin(), rhs.end(), lhs.begin(), lhs.end(), std::back_inserter(only_r));
  if (!only_l.empty()) {
    seq.exact = false;
    seq.failures.push_back(fmt::format("{} contains {} outside {}", lname, show_fn(only_l.front()), rname));
  }
  if (!only_r.empty()) {
    seq.exact = false;
    seq.failures.push_back(fmt::format("{} contains {} outside {}", rname, show_fn(only_r.front()), lname));
  }
}

}  // namespace

const char* to_string(Inducibility s) {
  switch (s) {
    case Inducibility::inducible: return "inducible";
    case Inducibility::obstructed: return "not inducible";
    case Inducibility::not_compatible: return "not compatible";
  }
  return "?";
}

InducibilityResult decide_inducible(const CompatiblePair& pair, const CenterExtension& ext) {
  return decide_inducible(pair, ext, induced_triple(ext));
}

InducibilityResult decide_inducible(const CompatiblePair& pair, const CenterExtension& ext,
                                    const CocycleTriple& c) {
  InducibilityResult out;
  if (auto x = compatibility_witness(c.gamma, pair.alpha, pair.eta)) {
    out.status = Inducibility::not_compatible;
    out.witness = *x;
    return out;
  }
  const MultLieAlgebra& K = *c.K;
  const MultLieAlgebra& H = *c.H;
  const int k = K.order();
  const auto& a = pair.alpha;
  const auto& eta = pair.eta;
  auto s = [&](Elem x, Elem y) { return H.mul(c.f_at(eta[x], eta[y]), H.inv(a[c.f_at(x, y)])); };
  auto s2 = [&](Elem x, Elem y) { return H.mul(c.h_at(eta[x], eta[y]), H.inv(a[c.h_at(x, y)])); };

  struct Cond {
    Elem x, y;
    bool star;
  };
  std::vector<std::vector<Cond>> due(static_cast<std::size_t>(k));
  for (Elem x = 0; x < k; ++x)
    for (Elem y = 0; y < k; ++y) due[std::max({x, y, K.mul(x, y)})].push_back({x, y, false});
  for (Elem x = 0; x < k; ++x)
    for (Elem y = 0; y < k; ++y) due[std::max({x, y, K.star(x, y)})].push_back({x, y, true});

  LambdaMap l(static_cast<std::size_t>(k), kIdentity);
  auto holds = [&](const Cond& q) {
    const Elem x = q.x, y = q.y;
    if (!q.star) return s(x, y) == H.mul(H.mul(l[K.mul(x, y)], H.inv(l[x])), H.inv(l[y]));
    const Elem rhs = H.mul(H.mul(l[K.star(x, y)], c.act(eta[y], l[x])), H.inv(c.act(eta[x], l[y])));
    return s2(x, y) == rhs;
  };
  auto ok_at = [&](Elem x) { return std::all_of(due[x].begin(), due[x].end(), holds); };

  std::function<bool(Elem)> dfs = [&](Elem x) {
    if (x == k) return true;
    for (Elem v = 0; v < H.order(); ++v) {
      l[x] = v;
      ++out.nodes_visited;
      if (ok_at(x) && dfs(x + 1)) return true;
    }
    l[x] = kIdentity;
    return false;
  };
  if (!ok_at(0) || !dfs(1)) {
    out.status = Inducibility::obstructed;
    return out;
  }
  Perm phi(static_cast<std::size_t>(ext.G->order()));
  for (Elem g = 0; g < ext.G->order(); ++g) {
    const auto [x, v] = ext.decompose(g);
    phi[g] = ext.compose(eta[x], H.mul(a[v], l[x]));
  }
  if (!is_aut_of(*ext.G, phi))
    throw InvariantViolation(fmt::format("lambda satisfies both conditions for {} but the induced "
                                         "map is not an automorphism", show(pair)));
  const auto back = project_pair(phi, ext);
  if (back.alpha != pair.alpha || back.eta != pair.eta)
    throw InvariantViolation(fmt::format("constructed automorphism projects to {} instead of {}",
                                         show(back), show(pair)));
  out.status = Inducibility::inducible;
  out.phi = std::move(phi);
  out.lambda = std::move(l);
  return out;
}

CocycleTriple s_triple(const CompatiblePair& pair, const CocycleTriple& c) {
  const MultLieAlgebra& H = *c.H;
  CocycleTriple s = c;
  for (Elem x = 0; x < c.K->order(); ++x)
    for (Elem y = 0; y < c.K->order(); ++y) {
      const Elem ex = pair.eta[x], ey = pair.eta[y];
      s.f[s.cell(x, y)] = H.mul(c.f_at(ex, ey), H.inv(pair.alpha[c.f_at(x, y)]));
      s.h[s.cell(x, y)] = H.mul(c.h_at(ex, ey), H.inv(pair.alpha[c.h_at(x, y)]));
    }
  const auto report = validate_cocycle(s, ValidationMode::direct);
  if (!report.ok())
    throw InvariantViolation(fmt::format("s-triple of {} is not a 2-cocycle: {}", show(pair),
                                         report.summary()));
  return s;
}

WellsObstruction wells_obstruction(const CompatiblePair& pair, const CenterExtension& ext) {
  return wells_obstruction(pair, induced_triple(ext));
}

WellsObstruction wells_obstruction(const CompatiblePair& pair, const CocycleTriple& c) {
  if (auto x = compatibility_witness(c.gamma, pair.alpha, pair.eta))
    throw StructuralError(fmt::format("pair {} is not compatible at x = {}", show(pair), *x));
  WellsObstruction out{pair, s_triple(pair, c), false, std::nullopt};
  out.witness_lambda = is_coboundary(out.s_triple);
  out.class_trivial = out.witness_lambda.has_value();
  return out;
}

RestrictedObstructions restricted_obstructions(const CenterExtension& ext, const AutLimits& limits) {
  const auto c = induced_triple(ext);
  const auto aut_h = enumerate_aut(ext.Hsub, limits);
  const auto aut_k = enumerate_aut(ext.K, limits);
  const Perm id_h = identity_map(ext.Hsub->order()), id_k = identity_map(ext.K->order());
  RestrictedObstructions out;
  for (const auto& a : aut_h.elements) {
    if (!is_compatible(c.gamma, a, id_k)) continue;
    out.c1.push_back(a);
    out.chi1.push_back(wells_obstruction({a, id_k}, c));
    if (out.chi1.back().class_trivial) out.ker_chi1.push_back(a);
  }
  for (const auto& e : aut_k.elements) {
    if (!is_compatible(c.gamma, id_h, e)) continue;
    out.c2.push_back(e);
    out.chi2.push_back(wells_obstruction({id_h, e}, c));
    if (out.chi2.back().class_trivial) out.ker_chi2.push_back(e);
  }
  return out;
}

bool ExactnessReport::exact() const {
  return red_alerts.empty() &&
         std::all_of(sequences.begin(), sequences.end(), [](const auto& s) { return s.exact; });
}

ExactnessReport verify_wells_sequence(const CenterExtension& ext, const AutLimits& limits) {
  ExactnessReport rep;
  const auto c = induced_triple(ext);
  const auto aut_g = enumerate_aut(ext.G, limits);
  const auto aut_setwise = filter_aut(aut_g, AutFlavor::setwise, ext.H);
  const auto aut_pointwise = filter_aut(aut_g, AutFlavor::pointwise, ext.H);
  const auto aut_hk = filter_aut(aut_g, AutFlavor::pointwise_k_trivial, ext.H);
  const auto aut_setwise_k = filter_aut(aut_g, AutFlavor::setwise_k_trivial, ext.H);
  const auto aut_h = enumerate_aut(ext.Hsub, limits);
  const auto aut_k = enumerate_aut(ext.K, limits);
  const auto cl = compatible_pairs(c.gamma, aut_h, aut_k);
  const Perm id_h = identity_map(ext.Hsub->order()), id_k = identity_map(ext.K->order());

  rep.aut_h = aut_setwise.size();
  rep.aut_pointwise = aut_pointwise.size();
  rep.aut_hk = aut_hk.size();
  rep.aut_setwise_k = aut_setwise_k.size();
  rep.cl = cl.size();

  // chi on all of C^L.
  std::map<CompatiblePair, bool> chi;
  std::vector<CompatiblePair> ker_chi;
  for (const auto& p : cl) {
    bool trivial = false;
    try {
      trivial = wells_obstruction(p, c).class_trivial;
    } catch (const InvariantViolation& e) {
      rep.red_alerts.push_back(e.what());
    }
    chi[p] = trivial;
    if (trivial) ker_chi.push_back(p);
  }
  rep.ker_chi = ker_chi.size();

  // Pi on Aut_H(G): lands in C^L and is a homomorphism.
  std::map<Perm, CompatiblePair> pi;
  for (const auto& phi : aut_setwise.elements) {
    auto p = project_pair(phi, ext);
    if (!std::binary_search(cl.begin(), cl.end(), p))
      rep.red_alerts.push_back(fmt::format("projection of {} is not compatible", show(phi)));
    pi.emplace(phi, std::move(p));
  }
  for (const auto& g : generating_set(aut_setwise.elements))
    for (const auto& phi : aut_setwise.elements)
      if (pi.at(compose_maps(phi, g)) != compose_pairs(pi.at(phi), pi.at(g)))
        rep.red_alerts.push_back(
            fmt::format("projection is not multiplicative at {} and {}", show(phi), show(g)));
  std::vector<CompatiblePair> image_pi;
  for (const auto& [phi, p] : pi) image_pi.push_back(p);
  image_pi = sorted_unique(std::move(image_pi));
  rep.image_pi = image_pi.size();

  // Sequence A.
  {
    SequenceCheck seq{"Z1 -> Aut_H(G) -> C^L -> H2", true, {}};
    const auto z1 = enumerate_Z1(ext.K, ext.Hsub, c.gamma);
    rep.z1 = z1.size();
    std::vector<Perm> delta;
    for (const auto& nu : z1) {
      Perm phi = phi_of_cocycle(nu, ext);
      if (!aut_setwise.contains(phi)) {
        seq.exact = false;
        seq.failures.push_back(fmt::format("embedding of nu = {} is not in Aut_H(G)", show(nu)));
      }
      delta.push_back(std::move(phi));
    }
    const auto delta_sorted = sorted_unique(delta);
    if (delta_sorted.size() != delta.size()) {
      seq.exact = false;
      seq.failures.push_back("Z1 -> Aut_H(G) is not injective");
    }
    std::vector<Perm> ker_pi;
    for (const auto& [phi, p] : pi)
      if (p.alpha == id_h && p.eta == id_k) ker_pi.push_back(phi);
    compare_sets(seq, delta_sorted, "image(Z1)", sorted_unique(ker_pi), "ker(Pi)",
                 [](const Perm& p) { return show(p); });
    compare_sets(seq, image_pi, "image(Pi)", ker_chi, "ker(chi)",
                 [](const CompatiblePair& p) { return show(p); });
    rep.sequences.push_back(std::move(seq));
  }

  // Restricted sequences: alpha-part on Aut_H^K(G), eta-part on Aut^H(G).
  {
    SequenceCheck seq{"Aut^{H,K}(G) -> Aut_H^K(G) -> C1^L -> H2", true, {}};
    std::vector<Perm> ker, image, c1, ker_chi1;
    for (const auto& phi : aut_setwise_k.elements) {
      const auto& p = pi.at(phi);
      if (p.eta != id_k) {
        seq.exact = false;
        seq.failures.push_back(fmt::format("{} in Aut_H^K(G) moves K", show(phi)));
      }
      if (p.alpha == id_h) ker.push_back(phi);
      image.push_back(p.alpha);
    }
    for (const auto& [p, trivial] : chi) {
      if (p.eta != id_k) continue;
      c1.push_back(p.alpha);
      if (trivial) ker_chi1.push_back(p.alpha);
    }
    rep.c1 = c1.size();
    rep.ker_chi1 = ker_chi1.size();
    compare_sets(seq, sorted_unique(ker), "ker(Pi1)", aut_hk.elements, "Aut^{H,K}(G)",
                 [](const Perm& p) { return show(p); });
    compare_sets(seq, sorted_unique(image), "image(Pi1)", sorted_unique(ker_chi1), "ker(chi1)",
                 [](const Perm& p) { return show(p); });
    rep.sequences.push_back(std::move(seq));
  }
  {
    SequenceCheck seq{"Aut^{H,K}(G) -> Aut^H(G) -> C2^L -> H2", true, {}};
    std::vector<Perm> ker, image, c2, ker_chi2;
    for (const auto& phi : aut_pointwise.elements) {
      const auto& p = pi.at(phi);
      if (p.eta == id_k) ker.push_back(phi);
      image.push_back(p.eta);
    }
    for (const auto& [p, trivial] : chi) {
      if (p.alpha != id_h) continue;
      c2.push_back(p.eta);
      if (trivial) ker_chi2.push_back(p.eta);
    }
    rep.c2 = c2.size();
    rep.ker_chi2 = ker_chi2.size();
    compare_sets(seq, sorted_unique(ker), "ker(Pi2)", aut_hk.elements, "Aut^{H,K}(G)",
                 [](const Perm& p) { return show(p); });
    compare_sets(seq, sorted_unique(image), "image(Pi2)", sorted_unique(ker_chi2), "ker(chi2)",
                 [](const Perm& p) { return show(p); });
    rep.sequences.push_back(std::move(seq));
  }

  if (ext.central()) {
    SequenceCheck seq{"Z1 -> Aut_H(G) -> Aut(H) x Aut(K) -> H2", true, {}};
    if (cl.size() != aut_h.size() * aut_k.size()) {
      seq.exact = false;
      seq.failures.push_back(fmt::format("C^L has {} pairs but Aut(H) x Aut(K) has {}", cl.size(),
                                         aut_h.size() * aut_k.size()));
    }
    std::vector<CompatiblePair> everything;
    for (const auto& a : aut_h.elements)
      for (const auto& e : aut_k.elements) everything.push_back({a, e});
    compare_sets(seq, everything, "Aut(H) x Aut(K)", cl, "C^L",
                 [](const CompatiblePair& p) { return show(p); });
    compare_sets(seq, image_pi, "image(Pi)", ker_chi, "ker(chi)",
                 [](const CompatiblePair& p) { return show(p); });
    rep.sequences.push_back(std::move(seq));
  }
  return rep;
}

Perm phi_of_cocycle(const OneCocycle& nu, const CenterExtension& ext) {
  Perm phi(static_cast<std::size_t>(ext.G->order()));
  for (Elem g = 0; g < ext.G->order(); ++g) {
    const auto [x, v] = ext.decompose(g);
    phi[g] = ext.compose(x, ext.Hsub->mul(v, nu[x]));
  }
  return phi;
}

OneCocycle cocycle_of_phi(const Perm& phi, const CenterExtension& ext) {
  OneCocycle nu(static_cast<std::size_t>(ext.K->order()));
  for (Elem x = 0; x < ext.K->order(); ++x)
    nu[x] = ext.h_of(ext.G->mul(phi[ext.t(x)], ext.G->inv(ext.t(x))));
  return nu;
}

Z1AutIsomorphism z1_aut_isomorphism(const CenterExtension& ext, const AutLimits& limits) {
  const auto c = induced_triple(ext);
  Z1AutIsomorphism out;
  out.z1 = enumerate_Z1(ext.K, ext.Hsub, c.gamma);
  out.target = filter_aut(enumerate_aut(ext.G, limits), AutFlavor::pointwise_k_trivial, ext.H);
  for (const auto& nu : out.z1) out.image.push_back(phi_of_cocycle(nu, ext));

  const auto sorted = sorted_unique(out.image);
  out.bijective = sorted.size() == out.image.size() && sorted == out.target.elements;
  if (!out.bijective)
    out.failures.push_back(fmt::format("|Z1| = {}, |Aut^(H,K)(G)| = {}, distinct images = {}",
                                       out.z1.size(), out.target.size(), sorted.size()));

  out.roundtrip = true;
  for (std::size_t i = 0; i < out.z1.size(); ++i)
    if (cocycle_of_phi(out.image[i], ext) != out.z1[i]) {
      out.roundtrip = false;
      out.failures.push_back(fmt::format("roundtrip fails at nu = {}", show(out.z1[i])));
    }
  for (const auto& phi : out.target.elements) {
    const auto nu = cocycle_of_phi(phi, ext);
    if (!is_one_cocycle(*ext.K, *ext.Hsub, c.gamma, nu) || phi_of_cocycle(nu, ext) != phi) {
      out.roundtrip = false;
      out.failures.push_back(fmt::format("{} does not come from a 1-cocycle", show(phi)));
    }
  }

  out.homomorphism = true;
  for (std::size_t i = 0; i < out.z1.size() && out.homomorphism; ++i)
    for (std::size_t j = 0; j < out.z1.size(); ++j) {
      OneCocycle prod(out.z1[i].size());
      for (std::size_t x = 0; x < prod.size(); ++x) prod[x] = ext.Hsub->mul(out.z1[i][x], out.z1[j][x]);
      if (phi_of_cocycle(prod, ext) != compose_maps(out.image[i], out.image[j])) {
        out.homomorphism = false;
        out.failures.push_back(
            fmt::format("not multiplicative at {} and {}", show(out.z1[i]), show(out.z1[j])));
        break;
      }
    }
  return out;
}

bool SplitSections::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.ok; });
}

SplitSections split_sections(const CenterExtension& ext0, const AutLimits& limits) {
  auto section = is_split(ext0);
  if (!section) throw StructuralError("the extension does not split");
  SplitSections out{with_transversal(ext0, section->map), {}, {}, {}, {}};
  const CenterExtension& ext = out.ext;
  const auto c = induced_triple(ext);
  const MultLieAlgebra& G = *ext.G;
  const auto aut_setwise = filter_aut(enumerate_aut(ext.G, limits), AutFlavor::setwise, ext.H);
  const auto ro = restricted_obstructions(ext, limits);
  const Perm id_h = identity_map(ext.Hsub->order()), id_k = identity_map(ext.K->order());

  // phi(t(x) v) = t(eta x) alpha(v)
  auto lift = [&](const Perm& alpha, const Perm& eta) {
    Perm phi(static_cast<std::size_t>(G.order()));
    for (Elem g = 0; g < G.order(); ++g) {
      const auto [x, v] = ext.decompose(g);
      phi[g] = ext.compose(eta[x], alpha[v]);
    }
    return phi;
  };
  auto check_lift = [&](SectionCheck& chk, const Perm& phi, const CompatiblePair& want,
                        AutFlavor flavor) {
    const std::string label = show(want);
    if (!is_aut_of(G, phi)) {
      chk.ok = false;
      chk.failures.push_back("image of " + label + " is not an automorphism");
      return;
    }
    if (!has_flavor(G, phi, flavor, ext.H)) {
      chk.ok = false;
      chk.failures.push_back(fmt::format("image of {} is not in {}", label, to_string(flavor)));
    }
    if (!aut_setwise.contains(phi)) {
      chk.ok = false;
      chk.failures.push_back("image of " + label + " is not in Aut_H(G)");
    }
    const auto back = project_pair(phi, ext);
    if (back != want) {
      chk.ok = false;
      chk.failures.push_back(fmt::format("projection of the image of {} is {}", label, show(back)));
    }
  };

  {
    SectionCheck chk{"Pi1 o delta1 = id on C1^L*", ro.ker_chi1.size(), true, {}};
    for (const auto& a : ro.ker_chi1) {
      Perm phi = lift(a, id_k);
      check_lift(chk, phi, {a, id_k}, AutFlavor::setwise_k_trivial);
      out.delta1.emplace_back(a, std::move(phi));
    }
    out.checks.push_back(std::move(chk));
  }
  {
    SectionCheck chk{"Pi2 o delta2 = id on C2^L*", ro.ker_chi2.size(), true, {}};
    for (const auto& e : ro.ker_chi2) {
      Perm phi = lift(id_h, e);
      check_lift(chk, phi, {id_h, e}, AutFlavor::pointwise);
      out.delta2.emplace_back(e, std::move(phi));
    }
    out.checks.push_back(std::move(chk));
  }
  if (ext.central()) {
    const auto aut_h = enumerate_aut(ext.Hsub, limits);
    const auto aut_k = enumerate_aut(ext.K, limits);
    SectionCheck chk{"Pi o delta = id on C^L*", 0, true, {}};
    for (const auto& a : aut_h.elements)
      for (const auto& e : aut_k.elements) {
        const CompatiblePair p{a, e};
        if (!wells_obstruction(p, c).class_trivial) continue;
        ++chk.domain;
        Perm phi = lift(a, e);
        check_lift(chk, phi, p, AutFlavor::setwise);
        out.delta.emplace_back(p, std::move(phi));
      }
    out.checks.push_back(std::move(chk));
  }
  return out;
}

}  // namespace mla
