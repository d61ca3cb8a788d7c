// One line per acceptance criterion: id, PASS/FAIL, wall time against its limit, detail.
// The process exits nonzero when any criterion fails or runs over its limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>

#include <fmt/format.h>

#include "mla/automorphism.hpp"
#include "mla/catalog.hpp"
#include "mla/cocycle.hpp"
#include "mla/cohomology.hpp"
#include "mla/wells.hpp"
#include "test_support.hpp"

namespace {

using namespace mla;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  const char* id;
  const char* title;
  double limit_ms;
  std::function<Outcome()> run;
};

const AutLimits kAut{16};

Outcome fail(std::string why) { return {false, std::move(why)}; }

Outcome axiom_suite() {
  std::mt19937_64 rng(20240601);
  int algebras = 0, perturbations = 0;
  for (auto a : testing::catalog_upto(8)) {
    ++algebras;
    if (!verify_mla(*a).ok()) return fail(a->label() + " rejected");
    const int n = a->order();
    if (n == 1) continue;
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Elem> star(a->star_table().begin(), a->star_table().end());
      const auto cell = rng() % star.size();
      star[cell] = static_cast<Elem>((star[cell] + 1 + rng() % (n - 1)) % n);
      const auto b = a->with_star(star);
      const auto r = verify_mla(b);
      if (r.ok()) return fail(fmt::format("{} accepted a perturbation at cell {}", a->label(), cell));
      const auto t = testing::tables_of(b);
      for (const auto& v : r.violations())
        if (!testing::axiom_fails(t, v.rule, v.witness))
          return fail(fmt::format("{}: witness for {} does not fail", a->label(), v.rule));
      ++perturbations;
    }
  }
  return {true, fmt::format("{} algebras, {} perturbations rejected with true witnesses", algebras, perturbations)};
}

Outcome cocycle_validity() {
  int n = 0;
  for (const auto& ce : catalog_extensions(16)) {
    const auto c = induced_triple(ce.ext);
    const bool direct = validate_cocycle(c, ValidationMode::direct).ok();
    const bool recon = validate_cocycle(c, ValidationMode::reconstruct).ok();
    if (direct != recon) return fail(ce.label() + ": modes disagree");
    if (!direct) return fail(ce.label() + ": induced triple rejected");
    ++n;
  }
  return {true, fmt::format("{} extensions, both modes pass and agree", n)};
}

Outcome roundtrip() {
  int n = 0;
  for (const auto& ce : catalog_extensions(16)) {
    const auto r = reconstruct(induced_triple(ce.ext));
    if (!find_equivalence(ce.ext, r.ext)) return fail(ce.label() + ": no equivalence");
    ++n;
  }
  return {true, fmt::format("{} extensions reconstructed up to equivalence", n)};
}

Outcome coprime_instance() {
  auto k = catalog_algebra("z3_trivial"), h = catalog_algebra("z2_trivial");
  const auto g = compute_H2(k, h, trivial_gamma(3, 2));
  if (g.h2_order != 1) return fail(fmt::format("|H2| = {}", g.h2_order));
  const auto ext = build_extension(catalog_algebra("z6_trivial"), {0, 3}, ExtensionKind::central);
  const auto pairs = compatible_pairs(ext);
  if (pairs.size() != 2) return fail(fmt::format("{} compatible pairs", pairs.size()));
  for (const auto& p : pairs)
    if (decide_inducible(p, ext).status != Inducibility::inducible) return fail("a pair is not inducible");
  return {true, "|H2(Z/3, Z/2)| = 1; both pairs of Z/6 over Z/2 inducible"};
}

Outcome non_split() {
  const auto ext = build_extension(catalog_algebra("z4_trivial"), {0, 2});
  const auto c = induced_triple(ext);
  if (is_coboundary(c)) return fail("induced triple is a coboundary");
  const auto g = compute_H2(c.K, c.H, c.gamma);
  if (g.h2_order != 2) return fail(fmt::format("|H2(Z/2, Z/2)| = {}", g.h2_order));
  std::size_t cls = g.representatives.size();
  for (std::size_t i = 0; i < g.representatives.size(); ++i)
    if (cohomologous(c, g.representatives[i])) cls = i;
  if (cls == 0 || cls == g.representatives.size()) return fail("class not located among the nontrivial ones");
  return {true, "Z/4 over {0,2}: no lambda; class is the nontrivial element of H2 = Z/2"};
}

Outcome lemma_z1() {
  int n = 0;
  for (const auto& ce : catalog_extensions(16)) {
    const auto iso = z1_aut_isomorphism(ce.ext, kAut);
    if (iso.z1.size() != iso.target.size())
      return fail(fmt::format("{}: |Z1| = {}, |Aut^(H,K)| = {}", ce.label(), iso.z1.size(), iso.target.size()));
    if (!iso.ok()) return fail(ce.label() + ": " + (iso.failures.empty() ? "not an isomorphism" : iso.failures[0]));
    ++n;
  }
  return {true, fmt::format("{} extensions, Z1 -> Aut^(H,K)(G) bijective, multiplicative, inverse recovered", n)};
}

Outcome wells_exactness() {
  int n = 0, central = 0;
  for (const auto& ce : catalog_extensions(16)) {
    const auto r = verify_wells_sequence(ce.ext, kAut);
    if (!r.red_alerts.empty()) return fail(ce.label() + ": red alert: " + r.red_alerts[0]);
    for (const auto& s : r.sequences)
      if (!s.exact) return fail(ce.label() + ": " + s.name + (s.failures.empty() ? "" : ": " + s.failures[0]));
    if (r.sequences.size() != (ce.ext.central() ? 4u : 3u)) return fail(ce.label() + ": missing sequences");
    ++n;
    central += ce.ext.central();
  }
  return {true, fmt::format("{} extensions ({} central) exact, no red alerts", n, central)};
}

Outcome obstruction_equivalence() {
  std::size_t inducible = 0, obstructed = 0;
  for (const auto& ce : catalog_extensions(16)) {
    const auto c = induced_triple(ce.ext);
    for (const auto& p : compatible_pairs(ce.ext, kAut)) {
      const bool ind = decide_inducible(p, ce.ext, c).status == Inducibility::inducible;
      if (ind != wells_obstruction(p, c).class_trivial) return fail(ce.label() + ": search and class disagree");
      (ind ? inducible : obstructed) += 1;
    }
  }
  return {true, fmt::format("{} inducible and {} obstructed pairs, all matching", inducible, obstructed)};
}

Outcome splitting() {
  int split = 0, central = 0;
  for (const auto& ce : catalog_extensions(16)) {
    if (!is_split(ce.ext)) continue;
    ++split;
    for (const auto& p : compatible_pairs(ce.ext, kAut))
      if (decide_inducible(p, ce.ext).status != Inducibility::inducible)
        return fail(ce.label() + ": split but a compatible pair is obstructed");
    const auto s = split_sections(ce.ext, kAut);
    for (const auto& chk : s.checks)
      if (!chk.ok) return fail(ce.label() + ": " + chk.name);
    if (ce.ext.central()) {
      ++central;
      if (s.checks.size() != 3) return fail(ce.label() + ": central section not checked");
    }
  }
  return {true, fmt::format("{} split extensions ({} central): all pairs inducible, sections are right inverses",
                            split, central)};
}

Outcome transversal_invariance() {
  int n = 0;
  for (const auto& ce : catalog_extensions(16)) {
    const auto pairs = compatible_pairs(ce.ext, kAut);
    std::vector<bool> base;
    for (std::uint64_t seed : {0u, 1u, 2u}) {
      const auto c = induced_triple(with_seed(ce.ext, seed));
      std::vector<CocycleTriple> s;
      std::vector<bool> values;
      for (const auto& p : pairs) {
        s.push_back(s_triple(p, c));
        values.push_back(wells_obstruction(p, c).class_trivial);
      }
      for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) values.push_back(cohomologous(s[i], s[j]).has_value());
      if (seed == 0)
        base = values;
      else if (values != base)
        return fail(fmt::format("{}: seed {} changes the obstruction classes", ce.label(), seed));
    }
    ++n;
  }
  return {true, fmt::format("{} extensions, seeds 0, 1, 2 agree", n)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "axiom suite", 1000, axiom_suite},
      {"AC2", "cocycle validity", 5000, cocycle_validity},
      {"AC3", "reconstruction roundtrip", 5000, roundtrip},
      {"AC4", "coprime H2 and inducibility", 1000, coprime_instance},
      {"AC5", "non-split detection", 1000, non_split},
      {"AC6", "Z1 and Aut^(H,K)", 30000, lemma_z1},
      {"AC7", "Wells exactness", 60000, wells_exactness},
      {"AC8", "obstruction iff inducible", 60000, obstruction_equivalence},
      {"AC9", "splitting", 10000, splitting},
      {"AC10", "transversal invariance", 30000, transversal_invariance},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = ms <= c.limit_ms;
    const bool pass = o.pass && in_time;
    failures += !pass;
    std::printf("%-4s %s  %-30s %9.1f ms / %.0f ms  %s%s\n", c.id, pass ? "PASS" : "FAIL", c.title, ms,
                c.limit_ms, o.detail.c_str(), in_time ? "" : " (over time limit)");
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
