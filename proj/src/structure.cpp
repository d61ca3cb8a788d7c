#include "mla/structure.hpp"

#include <algorithm>
#include <set>

#include <fmt/format.h>

namespace mla {

bool SubsetIdeal::contains(Elem x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

SubsetIdeal make_subset(const AlgebraPtr& a, std::vector<Elem> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (Elem m : members)
    if (m < 0 || m >= a->order())
      throw StructuralError(fmt::format("element {} is not in an algebra of order {}", m, a->order()));
  return SubsetIdeal{a, std::move(members)};
}

SubsetIdeal center(const AlgebraPtr& a) {
  std::vector<Elem> z;
  for (Elem c = 0; c < a->order(); ++c) {
    bool central = true;
    for (Elem x = 0; x < a->order() && central; ++x) central = a->mul(c, x) == a->mul(x, c);
    if (central) z.push_back(c);
  }
  return SubsetIdeal{a, std::move(z)};
}

SubsetIdeal lie_center(const AlgebraPtr& a) {
  std::vector<Elem> z;
  for (Elem c = 0; c < a->order(); ++c) {
    bool central = true;
    for (Elem x = 0; x < a->order() && central; ++x) central = a->star(c, x) == kIdentity;
    if (central) z.push_back(c);
  }
  return SubsetIdeal{a, std::move(z)};
}

bool is_subgroup(const MultLieAlgebra& a, const std::vector<Elem>& s) {
  std::vector<char> in(static_cast<std::size_t>(a.order()), 0);
  for (Elem x : s) in[x] = 1;
  if (!in[kIdentity]) return false;
  for (Elem x : s) {
    if (!in[a.inv(x)]) return false;
    for (Elem y : s)
      if (!in[a.mul(x, y)]) return false;
  }
  return true;
}

std::optional<std::string> ideal_violation(const MultLieAlgebra& a, const std::vector<Elem>& s) {
  std::vector<char> in(static_cast<std::size_t>(a.order()), 0);
  for (Elem x : s) in[x] = 1;
  if (!in[kIdentity]) return "does not contain the identity";
  for (Elem x : s) {
    if (!in[a.inv(x)]) return fmt::format("inverse of {} missing", x);
    for (Elem y : s)
      if (!in[a.mul(x, y)]) return fmt::format("not closed: {}.{} = {}", x, y, a.mul(x, y));
  }
  for (Elem g = 0; g < a.order(); ++g) {
    for (Elem x : s) {
      if (!in[a.conj(g, x)])
        return fmt::format("not normal: conjugating {} by {} gives {}", x, g, a.conj(g, x));
      if (!in[a.star(g, x)])
        return fmt::format("not star-absorbing: {} * {} = {}", g, x, a.star(g, x));
    }
  }
  return std::nullopt;
}

bool is_ideal(const MultLieAlgebra& a, const std::vector<Elem>& s) {
  return !ideal_violation(a, s).has_value();
}

SubsetIdeal generated_subgroup(const AlgebraPtr& a, const std::vector<Elem>& gens) {
  std::vector<char> in(static_cast<std::size_t>(a->order()), 0);
  std::vector<Elem> members{kIdentity};
  in[kIdentity] = 1;
  for (std::size_t k = 0; k < members.size(); ++k) {
    for (Elem g : gens) {
      const Elem y = a->mul(members[k], g);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return SubsetIdeal{a, std::move(members)};
}

std::vector<std::vector<Elem>> subgroups(const MultLieAlgebra& a, const std::vector<Elem>& within) {
  // Breadth-first over subgroups generated by adding one element at a time.
  std::vector<char> allowed(static_cast<std::size_t>(a.order()), within.empty() ? 1 : 0);
  for (Elem x : within) allowed[x] = 1;
  auto share_copy = share(a);
  std::set<std::vector<Elem>> seen;
  std::vector<std::vector<Elem>> queue{{kIdentity}};
  seen.insert({kIdentity});
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const auto current = queue[k];
    for (Elem x = 0; x < a.order(); ++x) {
      if (!allowed[x] || std::binary_search(current.begin(), current.end(), x)) continue;
      auto gens = current;
      gens.push_back(x);
      auto next = generated_subgroup(share_copy, gens).members;
      if (!std::all_of(next.begin(), next.end(), [&](Elem y) { return allowed[y] != 0; })) continue;
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::vector<std::vector<Elem>> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
    return l.size() != r.size() ? l.size() < r.size() : l < r;
  });
  return out;
}

Quotient quotient(const AlgebraPtr& a, const SubsetIdeal& h) {
  if (auto why = ideal_violation(*a, h.members))
    throw QuotientError("subset is not an ideal: " + *why);
  const int n = a->order();
  std::vector<Elem> coset(static_cast<std::size_t>(n), -1);
  std::vector<Elem> reps;
  for (Elem g = 0; g < n; ++g) {
    if (coset[g] != -1) continue;
    const Elem id = static_cast<Elem>(reps.size());
    reps.push_back(g);  // g is the minimum of its coset
    for (Elem m : h.members) coset[a->mul(g, m)] = id;
  }
  const int k = static_cast<int>(reps.size());
  std::vector<Elem> mul(static_cast<std::size_t>(k * k)), star(static_cast<std::size_t>(k * k));
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      const std::size_t cell = static_cast<std::size_t>(coset[x] * k + coset[y]);
      const Elem pm = coset[a->mul(x, y)];
      const Elem ps = coset[a->star(x, y)];
      if (x == reps[coset[x]] && y == reps[coset[y]]) {
        mul[cell] = pm;
        star[cell] = ps;
      }
    }
  }
  // Check that both products are independent of the representatives.
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      const std::size_t cell = static_cast<std::size_t>(coset[x] * k + coset[y]);
      if (coset[a->mul(x, y)] != mul[cell])
        throw QuotientError(fmt::format("product does not descend at cosets {}, {}", coset[x], coset[y]));
      if (coset[a->star(x, y)] != star[cell])
        throw QuotientError(fmt::format("star does not descend at cosets of {} and {} (elements {}, {})",
                                        reps[coset[x]], reps[coset[y]], x, y));
    }
  }
  std::vector<std::string> names;
  if (!a->names().empty())
    for (Elem r : reps) names.push_back(a->element_name(r) + "H");
  std::string label = a->label().empty() ? std::string("quotient") : a->label() + "/H";
  auto kalg = share(MultLieAlgebra::from_tables(std::move(mul), std::move(star), 0, std::move(names),
                                                std::move(label)));
  Morphism beta{a, kalg, coset, MorphismKind::mla_hom};
  return Quotient{kalg, std::move(beta), std::move(reps)};
}

}  // namespace mla
