#include "mla/cohomology.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include <fmt/format.h>

#include "mla/abelian.hpp"
#include "mla/cocycle_identities.hpp"
#include "mla/hom_search.hpp"
#include "mla/linalg.hpp"

namespace mla {
namespace {

using Key = std::vector<Elem>;

Key key_of(const CocycleTriple& c) {
  Key k = c.f;
  k.insert(k.end(), c.h.begin(), c.h.end());
  return k;
}

void require_gamma(const AlgebraPtr& k, const AlgebraPtr& h, const std::vector<Endomap>& gamma) {
  if (!h->is_abelian() || !h->has_trivial_star())
    throw StructuralError("H must be abelian with trivial star");
  if (gamma.size() != static_cast<std::size_t>(k->order()))
    throw StructuralError(fmt::format("gamma must have {} entries", k->order()));
  for (const auto& g : gamma)
    if (g.size() != static_cast<std::size_t>(h->order()))
      throw StructuralError("every gamma entry must be a map H -> H");
  ValidityReport r;
  check_gamma(trivial_triple(k, h, gamma), r);
  if (!r.ok()) throw StructuralError("gamma is not an admissible action: " + r.summary());
}

// Entries of f and h left free by normalization, in the order f(x,y), h(x,y)
// for x, y != e (h(x,x) excluded).
struct Unknown {
  bool is_h;
  std::size_t cell;
};

std::vector<Unknown> unknown_cells(int k) {
  std::vector<Unknown> out;
  for (Elem x = 1; x < k; ++x) {
    for (Elem y = 1; y < k; ++y) {
      const auto cell = static_cast<std::size_t>(x * k + y);
      out.push_back({false, cell});
      if (x != y) out.push_back({true, cell});
    }
  }
  return out;
}

std::uint64_t checked_power(std::uint64_t base, std::uint64_t exp, const char* what) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (out > (UINT64_MAX / std::max<std::uint64_t>(base, 1)))
      throw SizeLimitError(fmt::format("{} does not fit in 64 bits", what));
    out *= base;
  }
  return out;
}

// The linear structure of triples over an elementary abelian H.
struct LinearModel {
  AlgebraPtr K, H;
  std::vector<Endomap> gamma;
  ElementaryAbelian ea;
  std::vector<Unknown> unknowns;

  int p() const { return ea.p; }
  int d() const { return ea.dim; }
  int unknown_dim() const { return static_cast<int>(unknowns.size()) * d(); }

  std::vector<int> to_vector(const CocycleTriple& c) const {
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(unknown_dim()));
    for (const auto& u : unknowns) {
      const auto& coords = ea.coords[(u.is_h ? c.h : c.f)[u.cell]];
      v.insert(v.end(), coords.begin(), coords.end());
    }
    return v;
  }

  CocycleTriple from_vector(std::span<const int> v) const {
    CocycleTriple c = trivial_triple(K, H, gamma);
    for (std::size_t i = 0; i < unknowns.size(); ++i) {
      const auto& u = unknowns[i];
      (u.is_h ? c.h : c.f)[u.cell] = ea.element(v.subspan(i * static_cast<std::size_t>(d()), static_cast<std::size_t>(d())));
    }
    return c;
  }

  // All residual coordinates of the cocycle identities, one row block per tuple.
  std::vector<int> residuals(const CocycleTriple& c) const {
    const int k = K->order();
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(k * k * k * kCocycleIdentityCount * d()));
    auto f = [&](Elem a, Elem b) { return c.f_at(a, b); };
    auto h = [&](Elem a, Elem b) { return c.h_at(a, b); };
    auto g = [&](Elem a, Elem v) { return c.act(a, v); };
    for (Elem x = 0; x < k; ++x)
      for (Elem y = 0; y < k; ++y)
        for (Elem z = 0; z < k; ++z) {
          const auto r = cocycle_residuals(*K, *H, f, h, g, x, y, z);
          for (Elem v : r) out.insert(out.end(), ea.coords[v].begin(), ea.coords[v].end());
        }
    return out;
  }

  std::vector<std::vector<int>> z2_basis() const {
    const int cols = unknown_dim();
    std::vector<std::vector<int>> columns;
    std::vector<int> unit(static_cast<std::size_t>(cols), 0);
    for (int j = 0; j < cols; ++j) {
      unit[j] = 1;
      columns.push_back(residuals(from_vector(unit)));
      unit[j] = 0;
    }
    const int rows = columns.empty() ? 0 : static_cast<int>(columns[0].size());
    linalg::ModMatrix m(rows, cols, p());
    for (int j = 0; j < cols; ++j)
      for (int i = 0; i < rows; ++i) m.at(i, j) = columns[j][i];
    return linalg::nullspace(std::move(m));
  }

  // Images of the unit lambdas under lambda -> coboundary.
  std::vector<std::vector<int>> b2_generators() const {
    const int k = K->order();
    std::vector<std::vector<int>> gens;
    for (Elem x = 1; x < k; ++x) {
      for (int j = 0; j < d(); ++j) {
        LambdaMap lambda(static_cast<std::size_t>(k), kIdentity);
        lambda[x] = ea.basis[j];
        gens.push_back(to_vector(coboundary_of(lambda, K, H, gamma)));
      }
    }
    return gens;
  }
};

std::optional<LinearModel> linear_model(const AlgebraPtr& k, const AlgebraPtr& h,
                                        const std::vector<Endomap>& gamma) {
  auto ea = elementary_abelian(*h);
  if (!ea) return std::nullopt;
  return LinearModel{k, h, gamma, std::move(*ea), unknown_cells(k->order())};
}

linalg::ModMatrix as_rows(const std::vector<std::vector<int>>& rows, int cols, int p) {
  linalg::ModMatrix m(static_cast<int>(rows.size()), cols, p);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < cols; ++j) m.at(static_cast<int>(i), j) = rows[i][j];
  return m;
}

// Odometer over all F_p combinations of `basis`.
void for_each_combination(const std::vector<std::vector<int>>& basis, int cols, int p,
                          const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> digits(basis.size(), 0);
  while (true) {
    std::vector<int> v(static_cast<std::size_t>(cols), 0);
    for (std::size_t b = 0; b < basis.size(); ++b)
      if (digits[b])
        for (int j = 0; j < cols; ++j) v[j] = (v[j] + digits[b] * basis[b][j]) % p;
    visit(v);
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == p) digits[i++] = 0;
    if (i == digits.size()) return;
  }
}

void for_each_lambda(int k, int hn, const std::function<void(const LambdaMap&)>& visit) {
  LambdaMap lambda(static_cast<std::size_t>(k), kIdentity);
  while (true) {
    visit(lambda);
    Elem x = 1;
    while (x < k && ++lambda[x] == hn) lambda[x++] = 0;
    if (x >= k) return;
  }
}

bool normalized(const CocycleTriple& c) {
  ValidityReport r;
  check_normalization(c, r);
  return r.ok();
}

std::optional<LambdaMap> coboundary_search(const CocycleTriple& c) {
  const MultLieAlgebra& K = *c.K;
  const MultLieAlgebra& H = *c.H;
  const int k = K.order();
  // Pairs to check once the largest of x, y and the product index is assigned.
  struct Pair {
    Elem x, y;
    bool star;
  };
  std::vector<std::vector<Pair>> due(static_cast<std::size_t>(k));
  for (Elem x = 0; x < k; ++x)
    for (Elem y = 0; y < k; ++y) {
      due[std::max({x, y, K.mul(x, y)})].push_back({x, y, false});
      due[std::max({x, y, K.star(x, y)})].push_back({x, y, true});
    }
  LambdaMap l(static_cast<std::size_t>(k), kIdentity);
  auto holds = [&](const Pair& q) {
    if (!q.star)
      return c.f_at(q.x, q.y) == H.mul(H.mul(l[q.x], l[q.y]), H.inv(l[K.mul(q.x, q.y)]));
    const Elem rhs = H.mul(H.mul(c.act(q.x, l[q.y]), c.act(q.y, H.inv(l[q.x]))),
                           H.inv(l[K.star(q.x, q.y)]));
    return c.h_at(q.x, q.y) == rhs;
  };
  auto all_due = [&](Elem x) { return std::all_of(due[x].begin(), due[x].end(), holds); };
  if (!all_due(0)) return std::nullopt;
  std::function<bool(Elem)> dfs = [&](Elem x) {
    if (x == k) return true;
    for (Elem v = 0; v < H.order(); ++v) {
      l[x] = v;
      if (all_due(x) && dfs(x + 1)) return true;
    }
    l[x] = kIdentity;
    return false;
  };
  if (!dfs(1)) return std::nullopt;
  return l;
}

std::optional<LambdaMap> coboundary_linear(const CocycleTriple& c, const LinearModel& lm) {
  if (!normalized(c)) return std::nullopt;
  const int k = c.K->order();
  const auto gens = lm.b2_generators();
  const int cols = static_cast<int>(gens.size());
  const int rows = lm.unknown_dim();
  linalg::ModMatrix m(rows, cols, lm.p());
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) m.at(i, j) = gens[j][i];
  auto sol = linalg::solve(std::move(m), lm.to_vector(c));
  if (!sol) return std::nullopt;
  LambdaMap lambda(static_cast<std::size_t>(k), kIdentity);
  for (Elem x = 1; x < k; ++x) {
    std::span<const int> coords(sol->data() + (x - 1) * lm.d(), static_cast<std::size_t>(lm.d()));
    lambda[x] = lm.ea.element(coords);
  }
  // The unknown cells determine the rest; confirm on the full tables.
  if (!(coboundary_of(lambda, c.K, c.H, c.gamma) == c)) return std::nullopt;
  return lambda;
}

CohomologyMethod resolve(CohomologyMethod m, const std::optional<LinearModel>& lm, int k,
                         const CohomologyLimits& limits) {
  if (m == CohomologyMethod::linear && !lm)
    throw StructuralError("the linear path needs an elementary abelian H");
  if (m != CohomologyMethod::automatic) return m;
  return lm && k <= limits.max_k_linear ? CohomologyMethod::linear : CohomologyMethod::search;
}

void verify_closed(const std::vector<CocycleTriple>& z, const std::map<Key, std::size_t>& index) {
  // All pairs for small lists, otherwise products against the first 64 elements.
  const std::size_t right = z.size() <= 1024 ? z.size() : std::min<std::size_t>(64, z.size());
  for (const auto& a : z)
    for (std::size_t j = 0; j < right; ++j)
      if (!index.count(key_of(multiply(a, z[j]))))
        throw InvariantViolation("Z2 is not closed under the pointwise product");
}

std::vector<CocycleTriple> z2_search(const AlgebraPtr& kp, const AlgebraPtr& hp,
                                     const std::vector<Endomap>& gamma,
                                     const CohomologyLimits& limits) {
  const MultLieAlgebra& K = *kp;
  const MultLieAlgebra& H = *hp;
  const int k = K.order();
  if (k > limits.max_k_enum || H.order() > limits.max_h_enum)
    throw SizeLimitError(fmt::format(
        "explicit Z2 enumeration is capped at |K| <= {} and |H| <= {} (got {} and {}); use an "
        "elementary abelian H for the linear path or a smaller instance",
        limits.max_k_enum, limits.max_h_enum, k, H.order()));
  const auto unknowns = unknown_cells(k);
  std::vector<int> f_pos(static_cast<std::size_t>(k * k), -1), h_pos(f_pos);
  for (std::size_t i = 0; i < unknowns.size(); ++i)
    (unknowns[i].is_h ? h_pos : f_pos)[unknowns[i].cell] = static_cast<int>(i);

  struct Check {
    Elem x, y, z;
    int id;
  };
  std::vector<std::vector<Check>> due(unknowns.size() + 1);
  for (Elem x = 0; x < k; ++x)
    for (Elem y = 0; y < k; ++y)
      for (Elem z = 0; z < k; ++z)
        for (int id = 0; id < kCocycleIdentityCount; ++id) {
          int last = -1;
          auto ft = [&](Elem a, Elem b) {
            last = std::max(last, f_pos[static_cast<std::size_t>(a * k + b)]);
            return kIdentity;
          };
          auto ht = [&](Elem a, Elem b) {
            last = std::max(last, h_pos[static_cast<std::size_t>(a * k + b)]);
            return kIdentity;
          };
          auto gt = [&](Elem, Elem) { return kIdentity; };
          (void)cocycle_residuals(K, H, ft, ht, gt, x, y, z, id);
          due[static_cast<std::size_t>(last + 1)].push_back({x, y, z, id});
        }

  CocycleTriple c = trivial_triple(kp, hp, gamma);
  auto f = [&](Elem a, Elem b) { return c.f_at(a, b); };
  auto h = [&](Elem a, Elem b) { return c.h_at(a, b); };
  auto g = [&](Elem a, Elem v) { return c.act(a, v); };
  auto passes = [&](std::size_t slot) {
    for (const auto& ch : due[slot]) {
      const auto r = cocycle_residuals(K, H, f, h, g, ch.x, ch.y, ch.z, ch.id);
      if (r[static_cast<std::size_t>(ch.id)] != kIdentity) return false;
    }
    return true;
  };
  std::vector<CocycleTriple> out;
  if (!passes(0)) return out;
  std::function<void(std::size_t)> dfs = [&](std::size_t pos) {
    if (pos == unknowns.size()) {
      if (out.size() >= limits.max_list)
        throw SizeLimitError(fmt::format("Z2 has more than {} elements", limits.max_list));
      out.push_back(c);
      return;
    }
    auto& table = unknowns[pos].is_h ? c.h : c.f;
    for (Elem v = 0; v < H.order(); ++v) {
      table[unknowns[pos].cell] = v;
      if (passes(pos + 1)) dfs(pos + 1);
    }
    table[unknowns[pos].cell] = kIdentity;
  };
  dfs(0);
  return out;
}

}  // namespace

const char* to_string(CohomologyMethod m) {
  switch (m) {
    case CohomologyMethod::automatic: return "automatic";
    case CohomologyMethod::search: return "search";
    case CohomologyMethod::linear: return "linear";
  }
  return "?";
}

bool is_one_cocycle(const MultLieAlgebra& k, const MultLieAlgebra& h,
                    const std::vector<Endomap>& gamma, const OneCocycle& nu) {
  for (Elem x = 0; x < k.order(); ++x)
    for (Elem y = 0; y < k.order(); ++y) {
      if (nu[k.mul(x, y)] != h.mul(nu[x], nu[y])) return false;
      if (nu[k.star(x, y)] != h.mul(gamma[x][nu[y]], gamma[y][h.inv(nu[x])])) return false;
    }
  return true;
}

std::vector<OneCocycle> enumerate_Z1(const AlgebraPtr& k, const AlgebraPtr& h,
                                     const std::vector<Endomap>& gamma) {
  require_gamma(k, h, gamma);
  HomSearchOptions opt;
  opt.preserve_star = false;
  std::vector<OneCocycle> out;
  for (auto& nu : all_homomorphisms(*k, *h, opt))
    if (is_one_cocycle(*k, *h, gamma, nu)) out.push_back(std::move(nu));
  std::sort(out.begin(), out.end());
  for (const auto& a : out)
    for (const auto& b : out) {
      OneCocycle p(a.size());
      for (std::size_t x = 0; x < a.size(); ++x) p[x] = h->mul(a[x], b[x]);
      if (!std::binary_search(out.begin(), out.end(), p))
        throw InvariantViolation("Z1 is not closed under the pointwise product");
    }
  return out;
}

CocycleTriple coboundary_of(const LambdaMap& l, const AlgebraPtr& kp, const AlgebraPtr& hp,
                            const std::vector<Endomap>& gamma) {
  const MultLieAlgebra& K = *kp;
  const MultLieAlgebra& H = *hp;
  if (l.size() != static_cast<std::size_t>(K.order()) || l[0] != kIdentity)
    throw StructuralError("lambda must be a map K -> H with lambda(e) = e");
  CocycleTriple c = trivial_triple(kp, hp, gamma);
  for (Elem x = 0; x < K.order(); ++x)
    for (Elem y = 0; y < K.order(); ++y) {
      c.f[c.cell(x, y)] = H.mul(H.mul(l[x], l[y]), H.inv(l[K.mul(x, y)]));
      c.h[c.cell(x, y)] = H.mul(H.mul(c.act(x, l[y]), c.act(y, H.inv(l[x]))),
                                H.inv(l[K.star(x, y)]));
    }
  return c;
}

std::optional<LambdaMap> is_coboundary(const CocycleTriple& c, CohomologyMethod method,
                                       const CohomologyLimits& limits) {
  require_gamma(c.K, c.H, c.gamma);
  const auto lm = linear_model(c.K, c.H, c.gamma);
  if (resolve(method, lm, c.K->order(), limits) == CohomologyMethod::linear)
    return coboundary_linear(c, *lm);
  return coboundary_search(c);
}

std::optional<LambdaMap> cohomologous(const CocycleTriple& c1, const CocycleTriple& c2,
                                      CohomologyMethod method, const CohomologyLimits& limits) {
  require_same_shape(c1, c2);
  return is_coboundary(multiply(c1, inverse(c2)), method, limits);
}

std::vector<CocycleTriple> enumerate_Z2(const AlgebraPtr& k, const AlgebraPtr& h,
                                        const std::vector<Endomap>& gamma,
                                        const CohomologyLimits& limits, CohomologyMethod method) {
  require_gamma(k, h, gamma);
  const auto lm = linear_model(k, h, gamma);
  std::vector<CocycleTriple> out;
  if (resolve(method, lm, k->order(), limits) == CohomologyMethod::linear) {
    const auto basis = lm->z2_basis();
    const auto size = checked_power(static_cast<std::uint64_t>(lm->p()), basis.size(), "|Z2|");
    if (size > limits.max_list)
      throw SizeLimitError(fmt::format("Z2 has {} elements, more than the list cap {}", size,
                                       limits.max_list));
    for_each_combination(basis, lm->unknown_dim(), lm->p(),
                         [&](const std::vector<int>& v) { out.push_back(lm->from_vector(v)); });
  } else {
    out = z2_search(k, h, gamma, limits);
  }
  std::map<Key, std::size_t> index;
  for (std::size_t i = 0; i < out.size(); ++i) index.emplace(key_of(out[i]), i);
  verify_closed(out, index);
  return out;
}

CohomologyClassGroup compute_H2(const AlgebraPtr& k, const AlgebraPtr& h,
                                const std::vector<Endomap>& gamma, const CohomologyLimits& limits,
                                CohomologyMethod method) {
  require_gamma(k, h, gamma);
  const auto lm = linear_model(k, h, gamma);
  CohomologyClassGroup out;
  out.gamma = gamma;
  out.method = resolve(method, lm, k->order(), limits);

  if (out.method == CohomologyMethod::linear) {
    const int cols = lm->unknown_dim();
    const int p = lm->p();
    const auto z = lm->z2_basis();
    const auto b = lm->b2_generators();
    const int z_dim = static_cast<int>(z.size());
    const int b_dim = linalg::rank(as_rows(b, cols, p));
    auto both = z;
    both.insert(both.end(), b.begin(), b.end());
    if (linalg::rank(as_rows(both, cols, p)) != z_dim)
      throw InvariantViolation("a coboundary fails the cocycle identities");
    // Complement of B2 in Z2, extended greedily from the Z2 basis.
    std::vector<std::vector<int>> span = b, complement;
    int r = b_dim;
    for (const auto& v : z) {
      span.push_back(v);
      const int nr = linalg::rank(as_rows(span, cols, p));
      if (nr > r) {
        complement.push_back(v);
        r = nr;
      } else {
        span.pop_back();
      }
    }
    const int h_dim = z_dim - b_dim;
    out.z2_order = checked_power(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(z_dim), "|Z2|");
    out.b2_order = checked_power(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(b_dim), "|B2|");
    out.h2_order = checked_power(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(h_dim), "|H2|");
    out.invariant_factors.assign(static_cast<std::size_t>(h_dim), p);
    if (out.h2_order <= limits.max_list)
      for_each_combination(complement, cols, p, [&](const std::vector<int>& v) {
        out.representatives.push_back(lm->from_vector(v));
      });
    return out;
  }

  const auto z2 = enumerate_Z2(k, h, gamma, limits, CohomologyMethod::search);
  std::map<Key, std::size_t> index;
  for (std::size_t i = 0; i < z2.size(); ++i) index.emplace(key_of(z2[i]), i);
  auto lookup = [&](const CocycleTriple& c) {
    auto it = index.find(key_of(c));
    if (it == index.end()) throw InvariantViolation("Z2 is not closed under the pointwise product");
    return it->second;
  };
  std::vector<std::size_t> b2;
  for_each_lambda(k->order(), h->order(), [&](const LambdaMap& l) {
    auto it = index.find(key_of(coboundary_of(l, k, h, gamma)));
    if (it == index.end()) throw InvariantViolation("a coboundary fails the cocycle identities");
    b2.push_back(it->second);
  });
  std::sort(b2.begin(), b2.end());
  b2.erase(std::unique(b2.begin(), b2.end()), b2.end());

  std::vector<Elem> class_of(z2.size(), -1);
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < z2.size(); ++i) {
    if (class_of[i] != -1) continue;
    const auto cls = static_cast<Elem>(reps.size());
    reps.push_back(i);
    for (std::size_t j : b2) class_of[lookup(multiply(z2[i], z2[j]))] = cls;
  }
  const int m = static_cast<int>(reps.size());
  std::vector<Elem> table(static_cast<std::size_t>(m * m));
  for (Elem a = 0; a < m; ++a)
    for (Elem bi = 0; bi < m; ++bi)
      table[a * m + bi] = class_of[lookup(multiply(z2[reps[a]], z2[reps[bi]]))];
  out.z2_order = z2.size();
  out.b2_order = b2.size();
  out.h2_order = static_cast<std::uint64_t>(m);
  if (out.z2_order != out.b2_order * out.h2_order)
    throw InvariantViolation("the cosets of B2 do not partition Z2");
  out.invariant_factors = invariant_factors(table, m);
  for (std::size_t i : reps) out.representatives.push_back(z2[i]);
  return out;
}

}  // namespace mla
