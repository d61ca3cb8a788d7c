#include "mla/kernels.hpp"

#include <string>

#include "mla/cocycle_identities.hpp"

namespace mla::kernels {
namespace {

std::size_t at(Elem x, Elem y, int n) {
  return static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y);
}

// Per-row bodies shared by the serial and parallel drivers. Row x covers every
// tuple whose first coordinate is x.

void group_row(std::span<const Elem> t, int n, Elem e, Elem x, ValidityReport& out) {
  if (t[at(e, x, n)] != x || t[at(x, e, n)] != x) out.add("identity", {x});
  bool has_inverse = false;
  for (Elem y = 0; y < n; ++y) {
    if (t[at(x, y, n)] == e && t[at(y, x, n)] == e) {
      has_inverse = true;
      break;
    }
  }
  if (!has_inverse) out.add("inverse", {x});
  for (Elem y = 0; y < n; ++y) {
    const Elem xy = t[at(x, y, n)];
    for (Elem z = 0; z < n; ++z) {
      if (t[at(xy, z, n)] != t[at(x, t[at(y, z, n)], n)]) out.add("associativity", {x, y, z});
    }
  }
}

void star_row(const MultLieAlgebra& a, Elem x, ValidityReport& out) {
  const int n = a.order();
  if (a.star(x, x) != kIdentity) out.add("axiom-1", {x});
  for (Elem y = 0; y < n; ++y) {
    const Elem xy = a.star(x, y);
    for (Elem z = 0; z < n; ++z) {
      // x * (yz) = (x * y) . y(x * z)
      if (a.star(x, a.mul(y, z)) != a.mul(xy, a.conj(y, a.star(x, z))))
        out.add("axiom-2", {x, y, z});
      // (xy) * z = x(y * z) . (x * z)
      if (a.star(a.mul(x, y), z) != a.mul(a.conj(x, a.star(y, z)), a.star(x, z)))
        out.add("axiom-3", {x, y, z});
      const Elem p = a.star(xy, a.conj(y, z));
      const Elem q = a.star(a.star(y, z), a.conj(z, x));
      const Elem r = a.star(a.star(z, x), a.conj(x, y));
      if (a.mul(a.mul(p, q), r) != kIdentity) out.add("axiom-4", {x, y, z});
      if (a.conj(z, xy) != a.star(a.conj(z, x), a.conj(z, y))) out.add("axiom-5", {x, y, z});
    }
  }
}

void cocycle_row(const CocycleView& c, Elem x, ValidityReport& out) {
  const int nk = c.K.order();
  auto f = [&](Elem a, Elem b) { return c.f[at(a, b, nk)]; };
  auto h = [&](Elem a, Elem b) { return c.h[at(a, b, nk)]; };
  auto g = [&](Elem a, Elem v) {
    return c.gamma[static_cast<std::size_t>(a)][static_cast<std::size_t>(v)];
  };
  for (Elem y = 0; y < nk; ++y) {
    for (Elem z = 0; z < nk; ++z) {
      const auto r = cocycle_residuals(c.K, c.H, f, h, g, x, y, z);
      for (int k = 0; k < kCocycleIdentityCount; ++k) {
        if (r[static_cast<std::size_t>(k)] != kIdentity)
          out.add(kCocycleIdentityNames[static_cast<std::size_t>(k)], {x, y, z});
      }
    }
  }
}

template <class Row>
ValidityReport run_serial(int rows, Row&& row) {
  ValidityReport out;
  for (Elem x = 0; x < rows; ++x) row(x, out);
  return out;
}

template <class Row>
ValidityReport run_parallel(int rows, Row&& row) {
  std::vector<ValidityReport> partial(static_cast<std::size_t>(rows));
#pragma omp parallel for schedule(dynamic)
  for (Elem x = 0; x < rows; ++x) row(x, partial[static_cast<std::size_t>(x)]);
  ValidityReport out;
  for (const auto& p : partial) out.merge(p);
  return out;
}

}  // namespace

namespace serial {
ValidityReport group_axioms(std::span<const Elem> table, int n, Elem identity) {
  return run_serial(n, [&](Elem x, ValidityReport& r) { group_row(table, n, identity, x, r); });
}
ValidityReport star_axioms(const MultLieAlgebra& a) {
  return run_serial(a.order(), [&](Elem x, ValidityReport& r) { star_row(a, x, r); });
}
ValidityReport cocycle_identities(const CocycleView& c) {
  return run_serial(c.K.order(), [&](Elem x, ValidityReport& r) { cocycle_row(c, x, r); });
}
}  // namespace serial

namespace parallel {
ValidityReport group_axioms(std::span<const Elem> table, int n, Elem identity) {
  return run_parallel(n, [&](Elem x, ValidityReport& r) { group_row(table, n, identity, x, r); });
}
ValidityReport star_axioms(const MultLieAlgebra& a) {
  return run_parallel(a.order(), [&](Elem x, ValidityReport& r) { star_row(a, x, r); });
}
ValidityReport cocycle_identities(const CocycleView& c) {
  return run_parallel(c.K.order(), [&](Elem x, ValidityReport& r) { cocycle_row(c, x, r); });
}
}  // namespace parallel

}  // namespace mla::kernels
