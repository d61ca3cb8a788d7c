#include "mla/catalog.hpp"

#include <array>
#include <functional>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "mla/structure.hpp"

namespace mla {
namespace {

struct Table {
  std::vector<Elem> mul;
  std::vector<std::string> names;
};

Table cyclic(int n) {
  Table t;
  for (int a = 0; a < n; ++a) {
    t.names.push_back(std::to_string(a));
    for (int b = 0; b < n; ++b) t.mul.push_back((a + b) % n);
  }
  return t;
}

// Z/m x Z/n, element (a, b) at index a * n + b.
Table product(int m, int n) {
  Table t;
  const int size = m * n;
  for (int x = 0; x < size; ++x) {
    t.names.push_back(fmt::format("({},{})", x / n, x % n));
    for (int y = 0; y < size; ++y)
      t.mul.push_back(((x / n + y / n) % m) * n + (x % n + y % n) % n);
  }
  return t;
}

// r^a s^b at index a + n b, with s r s^-1 = r^-1. For n = 3 the rotations are {0,1,2}.
Table dihedral(int n) {
  Table t;
  const int size = 2 * n;
  for (int x = 0; x < size; ++x) {
    const int a = x % n, b = x / n;
    t.names.push_back(b ? (a ? fmt::format("r{}s", a) : "s") : (a ? fmt::format("r{}", a) : "e"));
    for (int y = 0; y < size; ++y) {
      const int c = y % n, d = y / n;
      const int rot = ((b ? a - c : a + c) % n + n) % n;
      t.mul.push_back(rot + n * ((b + d) % 2));
    }
  }
  return t;
}

// 1, -1, i, -i, j, -j, k, -k: index 2 * unit + sign.
Table quaternion() {
  // unit product table: (sign, unit) for units 1, i, j, k
  static constexpr std::array<std::array<std::array<int, 2>, 4>, 4> unit = {{
      {{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
      {{{1, 1}, {-1, 0}, {1, 3}, {-1, 2}}},
      {{{1, 2}, {-1, 3}, {-1, 0}, {1, 1}}},
      {{{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}},
  }};
  static constexpr std::array<const char*, 8> names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  Table t;
  for (int x = 0; x < 8; ++x) {
    t.names.push_back(names[x]);
    for (int y = 0; y < 8; ++y) {
      const auto [s, u] = unit[x / 2][y / 2];
      const int sign = (x % 2 ? -1 : 1) * (y % 2 ? -1 : 1) * s;
      t.mul.push_back(2 * u + (sign < 0 ? 1 : 0));
    }
  }
  return t;
}

// A Lie ring on Z/m1 x ... given by coordinates, with bracket supplied on
// coordinate vectors. Index is the mixed-radix code, first coordinate most
// significant.
AlgebraPtr lie_ring(std::vector<int> mods,
                    const std::function<std::vector<int>(const std::vector<int>&, const std::vector<int>&)>& bracket,
                    const std::string& label) {
  int n = 1;
  for (int m : mods) n *= m;
  auto decode = [&](int x) {
    std::vector<int> c(mods.size());
    for (int i = static_cast<int>(mods.size()) - 1; i >= 0; --i) {
      c[i] = x % mods[i];
      x /= mods[i];
    }
    return c;
  };
  auto encode = [&](const std::vector<int>& c) {
    int x = 0;
    for (std::size_t i = 0; i < mods.size(); ++i) x = x * mods[i] + ((c[i] % mods[i]) + mods[i]) % mods[i];
    return x;
  };
  std::vector<Elem> mul, star;
  std::vector<std::string> names;
  for (int x = 0; x < n; ++x) {
    const auto a = decode(x);
    names.push_back(fmt::format("({})", fmt::join(a, ",")));
    for (int y = 0; y < n; ++y) {
      const auto b = decode(y);
      std::vector<int> s(mods.size());
      for (std::size_t i = 0; i < mods.size(); ++i) s[i] = a[i] + b[i];
      mul.push_back(encode(s));
      star.push_back(encode(bracket(a, b)));
    }
  }
  return make_mla(std::move(mul), std::move(star), 0, std::move(names), label);
}

AlgebraPtr with_star_kind(Table t, bool commutator, const std::string& label) {
  const int n = static_cast<int>(t.names.size());
  std::vector<Elem> star = trivial_star(n);
  if (commutator)
    star = commutator_star(MultLieAlgebra::from_tables(t.mul, trivial_star(n), 0, t.names, label));
  return make_mla(std::move(t.mul), std::move(star), 0, std::move(t.names), label);
}

struct Builder {
  std::string name;
  std::function<AlgebraPtr()> build;
};

const std::vector<Builder>& builders() {
  static const std::vector<Builder> all = [] {
    std::vector<Builder> b;
    auto group = [&](const std::string& base, std::function<Table()> table) {
      for (bool comm : {false, true}) {
        const std::string name = base + (comm ? "_commutator" : "_trivial");
        b.push_back({name, [=] { return with_star_kind(table(), comm, name); }});
      }
    };
    for (int n = 1; n <= 8; ++n) group(fmt::format("z{}", n), [n] { return cyclic(n); });
    group("klein4", [] { return product(2, 2); });
    group("z2xz4", [] { return product(2, 4); });
    group("s3", [] { return dihedral(3); });
    group("d4", [] { return dihedral(4); });
    group("q8", [] { return quaternion(); });

    // [a, b] = b over F_p, coordinates (a, b).
    auto two_dim = [](int p) {
      return [p](const std::vector<int>& x, const std::vector<int>& y) {
        return std::vector<int>{0, ((x[0] * y[1] - x[1] * y[0]) % p + p) % p};
      };
    };
    b.push_back({"lie_f2_2d", [=] { return lie_ring({2, 2}, two_dim(2), "lie_f2_2d"); }});
    b.push_back({"lie_f3_2d", [=] { return lie_ring({3, 3}, two_dim(3), "lie_f3_2d"); }});
    // Z/4 x Z/2 with [u, v] = 2 det(u, v) in the first coordinate.
    b.push_back({"lie_z4xz2", [] {
                   return lie_ring({4, 2}, [](const std::vector<int>& x, const std::vector<int>& y) {
                     return std::vector<int>{2 * (x[0] * y[1] - x[1] * y[0]), 0};
                   }, "lie_z4xz2");
                 }});
    // Two copies of the F_2 algebra above: coordinates (a1, a2, h1, h2) with
    // [a1, h1] = h1 and [a2, h2] = h2.
    b.push_back({"lie_f2_2d_double", [] {
                   return lie_ring({2, 2, 2, 2}, [](const std::vector<int>& x, const std::vector<int>& y) {
                     return std::vector<int>{0, 0, (x[0] * y[2] + x[2] * y[0]) % 2,
                                             (x[1] * y[3] + x[3] * y[1]) % 2};
                   }, "lie_f2_2d_double");
                 }});
    return b;
  }();
  return all;
}

}  // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& b : builders()) out.push_back(b.name);
  return out;
}

AlgebraPtr catalog_algebra(std::string_view name) {
  for (const auto& b : builders())
    if (b.name == name) return b.build();
  throw MlaError(fmt::format("no catalog algebra named '{}'", name));
}

std::string CatalogExtension::label() const {
  return fmt::format("{} / {{{}}}", algebra, fmt::join(ideal, ","));
}

std::vector<CatalogExtension> catalog_extensions(int max_order) {
  std::vector<CatalogExtension> out;
  for (const auto& b : builders()) {
    auto g = b.build();
    if (g->order() > max_order) continue;
    for (const auto& h : subgroups(*g, center(g).members)) {
      try {
        out.push_back({b.name, h, build_extension(g, h)});
      } catch (const ExtensionError&) {
      }
    }
  }
  return out;
}

}  // namespace mla
