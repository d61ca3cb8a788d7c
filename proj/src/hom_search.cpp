#include "mla/hom_search.hpp"

#include "mla/errors.hpp"
#include "mla/structure.hpp"

namespace mla {

std::vector<Elem> greedy_generators(const MultLieAlgebra& a) {
  std::vector<Elem> gens;
  std::vector<char> in(static_cast<std::size_t>(a.order()), 0);
  in[kIdentity] = 1;
  std::vector<Elem> members{kIdentity};
  while (members.size() < static_cast<std::size_t>(a.order())) {
    Elem best = -1;
    for (Elem x = 0; x < a.order(); ++x)
      if (!in[x] && (best < 0 || a.element_order(x) > a.element_order(best))) best = x;
    gens.push_back(best);
    for (std::size_t k = 0; k < members.size(); ++k) {
      for (Elem g : gens) {
        const Elem y = a.mul(members[k], g);
        if (!in[y]) {
          in[y] = 1;
          members.push_back(y);
        }
      }
    }
  }
  return gens;
}

namespace {

class HomSearch {
 public:
  HomSearch(const MultLieAlgebra& src, const MultLieAlgebra& dst, const HomSearchOptions& opt,
            const std::function<bool(const std::vector<Elem>&)>& visit)
      : src_(src), dst_(dst), opt_(opt), visit_(visit), gens_(greedy_generators(src)),
        image_(static_cast<std::size_t>(src.order()), -1),
        used_(static_cast<std::size_t>(dst.order()), 0) {
    image_[kIdentity] = kIdentity;
    used_[kIdentity] = 1;
    known_.push_back(kIdentity);
  }

  void run() { descend(0); }

 private:
  bool assign(Elem x, Elem v) {
    if (image_[x] != -1) return image_[x] == v;
    if (opt_.injective && used_[v]) return false;
    image_[x] = v;
    used_[v] = 1;
    known_.push_back(x);
    return true;
  }

  // Extends the map on <g_0..g_level>; returns false on inconsistency.
  bool close(std::size_t level) {
    for (std::size_t k = 0; k < known_.size(); ++k) {
      const Elem a = known_[k];
      for (std::size_t j = 0; j <= level; ++j) {
        const Elem g = gens_[j];
        if (!assign(src_.mul(a, g), dst_.mul(image_[a], image_[g]))) return false;
      }
    }
    return true;
  }

  bool star_preserved() const {
    const int n = src_.order();
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (image_[src_.star(x, y)] != dst_.star(image_[x], image_[y])) return false;
    return true;
  }

  bool descend(std::size_t level) {
    if (level == gens_.size()) {
      if (opt_.preserve_star && !star_preserved()) return true;
      return visit_(image_);
    }
    const Elem g = gens_[level];
    const int order = src_.element_order(g);
    for (Elem c = 0; c < dst_.order(); ++c) {
      const int co = dst_.element_order(c);
      if (opt_.injective ? co != order : order % co != 0) continue;
      if (opt_.allow_image && !opt_.allow_image(g, c)) continue;
      const std::size_t mark = known_.size();
      bool keep_going = true;
      if (assign(g, c) && close(level)) keep_going = descend(level + 1);
      while (known_.size() > mark) {
        const Elem x = known_.back();
        known_.pop_back();
        used_[image_[x]] = 0;
        image_[x] = -1;
      }
      used_[kIdentity] = 1;
      if (!keep_going) return false;
    }
    return true;
  }

  const MultLieAlgebra& src_;
  const MultLieAlgebra& dst_;
  const HomSearchOptions& opt_;
  const std::function<bool(const std::vector<Elem>&)>& visit_;
  std::vector<Elem> gens_;
  std::vector<Elem> image_;
  std::vector<char> used_;
  std::vector<Elem> known_;
};

}  // namespace

void for_each_homomorphism(const MultLieAlgebra& src, const MultLieAlgebra& dst,
                           const HomSearchOptions& options,
                           const std::function<bool(const std::vector<Elem>&)>& visit) {
  HomSearch(src, dst, options, visit).run();
}

std::vector<std::vector<Elem>> all_homomorphisms(const MultLieAlgebra& src,
                                                 const MultLieAlgebra& dst,
                                                 const HomSearchOptions& options) {
  std::vector<std::vector<Elem>> out;
  for_each_homomorphism(src, dst, options, [&](const std::vector<Elem>& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

std::optional<Perm> find_isomorphism(const MultLieAlgebra& a, const MultLieAlgebra& b) {
  if (a.order() != b.order()) return std::nullopt;
  std::optional<Perm> found;
  HomSearchOptions opt;
  opt.injective = true;
  for_each_homomorphism(a, b, opt, [&](const std::vector<Elem>& m) {
    found = m;
    return false;
  });
  return found;
}

}  // namespace mla
