#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "normcoset/ball.hpp"
#include "normcoset/subgroup.hpp"

namespace normcoset {

/// Outcome of the no-cancellation grid check for one middle word w: over all
/// x, y in the factor's ball, the products x·w·y must be pairwise distinct
/// with additive lengths |x| + |w| + |y|.
struct WordGridReport {
  Element middle;
  int radius = 0;
  std::size_t pairs_checked = 0;
  std::size_t collisions = 0;
  std::size_t length_defects = 0;

  bool ok() const { return collisions == 0 && length_defects == 0; }
};

namespace detail {

inline void require_boundary_letters(const GroupSpec& g,
                                     const FreeFactorDesc& d,
                                     const Element& w) {
  const auto& word = std::get<FreeElement>(w.v).word;
  if (word.empty()) {
    throw ValidationError("middle word must be nonempty");
  }
  for (const auto* l : {&word.letters.front(), &word.letters.back()}) {
    if (std::binary_search(d.gens.begin(), d.gens.end(), l->id)) {
      throw ValidationError(
          "middle word must begin and end with a letter outside the factor; "
          "boundary letter '" +
          to_string(g, free_element(reduce_word<long long>({{l->id, 1}}))) +
          "' lies inside it");
    }
  }
}

}  // namespace detail

/// Verifies that (x, y) -> x·w·y is injective with additive lengths over the
/// factor ball of the given radius. The middle word must begin and end with
/// letters outside the factor, which is exactly what blocks cancellation at
/// both junctions.
inline WordGridReport free_bimodule_word_check(
    const GroupSpec& g, const SubgroupOracle& h, const Element& w, int radius,
    std::size_t cap = kDefaultElementCap) {
  const auto* d = std::get_if<FreeFactorDesc>(&h.desc);
  if (!d || !std::holds_alternative<FreeFamily>(g.family)) {
    throw Unsupported("word grid checks need a free factor in a free group");
  }
  detail::require_boundary_letters(g, *d, w);

  WordGridReport rep;
  rep.middle = w;
  rep.radius = radius;

  const long long w_len = std::get<FreeElement>(w.v).word.length();
  std::vector<Element> factor = subgroup_ball(h, radius, cap);
  std::unordered_map<Element, std::pair<std::size_t, std::size_t>, ElementHash>
      seen;
  seen.reserve(factor.size() * factor.size());
  for (std::size_t i = 0; i < factor.size(); ++i) {
    const Element xw = multiply(g, factor[i], w);
    const long long x_len = std::get<FreeElement>(factor[i].v).word.length();
    for (std::size_t j = 0; j < factor.size(); ++j) {
      Element p = multiply(g, xw, factor[j]);
      const long long y_len = std::get<FreeElement>(factor[j].v).word.length();
      if (std::get<FreeElement>(p.v).word.length() != x_len + w_len + y_len) {
        ++rep.length_defects;
      }
      if (!seen.emplace(std::move(p), std::make_pair(i, j)).second) {
        ++rep.collisions;
      }
      ++rep.pairs_checked;
    }
  }
  return rep;
}

/// Basis-level check that x·w1·y -> x·w2·y is a bijection between the two
/// grids: both index maps are collision-free over the same (x, y) index set,
/// so the correspondence is well defined and invertible.
struct BijectionReport {
  WordGridReport first;
  WordGridReport second;
  bool bijection = false;
};

inline BijectionReport intertwiner_bijection_check(
    const GroupSpec& g, const SubgroupOracle& h, const Element& w1,
    const Element& w2, int radius, std::size_t cap = kDefaultElementCap) {
  BijectionReport rep;
  rep.first = free_bimodule_word_check(g, h, w1, radius, cap);
  rep.second = free_bimodule_word_check(g, h, w2, radius, cap);
  rep.bijection = rep.first.ok() && rep.second.ok() &&
                  rep.first.pairs_checked == rep.second.pairs_checked;
  return rep;
}

}  // namespace normcoset
