#pragma once

#include <cstddef>
#include <unordered_set>
#include <vector>

#include "normcoset/element.hpp"
#include "normcoset/errors.hpp"
#include "normcoset/group.hpp"

namespace normcoset {

/// Default hard cap on enumerated elements.
inline constexpr std::size_t kDefaultElementCap = 1000000;

/// All elements of word length <= radius with respect to the group's ordered
/// generator alphabet, in shortlex order: by length, then by the first
/// generator sequence reaching the element. The order is deterministic.
struct Ball {
  int radius = 0;
  std::vector<Element> elements;
  // level_offsets[r] is the index of the first element of length r;
  // level_offsets[radius + 1] == elements.size().
  std::vector<std::size_t> level_offsets;

  std::size_t size() const noexcept { return elements.size(); }

  /// Elements of length exactly r.
  std::pair<std::size_t, std::size_t> level(int r) const {
    return {level_offsets[r], level_offsets[r + 1]};
  }
};

inline Ball ball(const GroupSpec& g, int radius,
                 std::size_t cap = kDefaultElementCap) {
  if (radius < 0) throw ValidationError("ball radius must be >= 0");
  Ball out;
  out.radius = radius;
  out.elements.push_back(identity(g));
  out.level_offsets = {0, 1};

  std::unordered_set<Element, ElementHash> seen;
  seen.insert(out.elements[0]);

  std::size_t level_begin = 0;
  for (int r = 1; r <= radius; ++r) {
    const std::size_t level_end = out.elements.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      // Copy: push_back below may reallocate the vector.
      const Element cur = out.elements[i];
      for (const auto& s : g.generating_set) {
        Element next = multiply(g, cur, s);
        if (seen.insert(next).second) {
          if (out.elements.size() >= cap) {
            throw CapExceeded(cap, "ball enumeration for '" + g.name + "'");
          }
          out.elements.push_back(std::move(next));
        }
      }
    }
    level_begin = level_end;
    out.level_offsets.push_back(out.elements.size());
    // Group exhausted before reaching the radius (finite case): remaining
    // levels are empty.
    if (out.elements.size() == level_begin) break;
  }
  while (static_cast<int>(out.level_offsets.size()) < radius + 2) {
    out.level_offsets.push_back(out.elements.size());
  }
  return out;
}

}  // namespace normcoset
