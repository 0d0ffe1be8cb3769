#pragma once

#include <cstdint>
#include <string>
#include <tuple>

#include "normcoset/word.hpp"

namespace normcoset {

/// Element of the index group Z ⋊ Z2, where the Z2 part acts on Z by sign
/// flip: conjugating the translation part n by the flip gives -n. Used both
/// as a generator index set for the rank-|Z ⋊ Z2| free group and as the
/// twisting part of its semidirect extension.
struct TIndex {
  long long n = 0;
  std::uint8_t m = 0;  // 0 or 1

  friend bool operator==(const TIndex&, const TIndex&) = default;
  friend bool operator<(const TIndex& a, const TIndex& b) {
    return std::tie(a.n, a.m) < std::tie(b.n, b.m);
  }
};

inline TIndex t_mul(const TIndex& a, const TIndex& b) {
  long long flipped = (a.m != 0) ? -b.n : b.n;
  return TIndex{a.n + flipped, static_cast<std::uint8_t>(a.m ^ b.m)};
}

inline TIndex t_inverse(const TIndex& a) {
  // (n, m)^-1 = (-(-1)^m n, m): the flip is its own inverse.
  return TIndex{(a.m != 0) ? a.n : -a.n, a.m};
}

inline bool t_is_identity(const TIndex& a) { return a.n == 0 && a.m == 0; }

inline std::string to_string(const TIndex& a) {
  return "(" + std::to_string(a.n) + "," + std::to_string(int(a.m)) + ")";
}

struct TIndexHash {
  std::size_t operator()(const TIndex& t) const noexcept {
    return hash_combine(std::hash<long long>{}(t.n), t.m);
  }
};

}  // namespace normcoset

template <>
struct std::hash<normcoset::TIndex> {
  std::size_t operator()(const normcoset::TIndex& t) const noexcept {
    return normcoset::TIndexHash{}(t);
  }
};
