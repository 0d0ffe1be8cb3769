#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <vector>

namespace normcoset {

/// One syllable of a reduced word: a generator id raised to a nonzero power.
template <class Id>
struct WordLetter {
  Id id{};
  long long exp = 0;

  friend bool operator==(const WordLetter&, const WordLetter&) = default;
};

/// A freely reduced word: adjacent letters have distinct ids, no exponent is
/// zero. Equal words represent equal group elements and vice versa, so
/// operator== is group-element equality.
template <class Id>
struct Word {
  std::vector<WordLetter<Id>> letters;

  bool empty() const noexcept { return letters.empty(); }

  /// Word length counting exponent multiplicity, |a^2 b^-1| = 3.
  long long length() const noexcept {
    long long n = 0;
    for (const auto& l : letters) n += std::llabs(l.exp);
    return n;
  }

  friend bool operator==(const Word&, const Word&) = default;
};

/// Appends id^exp to w, merging and cancelling with the trailing syllable.
/// Because w is reduced, at most one merge is ever needed.
template <class Id>
void append_power(Word<Id>& w, const Id& id, long long exp) {
  if (exp == 0) return;
  if (!w.letters.empty() && w.letters.back().id == id) {
    long long sum = w.letters.back().exp + exp;
    if (sum == 0) {
      w.letters.pop_back();
    } else {
      w.letters.back().exp = sum;
    }
    return;
  }
  w.letters.push_back({id, exp});
}

/// Reduces a raw syllable list to normal form. Idempotent.
template <class Id>
Word<Id> reduce_word(const std::vector<WordLetter<Id>>& raw) {
  Word<Id> w;
  for (const auto& l : raw) append_power(w, l.id, l.exp);
  return w;
}

template <class Id>
Word<Id> word_mul(const Word<Id>& a, const Word<Id>& b) {
  Word<Id> out = a;
  out.letters.reserve(a.letters.size() + b.letters.size());
  for (const auto& l : b.letters) append_power(out, l.id, l.exp);
  return out;
}

template <class Id>
Word<Id> word_inverse(const Word<Id>& a) {
  Word<Id> out;
  out.letters.reserve(a.letters.size());
  for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it) {
    out.letters.push_back({it->id, -it->exp});
  }
  return out;
}

/// Applies f to every generator id. Safe for arbitrary f: the result is
/// re-reduced, so non-injective relabellings still yield a normal form.
template <class Id, class F>
Word<Id> word_map_ids(const Word<Id>& a, F&& f) {
  Word<Id> out;
  out.letters.reserve(a.letters.size());
  for (const auto& l : a.letters) append_power(out, f(l.id), l.exp);
  return out;
}

/// Net exponent of one generator, e.g. a in a b a^-2 gives -1.
template <class Id>
long long exponent_sum(const Word<Id>& a, const Id& id) {
  long long n = 0;
  for (const auto& l : a.letters) {
    if (l.id == id) n += l.exp;
  }
  return n;
}

inline std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

template <class Id, class IdHash = std::hash<Id>>
std::size_t word_hash(const Word<Id>& w, IdHash idh = {}) {
  std::size_t h = 0x51ed2701;
  for (const auto& l : w.letters) {
    h = hash_combine(h, idh(l.id));
    h = hash_combine(h, std::hash<long long>{}(l.exp));
  }
  return h;
}

}  // namespace normcoset
