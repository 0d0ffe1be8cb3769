#pragma once

#include <cstdint>
#include <memory>
#include <variant>

#include "normcoset/tindex.hpp"
#include "normcoset/word.hpp"

namespace normcoset {

struct Element;

/// Element of a finite group given by its index in the multiplication table.
struct FiniteElement {
  std::uint32_t index = 0;
  friend bool operator==(const FiniteElement&, const FiniteElement&) = default;
};

/// Reduced word over integer generator ids.
struct FreeElement {
  Word<long long> word;
  friend bool operator==(const FreeElement&, const FreeElement&) = default;
};

/// Element w·phi^k of the extension of an infinite-rank free group (with
/// generators g_i, i in Z) by the index shift phi: g_i -> g_{i+1}.
struct FreeByZElement {
  Word<long long> word;
  long long shift = 0;
  friend bool operator==(const FreeByZElement&, const FreeByZElement&) = default;
};

/// Element w·t of the extension of the free group on generators g_u, u in
/// Z ⋊ Z2, by the left-translation action of Z ⋊ Z2 on its own index set.
struct Ex74Element {
  Word<TIndex> word;
  TIndex twist;
  friend bool operator==(const Ex74Element&, const Ex74Element&) = default;
};

/// Pair of elements of a direct product. Components are immutable and shared.
struct ProductElement {
  std::shared_ptr<const Element> left;
  std::shared_ptr<const Element> right;
  friend bool operator==(const ProductElement& a, const ProductElement& b);
};

/// Canonical normal form of a group element. Two Elements are equal as group
/// elements iff their representations compare equal.
struct Element {
  std::variant<FiniteElement, FreeElement, FreeByZElement, Ex74Element,
               ProductElement>
      v;

  friend bool operator==(const Element&, const Element&) = default;
};

inline bool operator==(const ProductElement& a, const ProductElement& b) {
  return *a.left == *b.left && *a.right == *b.right;
}

inline Element finite_element(std::uint32_t index) {
  return Element{FiniteElement{index}};
}

inline Element free_element(Word<long long> w) {
  return Element{FreeElement{std::move(w)}};
}

inline Element free_by_z_element(Word<long long> w, long long shift) {
  return Element{FreeByZElement{std::move(w), shift}};
}

inline Element ex74_element(Word<TIndex> w, TIndex twist) {
  return Element{Ex74Element{std::move(w), twist}};
}

inline Element product_element(Element left, Element right) {
  return Element{ProductElement{
      std::make_shared<const Element>(std::move(left)),
      std::make_shared<const Element>(std::move(right))}};
}

std::size_t element_hash(const Element& e);

inline std::size_t element_hash(const Element& e) {
  std::size_t h = hash_combine(0xabcd17, e.v.index());
  struct Visitor {
    std::size_t& h;
    void operator()(const FiniteElement& x) const {
      h = hash_combine(h, x.index);
    }
    void operator()(const FreeElement& x) const {
      h = hash_combine(h, word_hash(x.word));
    }
    void operator()(const FreeByZElement& x) const {
      h = hash_combine(h, word_hash(x.word));
      h = hash_combine(h, std::hash<long long>{}(x.shift));
    }
    void operator()(const Ex74Element& x) const {
      h = hash_combine(h, word_hash(x.word, TIndexHash{}));
      h = hash_combine(h, TIndexHash{}(x.twist));
    }
    void operator()(const ProductElement& x) const {
      h = hash_combine(h, element_hash(*x.left));
      h = hash_combine(h, element_hash(*x.right));
    }
  };
  std::visit(Visitor{h}, e.v);
  return h;
}

struct ElementHash {
  std::size_t operator()(const Element& e) const { return element_hash(e); }
};

}  // namespace normcoset
