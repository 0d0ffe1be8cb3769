#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <unordered_set>
#include <variant>
#include <vector>

#include "normcoset/element.hpp"
#include "normcoset/errors.hpp"
#include "normcoset/group.hpp"

namespace normcoset {

struct SubgroupOracle;

/// Subgroup of a finite group given by its full (sorted) member index set.
struct FiniteSubgroupDesc {
  std::vector<std::uint32_t> members;  // sorted, contains the identity
};

/// Free factor <S> of a free group: the subgroup of words whose letters all
/// lie in the id subset S.
struct FreeFactorDesc {
  std::vector<long long> gens;  // sorted generator ids
};

/// H_n inside the shift extension: words with every generator index >= n and
/// zero shift part.
struct HnDesc {
  long long n = 0;
};

/// The subgroup generated by the full free part and the flip inside the
/// Z ⋊ Z2 extension: elements whose twist has zero translation part.
struct Ex74HDesc {};

/// Kernel of the homomorphism <S> -> Z_m sending one designated letter to 1
/// and every other letter of S to 0. A finite-index subgroup of the free
/// factor <S> with explicit Schreier generators; membership is an exponent
/// count. Index m, rank m(|S|-1)+1.
struct ExponentKernelDesc {
  std::vector<long long> letters;  // sorted ids of the ambient free factor
  long long target = 0;            // the designated letter
  long long modulus = 2;
};

struct ProductSubgroupDesc {
  std::shared_ptr<const SubgroupOracle> left;
  std::shared_ptr<const SubgroupOracle> right;
};

/// A subgroup of a parent group carrying an exact membership decision
/// procedure and a generator description (explicit list, or a symbolic
/// family such as {g_i : i >= n}).
struct SubgroupOracle {
  std::string name;
  std::shared_ptr<const GroupSpec> parent;
  std::variant<FiniteSubgroupDesc, FreeFactorDesc, HnDesc, Ex74HDesc,
               ExponentKernelDesc, ProductSubgroupDesc>
      desc;
};

namespace detail {

inline bool word_letters_in(const Word<long long>& w,
                            const std::vector<long long>& sorted_ids) {
  for (const auto& l : w.letters) {
    if (!std::binary_search(sorted_ids.begin(), sorted_ids.end(), l.id)) {
      return false;
    }
  }
  return true;
}

inline bool word_indices_at_least(const Word<long long>& w, long long n) {
  for (const auto& l : w.letters) {
    if (l.id < n) return false;
  }
  return true;
}

}  // namespace detail

/// Exact membership decision. Never returns "unknown".
inline bool membership(const SubgroupOracle& h, const Element& g) {
  const GroupSpec& parent = *h.parent;
  if (const auto* d = std::get_if<FiniteSubgroupDesc>(&h.desc)) {
    const auto* x = std::get_if<FiniteElement>(&g.v);
    if (!x) detail::family_mismatch(parent);
    return std::binary_search(d->members.begin(), d->members.end(), x->index);
  }
  if (const auto* d = std::get_if<FreeFactorDesc>(&h.desc)) {
    const auto* x = std::get_if<FreeElement>(&g.v);
    if (!x) detail::family_mismatch(parent);
    return detail::word_letters_in(x->word, d->gens);
  }
  if (const auto* d = std::get_if<HnDesc>(&h.desc)) {
    const auto* x = std::get_if<FreeByZElement>(&g.v);
    if (!x) detail::family_mismatch(parent);
    return x->shift == 0 && detail::word_indices_at_least(x->word, d->n);
  }
  if (std::holds_alternative<Ex74HDesc>(h.desc)) {
    const auto* x = std::get_if<Ex74Element>(&g.v);
    if (!x) detail::family_mismatch(parent);
    return x->twist.n == 0;
  }
  if (const auto* d = std::get_if<ExponentKernelDesc>(&h.desc)) {
    const auto* x = std::get_if<FreeElement>(&g.v);
    if (!x) detail::family_mismatch(parent);
    if (!detail::word_letters_in(x->word, d->letters)) return false;
    long long e = exponent_sum(x->word, d->target);
    return ((e % d->modulus) + d->modulus) % d->modulus == 0;
  }
  const auto& d = std::get<ProductSubgroupDesc>(h.desc);
  const auto* x = std::get_if<ProductElement>(&g.v);
  if (!x) detail::family_mismatch(parent);
  return membership(*d.left, *x->left) && membership(*d.right, *x->right);
}

/// Explicit generators when the description has finitely many; throws
/// Unsupported for the symbolically indexed families.
inline std::vector<Element> explicit_generators(const SubgroupOracle& h) {
  if (const auto* d = std::get_if<FiniteSubgroupDesc>(&h.desc)) {
    std::vector<Element> out;
    for (auto m : d->members) out.push_back(finite_element(m));
    return out;
  }
  if (const auto* d = std::get_if<FreeFactorDesc>(&h.desc)) {
    std::vector<Element> out;
    for (auto id : d->gens) {
      out.push_back(free_element(reduce_word<long long>({{id, 1}})));
    }
    return out;
  }
  if (const auto* d = std::get_if<ExponentKernelDesc>(&h.desc)) {
    // Schreier generators for the transversal {t^0, ..., t^{m-1}} of the
    // kernel in <S>, t the designated letter: t^m and t^j s t^-j for the
    // other letters s and 0 <= j < m.
    std::vector<Element> out;
    out.push_back(free_element(reduce_word<long long>({{d->target, d->modulus}})));
    for (auto id : d->letters) {
      if (id == d->target) continue;
      for (long long j = 0; j < d->modulus; ++j) {
        out.push_back(free_element(reduce_word<long long>(
            {{d->target, j}, {id, 1}, {d->target, -j}})));
      }
    }
    return out;
  }
  if (const auto* d = std::get_if<ProductSubgroupDesc>(&h.desc)) {
    const auto& f = std::get<ProductFamily>(h.parent->family);
    std::vector<Element> out;
    Element el = identity(*f.left);
    Element er = identity(*f.right);
    for (const auto& a : explicit_generators(*d->left)) {
      out.push_back(product_element(a, er));
    }
    for (const auto& b : explicit_generators(*d->right)) {
      out.push_back(product_element(el, b));
    }
    return out;
  }
  throw Unsupported("subgroup '" + h.name +
                    "' has a symbolically indexed generator description");
}

/// Inverse-closed single-generator alphabet for BFS over the subgroup. For
/// the symbolic families this is restricted to the parent's index window,
/// matching the alphabet that ball enumeration over the parent uses.
inline std::vector<Element> subgroup_letters(const SubgroupOracle& h) {
  const GroupSpec& parent = *h.parent;
  if (const auto* d = std::get_if<HnDesc>(&h.desc)) {
    const auto& fam = std::get<FreeByZFamily>(parent.family);
    std::vector<Element> out;
    for (long long i = std::max(d->n, fam.window_lo); i <= fam.window_hi; ++i) {
      out.push_back(free_by_z_element(reduce_word<long long>({{i, 1}}), 0));
      out.push_back(free_by_z_element(reduce_word<long long>({{i, -1}}), 0));
    }
    return out;
  }
  if (std::holds_alternative<Ex74HDesc>(h.desc)) {
    const auto& fam = std::get<Ex74Family>(parent.family);
    std::vector<Element> out;
    for (long long i = fam.window_lo; i <= fam.window_hi; ++i) {
      for (std::uint8_t m : {std::uint8_t{0}, std::uint8_t{1}}) {
        out.push_back(
            ex74_element(reduce_word<TIndex>({{TIndex{i, m}, 1}}), TIndex{}));
        out.push_back(
            ex74_element(reduce_word<TIndex>({{TIndex{i, m}, -1}}), TIndex{}));
      }
    }
    out.push_back(ex74_element({}, TIndex{0, 1}));
    return out;
  }
  if (const auto* d = std::get_if<ProductSubgroupDesc>(&h.desc)) {
    const auto& f = std::get<ProductFamily>(parent.family);
    std::vector<Element> out;
    Element el = identity(*f.left);
    Element er = identity(*f.right);
    for (const auto& a : subgroup_letters(*d->left)) {
      out.push_back(product_element(a, er));
    }
    for (const auto& b : subgroup_letters(*d->right)) {
      out.push_back(product_element(el, b));
    }
    return out;
  }
  std::vector<Element> out;
  for (const auto& gen : explicit_generators(h)) {
    if (is_identity(parent, gen)) continue;
    out.push_back(gen);
    Element inv = inverse(parent, gen);
    if (!(inv == gen)) out.push_back(std::move(inv));
  }
  return out;
}

/// BFS over the subgroup itself: all products of at most `radius` letters
/// from the subgroup alphabet. For a free factor this is exactly the words
/// over its generators of length <= radius.
inline std::vector<Element> subgroup_ball(const SubgroupOracle& h, int radius,
                                          std::size_t cap) {
  const GroupSpec& parent = *h.parent;
  std::vector<Element> letters = subgroup_letters(h);
  std::vector<Element> out{identity(parent)};
  std::unordered_set<Element, ElementHash> seen{out[0]};
  std::size_t level_begin = 0;
  for (int r = 1; r <= radius; ++r) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      const Element cur = out[i];
      for (const auto& l : letters) {
        Element next = multiply(parent, cur, l);
        if (seen.insert(next).second) {
          if (out.size() >= cap) {
            throw CapExceeded(cap, "subgroup enumeration for '" + h.name + "'");
          }
          out.push_back(std::move(next));
        }
      }
    }
    level_begin = level_end;
    if (out.size() == level_begin) break;
  }
  return out;
}

/// Factories.

inline SubgroupOracle make_finite_subgroup(
    std::string name, std::shared_ptr<const GroupSpec> parent,
    std::vector<std::uint32_t> members) {
  const auto& table = parent->table();
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty() ||
      !std::binary_search(members.begin(), members.end(), table.identity)) {
    throw ValidationError("subgroup must contain the identity");
  }
  for (auto a : members) {
    if (a >= table.order) throw ValidationError("member index out of range");
    if (!std::binary_search(members.begin(), members.end(), table.inv(a))) {
      throw ValidationError("member set not closed under inverse");
    }
    for (auto b : members) {
      if (!std::binary_search(members.begin(), members.end(), table.mul(a, b))) {
        throw ValidationError("member set not closed under product");
      }
    }
  }
  return SubgroupOracle{std::move(name), std::move(parent),
                        FiniteSubgroupDesc{std::move(members)}};
}

inline SubgroupOracle make_free_factor(std::string name,
                                       std::shared_ptr<const GroupSpec> parent,
                                       std::vector<long long> gens) {
  const auto& fam = std::get<FreeFamily>(parent->family);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (auto id : gens) {
    if (id < 0 || id >= fam.rank) {
      throw ValidationError("free factor generator outside the ambient rank");
    }
  }
  return SubgroupOracle{std::move(name), std::move(parent),
                        FreeFactorDesc{std::move(gens)}};
}

inline SubgroupOracle make_hn_subgroup(std::shared_ptr<const GroupSpec> parent,
                                       long long n) {
  if (!std::holds_alternative<FreeByZFamily>(parent->family)) {
    throw Unsupported("H_n lives inside the shift extension family");
  }
  return SubgroupOracle{"H" + std::to_string(n), std::move(parent), HnDesc{n}};
}

inline SubgroupOracle make_ex74_subgroup(
    std::shared_ptr<const GroupSpec> parent) {
  if (!std::holds_alternative<Ex74Family>(parent->family)) {
    throw Unsupported("this subgroup lives inside the Z ⋊ Z2 extension family");
  }
  return SubgroupOracle{"H", std::move(parent), Ex74HDesc{}};
}

inline SubgroupOracle make_exponent_kernel(
    std::string name, std::shared_ptr<const GroupSpec> parent,
    std::vector<long long> letters, long long target, long long modulus) {
  const auto& fam = std::get<FreeFamily>(parent->family);
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
  for (auto id : letters) {
    if (id < 0 || id >= fam.rank) {
      throw ValidationError("kernel letter outside the ambient rank");
    }
  }
  if (!std::binary_search(letters.begin(), letters.end(), target)) {
    throw ValidationError("kernel target letter must be one of the letters");
  }
  if (modulus < 1) throw ValidationError("kernel modulus must be positive");
  return SubgroupOracle{
      std::move(name), std::move(parent),
      ExponentKernelDesc{std::move(letters), target, modulus}};
}

inline SubgroupOracle make_product_subgroup(const SubgroupOracle& left,
                                            const SubgroupOracle& right,
                                            std::shared_ptr<const GroupSpec> parent) {
  if (!std::holds_alternative<ProductFamily>(parent->family)) {
    throw Unsupported("product subgroup requires a product parent");
  }
  return SubgroupOracle{
      left.name + "x" + right.name, std::move(parent),
      ProductSubgroupDesc{std::make_shared<const SubgroupOracle>(left),
                          std::make_shared<const SubgroupOracle>(right)}};
}

}  // namespace normcoset
