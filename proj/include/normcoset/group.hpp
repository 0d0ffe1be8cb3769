#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "normcoset/element.hpp"
#include "normcoset/errors.hpp"
#include "normcoset/finite.hpp"

namespace normcoset {

struct GroupSpec;

struct FiniteFamily {
  std::shared_ptr<const FiniteTable> table;
};

/// Free group of finite rank with generator ids 0..rank-1.
struct FreeFamily {
  int rank = 0;
};

/// Extension of the free group on {g_i : i in Z} by the shift automorphism
/// phi(g_i) = g_{i+1}. Elements are written w·phi^k; multiplication follows
/// (v phi^n)(w phi^m) = (v phi^n(w)) phi^{n+m}. The window bounds which
/// generator indices appear in the ball-enumeration alphabet; elements
/// themselves may use arbitrary indices.
struct FreeByZFamily {
  long long window_lo = -2;
  long long window_hi = 2;
};

/// Extension of the free group on {g_u : u in Z ⋊ Z2} by Z ⋊ Z2 acting on
/// indices by left translation, where Z2 acts on Z by sign flip. The window
/// bounds the Z-part of the indices used in the ball alphabet.
struct Ex74Family {
  long long window_lo = -2;
  long long window_hi = 2;
};

struct ProductFamily {
  std::shared_ptr<const GroupSpec> left;
  std::shared_ptr<const GroupSpec> right;
};

/// Description of a supported group family together with the ordered,
/// inverse-closed generator alphabet used for ball enumeration.
struct GroupSpec {
  std::string name;
  std::variant<FiniteFamily, FreeFamily, FreeByZFamily, Ex74Family,
               ProductFamily>
      family;
  std::vector<Element> generating_set;

  bool is_finite() const { return std::holds_alternative<FiniteFamily>(family); }
  const FiniteTable& table() const {
    return *std::get<FiniteFamily>(family).table;
  }
};

Element multiply(const GroupSpec& g, const Element& a, const Element& b);
Element inverse(const GroupSpec& g, const Element& a);

namespace detail {

[[noreturn]] inline void family_mismatch(const GroupSpec& g) {
  throw FamilyMismatch("element does not belong to group '" + g.name + "'");
}

inline Word<long long> shift_word(const Word<long long>& w, long long k) {
  if (k == 0) return w;
  return word_map_ids(w, [k](long long i) { return i + k; });
}

inline Word<TIndex> relabel_word(const Word<TIndex>& w, const TIndex& s) {
  if (t_is_identity(s)) return w;
  return word_map_ids(w, [&s](const TIndex& u) { return t_mul(s, u); });
}

}  // namespace detail

inline Element identity(const GroupSpec& g) {
  struct Visitor {
    Element operator()(const FiniteFamily& f) const {
      return finite_element(f.table->identity);
    }
    Element operator()(const FreeFamily&) const { return free_element({}); }
    Element operator()(const FreeByZFamily&) const {
      return free_by_z_element({}, 0);
    }
    Element operator()(const Ex74Family&) const {
      return ex74_element({}, TIndex{});
    }
    Element operator()(const ProductFamily& f) const {
      return product_element(identity(*f.left), identity(*f.right));
    }
  };
  return std::visit(Visitor{}, g.family);
}

inline bool is_identity(const GroupSpec& g, const Element& e) {
  return e == identity(g);
}

inline Element multiply(const GroupSpec& g, const Element& a, const Element& b) {
  if (const auto* f = std::get_if<FiniteFamily>(&g.family)) {
    const auto* x = std::get_if<FiniteElement>(&a.v);
    const auto* y = std::get_if<FiniteElement>(&b.v);
    if (!x || !y || x->index >= f->table->order || y->index >= f->table->order) {
      detail::family_mismatch(g);
    }
    return finite_element(f->table->mul(x->index, y->index));
  }
  if (std::holds_alternative<FreeFamily>(g.family)) {
    const auto* x = std::get_if<FreeElement>(&a.v);
    const auto* y = std::get_if<FreeElement>(&b.v);
    if (!x || !y) detail::family_mismatch(g);
    return free_element(word_mul(x->word, y->word));
  }
  if (std::holds_alternative<FreeByZFamily>(g.family)) {
    const auto* x = std::get_if<FreeByZElement>(&a.v);
    const auto* y = std::get_if<FreeByZElement>(&b.v);
    if (!x || !y) detail::family_mismatch(g);
    return free_by_z_element(
        word_mul(x->word, detail::shift_word(y->word, x->shift)),
        x->shift + y->shift);
  }
  if (std::holds_alternative<Ex74Family>(g.family)) {
    const auto* x = std::get_if<Ex74Element>(&a.v);
    const auto* y = std::get_if<Ex74Element>(&b.v);
    if (!x || !y) detail::family_mismatch(g);
    return ex74_element(
        word_mul(x->word, detail::relabel_word(y->word, x->twist)),
        t_mul(x->twist, y->twist));
  }
  const auto& f = std::get<ProductFamily>(g.family);
  const auto* x = std::get_if<ProductElement>(&a.v);
  const auto* y = std::get_if<ProductElement>(&b.v);
  if (!x || !y) detail::family_mismatch(g);
  return product_element(multiply(*f.left, *x->left, *y->left),
                         multiply(*f.right, *x->right, *y->right));
}

inline Element inverse(const GroupSpec& g, const Element& a) {
  if (const auto* f = std::get_if<FiniteFamily>(&g.family)) {
    const auto* x = std::get_if<FiniteElement>(&a.v);
    if (!x || x->index >= f->table->order) detail::family_mismatch(g);
    return finite_element(f->table->inv(x->index));
  }
  if (std::holds_alternative<FreeFamily>(g.family)) {
    const auto* x = std::get_if<FreeElement>(&a.v);
    if (!x) detail::family_mismatch(g);
    return free_element(word_inverse(x->word));
  }
  if (std::holds_alternative<FreeByZFamily>(g.family)) {
    const auto* x = std::get_if<FreeByZElement>(&a.v);
    if (!x) detail::family_mismatch(g);
    // (w phi^k)^-1 = phi^-k(w^-1) phi^-k.
    return free_by_z_element(
        detail::shift_word(word_inverse(x->word), -x->shift), -x->shift);
  }
  if (std::holds_alternative<Ex74Family>(g.family)) {
    const auto* x = std::get_if<Ex74Element>(&a.v);
    if (!x) detail::family_mismatch(g);
    TIndex s_inv = t_inverse(x->twist);
    return ex74_element(detail::relabel_word(word_inverse(x->word), s_inv),
                        s_inv);
  }
  const auto& f = std::get<ProductFamily>(g.family);
  const auto* x = std::get_if<ProductElement>(&a.v);
  if (!x) detail::family_mismatch(g);
  return product_element(inverse(*f.left, *x->left),
                         inverse(*f.right, *x->right));
}

/// g x g^-1 in normal form.
inline Element conjugate(const GroupSpec& grp, const Element& g,
                         const Element& x) {
  return multiply(grp, multiply(grp, g, x), inverse(grp, g));
}

/// Rendering helpers. Free-group ids 0..25 print as a..z when the rank
/// allows; other families use explicit g<i> / g(n,m) letters.

namespace detail {

inline std::string free_letter_name(long long id, int rank) {
  if (rank > 0 && rank <= 26 && id >= 0 && id < rank) {
    return std::string(1, static_cast<char>('a' + id));
  }
  return "x" + std::to_string(id);
}

template <class Id, class NameFn>
std::string word_string(const Word<Id>& w, NameFn&& name) {
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += " ";
    out += name(w.letters[i].id);
    if (w.letters[i].exp != 1) out += "^" + std::to_string(w.letters[i].exp);
  }
  return out;
}

}  // namespace detail

inline std::string to_string(const GroupSpec& g, const Element& e) {
  if (const auto* f = std::get_if<FiniteFamily>(&g.family)) {
    const auto* x = std::get_if<FiniteElement>(&e.v);
    if (!x) detail::family_mismatch(g);
    return f->table->names[x->index];
  }
  if (const auto* f = std::get_if<FreeFamily>(&g.family)) {
    const auto* x = std::get_if<FreeElement>(&e.v);
    if (!x) detail::family_mismatch(g);
    return detail::word_string(
        x->word, [&](long long id) { return detail::free_letter_name(id, f->rank); });
  }
  if (std::holds_alternative<FreeByZFamily>(g.family)) {
    const auto* x = std::get_if<FreeByZElement>(&e.v);
    if (!x) detail::family_mismatch(g);
    std::string w = detail::word_string(
        x->word, [](long long id) { return "g" + std::to_string(id); });
    if (x->shift == 0) return w;
    std::string phi =
        x->shift == 1 ? "phi" : "phi^" + std::to_string(x->shift);
    return x->word.empty() ? phi : w + " " + phi;
  }
  if (std::holds_alternative<Ex74Family>(g.family)) {
    const auto* x = std::get_if<Ex74Element>(&e.v);
    if (!x) detail::family_mismatch(g);
    std::string w = detail::word_string(
        x->word, [](const TIndex& t) { return "g" + to_string(t); });
    std::string tw;
    if (x->twist.n != 0) {
      tw += x->twist.n == 1 ? "z" : "z^" + std::to_string(x->twist.n);
    }
    if (x->twist.m != 0) {
      if (!tw.empty()) tw += " ";
      tw += "s";
    }
    if (tw.empty()) return w;
    return x->word.empty() ? tw : w + " " + tw;
  }
  const auto& f = std::get<ProductFamily>(g.family);
  const auto* x = std::get_if<ProductElement>(&e.v);
  if (!x) detail::family_mismatch(g);
  return "(" + to_string(*f.left, *x->left) + ", " +
         to_string(*f.right, *x->right) + ")";
}

/// Factory helpers. Generating sets are stored inverse-closed in a fixed
/// documented order: each generator immediately followed by its inverse
/// (involutions appear once).

namespace detail {

inline void push_with_inverse(const GroupSpec& g, std::vector<Element>& out,
                              const Element& e) {
  out.push_back(e);
  Element inv = inverse(g, e);
  if (!(inv == e)) out.push_back(inv);
}

}  // namespace detail

inline std::shared_ptr<const GroupSpec> make_finite_group(
    std::string name, std::shared_ptr<const FiniteTable> table) {
  auto g = std::make_shared<GroupSpec>();
  g->name = std::move(name);
  g->family = FiniteFamily{table};
  for (auto gen : table->generators) {
    detail::push_with_inverse(*g, g->generating_set, finite_element(gen));
  }
  return g;
}

inline std::shared_ptr<const GroupSpec> make_free_group(std::string name,
                                                        int rank) {
  if (rank < 1) throw ValidationError("free group rank must be positive");
  auto g = std::make_shared<GroupSpec>();
  g->name = std::move(name);
  g->family = FreeFamily{rank};
  for (long long i = 0; i < rank; ++i) {
    detail::push_with_inverse(*g, g->generating_set,
                              free_element(reduce_word<long long>({{i, 1}})));
  }
  return g;
}

inline std::shared_ptr<const GroupSpec> make_free_by_z_group(
    std::string name, long long window_lo, long long window_hi) {
  if (window_lo > window_hi) throw ValidationError("empty index window");
  auto g = std::make_shared<GroupSpec>();
  g->name = std::move(name);
  g->family = FreeByZFamily{window_lo, window_hi};
  for (long long i = window_lo; i <= window_hi; ++i) {
    detail::push_with_inverse(
        *g, g->generating_set,
        free_by_z_element(reduce_word<long long>({{i, 1}}), 0));
  }
  detail::push_with_inverse(*g, g->generating_set, free_by_z_element({}, 1));
  return g;
}

inline std::shared_ptr<const GroupSpec> make_ex74_group(std::string name,
                                                        long long window_lo,
                                                        long long window_hi) {
  if (window_lo > window_hi) throw ValidationError("empty index window");
  auto g = std::make_shared<GroupSpec>();
  g->name = std::move(name);
  g->family = Ex74Family{window_lo, window_hi};
  for (long long i = window_lo; i <= window_hi; ++i) {
    for (std::uint8_t m : {std::uint8_t{0}, std::uint8_t{1}}) {
      detail::push_with_inverse(
          *g, g->generating_set,
          ex74_element(reduce_word<TIndex>({{TIndex{i, m}, 1}}), TIndex{}));
    }
  }
  detail::push_with_inverse(*g, g->generating_set,
                            ex74_element({}, TIndex{1, 0}));
  detail::push_with_inverse(*g, g->generating_set,
                            ex74_element({}, TIndex{0, 1}));
  return g;
}

inline std::shared_ptr<const GroupSpec> make_product_group(
    std::shared_ptr<const GroupSpec> left,
    std::shared_ptr<const GroupSpec> right) {
  auto g = std::make_shared<GroupSpec>();
  g->name = left->name + "x" + right->name;
  Element el = identity(*left);
  Element er = identity(*right);
  g->family = ProductFamily{left, right};
  for (const auto& a : left->generating_set) {
    g->generating_set.push_back(product_element(a, er));
  }
  for (const auto& b : right->generating_set) {
    g->generating_set.push_back(product_element(el, b));
  }
  return g;
}

/// Finite index-arithmetic view of a Finite or Product-of-finite spec.
inline FiniteView finite_view(const GroupSpec& g) {
  if (const auto* f = std::get_if<FiniteFamily>(&g.family)) {
    return FiniteView(f->table);
  }
  if (const auto* f = std::get_if<ProductFamily>(&g.family)) {
    return FiniteView(finite_view(*f->left), finite_view(*f->right));
  }
  throw Unsupported("group '" + g.name + "' is not finite");
}

}  // namespace normcoset
