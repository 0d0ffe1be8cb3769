#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "normcoset/errors.hpp"

namespace normcoset {

/// A finite group given by its full multiplication table over element
/// indices 0..order-1. Tables are validated on construction: identity,
/// two-sided inverses, Latin-square rows/columns, and (for order <= 200)
/// full associativity by brute force.
struct FiniteTable {
  std::uint32_t order = 1;
  std::uint32_t identity = 0;
  std::vector<std::uint32_t> table;    // row-major, order*order
  std::vector<std::uint32_t> inverse;  // per element
  std::vector<std::uint32_t> generators;
  std::vector<std::string> names;

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return table[std::size_t(a) * order + b];
  }
  std::uint32_t inv(std::uint32_t a) const { return inverse[a]; }

  static FiniteTable from_rows(std::vector<std::vector<std::uint32_t>> rows,
                               std::uint32_t identity,
                               std::vector<std::uint32_t> generators = {},
                               std::vector<std::string> names = {});
  static FiniteTable cyclic(std::uint32_t n);
  static FiniteTable direct_product(const FiniteTable& a, const FiniteTable& b);
  static FiniteTable from_permutations(
      std::uint32_t degree, const std::vector<std::vector<std::uint32_t>>& gens);
  static FiniteTable quaternion8();
};

namespace detail {

inline std::string cycle_notation(const std::vector<std::uint32_t>& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::uint32_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += "(";
    std::uint32_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += " ";
      out += std::to_string(j + 1);
      first = false;
      j = p[j];
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

}  // namespace detail

inline FiniteTable FiniteTable::from_rows(
    std::vector<std::vector<std::uint32_t>> rows, std::uint32_t identity,
    std::vector<std::uint32_t> generators, std::vector<std::string> names) {
  FiniteTable t;
  t.order = static_cast<std::uint32_t>(rows.size());
  if (t.order == 0) throw ValidationError("empty multiplication table");
  t.identity = identity;
  if (identity >= t.order) throw ValidationError("identity index out of range");
  t.table.reserve(std::size_t(t.order) * t.order);
  for (const auto& row : rows) {
    if (row.size() != t.order) {
      throw ValidationError("multiplication table is not square");
    }
    for (auto v : row) {
      if (v >= t.order) throw ValidationError("table entry out of range");
      t.table.push_back(v);
    }
  }

  // Identity and Latin-square checks.
  std::vector<bool> hit(t.order);
  for (std::uint32_t a = 0; a < t.order; ++a) {
    if (t.mul(identity, a) != a || t.mul(a, identity) != a) {
      throw ValidationError("identity row/column mismatch");
    }
    std::fill(hit.begin(), hit.end(), false);
    for (std::uint32_t b = 0; b < t.order; ++b) {
      if (hit[t.mul(a, b)]) throw ValidationError("repeated entry in row");
      hit[t.mul(a, b)] = true;
    }
    std::fill(hit.begin(), hit.end(), false);
    for (std::uint32_t b = 0; b < t.order; ++b) {
      if (hit[t.mul(b, a)]) throw ValidationError("repeated entry in column");
      hit[t.mul(b, a)] = true;
    }
  }

  t.inverse.assign(t.order, 0);
  for (std::uint32_t a = 0; a < t.order; ++a) {
    bool found = false;
    for (std::uint32_t b = 0; b < t.order; ++b) {
      if (t.mul(a, b) == identity && t.mul(b, a) == identity) {
        t.inverse[a] = b;
        found = true;
        break;
      }
    }
    if (!found) throw ValidationError("element without two-sided inverse");
  }

  if (t.order <= 200) {
    for (std::uint32_t a = 0; a < t.order; ++a) {
      for (std::uint32_t b = 0; b < t.order; ++b) {
        for (std::uint32_t c = 0; c < t.order; ++c) {
          if (t.mul(t.mul(a, b), c) != t.mul(a, t.mul(b, c))) {
            throw ValidationError("associativity failure in table");
          }
        }
      }
    }
  }

  t.generators = std::move(generators);
  if (t.generators.empty()) {
    for (std::uint32_t a = 0; a < t.order; ++a) t.generators.push_back(a);
  }
  for (auto g : t.generators) {
    if (g >= t.order) throw ValidationError("generator index out of range");
  }
  // The declared generators must reach every element.
  {
    std::vector<bool> reached(t.order, false);
    std::vector<std::uint32_t> frontier{t.identity};
    reached[t.identity] = true;
    while (!frontier.empty()) {
      std::vector<std::uint32_t> next;
      for (auto x : frontier) {
        for (auto g : t.generators) {
          for (std::uint32_t y : {t.mul(x, g), t.mul(x, t.inverse[g])}) {
            if (!reached[y]) {
              reached[y] = true;
              next.push_back(y);
            }
          }
        }
      }
      frontier = std::move(next);
    }
    if (std::find(reached.begin(), reached.end(), false) != reached.end()) {
      throw ValidationError("generating set does not generate the group");
    }
  }

  t.names = std::move(names);
  if (t.names.empty()) {
    for (std::uint32_t a = 0; a < t.order; ++a) {
      t.names.push_back(a == identity ? "e" : "x" + std::to_string(a));
    }
  } else if (t.names.size() != t.order) {
    throw ValidationError("names list does not match group order");
  }
  return t;
}

inline FiniteTable FiniteTable::cyclic(std::uint32_t n) {
  std::vector<std::vector<std::uint32_t>> rows(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) rows[i][j] = (i + j) % n;
  }
  std::vector<std::string> names;
  for (std::uint32_t i = 0; i < n; ++i) {
    names.push_back(i == 0 ? "e" : (i == 1 ? "g" : "g^" + std::to_string(i)));
  }
  std::vector<std::uint32_t> gens;
  if (n > 1) gens.push_back(1);
  return from_rows(std::move(rows), 0, std::move(gens), std::move(names));
}

inline FiniteTable FiniteTable::direct_product(const FiniteTable& a,
                                               const FiniteTable& b) {
  const std::uint32_t n = a.order * b.order;
  std::vector<std::vector<std::uint32_t>> rows(n, std::vector<std::uint32_t>(n));
  auto idx = [&](std::uint32_t x, std::uint32_t y) { return x * b.order + y; };
  for (std::uint32_t x1 = 0; x1 < a.order; ++x1) {
    for (std::uint32_t y1 = 0; y1 < b.order; ++y1) {
      for (std::uint32_t x2 = 0; x2 < a.order; ++x2) {
        for (std::uint32_t y2 = 0; y2 < b.order; ++y2) {
          rows[idx(x1, y1)][idx(x2, y2)] = idx(a.mul(x1, x2), b.mul(y1, y2));
        }
      }
    }
  }
  std::vector<std::string> names(n);
  for (std::uint32_t x = 0; x < a.order; ++x) {
    for (std::uint32_t y = 0; y < b.order; ++y) {
      names[idx(x, y)] = "(" + a.names[x] + "," + b.names[y] + ")";
    }
  }
  std::vector<std::uint32_t> gens;
  for (auto g : a.generators) gens.push_back(idx(g, b.identity));
  for (auto g : b.generators) gens.push_back(idx(a.identity, g));
  return from_rows(std::move(rows), idx(a.identity, b.identity),
                   std::move(gens), std::move(names));
}

inline FiniteTable FiniteTable::from_permutations(
    std::uint32_t degree, const std::vector<std::vector<std::uint32_t>>& gens) {
  using Perm = std::vector<std::uint32_t>;
  Perm id(degree);
  for (std::uint32_t i = 0; i < degree; ++i) id[i] = i;
  auto compose = [](const Perm& p, const Perm& q) {
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
    return r;
  };
  auto invert = [](const Perm& p) {
    Perm r(p.size());
    for (std::uint32_t i = 0; i < p.size(); ++i) r[p[i]] = i;
    return r;
  };

  for (const auto& g : gens) {
    if (g.size() != degree) throw ValidationError("permutation degree mismatch");
    Perm sorted = g;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != id) throw ValidationError("generator is not a permutation");
  }

  // BFS closure from the identity; discovery order fixes element indexing.
  std::vector<Perm> elements{id};
  std::map<Perm, std::uint32_t> index{{id, 0}};
  std::vector<Perm> letters;
  for (const auto& g : gens) {
    letters.push_back(g);
    letters.push_back(invert(g));
  }
  for (std::size_t head = 0; head < elements.size(); ++head) {
    Perm cur = elements[head];
    for (const auto& g : letters) {
      Perm next = compose(cur, g);
      if (index.emplace(next, elements.size()).second) {
        elements.push_back(std::move(next));
        if (elements.size() > 100000) {
          throw ValidationError("permutation closure too large");
        }
      }
    }
  }

  const auto n = static_cast<std::uint32_t>(elements.size());
  std::vector<std::vector<std::uint32_t>> rows(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      rows[a][b] = index.at(compose(elements[a], elements[b]));
    }
  }
  std::vector<std::string> names;
  names.reserve(n);
  for (const auto& p : elements) names.push_back(detail::cycle_notation(p));
  std::vector<std::uint32_t> gen_idx;
  for (const auto& g : gens) gen_idx.push_back(index.at(g));
  return from_rows(std::move(rows), 0, std::move(gen_idx), std::move(names));
}

inline FiniteTable FiniteTable::quaternion8() {
  // Elements encoded as (axis, sign): 1,-1,i,-i,j,-j,k,-k.
  auto code = [](std::uint32_t axis, std::uint32_t sign) {
    return axis * 2 + sign;
  };
  // axis multiplication table for {1,i,j,k} with result sign.
  static const std::uint32_t axis_mul[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const std::uint32_t sign_mul[4][4] = {
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<std::uint32_t>> rows(8, std::vector<std::uint32_t>(8));
  for (std::uint32_t a = 0; a < 4; ++a) {
    for (std::uint32_t sa = 0; sa < 2; ++sa) {
      for (std::uint32_t b = 0; b < 4; ++b) {
        for (std::uint32_t sb = 0; sb < 2; ++sb) {
          std::uint32_t axis = axis_mul[a][b];
          std::uint32_t sign = (sa ^ sb ^ sign_mul[a][b]);
          rows[code(a, sa)][code(b, sb)] = code(axis, sign);
        }
      }
    }
  }
  std::vector<std::string> names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  return from_rows(std::move(rows), 0, {code(1, 0), code(2, 0)},
                   std::move(names));
}

/// Uniform index-arithmetic view of a finite group: either a materialized
/// table or a direct product of two views. Products stay unmaterialized, so
/// order-3600 direct products cost nothing to build.
class FiniteView {
 public:
  explicit FiniteView(std::shared_ptr<const FiniteTable> table)
      : table_(std::move(table)), order_(table_->order) {}

  FiniteView(FiniteView left, FiniteView right)
      : left_(std::make_shared<FiniteView>(std::move(left))),
        right_(std::make_shared<FiniteView>(std::move(right))),
        order_(left_->order() * right_->order()) {}

  std::uint64_t order() const noexcept { return order_; }

  std::uint32_t identity() const {
    if (table_) return table_->identity;
    return pack(left_->identity(), right_->identity());
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (table_) return table_->mul(a, b);
    const auto r = static_cast<std::uint32_t>(right_->order());
    return pack(left_->mul(a / r, b / r), right_->mul(a % r, b % r));
  }

  std::uint32_t inv(std::uint32_t a) const {
    if (table_) return table_->inv(a);
    const auto r = static_cast<std::uint32_t>(right_->order());
    return pack(left_->inv(a / r), right_->inv(a % r));
  }

  std::vector<std::uint32_t> generators() const {
    if (table_) return table_->generators;
    std::vector<std::uint32_t> out;
    for (auto g : left_->generators()) out.push_back(pack(g, right_->identity()));
    for (auto g : right_->generators()) out.push_back(pack(left_->identity(), g));
    return out;
  }

  std::string name(std::uint32_t a) const {
    if (table_) return table_->names[a];
    const auto r = static_cast<std::uint32_t>(right_->order());
    return "(" + left_->name(a / r) + "," + right_->name(a % r) + ")";
  }

 private:
  std::uint32_t pack(std::uint32_t x, std::uint32_t y) const {
    return x * static_cast<std::uint32_t>(right_->order()) + y;
  }

  std::shared_ptr<const FiniteTable> table_;
  std::shared_ptr<const FiniteView> left_, right_;
  std::uint64_t order_ = 0;
};

/// Closure of a set of generator indices inside a finite group. Returns the
/// sorted member list of the generated subgroup.
inline std::vector<std::uint32_t> subgroup_closure(
    const FiniteView& g, const std::vector<std::uint32_t>& gens) {
  std::vector<bool> member(g.order(), false);
  std::vector<std::uint32_t> frontier{g.identity()};
  member[g.identity()] = true;
  while (!frontier.empty()) {
    std::vector<std::uint32_t> next;
    for (auto x : frontier) {
      for (auto s : gens) {
        for (std::uint32_t y : {g.mul(x, s), g.mul(x, g.inv(s))}) {
          if (!member[y]) {
            member[y] = true;
            next.push_back(y);
          }
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    if (member[x]) out.push_back(x);
  }
  return out;
}

}  // namespace normcoset
