#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "normcoset/ball.hpp"
#include "normcoset/subgroup.hpp"

namespace normcoset {

/// Canonical label of a left coset gH. Two elements receive the same id iff
/// g1^-1 g2 lies in H. For the supported families the representative is an
/// exact invariant of the coset (not relative to any explored ball): strip
/// the longest H-suffix for free factors, the longest H_{n+k}-suffix for the
/// shift extension, and keep only the translation part for the Z ⋊ Z2
/// extension.
struct LeftCosetId {
  Element representative;

  friend bool operator==(const LeftCosetId&, const LeftCosetId&) = default;
};

struct LeftCosetIdHash {
  std::size_t operator()(const LeftCosetId& id) const {
    return element_hash(id.representative);
  }
};

namespace detail {

template <class Id, class Keep>
Word<Id> strip_suffix(const Word<Id>& w, Keep&& strip_letter) {
  Word<Id> out = w;
  while (!out.letters.empty() && strip_letter(out.letters.back().id)) {
    out.letters.pop_back();
  }
  return out;
}

template <class Id, class Keep>
Word<Id> strip_prefix(const Word<Id>& w, Keep&& strip_letter) {
  std::size_t i = 0;
  while (i < w.letters.size() && strip_letter(w.letters[i].id)) ++i;
  Word<Id> out;
  out.letters.assign(w.letters.begin() + i, w.letters.end());
  return out;
}

}  // namespace detail

inline LeftCosetId left_coset_id(const GroupSpec& g, const SubgroupOracle& h,
                                 const Element& x) {
  if (const auto* d = std::get_if<FiniteSubgroupDesc>(&h.desc)) {
    const auto& e = std::get<FiniteElement>(x.v);
    std::uint32_t best = e.index;
    for (auto m : d->members) {
      best = std::min(best, g.table().mul(e.index, m));
    }
    return LeftCosetId{finite_element(best)};
  }
  if (const auto* d = std::get_if<FreeFactorDesc>(&h.desc)) {
    const auto& e = std::get<FreeElement>(x.v);
    auto in_h = [&](long long id) {
      return std::binary_search(d->gens.begin(), d->gens.end(), id);
    };
    return LeftCosetId{free_element(detail::strip_suffix(e.word, in_h))};
  }
  if (const auto* d = std::get_if<HnDesc>(&h.desc)) {
    const auto& e = std::get<FreeByZElement>(x.v);
    // (w, k) H_n = (w', k) H_n exactly when w' = w u with u in H_{n+k}.
    long long bound = d->n + e.shift;
    return LeftCosetId{free_by_z_element(
        detail::strip_suffix(e.word, [&](long long id) { return id >= bound; }),
        e.shift)};
  }
  if (std::holds_alternative<Ex74HDesc>(h.desc)) {
    const auto& e = std::get<Ex74Element>(x.v);
    // gH absorbs the whole free part and the flip: only the translation
    // part of the twist survives.
    return LeftCosetId{ex74_element({}, TIndex{e.twist.n, 0})};
  }
  if (const auto* d = std::get_if<ProductSubgroupDesc>(&h.desc)) {
    const auto& f = std::get<ProductFamily>(g.family);
    const auto& p = std::get<ProductElement>(x.v);
    return LeftCosetId{product_element(
        left_coset_id(*f.left, *d->left, *p.left).representative,
        left_coset_id(*f.right, *d->right, *p.right).representative)};
  }
  throw Unsupported("left cosets are not supported for subgroup '" + h.name +
                    "'");
}

/// Exact double-coset invariant HgH -> canonical element, where supported.
inline Element double_coset_key(const GroupSpec& g, const SubgroupOracle& h,
                                const Element& x) {
  if (const auto* d = std::get_if<FiniteSubgroupDesc>(&h.desc)) {
    const auto& e = std::get<FiniteElement>(x.v);
    const auto& t = g.table();
    std::uint32_t best = e.index;
    for (auto m1 : d->members) {
      std::uint32_t left = t.mul(m1, e.index);
      for (auto m2 : d->members) {
        best = std::min(best, t.mul(left, m2));
      }
    }
    return finite_element(best);
  }
  if (const auto* d = std::get_if<FreeFactorDesc>(&h.desc)) {
    const auto& e = std::get<FreeElement>(x.v);
    auto in_h = [&](long long id) {
      return std::binary_search(d->gens.begin(), d->gens.end(), id);
    };
    return free_element(
        detail::strip_prefix(detail::strip_suffix(e.word, in_h), in_h));
  }
  if (const auto* d = std::get_if<HnDesc>(&h.desc)) {
    const auto& e = std::get<FreeByZElement>(x.v);
    long long n = d->n;
    long long bound = n + e.shift;
    auto stripped = detail::strip_prefix(
        detail::strip_suffix(e.word,
                             [&](long long id) { return id >= bound; }),
        [&](long long id) { return id >= n; });
    return free_by_z_element(std::move(stripped), e.shift);
  }
  if (std::holds_alternative<Ex74HDesc>(h.desc)) {
    const auto& e = std::get<Ex74Element>(x.v);
    long long n = e.twist.n < 0 ? -e.twist.n : e.twist.n;
    return ex74_element({}, TIndex{n, 0});
  }
  if (const auto* d = std::get_if<ProductSubgroupDesc>(&h.desc)) {
    const auto& f = std::get<ProductFamily>(g.family);
    const auto& p = std::get<ProductElement>(x.v);
    return product_element(double_coset_key(*f.left, *d->left, *p.left),
                           double_coset_key(*f.right, *d->right, *p.right));
  }
  throw Unsupported("double cosets are not supported for subgroup '" + h.name +
                    "'");
}

enum class CosetVerdict { ExactlyN, AtLeast, ApparentlyInfinite };

inline const char* to_string(CosetVerdict v) {
  switch (v) {
    case CosetVerdict::ExactlyN: return "exactly_n";
    case CosetVerdict::AtLeast: return "at_least";
    case CosetVerdict::ApparentlyInfinite: return "apparently_infinite";
  }
  return "?";
}

/// Classification of one double coset HgH as a union of left cosets. A
/// finite count is certified only by a family rule; bounded exploration
/// reports ApparentlyInfinite with its growth evidence, or AtLeast when the
/// evidence is too thin.
struct DoubleCosetReport {
  Element representative;
  std::vector<LeftCosetId> left_cosets_found;
  CosetVerdict verdict = CosetVerdict::AtLeast;
  std::size_t n = 0;  // left-coset count: exact, or the floor found so far
  std::string rule;   // family rule id for ExactlyN verdicts
  std::vector<int> evidence_radii;
  std::vector<std::size_t> evidence_counts;

  std::size_t trace() const { return n; }
};

namespace detail {

/// Growth-based verdict: apparently infinite needs strictly increasing
/// counts over at least three consecutive radii.
inline void growth_verdict(DoubleCosetReport& rep) {
  const auto& c = rep.evidence_counts;
  std::size_t runs = 1;
  for (std::size_t i = 1; i < c.size(); ++i) {
    runs = (c[i] > c[i - 1]) ? runs + 1 : 1;
  }
  rep.n = c.empty() ? 0 : c.back();
  rep.verdict = runs >= 3 ? CosetVerdict::ApparentlyInfinite
                          : CosetVerdict::AtLeast;
}

inline void sort_left_cosets(const GroupSpec& g, std::vector<LeftCosetId>& ids) {
  std::sort(ids.begin(), ids.end(),
            [&](const LeftCosetId& a, const LeftCosetId& b) {
              return to_string(g, a.representative) <
                     to_string(g, b.representative);
            });
}

/// Attaches the exact verdict when a family rule applies to this class;
/// returns false when only growth evidence is available.
inline bool exact_verdict(const SubgroupOracle& h, const Element& rep_element,
                          bool exploration_complete, DoubleCosetReport& rep) {
  if (membership(h, rep_element)) {
    rep.verdict = CosetVerdict::ExactlyN;
    rep.n = 1;
    rep.rule = "subgroup-absorbs";
    return true;
  }
  if (std::holds_alternative<Ex74HDesc>(h.desc)) {
    const auto& e = std::get<Ex74Element>(rep_element.v);
    long long n = e.twist.n;
    if (n != 0) {
      rep.verdict = CosetVerdict::ExactlyN;
      rep.n = 2;
      rep.rule = "sign-extension-pair";
      // The coset pair is exactly {n, -n}.
      for (const auto& id : rep.left_cosets_found) {
        const auto& t = std::get<Ex74Element>(id.representative.v).twist;
        if (t.n != n && t.n != -n) {
          throw ConsistencyError("left coset outside the certified pair");
        }
      }
      return true;
    }
  }
  if (exploration_complete) {
    rep.verdict = CosetVerdict::ExactlyN;
    rep.n = rep.left_cosets_found.size();
    rep.rule = "finite-exhaustive";
    return true;
  }
  if (std::holds_alternative<ProductSubgroupDesc>(h.desc)) {
    // Handled by the caller via component reports.
    return false;
  }
  return false;
}

}  // namespace detail

/// Explores HgH by BFS with single-generator steps h1 g h2 (total step
/// budget = radius across both sides) and buckets what it finds by left
/// coset.
inline DoubleCosetReport double_coset_analyze(const GroupSpec& g,
                                              const SubgroupOracle& h,
                                              const Element& x, int radius,
                                              std::size_t cap = kDefaultElementCap) {
  if (radius < 1) throw ValidationError("double coset radius must be >= 1");
  DoubleCosetReport rep;
  rep.representative = double_coset_key(g, h, x);

  std::vector<Element> letters = subgroup_letters(h);
  std::unordered_set<Element, ElementHash> seen{x};
  std::vector<Element> frontier{x};
  std::unordered_set<LeftCosetId, LeftCosetIdHash> ids;
  ids.insert(left_coset_id(g, h, x));
  rep.evidence_radii.push_back(0);
  rep.evidence_counts.push_back(ids.size());

  bool complete = false;
  for (int d = 1; d <= radius; ++d) {
    std::vector<Element> next;
    for (const auto& cur : frontier) {
      for (const auto& l : letters) {
        for (Element y : {multiply(g, l, cur), multiply(g, cur, l)}) {
          if (seen.insert(y).second) {
            if (seen.size() > cap) {
              throw CapExceeded(cap, "double coset exploration");
            }
            ids.insert(left_coset_id(g, h, y));
            next.push_back(std::move(y));
          }
        }
      }
    }
    rep.evidence_radii.push_back(d);
    rep.evidence_counts.push_back(ids.size());
    if (next.empty()) {
      complete = true;
      break;
    }
    frontier = std::move(next);
  }

  rep.left_cosets_found.assign(ids.begin(), ids.end());
  detail::sort_left_cosets(g, rep.left_cosets_found);

  if (const auto* d = std::get_if<ProductSubgroupDesc>(&h.desc);
      d && !membership(h, x)) {
    const auto& f = std::get<ProductFamily>(g.family);
    const auto& p = std::get<ProductElement>(x.v);
    auto rl = double_coset_analyze(*f.left, *d->left, *p.left, radius, cap);
    auto rr = double_coset_analyze(*f.right, *d->right, *p.right, radius, cap);
    if (rl.verdict == CosetVerdict::ExactlyN &&
        rr.verdict == CosetVerdict::ExactlyN) {
      rep.verdict = CosetVerdict::ExactlyN;
      rep.n = rl.n * rr.n;
      rep.rule = "product";
    } else if (rl.verdict == CosetVerdict::ApparentlyInfinite ||
               rr.verdict == CosetVerdict::ApparentlyInfinite) {
      rep.verdict = CosetVerdict::ApparentlyInfinite;
      rep.n = rep.left_cosets_found.size();
    } else {
      rep.verdict = CosetVerdict::AtLeast;
      rep.n = rep.left_cosets_found.size();
    }
    return rep;
  }

  if (!detail::exact_verdict(h, x, complete, rep)) {
    detail::growth_verdict(rep);
  }
  return rep;
}

/// Partition of Ball(r) into double cosets, with one report per class.
struct BallDecomposition {
  Ball ball;
  std::vector<DoubleCosetReport> classes;   // in order of first appearance
  std::vector<std::size_t> class_of;        // parallel to ball.elements
  bool ball_complete = false;               // ball exhausted the whole group
};

inline BallDecomposition full_ball_decomposition(
    const GroupSpec& g, const SubgroupOracle& h, int radius,
    std::size_t cap = kDefaultElementCap) {
  if (radius < 1) throw ValidationError("decomposition radius must be >= 1");
  BallDecomposition out;
  out.ball = ball(g, radius, cap);
  // The group is exhausted exactly when the last BFS level added nothing;
  // in an infinite group every level is nonempty.
  auto [last_lo, last_hi] = out.ball.level(radius);
  out.ball_complete = last_lo == last_hi;

  std::unordered_map<Element, std::size_t, ElementHash> key_to_class;
  std::vector<std::vector<std::size_t>> members;  // element indices per class
  out.class_of.resize(out.ball.size());
  for (std::size_t i = 0; i < out.ball.size(); ++i) {
    Element key = double_coset_key(g, h, out.ball.elements[i]);
    auto [it, inserted] = key_to_class.emplace(std::move(key), members.size());
    if (inserted) members.emplace_back();
    members[it->second].push_back(i);
    out.class_of[i] = it->second;
  }

  // One report per class; left ids and per-radius growth evidence come from
  // the ball slice itself.
  std::unordered_map<LeftCosetId, std::size_t, LeftCosetIdHash> id_owner;
  for (std::size_t c = 0; c < members.size(); ++c) {
    DoubleCosetReport rep;
    rep.representative =
        double_coset_key(g, h, out.ball.elements[members[c][0]]);
    std::unordered_set<LeftCosetId, LeftCosetIdHash> ids;
    std::size_t next_member = 0;
    for (int r = 0; r <= radius; ++r) {
      auto [lo, hi] = out.ball.level(r);
      while (next_member < members[c].size() && members[c][next_member] < hi) {
        ids.insert(
            left_coset_id(g, h, out.ball.elements[members[c][next_member]]));
        ++next_member;
      }
      rep.evidence_radii.push_back(r);
      rep.evidence_counts.push_back(ids.size());
    }
    rep.left_cosets_found.assign(ids.begin(), ids.end());
    detail::sort_left_cosets(g, rep.left_cosets_found);

    for (const auto& id : rep.left_cosets_found) {
      auto [it, inserted] = id_owner.emplace(id, c);
      if (!inserted && it->second != c) {
        throw ConsistencyError("left coset shared between double cosets");
      }
    }

    if (!detail::exact_verdict(h, rep.representative, out.ball_complete,
                               rep)) {
      detail::growth_verdict(rep);
    }
    out.classes.push_back(std::move(rep));
  }
  return out;
}

/// [G:H] for a finite pair, computed as the number of distinct left cosets
/// and cross-checked against |G| / |H|.
inline std::size_t finite_index_trace_total(const GroupSpec& g,
                                            const SubgroupOracle& h) {
  FiniteView view = finite_view(g);

  // Count members via the oracle so product subgroups work uniformly.
  std::size_t subgroup_order = 0;
  std::unordered_set<LeftCosetId, LeftCosetIdHash> ids;
  Ball b = ball(g, static_cast<int>(view.order()), kDefaultElementCap);
  if (b.size() != view.order()) {
    throw ConsistencyError("ball did not exhaust the finite group");
  }
  for (const auto& x : b.elements) {
    if (membership(h, x)) ++subgroup_order;
    ids.insert(left_coset_id(g, h, x));
  }
  if (subgroup_order == 0 || view.order() % subgroup_order != 0 ||
      ids.size() != view.order() / subgroup_order) {
    throw ConsistencyError("left coset count disagrees with |G| / |H|");
  }
  return ids.size();
}

}  // namespace normcoset
