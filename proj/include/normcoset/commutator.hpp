#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "normcoset/idempotents.hpp"

namespace normcoset {

/// [G,G] as a sorted index set: collect every commutator a^-1 b^-1 a b, then
/// close under multiplication. The commutator set is conjugation-invariant
/// and inverse-closed, so its multiplicative closure is already normal.
inline std::vector<std::uint32_t> commutator_closure(const FiniteView& g) {
  const auto n = static_cast<std::uint32_t>(g.order());
  std::vector<bool> comm(n, false);
  for (std::uint32_t a = 0; a < n; ++a) {
    const std::uint32_t ai = g.inv(a);
    for (std::uint32_t b = 0; b < n; ++b) {
      comm[g.mul(g.mul(ai, g.inv(b)), g.mul(a, b))] = true;
    }
  }
  std::vector<std::uint32_t> gens;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (comm[x]) gens.push_back(x);
  }

  std::vector<bool> member(n, false);
  member[g.identity()] = true;
  std::vector<std::uint32_t> frontier{g.identity()};
  while (!frontier.empty()) {
    std::vector<std::uint32_t> next;
    for (auto x : frontier) {
      for (auto s : gens) {
        const std::uint32_t y = g.mul(x, s);
        if (!member[y]) {
          member[y] = true;
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (member[x]) out.push_back(x);
  }
  return out;
}

inline bool is_abelian(const FiniteView& g) {
  for (std::uint32_t a = 0; a < g.order(); ++a) {
    for (std::uint32_t b = a + 1; b < g.order(); ++b) {
      if (g.mul(a, b) != g.mul(b, a)) return false;
    }
  }
  return true;
}

/// All normal subgroups, enumerated as unions of conjugacy classes
/// containing the identity and filtered by multiplicative closure. Feasible
/// for the small orders this library targets; guarded by caps.
inline std::vector<std::vector<std::uint32_t>> normal_subgroups(
    const FiniteView& g, std::size_t order_cap = 200,
    std::size_t max_results = 4096) {
  if (g.order() > order_cap) {
    throw CapExceeded(order_cap, "normal subgroup enumeration");
  }
  ConjugacyClasses cc = conjugacy_classes(g);
  const std::size_t k = cc.count();
  if (k - 1 > 22) {
    throw CapExceeded(max_results, "too many conjugacy classes to enumerate");
  }

  std::vector<std::size_t> other_classes;
  for (std::size_t c = 0; c < k; ++c) {
    if (c != cc.identity_class) other_classes.push_back(c);
  }

  std::vector<std::vector<std::uint32_t>> out;
  const std::size_t subsets = std::size_t(1) << other_classes.size();
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    std::vector<std::uint32_t> members = cc.classes[cc.identity_class];
    for (std::size_t b = 0; b < other_classes.size(); ++b) {
      if (mask & (std::size_t(1) << b)) {
        const auto& cls = cc.classes[other_classes[b]];
        members.insert(members.end(), cls.begin(), cls.end());
      }
    }
    if (g.order() % members.size() != 0) continue;
    std::sort(members.begin(), members.end());
    bool closed = true;
    for (std::size_t i = 0; i < members.size() && closed; ++i) {
      for (std::size_t j = 0; j < members.size(); ++j) {
        if (!std::binary_search(members.begin(), members.end(),
                                g.mul(members[i], members[j]))) {
          closed = false;
          break;
        }
      }
    }
    if (!closed) continue;
    out.push_back(std::move(members));
    if (out.size() > max_results) {
      throw CapExceeded(max_results, "normal subgroup enumeration");
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return out;
}

/// Abelian-quotient test by explicit coset arithmetic (not via commutators,
/// so it stays an independent route): cosets commute iff the quotient is
/// abelian.
inline bool quotient_abelian(const FiniteView& g,
                             const std::vector<std::uint32_t>& normal) {
  const auto n = static_cast<std::uint32_t>(g.order());
  std::vector<std::uint32_t> coset_of(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    std::uint32_t best = n;
    for (auto m : normal) best = std::min(best, g.mul(x, m));
    coset_of[x] = best;
  }
  std::vector<std::uint32_t> reps;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (coset_of[x] == x) reps.push_back(x);
  }
  for (auto a : reps) {
    for (auto b : reps) {
      if (coset_of[g.mul(a, b)] != coset_of[g.mul(b, a)]) return false;
    }
  }
  return true;
}

struct CommutatorReport {
  std::vector<std::uint32_t> commutator_subgroup;
  std::vector<std::vector<std::uint32_t>> abelian_quotient_normals;
  bool intersection_matches = false;
};

/// Computes [G,G] by commutator closure and verifies the lattice identity
/// [G,G] = ∩ {N normal : G/N abelian} with both sides computed by
/// independent routes.
inline CommutatorReport commutator_subgroup_report(const FiniteView& g,
                                                   std::size_t order_cap = 200,
                                                   std::size_t max_results = 4096) {
  CommutatorReport rep;
  rep.commutator_subgroup = commutator_closure(g);

  std::vector<std::uint32_t> intersection;
  bool first = true;
  for (auto& n : normal_subgroups(g, order_cap, max_results)) {
    if (!quotient_abelian(g, n)) continue;
    if (first) {
      intersection = n;
      first = false;
    } else {
      std::vector<std::uint32_t> merged;
      std::set_intersection(intersection.begin(), intersection.end(), n.begin(),
                            n.end(), std::back_inserter(merged));
      intersection = std::move(merged);
    }
    rep.abelian_quotient_normals.push_back(std::move(n));
  }
  rep.intersection_matches = intersection == rep.commutator_subgroup;
  return rep;
}

/// Group-level summary of the fixed-point inclusion for an outer action of
/// G: the normalizing unitaries generate the fixed points of K = [G,G];
/// the inclusion is regular exactly when every minimal central idempotent
/// of the group algebra has trace 1 (equivalently G is abelian) and
/// singular exactly when G is perfect.
struct FixedPointReport {
  std::vector<std::uint32_t> commutator;
  bool abelian = false;
  bool regular = false;
  bool singular = false;
  std::vector<double> idempotent_traces;
  std::vector<int> dimensions;
};

inline FixedPointReport fixed_point_inclusion_report(
    const FiniteView& g, IdempotentOptions opt = {}) {
  FixedPointReport rep;
  rep.commutator = commutator_closure(g);
  rep.abelian = is_abelian(g);
  rep.singular = rep.commutator.size() == g.order();

  CentralDecomposition dec = minimal_central_idempotents(g, opt);
  bool all_trace_one = true;
  for (const auto& e : dec.idempotents) {
    rep.idempotent_traces.push_back(e.trace);
    rep.dimensions.push_back(e.dimension);
    all_trace_one = all_trace_one && e.dimension == 1;
  }
  rep.regular = all_trace_one;
  if (rep.regular != rep.abelian) {
    throw ConsistencyError(
        "regularity from idempotent traces disagrees with commutativity");
  }
  return rep;
}

}  // namespace normcoset
