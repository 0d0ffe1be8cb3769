#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "normcoset/ball.hpp"
#include "normcoset/subgroup.hpp"

namespace normcoset {

enum class ConjugacyVerdict { CertifiedInfinite, AtLeast, FiniteExact };

/// Outcome of exploring {h g h^-1 : h in H}. A FiniteExact verdict is issued
/// only under a family rule certifying closure; bounded enumeration alone
/// never upgrades beyond AtLeast.
struct ConjugacyReport {
  Element element;
  std::vector<std::pair<int, std::size_t>> count_at_radius;
  ConjugacyVerdict verdict = ConjugacyVerdict::AtLeast;
  std::string rule;
  std::vector<Element> finite_set;  // FiniteExact only
  std::size_t at_least = 0;
};

namespace detail {

struct ConjugacyCertificate {
  ConjugacyVerdict verdict;
  std::string rule;
  std::vector<Element> finite_set;
};

/// Family rules deciding whether the H-conjugate set of g is finite or
/// infinite. Centralizers in free groups are cyclic, so a conjugate set
/// {h g h^-1} is finite exactly when the centralizer of g meets H in a
/// finite-index subgroup; for free subgroups of rank >= 2 (in particular
/// every H_n and the whole free part of the Z ⋊ Z2 extension) that never
/// happens for g != e. Nontrivial twist parts move generator indices without
/// fixed points, which makes conjugates grow in length.
inline std::optional<ConjugacyCertificate> conjugacy_certificate(
    const GroupSpec& g, const SubgroupOracle& h, const Element& x) {
  if (is_identity(g, x)) {
    return ConjugacyCertificate{ConjugacyVerdict::FiniteExact, "identity", {x}};
  }
  if (const auto* d = std::get_if<FiniteSubgroupDesc>(&h.desc)) {
    std::vector<Element> set;
    std::unordered_set<Element, ElementHash> seen;
    for (auto m : d->members) {
      Element c = conjugate(g, finite_element(m), x);
      if (seen.insert(c).second) set.push_back(std::move(c));
    }
    return ConjugacyCertificate{ConjugacyVerdict::FiniteExact,
                                "finite-exhaustive", std::move(set)};
  }
  if (const auto* d = std::get_if<FreeFactorDesc>(&h.desc)) {
    if (d->gens.empty()) {
      return ConjugacyCertificate{ConjugacyVerdict::FiniteExact,
                                  "trivial-subgroup", {x}};
    }
    if (d->gens.size() == 1) {
      const auto& w = std::get<FreeElement>(x.v).word;
      bool power_of_gen =
          w.letters.size() == 1 && w.letters[0].id == d->gens[0];
      if (power_of_gen) {
        return ConjugacyCertificate{ConjugacyVerdict::FiniteExact,
                                    "cyclic-centralizer", {x}};
      }
      return ConjugacyCertificate{ConjugacyVerdict::CertifiedInfinite,
                                  "cyclic-centralizer", {}};
    }
    return ConjugacyCertificate{ConjugacyVerdict::CertifiedInfinite,
                                "free-centralizer", {}};
  }
  if (std::holds_alternative<HnDesc>(h.desc)) {
    return ConjugacyCertificate{ConjugacyVerdict::CertifiedInfinite,
                                "shift-extension", {}};
  }
  if (std::holds_alternative<Ex74HDesc>(h.desc)) {
    return ConjugacyCertificate{ConjugacyVerdict::CertifiedInfinite,
                                "sign-extension", {}};
  }
  if (const auto* d = std::get_if<ExponentKernelDesc>(&h.desc)) {
    long long rank =
        d->modulus * (static_cast<long long>(d->letters.size()) - 1) + 1;
    if (rank >= 2) {
      return ConjugacyCertificate{ConjugacyVerdict::CertifiedInfinite,
                                  "free-centralizer", {}};
    }
    const auto& w = std::get<FreeElement>(x.v).word;
    bool power_of_gen = w.letters.size() == 1 && w.letters[0].id == d->target;
    if (power_of_gen) {
      return ConjugacyCertificate{ConjugacyVerdict::FiniteExact,
                                  "cyclic-centralizer", {x}};
    }
    return ConjugacyCertificate{ConjugacyVerdict::CertifiedInfinite,
                                "cyclic-centralizer", {}};
  }
  if (const auto* d = std::get_if<ProductSubgroupDesc>(&h.desc)) {
    const auto& f = std::get<ProductFamily>(h.parent->family);
    const auto& p = std::get<ProductElement>(x.v);
    auto cl = conjugacy_certificate(*f.left, *d->left, *p.left);
    auto cr = conjugacy_certificate(*f.right, *d->right, *p.right);
    if (cl && cl->verdict == ConjugacyVerdict::CertifiedInfinite) {
      return ConjugacyCertificate{ConjugacyVerdict::CertifiedInfinite,
                                  "product/" + cl->rule, {}};
    }
    if (cr && cr->verdict == ConjugacyVerdict::CertifiedInfinite) {
      return ConjugacyCertificate{ConjugacyVerdict::CertifiedInfinite,
                                  "product/" + cr->rule, {}};
    }
    if (cl && cr && cl->verdict == ConjugacyVerdict::FiniteExact &&
        cr->verdict == ConjugacyVerdict::FiniteExact) {
      std::vector<Element> set;
      for (const auto& a : cl->finite_set) {
        for (const auto& b : cr->finite_set) {
          set.push_back(product_element(a, b));
        }
      }
      return ConjugacyCertificate{ConjugacyVerdict::FiniteExact, "product",
                                  std::move(set)};
    }
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace detail

/// Enumerates the conjugates of g under H ∩ Ball(r) and attaches the family
/// verdict. Counts are recorded per radius and are nondecreasing.
inline ConjugacyReport h_conjugates(const GroupSpec& g, const SubgroupOracle& h,
                                    const Element& x, int radius,
                                    std::size_t cap = kDefaultElementCap) {
  if (radius < 1) throw ValidationError("conjugacy radius must be >= 1");
  ConjugacyReport rep;
  rep.element = x;

  Ball b = ball(g, radius, cap);
  std::unordered_set<Element, ElementHash> conj;
  for (int r = 0; r <= radius; ++r) {
    auto [lo, hi] = b.level(r);
    for (std::size_t i = lo; i < hi; ++i) {
      if (!membership(h, b.elements[i])) continue;
      conj.insert(conjugate(g, b.elements[i], x));
      if (conj.size() > cap) {
        throw CapExceeded(cap, "conjugate enumeration");
      }
    }
    rep.count_at_radius.emplace_back(r, conj.size());
  }

  auto cert = detail::conjugacy_certificate(g, h, x);
  if (cert) {
    rep.verdict = cert->verdict;
    rep.rule = cert->rule;
    rep.finite_set = std::move(cert->finite_set);
    if (rep.verdict == ConjugacyVerdict::FiniteExact) {
      std::unordered_set<Element, ElementHash> closed(rep.finite_set.begin(),
                                                      rep.finite_set.end());
      for (const auto& c : conj) {
        if (!closed.count(c)) {
          throw ConsistencyError(
              "enumerated conjugate escapes the certified finite set");
        }
      }
    }
  } else {
    rep.verdict = ConjugacyVerdict::AtLeast;
    rep.at_least = conj.size();
  }
  return rep;
}

enum class IrreducibilityVerdict { Irreducible, NotIrreducible, Inconclusive };

struct IrreducibilityResult {
  IrreducibilityVerdict verdict = IrreducibilityVerdict::Inconclusive;
  int radius = 0;
  std::optional<Element> witness;          // NotIrreducible: g != e with a
  std::vector<Element> witness_conjugates; // certified finite conjugate set
  std::map<std::string, std::size_t> certificates;  // rule id -> #certified
};

/// The purely group-level irreducibility criterion: the inclusion is
/// irreducible iff every g != e has infinitely many H-conjugates. Certifies
/// each element of Ball(r)\{e} under a family rule; a single certified-finite
/// conjugate set refutes irreducibility, and any uncertifiable element
/// leaves the check inconclusive at this radius.
inline IrreducibilityResult irreducibility_check(
    const GroupSpec& g, const SubgroupOracle& h, int radius,
    std::size_t cap = kDefaultElementCap) {
  if (radius < 1) throw ValidationError("irreducibility radius must be >= 1");
  IrreducibilityResult res;
  res.radius = radius;
  Ball b = ball(g, radius, cap);
  bool all_certified = true;
  for (const auto& x : b.elements) {
    if (is_identity(g, x)) continue;
    auto cert = detail::conjugacy_certificate(g, h, x);
    if (!cert) {
      all_certified = false;
      continue;
    }
    if (cert->verdict == ConjugacyVerdict::FiniteExact) {
      res.verdict = IrreducibilityVerdict::NotIrreducible;
      res.witness = x;
      res.witness_conjugates = std::move(cert->finite_set);
      return res;
    }
    ++res.certificates[cert->rule];
  }
  res.verdict = all_certified ? IrreducibilityVerdict::Irreducible
                              : IrreducibilityVerdict::Inconclusive;
  return res;
}

struct DescentReport {
  IrreducibilityResult h_result;
  IrreducibilityResult k_result;
  std::vector<Element> coset_representatives;
  bool descent_holds = false;
};

/// For K of finite index in H (witnessed by explicit left-coset
/// representatives h_1..h_m with H = ∪ h_i K), irreducibility passes down
/// from H to K. Checks both verdicts directly at the given radius and
/// verifies that the representatives cover H ∩ Ball(r).
inline DescentReport finite_index_descent_check(
    const GroupSpec& g, const SubgroupOracle& h, const SubgroupOracle& k,
    const std::vector<Element>& reps, int radius,
    std::size_t cap = kDefaultElementCap) {
  for (const auto& r : reps) {
    if (!membership(h, r)) {
      throw ValidationError("coset representative lies outside H");
    }
  }
  Ball b = ball(g, radius, cap);
  for (const auto& x : b.elements) {
    if (!membership(h, x)) continue;
    bool covered = false;
    for (const auto& r : reps) {
      if (membership(k, multiply(g, inverse(g, r), x))) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      throw ValidationError(
          "supplied representatives do not cover H within the ball");
    }
  }

  DescentReport rep;
  rep.coset_representatives = reps;
  rep.h_result = irreducibility_check(g, h, radius, cap);
  rep.k_result = irreducibility_check(g, k, radius, cap);
  rep.descent_holds =
      rep.h_result.verdict != IrreducibilityVerdict::Irreducible ||
      rep.k_result.verdict == IrreducibilityVerdict::Irreducible;
  return rep;
}

}  // namespace normcoset
