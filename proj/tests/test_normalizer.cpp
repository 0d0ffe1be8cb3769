#include <doctest.h>

#include <algorithm>
#include <unordered_set>

#include "normcoset/catalog.hpp"
#include "normcoset/conjugacy.hpp"
#include "normcoset/normalizer.hpp"

using namespace normcoset;

namespace {

Word<long long> w(std::initializer_list<WordLetter<long long>> letters) {
  return reduce_word<long long>(std::vector<WordLetter<long long>>(letters));
}

/// Independent conjugate enumeration: a plain double loop with linear-scan
/// deduplication, sharing nothing with the hash-set path in h_conjugates.
std::size_t slow_conjugate_count(const GroupSpec& g, const SubgroupOracle& h,
                                 const Element& x, int radius) {
  Ball b = ball(g, radius);
  std::vector<Element> found;
  for (const auto& e : b.elements) {
    if (!membership(h, e)) continue;
    Element c = conjugate(g, e, x);
    if (std::find(found.begin(), found.end(), c) == found.end()) {
      found.push_back(std::move(c));
    }
  }
  return found.size();
}

}  // namespace

TEST_CASE("conjugate sets under a free factor") {
  auto f2 = make_free_group("F2", 2);
  auto ha = builtin_subgroup(f2, "a");  // <a>

  SUBCASE("power of the cyclic generator has a singleton conjugate set") {
    Element a = free_element(w({{0, 1}}));
    ConjugacyReport rep = h_conjugates(*f2, *ha, a, 4);
    CHECK(rep.verdict == ConjugacyVerdict::FiniteExact);
    REQUIRE(rep.finite_set.size() == 1);
    CHECK(rep.finite_set[0] == a);
    for (const auto& [r, count] : rep.count_at_radius) CHECK(count == 1);
  }

  SUBCASE("other elements have infinitely many <a>-conjugates") {
    Element b = free_element(w({{1, 1}}));
    ConjugacyReport rep = h_conjugates(*f2, *ha, b, 4);
    CHECK(rep.verdict == ConjugacyVerdict::CertifiedInfinite);
    // Counts strictly increase: a^k b a^-k are pairwise distinct.
    for (std::size_t i = 1; i < rep.count_at_radius.size(); ++i) {
      CHECK(rep.count_at_radius[i].second > rep.count_at_radius[i - 1].second);
    }
  }
}

TEST_CASE("conjugate counts match the independent double loop") {
  auto f3 = make_free_group("F3", 3);
  auto f2 = builtin_subgroup(f3, "F2");
  Element c = free_element(w({{2, 1}}));

  ConjugacyReport rep = h_conjugates(*f3, *f2, c, 3);
  CHECK(rep.verdict == ConjugacyVerdict::CertifiedInfinite);
  for (const auto& [r, count] : rep.count_at_radius) {
    CHECK(count == slow_conjugate_count(*f3, *f2, c, r));
  }

  Element e = identity(*f3);
  ConjugacyReport id_rep = h_conjugates(*f3, *f2, e, 2);
  CHECK(id_rep.verdict == ConjugacyVerdict::FiniteExact);
  CHECK(id_rep.finite_set == std::vector<Element>{e});
}

TEST_CASE("irreducibility criterion") {
  auto f2 = make_free_group("F2", 2);
  auto ha = builtin_subgroup(f2, "a");
  IrreducibilityResult res = irreducibility_check(*f2, *ha, 3);
  CHECK(res.verdict == IrreducibilityVerdict::NotIrreducible);
  REQUIRE(res.witness.has_value());
  CHECK(*res.witness == free_element(w({{0, 1}})));

  auto f3 = make_free_group("F3", 3);
  auto ff2 = builtin_subgroup(f3, "F2");
  CHECK(irreducibility_check(*f3, *ff2, 3).verdict ==
        IrreducibilityVerdict::Irreducible);

  auto fz = make_free_by_z_group("FreeByZ", -2, 2);
  CHECK(irreducibility_check(*fz, *builtin_subgroup(fz, "H0"), 3).verdict ==
        IrreducibilityVerdict::Irreducible);

  auto ex = make_ex74_group("Ex74", -1, 1);
  CHECK(irreducibility_check(*ex, *builtin_subgroup(ex, "H"), 3).verdict ==
        IrreducibilityVerdict::Irreducible);

  // Finite groups never pass: every conjugate set is finite.
  auto s3 = builtin_group("S3");
  CHECK(irreducibility_check(*s3, *builtin_subgroup(s3, "A3"), 2).verdict ==
        IrreducibilityVerdict::NotIrreducible);
}

TEST_CASE("finite index descent") {
  auto f3 = make_free_group("F3", 3);
  auto h = builtin_subgroup(f3, "F2");

  SUBCASE("H = K gives identical verdicts") {
    DescentReport rep = finite_index_descent_check(
        *f3, *h, *h, {identity(*f3)}, 3);
    CHECK(rep.h_result.verdict == rep.k_result.verdict);
    CHECK(rep.descent_holds);
  }

  SUBCASE("index-2 kernel of F2 stays irreducible") {
    auto k = builtin_subgroup(f3, "even-a");
    DescentReport rep = finite_index_descent_check(
        *f3, *h, *k, {identity(*f3), free_element(w({{0, 1}}))}, 3);
    CHECK(rep.h_result.verdict == IrreducibilityVerdict::Irreducible);
    CHECK(rep.k_result.verdict == IrreducibilityVerdict::Irreducible);
    CHECK(rep.descent_holds);
  }

  SUBCASE("finite index inside the cyclic factor stays reducible") {
    auto f2 = make_free_group("F2", 2);
    auto ha = builtin_subgroup(f2, "a");
    auto k = std::make_shared<const SubgroupOracle>(
        make_exponent_kernel("<a^2>", f2, {0}, 0, 2));
    DescentReport rep = finite_index_descent_check(
        *f2, *ha, *k, {identity(*f2), free_element(w({{0, 1}}))}, 3);
    CHECK(rep.h_result.verdict == IrreducibilityVerdict::NotIrreducible);
    CHECK(rep.k_result.verdict == IrreducibilityVerdict::NotIrreducible);
    CHECK(rep.descent_holds);
  }

  SUBCASE("representatives must cover H within the ball") {
    auto k = builtin_subgroup(f3, "even-a");
    CHECK_THROWS_AS(
        finite_index_descent_check(*f3, *h, *k, {identity(*f3)}, 3),
        ValidationError);
  }
}

TEST_CASE("normalizer classification for the shift extension") {
  auto fz = make_free_by_z_group("FreeByZ", -2, 2);
  auto h0 = builtin_subgroup(fz, "H0");

  CHECK(classify_element(*fz, *h0, free_by_z_element({}, 1)).verdict ==
        NormalizerVerdict::OneSidedOnly);
  CHECK(classify_element(*fz, *h0, free_by_z_element(w({{2, 1}}), 0)).verdict ==
        NormalizerVerdict::TwoSided);

  NormalizerClassification neg =
      classify_element(*fz, *h0, free_by_z_element(w({{-1, 1}}), 0));
  CHECK(neg.verdict == NormalizerVerdict::NonNormalizing);
  REQUIRE(neg.witness.has_value());
  CHECK(membership(*h0, *neg.witness));
  CHECK_FALSE(membership(
      *h0, conjugate(*fz, free_by_z_element(w({{-1, 1}}), 0), *neg.witness)));

  // phi^-1 is not even one-sided.
  CHECK(classify_element(*fz, *h0, free_by_z_element({}, -1)).verdict ==
        NormalizerVerdict::NonNormalizing);
}

TEST_CASE("normalizer ball report matches the closed-form sets") {
  auto fz = make_free_by_z_group("FreeByZ", -2, 2);
  auto h0 = builtin_subgroup(fz, "H0");
  BallClassification rep = normalizer_ball_report(*fz, *h0, 3);

  std::vector<std::size_t> one_sided_idx;
  for (std::size_t i = 0; i < rep.ball.size(); ++i) {
    const auto& e = std::get<FreeByZElement>(rep.ball.elements[i].v);
    bool in_h0 = true;
    for (const auto& l : e.word.letters) in_h0 = in_h0 && l.id >= 0;
    NormalizerVerdict want =
        in_h0 && e.shift == 0
            ? NormalizerVerdict::TwoSided
            : (in_h0 && e.shift > 0 ? NormalizerVerdict::OneSidedOnly
                                    : NormalizerVerdict::NonNormalizing);
    CHECK(rep.classes[i].verdict == want);
    if (rep.classes[i].verdict != NormalizerVerdict::NonNormalizing) {
      one_sided_idx.push_back(i);
    }
  }

  SUBCASE("consistency between g and g^-1") {
    std::unordered_set<Element, ElementHash> in_ball(rep.ball.elements.begin(),
                                                     rep.ball.elements.end());
    for (std::size_t i = 0; i < rep.ball.size(); ++i) {
      Element inv = inverse(*fz, rep.ball.elements[i]);
      NormalizerVerdict v = rep.classes[i].verdict;
      NormalizerVerdict vi = classify_element(*fz, *h0, inv).verdict;
      if (v == NormalizerVerdict::TwoSided) {
        CHECK(vi == NormalizerVerdict::TwoSided);
      }
      if (v == NormalizerVerdict::OneSidedOnly) {
        CHECK(vi == NormalizerVerdict::NonNormalizing);
      }
    }
  }

  SUBCASE("one-sided set is a semigroup within the ball") {
    std::unordered_set<Element, ElementHash> one_sided;
    for (auto i : one_sided_idx) one_sided.insert(rep.ball.elements[i]);
    std::unordered_map<Element, std::size_t, ElementHash> index;
    for (std::size_t i = 0; i < rep.ball.size(); ++i) {
      index.emplace(rep.ball.elements[i], i);
    }
    for (auto i : one_sided_idx) {
      for (auto j : one_sided_idx) {
        Element p = multiply(*fz, rep.ball.elements[i], rep.ball.elements[j]);
        auto it = index.find(p);
        if (it != index.end()) {
          CHECK(rep.classes[it->second].verdict !=
                NormalizerVerdict::NonNormalizing);
        }
      }
    }
  }

  SUBCASE("members are two-sided and N is contained in ON") {
    for (std::size_t i = 0; i < rep.ball.size(); ++i) {
      if (membership(*h0, rep.ball.elements[i])) {
        CHECK(rep.classes[i].verdict == NormalizerVerdict::TwoSided);
      }
    }
  }
}

TEST_CASE("conjugate growth through radius 4 backs the free certificates") {
  auto f3 = make_free_group("F3", 3);
  auto f2 = builtin_subgroup(f3, "F2");
  for (const Element& x :
       {free_element(w({{2, 1}})), free_element(w({{0, 1}})),
        free_element(w({{0, 1}, {2, 1}}))}) {
    ConjugacyReport rep = h_conjugates(*f3, *f2, x, 4);
    CHECK(rep.verdict == ConjugacyVerdict::CertifiedInfinite);
    for (std::size_t i = 2; i < rep.count_at_radius.size(); ++i) {
      CHECK(rep.count_at_radius[i].second > rep.count_at_radius[i - 1].second);
    }
  }
}

TEST_CASE("radius zero ball report classifies only the identity") {
  auto fz = make_free_by_z_group("FreeByZ", -2, 2);
  auto h0 = builtin_subgroup(fz, "H0");
  BallClassification rep = normalizer_ball_report(*fz, *h0, 0);
  REQUIRE(rep.ball.size() == 1);
  CHECK(rep.classes[0].verdict == NormalizerVerdict::TwoSided);
  CHECK(rep.two_sided == 1);
}

TEST_CASE("normalizers in finite groups") {
  auto s3 = builtin_group("S3");
  auto a3 = builtin_subgroup(s3, "A3");
  // A3 is normal, so everything is two-sided.
  BallClassification rep = normalizer_ball_report(*s3, *a3, 8);
  CHECK(rep.ball.size() == 6);
  CHECK(rep.two_sided == 6);
  CHECK(rep.one_sided_only == 0);

  // D4 is self-normalizing in S4.
  auto s4 = builtin_group("S4");
  auto d4 = builtin_subgroup(s4, "D4");
  BallClassification rep4 = normalizer_ball_report(*s4, *d4, 10);
  CHECK(rep4.ball.size() == 24);
  CHECK(rep4.two_sided == 8);
  CHECK(rep4.one_sided_only == 0);
  CHECK(rep4.non_normalizing == 16);
}

TEST_CASE("sign extension normalizers") {
  auto ex = make_ex74_group("Ex74", -1, 1);
  auto h = builtin_subgroup(ex, "H");
  BallClassification rep = normalizer_ball_report(*ex, *h, 3);
  for (std::size_t i = 0; i < rep.ball.size(); ++i) {
    const auto& e = std::get<Ex74Element>(rep.ball.elements[i].v);
    NormalizerVerdict want = e.twist.n == 0 ? NormalizerVerdict::TwoSided
                                            : NormalizerVerdict::NonNormalizing;
    CHECK(rep.classes[i].verdict == want);
  }
  CHECK(rep.one_sided_only == 0);
}

TEST_CASE("product pairs classify componentwise") {
  auto fz = make_free_by_z_group("FreeByZ", -1, 1);
  auto h0 = builtin_subgroup(fz, "H0");
  ProductNormalizerReport rep = product_normalizer_check(*h0, *h0, 2);
  CHECK(rep.ok);
  CHECK(rep.checked > 1);

  auto prod = make_product_group(fz, fz);
  auto ph = make_product_subgroup(*h0, *h0, prod);
  Element phi_e = product_element(free_by_z_element({}, 1), identity(*fz));
  CHECK(classify_element(*prod, ph, phi_e).verdict ==
        NormalizerVerdict::OneSidedOnly);
  CHECK(classify_element(*prod, ph, identity(*prod)).verdict ==
        NormalizerVerdict::TwoSided);

  auto s3 = builtin_group("S3");
  auto a3 = builtin_subgroup(s3, "A3");
  ProductNormalizerReport fin = product_normalizer_check(*a3, *a3, 8);
  CHECK(fin.ok);
  CHECK(fin.checked == 36);
}
