#include <doctest.h>

#include <random>
#include <set>
#include <unordered_set>

#include "normcoset/catalog.hpp"
#include "normcoset/cosets.hpp"

using namespace normcoset;

namespace {

Word<long long> w(std::initializer_list<WordLetter<long long>> letters) {
  return reduce_word<long long>(std::vector<WordLetter<long long>>(letters));
}

void check_well_defined(const std::shared_ptr<const GroupSpec>& g,
                        const SubgroupOracle& h, int radius, int pairs,
                        std::mt19937_64& rng) {
  Ball b = ball(*g, radius, 500000);
  std::vector<Element> members = subgroup_ball(h, radius, 500000);
  std::uniform_int_distribution<std::size_t> pick_g(0, b.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_h(0, members.size() - 1);
  for (int i = 0; i < pairs; ++i) {
    const Element& x = b.elements[pick_g(rng)];
    const Element& m = members[pick_h(rng)];
    CHECK(left_coset_id(*g, h, x) ==
          left_coset_id(*g, h, multiply(*g, x, m)));
  }
  // Distinct ids really separate cosets.
  for (int i = 0; i < pairs / 5; ++i) {
    const Element& x = b.elements[pick_g(rng)];
    const Element& y = b.elements[pick_g(rng)];
    const bool same_id = left_coset_id(*g, h, x) == left_coset_id(*g, h, y);
    const bool same_coset = membership(h, multiply(*g, inverse(*g, x), y));
    CHECK(same_id == same_coset);
  }
}

}  // namespace

TEST_CASE("left coset ids") {
  auto f3 = make_free_group("F3", 3);
  auto f2 = builtin_subgroup(f3, "F2");

  CHECK(left_coset_id(*f3, *f2, free_element(w({{0, 1}, {1, -1}}))) ==
        left_coset_id(*f3, *f2, identity(*f3)));

  Element acb = free_element(w({{0, 1}, {2, 1}, {1, 1}}));
  Element cb = free_element(w({{2, 1}, {1, 1}}));
  Element cba = free_element(w({{2, 1}, {1, 1}, {0, 1}}));
  CHECK_FALSE(left_coset_id(*f3, *f2, acb) == left_coset_id(*f3, *f2, cb));
  CHECK(left_coset_id(*f3, *f2, cb) == left_coset_id(*f3, *f2, cba));

  SUBCASE("sign extension cosets are labelled by the translation part") {
    auto ex = make_ex74_group("Ex74", -1, 1);
    auto h = builtin_subgroup(ex, "H");
    Ball b = ball(*ex, 3);
    for (const auto& x : b.elements) {
      const auto& e = std::get<Ex74Element>(x.v);
      LeftCosetId id = left_coset_id(*ex, *h, x);
      const auto& rep = std::get<Ex74Element>(id.representative.v);
      CHECK(rep.twist.n == e.twist.n);
      CHECK(rep.word.empty());
    }
  }

  SUBCASE("well-definedness on random pairs") {
    std::mt19937_64 rng(31);
    auto fz = make_free_by_z_group("FreeByZ", -2, 2);
    check_well_defined(fz, *builtin_subgroup(fz, "H0"), 3, 500, rng);
    check_well_defined(f3, *f2, 3, 500, rng);
    auto ex = make_ex74_group("Ex74", -1, 1);
    check_well_defined(ex, *builtin_subgroup(ex, "H"), 3, 500, rng);
    auto s4 = builtin_group("S4");
    check_well_defined(s4, *builtin_subgroup(s4, "D4"), 8, 200, rng);
    auto prod = make_product_group(fz, f3);
    auto ph = make_product_subgroup(*builtin_subgroup(fz, "H0"), *f2, prod);
    check_well_defined(prod, ph, 2, 200, rng);
  }
}

TEST_CASE("double coset analysis") {
  SUBCASE("sign extension: off-H cosets pair up translations") {
    auto ex = make_ex74_group("Ex74", -2, 2);
    auto h = builtin_subgroup(ex, "H");
    for (long long n : {1LL, 2LL, 3LL}) {
      Element g = ex74_element({}, TIndex{n, 0});
      DoubleCosetReport rep = double_coset_analyze(*ex, *h, g, 4);
      CHECK(rep.verdict == CosetVerdict::ExactlyN);
      CHECK(rep.n == 2);
      CHECK(rep.trace() == 2);
      REQUIRE(rep.left_cosets_found.size() == 2);
      std::set<long long> labels;
      for (const auto& id : rep.left_cosets_found) {
        labels.insert(std::get<Ex74Element>(id.representative.v).twist.n);
      }
      CHECK(labels == std::set<long long>{-n, n});
    }

    Element e = identity(*ex);
    DoubleCosetReport idrep = double_coset_analyze(*ex, *h, e, 2);
    CHECK(idrep.verdict == CosetVerdict::ExactlyN);
    CHECK(idrep.n == 1);
  }

  SUBCASE("free factor: the third letter generates growing coset counts") {
    auto f3 = make_free_group("F3", 3);
    auto f2 = builtin_subgroup(f3, "F2");
    Element c = free_element(w({{2, 1}}));
    DoubleCosetReport rep = double_coset_analyze(*f3, *f2, c, 4);
    CHECK(rep.verdict == CosetVerdict::ApparentlyInfinite);
    for (std::size_t i = 1; i < rep.evidence_counts.size(); ++i) {
      CHECK(rep.evidence_counts[i] > rep.evidence_counts[i - 1]);
    }

    // Direct witness family: a^k c all lie in HcH but in distinct cosets.
    std::set<std::string> ids;
    for (long long k = 0; k <= 4; ++k) {
      Element akc = multiply(*f3, free_element(w({{0, k}})), c);
      ids.insert(to_string(
          *f3, left_coset_id(*f3, *f2, akc).representative));
    }
    CHECK(ids.size() == 5);
  }
}

TEST_CASE("full ball decomposition") {
  SUBCASE("sign extension at radius 3") {
    auto ex = make_ex74_group("Ex74", -1, 1);
    auto h = builtin_subgroup(ex, "H");
    BallDecomposition dec = full_ball_decomposition(*ex, *h, 3);

    std::size_t h_classes = 0;
    for (const auto& cls : dec.classes) {
      if (membership(*h, cls.representative)) {
        ++h_classes;
        CHECK(cls.verdict == CosetVerdict::ExactlyN);
        CHECK(cls.n == 1);
      } else {
        CHECK(cls.verdict == CosetVerdict::ExactlyN);
        CHECK(cls.n == 2);
      }
    }
    CHECK(h_classes == 1);
    CHECK(dec.classes.size() == 4);  // H plus |n| = 1, 2, 3

    // The class map is a partition refined by double-coset keys.
    for (std::size_t i = 0; i < dec.ball.size(); ++i) {
      CHECK(dec.class_of[i] < dec.classes.size());
    }
  }

  SUBCASE("free factor: only H itself is a finite union") {
    auto f3 = make_free_group("F3", 3);
    auto f2 = builtin_subgroup(f3, "F2");
    BallDecomposition dec = full_ball_decomposition(*f3, *f2, 3);
    for (const auto& cls : dec.classes) {
      if (membership(*f2, cls.representative)) {
        CHECK(cls.verdict == CosetVerdict::ExactlyN);
        CHECK(cls.n == 1);
      } else {
        CHECK(cls.verdict != CosetVerdict::ExactlyN);
      }
    }
  }

  SUBCASE("finite pairs: verdicts exact, traces sum to the index") {
    struct Case {
      const char* group;
      const char* sub;
      std::size_t index;
    };
    for (const Case& c : {Case{"S3", "A3", 2}, Case{"S4", "D4", 3},
                          Case{"S4", "A4", 2}, Case{"A4", "V4", 3},
                          Case{"S3", "e", 6}}) {
      auto g = builtin_group(c.group);
      auto h = builtin_subgroup(g, c.sub);
      BallDecomposition dec = full_ball_decomposition(*g, *h, 12);
      CHECK(dec.ball_complete);
      std::size_t total = 0;
      for (const auto& cls : dec.classes) {
        CHECK(cls.verdict == CosetVerdict::ExactlyN);
        CHECK(cls.n >= 1);  // trace integrality, positive
        total += cls.n;
      }
      CHECK(total == c.index);
      CHECK(finite_index_trace_total(*g, *h) == c.index);
    }
  }

  SUBCASE("decomposition classes agree with per-element analysis") {
    auto ex = make_ex74_group("Ex74", -1, 1);
    auto h = builtin_subgroup(ex, "H");
    BallDecomposition dec = full_ball_decomposition(*ex, *h, 3);
    for (const auto& cls : dec.classes) {
      DoubleCosetReport direct =
          double_coset_analyze(*ex, *h, cls.representative, 3);
      CHECK(direct.verdict == cls.verdict);
      if (cls.verdict == CosetVerdict::ExactlyN) CHECK(direct.n == cls.n);
    }
  }
}

TEST_CASE("finite index trace totals") {
  auto s3 = builtin_group("S3");
  CHECK(finite_index_trace_total(*s3, *builtin_subgroup(s3, "A3")) == 2);
  CHECK(finite_index_trace_total(*s3, *builtin_subgroup(s3, "full")) == 1);
  auto s4 = builtin_group("S4");
  CHECK(finite_index_trace_total(*s4, *builtin_subgroup(s4, "D4")) == 3);
}

TEST_CASE("finite double coset analysis closes exactly") {
  auto s4 = builtin_group("S4");
  auto d4 = builtin_subgroup(s4, "D4");
  const FiniteTable& t = s4->table();
  std::uint32_t transposition = 0;
  for (std::uint32_t i = 0; i < t.order; ++i) {
    if (t.names[i] == "(1 2)") transposition = i;
  }
  // D4 (1 2) D4 covers the 16 elements outside D4: two left cosets.
  DoubleCosetReport rep =
      double_coset_analyze(*s4, *d4, finite_element(transposition), 12);
  CHECK(rep.verdict == CosetVerdict::ExactlyN);
  CHECK(rep.n == 2);
  CHECK(rep.rule == "finite-exhaustive");

  SUBCASE("H = G collapses to a single class of trace 1") {
    auto full = builtin_subgroup(s4, "full");
    BallDecomposition dec = full_ball_decomposition(*s4, *full, 12);
    REQUIRE(dec.classes.size() == 1);
    CHECK(dec.classes[0].verdict == CosetVerdict::ExactlyN);
    CHECK(dec.classes[0].n == 1);
  }
}

TEST_CASE("product double cosets combine componentwise") {
  auto s3 = builtin_group("S3");
  auto a3 = builtin_subgroup(s3, "A3");
  auto prod = make_product_group(s3, s3);
  auto ph = make_product_subgroup(*a3, *a3, prod);
  const FiniteTable& t = s3->table();
  std::uint32_t transposition = 0;
  for (std::uint32_t i = 0; i < t.order; ++i) {
    if (t.names[i] == "(1 2)") transposition = i;
  }
  Element g = product_element(finite_element(transposition), identity(*s3));
  DoubleCosetReport rep = double_coset_analyze(*prod, ph, g, 10);
  CHECK(rep.verdict == CosetVerdict::ExactlyN);
  CHECK(rep.n == 1);  // 1 x 1 left cosets
  CHECK(rep.rule == "product");

  // A strictly one-sided shift in one slot gives growing coset counts.
  auto fz = make_free_by_z_group("FreeByZ", -1, 1);
  auto h0 = builtin_subgroup(fz, "H0");
  auto iprod = make_product_group(fz, fz);
  auto ih = make_product_subgroup(*h0, *h0, iprod);
  Element phi_e = product_element(free_by_z_element({}, 1), identity(*fz));
  DoubleCosetReport irep = double_coset_analyze(*iprod, ih, phi_e, 4);
  CHECK(irep.verdict == CosetVerdict::ApparentlyInfinite);
}
