#include <doctest.h>

#include "normcoset/catalog.hpp"
#include "normcoset/free_bimodule.hpp"

using namespace normcoset;

namespace {

Word<long long> w(std::initializer_list<WordLetter<long long>> letters) {
  return reduce_word<long long>(std::vector<WordLetter<long long>>(letters));
}

}  // namespace

TEST_CASE("no-cancellation grids") {
  auto f3 = make_free_group("F3", 3);
  auto f2 = builtin_subgroup(f3, "F2");
  const Element c = free_element(w({{2, 1}}));
  const Element c2 = free_element(w({{2, 2}}));
  const Element cac_inv = free_element(w({{2, 1}, {0, 1}, {2, -1}}));

  for (const auto& word : {c, c2, cac_inv}) {
    WordGridReport rep = free_bimodule_word_check(*f3, *f2, word, 2);
    CHECK(rep.ok());
    CHECK(rep.collisions == 0);
    CHECK(rep.length_defects == 0);
    CHECK(rep.pairs_checked == 17 * 17);  // |F2-ball(2)|^2
  }

  SUBCASE("boundary letter inside the factor is rejected") {
    CHECK_THROWS_AS(
        free_bimodule_word_check(*f3, *f2, free_element(w({{0, 1}})), 2),
        ValidationError);
    // c a: ends with a letter of the factor.
    CHECK_THROWS_AS(
        free_bimodule_word_check(*f3, *f2,
                                 free_element(w({{2, 1}, {0, 1}})), 2),
        ValidationError);
    CHECK_THROWS_AS(
        free_bimodule_word_check(*f3, *f2, identity(*f3), 2), ValidationError);
  }
}

TEST_CASE("basis bijections between middle words") {
  auto f3 = make_free_group("F3", 3);
  auto f2 = builtin_subgroup(f3, "F2");
  const Element c = free_element(w({{2, 1}}));
  const Element c2 = free_element(w({{2, 2}}));
  const Element cac = free_element(w({{2, 1}, {0, 1}, {2, 1}}));

  BijectionReport r1 = intertwiner_bijection_check(*f3, *f2, c, c2, 2);
  CHECK(r1.bijection);
  BijectionReport r2 = intertwiner_bijection_check(*f3, *f2, c, cac, 2);
  CHECK(r2.bijection);
  BijectionReport r3 = intertwiner_bijection_check(*f3, *f2, c, c, 2);
  CHECK(r3.bijection);  // identity map
  CHECK(r3.first.pairs_checked == r3.second.pairs_checked);
}
