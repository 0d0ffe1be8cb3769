#include <doctest.h>

#include <complex>
#include <random>

#include "normcoset/catalog.hpp"
#include "normcoset/commutator.hpp"
#include "normcoset/group_algebra.hpp"
#include "normcoset/idempotents.hpp"

using namespace normcoset;

namespace {

/// Brute-force convolution oracle: iterate output indices and scan all
/// factorizations, instead of scattering over input pairs.
AlgebraElement slow_convolve(const FiniteView& g, const AlgebraElement& a,
                             const AlgebraElement& b) {
  AlgebraElement out = algebra_zero(g);
  for (std::uint32_t z = 0; z < g.order(); ++z) {
    std::complex<double> sum = 0.0;
    for (std::uint32_t h = 0; h < g.order(); ++h) {
      sum += a.coeff[h] * b.coeff[g.mul(g.inv(h), z)];
    }
    out.coeff[z] = sum;
  }
  return out;
}

AlgebraElement random_int_element(const FiniteView& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  AlgebraElement a = algebra_zero(g);
  for (auto& c : a.coeff) c = {double(coeff(rng)), double(coeff(rng))};
  return a;
}

bool algebra_equal(const AlgebraElement& a, const AlgebraElement& b) {
  return a.coeff == b.coeff;  // exact: integer arithmetic throughout
}

std::vector<double> sorted_traces(const CentralDecomposition& dec) {
  std::vector<double> out;
  for (const auto& e : dec.idempotents) out.push_back(e.trace);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("convolution and star") {
  FiniteView s3 = finite_view(*builtin_group("S3"));

  SUBCASE("delta functions multiply like group elements") {
    for (std::uint32_t a = 0; a < s3.order(); ++a) {
      for (std::uint32_t b = 0; b < s3.order(); ++b) {
        CHECK(algebra_equal(convolve(s3, delta(s3, a), delta(s3, b)),
                            delta(s3, s3.mul(a, b))));
      }
      CHECK(algebra_equal(star(s3, delta(s3, a)), delta(s3, s3.inv(a))));
    }
  }

  SUBCASE("matches the brute-force oracle exactly on integer coefficients") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
      AlgebraElement a = random_int_element(s3, rng);
      AlgebraElement b = random_int_element(s3, rng);
      CHECK(algebra_equal(convolve(s3, a, b), slow_convolve(s3, a, b)));
    }
  }

  SUBCASE("star is an involutive anti-homomorphism") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 50; ++trial) {
      AlgebraElement a = random_int_element(s3, rng);
      AlgebraElement b = random_int_element(s3, rng);
      CHECK(algebra_equal(star(s3, star(s3, a)), a));
      CHECK(algebra_equal(star(s3, convolve(s3, a, b)),
                          convolve(s3, star(s3, b), star(s3, a))));
      AlgebraElement c = random_int_element(s3, rng);
      CHECK(algebra_equal(convolve(s3, convolve(s3, a, b), c),
                          convolve(s3, a, convolve(s3, b, c))));
    }
  }
}

TEST_CASE("trace functional") {
  FiniteView s3 = finite_view(*builtin_group("S3"));
  CHECK(trace(s3, delta(s3, s3.identity())) == std::complex<double>(6.0));
  for (std::uint32_t g = 0; g < s3.order(); ++g) {
    if (g != s3.identity()) {
      CHECK(trace(s3, delta(s3, g)) == std::complex<double>(0.0));
    }
  }
  CHECK(trace(s3, averaging_projection(s3)) == std::complex<double>(1.0));

  SUBCASE("averaging projection absorbs translates, exactly when unscaled") {
    // S = sum_g u_g satisfies S u_h S = |G| S with integer arithmetic.
    AlgebraElement s = algebra_zero(s3);
    for (auto& c : s.coeff) c = 1.0;
    for (std::uint32_t h = 0; h < s3.order(); ++h) {
      AlgebraElement lhs =
          convolve(s3, convolve(s3, s, delta(s3, h)), s);
      CHECK(algebra_equal(lhs, scale(s, 6.0)));
    }
  }

  SUBCASE("normalized projection is idempotent to machine precision") {
    AlgebraElement en = averaging_projection(s3);
    CHECK(max_norm(sub(convolve(s3, en, en), en)) < 1e-12);
    for (std::uint32_t h = 0; h < s3.order(); ++h) {
      AlgebraElement mid = convolve(s3, convolve(s3, en, delta(s3, h)), en);
      CHECK(max_norm(sub(mid, en)) < 1e-12);
    }
  }
}

TEST_CASE("minimal central idempotents") {
  SUBCASE("trivial group") {
    FiniteView v = finite_view(*make_finite_group(
        "1", std::make_shared<const FiniteTable>(FiniteTable::cyclic(1))));
    CentralDecomposition dec = minimal_central_idempotents(v);
    REQUIRE(dec.idempotents.size() == 1);
    CHECK(dec.idempotents[0].trace == doctest::Approx(1.0));
  }

  SUBCASE("catalog trace multisets") {
    struct Case {
      const char* name;
      std::vector<double> traces;
    };
    for (const Case& c :
         {Case{"Z4", {1, 1, 1, 1}}, Case{"S3", {1, 1, 4}},
          Case{"A4", {1, 1, 1, 9}}, Case{"S4", {1, 1, 4, 9, 9}},
          Case{"D4", {1, 1, 1, 1, 4}}, Case{"Q8", {1, 1, 1, 1, 4}},
          Case{"A5", {1, 9, 9, 16, 25}}}) {
      FiniteView v = finite_view(*builtin_group(c.name));
      CentralDecomposition dec = minimal_central_idempotents(v);
      std::vector<double> got = sorted_traces(dec);
      REQUIRE(got.size() == c.traces.size());
      for (std::size_t i = 0; i < got.size(); ++i) {
        CHECK(got[i] == doctest::Approx(c.traces[i]).epsilon(1e-9));
      }
    }
  }

  SUBCASE("full verification through dense convolution") {
    FiniteView v = finite_view(*builtin_group("S3"));
    CentralDecomposition dec = minimal_central_idempotents(v);
    AlgebraElement total = algebra_zero(v);
    for (const auto& e : dec.idempotents) {
      AlgebraElement dense = expand(v, dec.classes, e);
      CHECK(max_norm(sub(convolve(v, dense, dense), dense)) < 1e-9);
      CHECK(max_norm(sub(star(v, dense), dense)) < 1e-9);
      // Central: commutes with every group translate.
      for (std::uint32_t g = 0; g < v.order(); ++g) {
        CHECK(max_norm(sub(convolve(v, delta(v, g), dense),
                           convolve(v, dense, delta(v, g)))) < 1e-12);
      }
      CHECK(std::abs(trace(v, dense).real() - e.trace) < 1e-9);
      total = add(total, dense);
    }
    CHECK(max_norm(sub(total, algebra_one(v))) < 1e-9);
    for (std::size_t i = 0; i < dec.idempotents.size(); ++i) {
      for (std::size_t j = i + 1; j < dec.idempotents.size(); ++j) {
        AlgebraElement p =
            convolve(v, expand(v, dec.classes, dec.idempotents[i]),
                     expand(v, dec.classes, dec.idempotents[j]));
        CHECK(max_norm(p) < 1e-9);
      }
    }
  }

  SUBCASE("cyclic groups match the dual-group formula") {
    for (std::uint32_t n : {4u, 6u}) {
      auto g = make_finite_group(
          "Z" + std::to_string(n),
          std::make_shared<const FiniteTable>(FiniteTable::cyclic(n)));
      FiniteView v = finite_view(*g);
      CentralDecomposition dec = minimal_central_idempotents(v);
      REQUIRE(dec.idempotents.size() == n);

      // e_phi = (1/n) sum_j phi(j) delta_j for each character phi.
      std::vector<bool> matched(n, false);
      for (std::uint32_t k = 0; k < n; ++k) {
        AlgebraElement expected = algebra_zero(v);
        for (std::uint32_t j = 0; j < n; ++j) {
          double angle = 2.0 * 3.14159265358979323846 * k * j / n;
          expected.coeff[j] =
              std::complex<double>(std::cos(angle), std::sin(angle)) /
              double(n);
        }
        bool found = false;
        for (std::size_t i = 0; i < dec.idempotents.size() && !found; ++i) {
          if (matched[i]) continue;
          AlgebraElement dense = expand(v, dec.classes, dec.idempotents[i]);
          if (max_norm(sub(dense, expected)) < 1e-9) {
            matched[i] = true;
            found = true;
          }
        }
        CHECK(found);
      }
    }
  }

  SUBCASE("unsplittable configuration fails hard after retries") {
    FiniteView v = finite_view(*builtin_group("S3"));
    IdempotentOptions opt;
    opt.gap = 1e9;  // groups every eigenvalue into one block
    opt.max_retries = 1;
    CHECK_THROWS_AS(minimal_central_idempotents(v, opt), Error);
  }

  SUBCASE("deterministic for a fixed seed") {
    FiniteView v = finite_view(*builtin_group("S4"));
    IdempotentOptions opt;
    opt.seed = 99;
    CentralDecomposition a = minimal_central_idempotents(v, opt);
    CentralDecomposition b = minimal_central_idempotents(v, opt);
    REQUIRE(a.idempotents.size() == b.idempotents.size());
    for (std::size_t i = 0; i < a.idempotents.size(); ++i) {
      CHECK(a.idempotents[i].class_coeff == b.idempotents[i].class_coeff);
    }

    // A different seed reaches the same family.
    IdempotentOptions opt2;
    opt2.seed = 1234;
    CentralDecomposition c = minimal_central_idempotents(v, opt2);
    for (std::size_t i = 0; i < a.idempotents.size(); ++i) {
      double dev = 0.0;
      for (std::size_t l = 0; l < a.idempotents[i].class_coeff.size(); ++l) {
        dev = std::max(dev, std::abs(a.idempotents[i].class_coeff[l] -
                                     c.idempotents[i].class_coeff[l]));
      }
      CHECK(dev < 1e-9);
    }
  }
}

TEST_CASE("commutator subgroups") {
  SUBCASE("classical values") {
    FiniteView s3 = finite_view(*builtin_group("S3"));
    auto c = commutator_closure(s3);
    CHECK(c.size() == 3);  // A3

    FiniteView a4 = finite_view(*builtin_group("A4"));
    CHECK(commutator_closure(a4).size() == 4);  // V4

    FiniteView a5 = finite_view(*builtin_group("A5"));
    CHECK(commutator_closure(a5).size() == 60);

    FiniteView z4 = finite_view(*builtin_group("Z4"));
    CHECK(commutator_closure(z4).size() == 1);

    FiniteView q8 = finite_view(*builtin_group("Q8"));
    CHECK(commutator_closure(q8).size() == 2);
  }

  SUBCASE("lattice identity against the abelian-quotient intersection") {
    for (const char* name : {"Z2", "Z4", "Z2xZ2", "S3", "S4", "A4", "D4",
                             "Q8", "A5"}) {
      FiniteView v = finite_view(*builtin_group(name));
      CommutatorReport rep = commutator_subgroup_report(v);
      CHECK(rep.intersection_matches);
      CHECK_FALSE(rep.abelian_quotient_normals.empty());
    }
  }

  SUBCASE("enumeration cap") {
    FiniteView big = finite_view(*builtin_group("A5xA5"));
    CHECK_THROWS_AS(normal_subgroups(big), CapExceeded);
  }
}

TEST_CASE("fixed point inclusion verdicts") {
  auto check = [](const char* name, bool regular, bool singular) {
    FiniteView v = finite_view(*builtin_group(name));
    FixedPointReport rep = fixed_point_inclusion_report(v);
    CHECK(rep.regular == regular);
    CHECK(rep.singular == singular);
  };
  check("Z2xZ2", true, false);
  check("Z4", true, false);
  check("A5", false, true);
  check("A5xA5", false, true);
  check("S3", false, false);
  check("S4", false, false);

  FiniteView s3 = finite_view(*builtin_group("S3"));
  FixedPointReport rep = fixed_point_inclusion_report(s3);
  CHECK(rep.commutator.size() == 3);  // the normalizer algebra sits over A3
}
