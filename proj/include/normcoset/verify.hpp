#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "normcoset/conjugacy.hpp"
#include "normcoset/free_bimodule.hpp"
#include "normcoset/json_io.hpp"

namespace normcoset {

/// One entry of the bundled verification catalog. The ids key the example
/// families the toolkit reproduces end to end; `pass` requires every
/// sub-assertion to hold, while `inconclusive` marks runs whose radius was
/// too small to attest anything.
struct ExampleOutcome {
  std::string id;
  bool pass = false;
  bool inconclusive = false;
  double seconds = 0.0;
  ordered_json details;
};

struct VerifyOptions {
  int radius = -1;  // -1: per-example default
  std::uint64_t seed = 1;
  std::size_t cap = kDefaultElementCap;
};

inline std::vector<std::string> known_example_ids() {
  return {"6.3", "7.3", "7.4", "5.4-catalog", "4.x-product"};
}

namespace verify_detail {

class Timer {
 public:
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

/// The one-sided normalizer semigroup of H_0: elements v phi^k with v
/// supported on indices >= 0 and k >= 0; two-sided only for k = 0.
inline bool hn_one_sided_expected(const Element& e, long long n) {
  const auto& x = std::get<FreeByZElement>(e.v);
  return x.shift >= 0 && detail::word_indices_at_least(x.word, n);
}

inline bool hn_two_sided_expected(const Element& e, long long n) {
  const auto& x = std::get<FreeByZElement>(e.v);
  return x.shift == 0 && detail::word_indices_at_least(x.word, n);
}

}  // namespace verify_detail

/// Normalizer classification of the shift-extension pair: the one-sided set
/// within the ball must match {v phi^k : v in H_0, k >= 0} exactly and the
/// two-sided set must be H_0 itself.
inline ExampleOutcome run_example_63(const VerifyOptions& opt) {
  verify_detail::Timer timer;
  ExampleOutcome out;
  out.id = "6.3";
  const int radius = opt.radius < 0 ? 4 : opt.radius;
  out.details["radius"] = radius;
  if (radius < 1) {
    out.inconclusive = true;
    out.details["reason"] = "radius too small to classify anything beyond e";
    out.seconds = timer.elapsed();
    return out;
  }
  auto g = builtin_group("Hn");
  auto h = builtin_subgroup(g, "H0");
  BallClassification rep = normalizer_ball_report(*g, *h, radius, opt.cap);

  std::size_t mismatches = 0;
  std::size_t expected_one_sided = 0, expected_two_sided = 0;
  for (std::size_t i = 0; i < rep.ball.size(); ++i) {
    const Element& e = rep.ball.elements[i];
    const bool two = verify_detail::hn_two_sided_expected(e, 0);
    const bool one = verify_detail::hn_one_sided_expected(e, 0);
    expected_two_sided += two;
    expected_one_sided += one && !two;
    NormalizerVerdict want = two   ? NormalizerVerdict::TwoSided
                             : one ? NormalizerVerdict::OneSidedOnly
                                   : NormalizerVerdict::NonNormalizing;
    if (rep.classes[i].verdict != want) ++mismatches;
  }
  out.details["ball_size"] = rep.ball.size();
  out.details["two_sided"] = rep.two_sided;
  out.details["one_sided_only"] = rep.one_sided_only;
  out.details["non_normalizing"] = rep.non_normalizing;
  out.details["expected_two_sided"] = expected_two_sided;
  out.details["expected_one_sided_only"] = expected_one_sided;
  out.details["misclassifications"] = mismatches;

  IrreducibilityResult irr = irreducibility_check(*g, *h, std::min(radius, 3), opt.cap);
  out.details["irreducible"] =
      irr.verdict == IrreducibilityVerdict::Irreducible;

  out.pass = mismatches == 0 && rep.two_sided == expected_two_sided &&
             rep.one_sided_only == expected_one_sided &&
             irr.verdict == IrreducibilityVerdict::Irreducible;
  out.seconds = timer.elapsed();
  return out;
}

/// Orthogonality combinatorics in the rank-3 free group over the rank-2
/// factor: products x w y form collision-free grids with additive lengths
/// for middle words bounded by the third generator, the grid-to-grid
/// correspondences are bijections, and no double coset off H shows a finite
/// left-coset count.
inline ExampleOutcome run_example_73(const VerifyOptions& opt) {
  verify_detail::Timer timer;
  ExampleOutcome out;
  out.id = "7.3";
  const int radius = opt.radius < 0 ? 4 : opt.radius;
  out.details["radius"] = radius;
  if (radius < 1) {
    out.inconclusive = true;
    out.details["reason"] = "radius too small to populate the grids";
    out.seconds = timer.elapsed();
    return out;
  }
  auto g = builtin_group("F3");
  auto h = builtin_subgroup(g, "F2");
  const Element c = free_element(reduce_word<long long>({{2, 1}}));
  const Element c2 = free_element(reduce_word<long long>({{2, 2}}));
  const Element cac = free_element(reduce_word<long long>({{2, 1}, {0, 1}, {2, -1}}));

  bool ok = true;
  std::size_t total_pairs = 0;
  ordered_json words = ordered_json::array();
  for (const auto& w : {c, c2, cac}) {
    WordGridReport rep = free_bimodule_word_check(*g, *h, w, radius, opt.cap);
    ordered_json jw;
    jw["word"] = to_string(*g, w);
    jw["pairs"] = rep.pairs_checked;
    jw["collisions"] = rep.collisions;
    jw["length_defects"] = rep.length_defects;
    words.push_back(std::move(jw));
    ok = ok && rep.ok();
    total_pairs += rep.pairs_checked;
  }
  out.details["words"] = std::move(words);
  out.details["total_pairs"] = total_pairs;

  BijectionReport b1 = intertwiner_bijection_check(*g, *h, c, c2, radius, opt.cap);
  BijectionReport b2 = intertwiner_bijection_check(*g, *h, c, cac, radius, opt.cap);
  out.details["bijection_c_c2"] = b1.bijection;
  out.details["bijection_c_cac"] = b2.bijection;
  ok = ok && b1.bijection && b2.bijection;

  // No finite-trace class besides H itself in the ball decomposition.
  BallDecomposition dec = full_ball_decomposition(*g, *h, std::min(radius, 3), opt.cap);
  bool only_h_exact = true;
  for (const auto& cls : dec.classes) {
    const bool is_h = membership(*h, cls.representative);
    if (cls.verdict == CosetVerdict::ExactlyN && !is_h) only_h_exact = false;
    if (is_h && !(cls.verdict == CosetVerdict::ExactlyN && cls.n == 1)) {
      only_h_exact = false;
    }
  }
  out.details["double_cosets"] = dec.classes.size();
  out.details["only_h_has_finite_trace"] = only_h_exact;
  ok = ok && only_h_exact;

  const bool enough_pairs = total_pairs >= 10000;
  out.details["enough_pairs"] = enough_pairs;
  out.pass = ok && enough_pairs;
  out.seconds = timer.elapsed();
  return out;
}

/// Trace-2 family in the Z ⋊ Z2 extension: every double coset off H is
/// exactly two left cosets, labelled by opposite translation parts, and the
/// decomposition partitions the ball.
inline ExampleOutcome run_example_74(const VerifyOptions& opt) {
  verify_detail::Timer timer;
  ExampleOutcome out;
  out.id = "7.4";
  const int radius = opt.radius < 0 ? 4 : opt.radius;
  out.details["radius"] = radius;
  if (radius < 1) {
    out.inconclusive = true;
    out.details["reason"] = "radius too small to leave the subgroup";
    out.seconds = timer.elapsed();
    return out;
  }
  auto g = builtin_group("Ex74");
  auto h = builtin_subgroup(g, "H");
  BallDecomposition dec = full_ball_decomposition(*g, *h, radius, opt.cap);

  bool ok = true;
  std::size_t off_h = 0;
  for (const auto& cls : dec.classes) {
    if (membership(*h, cls.representative)) {
      ok = ok && cls.verdict == CosetVerdict::ExactlyN && cls.n == 1;
      continue;
    }
    ++off_h;
    if (cls.verdict != CosetVerdict::ExactlyN || cls.n != 2 ||
        cls.left_cosets_found.size() != 2) {
      ok = false;
      continue;
    }
    // Left-coset labels must be the opposite translation pair {n, -n}.
    const auto& a =
        std::get<Ex74Element>(cls.left_cosets_found[0].representative.v);
    const auto& b =
        std::get<Ex74Element>(cls.left_cosets_found[1].representative.v);
    if (a.twist.n != -b.twist.n || a.twist.n == 0) ok = false;
  }
  out.details["ball_size"] = dec.ball.size();
  out.details["double_cosets"] = dec.classes.size();
  out.details["classes_off_h"] = off_h;

  IrreducibilityResult irr = irreducibility_check(*g, *h, std::min(radius, 3), opt.cap);
  out.details["irreducible"] =
      irr.verdict == IrreducibilityVerdict::Irreducible;

  out.pass = ok && off_h >= 1 &&
             irr.verdict == IrreducibilityVerdict::Irreducible;
  out.seconds = timer.elapsed();
  return out;
}

/// Commutator-subgroup catalog: [G,G] from commutator closure equals the
/// intersection of normal subgroups with abelian quotient for every built-in
/// finite group of order <= 60 (with the classical values for S3, A4, A5),
/// and the group-algebra verdicts match: regular iff abelian, singular iff
/// perfect, trace accounting exact.
inline ExampleOutcome run_example_54(const VerifyOptions& opt) {
  verify_detail::Timer timer;
  ExampleOutcome out;
  out.id = "5.4-catalog";
  bool ok = true;
  ordered_json groups = ordered_json::array();

  const std::vector<std::string> small = {"Z2", "Z4", "Z2xZ2", "S3", "S4",
                                          "A4", "D4", "Q8", "A5"};
  for (const auto& name : small) {
    FiniteView v = finite_view(*builtin_group(name));
    CommutatorReport rep = commutator_subgroup_report(v);
    ordered_json jg;
    jg["group"] = name;
    jg["commutator_size"] = rep.commutator_subgroup.size();
    jg["intersection_matches"] = rep.intersection_matches;
    ok = ok && rep.intersection_matches;
    groups.push_back(std::move(jg));

    if (name == "S3") ok = ok && rep.commutator_subgroup.size() == 3;
    if (name == "A4") ok = ok && rep.commutator_subgroup.size() == 4;
    if (name == "A5") ok = ok && rep.commutator_subgroup.size() == 60;
  }
  out.details["eq_5_17"] = std::move(groups);

  ordered_json verdicts = ordered_json::array();
  std::vector<std::string> all = small;
  all.push_back("A5xA5");
  for (const auto& name : all) {
    FiniteView v = finite_view(*builtin_group(name));
    IdempotentOptions iopt;
    iopt.seed = opt.seed;
    FixedPointReport rep = fixed_point_inclusion_report(v, iopt);
    double trace_sum = 0.0;
    bool squares = true;
    for (std::size_t i = 0; i < rep.idempotent_traces.size(); ++i) {
      trace_sum += rep.idempotent_traces[i];
      squares = squares &&
                std::abs(rep.idempotent_traces[i] -
                         double(rep.dimensions[i]) * rep.dimensions[i]) <= 1e-6;
    }
    const bool sum_ok = std::abs(trace_sum - double(v.order())) <= 1e-6;
    ordered_json jg;
    jg["group"] = name;
    jg["regular"] = rep.regular;
    jg["singular"] = rep.singular;
    jg["abelian"] = rep.abelian;
    jg["trace_sum_ok"] = sum_ok;
    verdicts.push_back(std::move(jg));
    ok = ok && sum_ok && squares && rep.regular == rep.abelian &&
         rep.singular == (rep.commutator.size() == v.order());
    if (name == "A5" || name == "A5xA5") ok = ok && rep.singular;
    if (name == "Z2" || name == "Z4" || name == "Z2xZ2") ok = ok && rep.regular;
    if (name == "S3" || name == "S4") ok = ok && !rep.regular && !rep.singular;
  }
  out.details["verdicts"] = std::move(verdicts);
  out.pass = ok;
  out.seconds = timer.elapsed();
  return out;
}

/// Product shadow: normalizer classification over a product pair is the
/// conjunction of the component classifications, checked exhaustively on
/// the product ball for the shift-extension pair and on whole finite
/// product groups.
inline ExampleOutcome run_example_4x(const VerifyOptions& opt) {
  verify_detail::Timer timer;
  ExampleOutcome out;
  out.id = "4.x-product";
  const int radius = opt.radius < 0 ? 2 : opt.radius;
  out.details["radius"] = radius;
  if (radius < 1) {
    out.inconclusive = true;
    out.details["reason"] = "radius too small to explore the product";
    out.seconds = timer.elapsed();
    return out;
  }

  auto hn_group = builtin_group("Hn");
  auto h0 = builtin_subgroup(hn_group, "H0");
  ProductNormalizerReport infinite_rep =
      product_normalizer_check(*h0, *h0, radius, opt.cap);
  out.details["hn_x_hn"] = {{"checked", infinite_rep.checked},
                            {"mismatches", infinite_rep.mismatches},
                            {"sample_violations", infinite_rep.sample_violations}};

  auto s3 = builtin_group("S3");
  auto a3 = builtin_subgroup(s3, "A3");
  ProductNormalizerReport s3_rep = product_normalizer_check(*a3, *a3, 8, opt.cap);
  out.details["s3_x_s3"] = {{"checked", s3_rep.checked},
                            {"mismatches", s3_rep.mismatches},
                            {"exhaustive", s3_rep.checked == 36}};

  auto s4 = builtin_group("S4");
  auto d4 = builtin_subgroup(s4, "D4");
  ProductNormalizerReport mixed_rep = product_normalizer_check(*d4, *a3, 10, opt.cap);
  out.details["s4_x_s3"] = {{"checked", mixed_rep.checked},
                            {"mismatches", mixed_rep.mismatches},
                            {"exhaustive", mixed_rep.checked == 144}};

  out.pass = infinite_rep.ok && s3_rep.ok && s3_rep.checked == 36 &&
             mixed_rep.ok && mixed_rep.checked == 144;
  out.seconds = timer.elapsed();
  return out;
}

inline ExampleOutcome run_example(const std::string& id,
                                  const VerifyOptions& opt) {
  if (id == "6.3") return run_example_63(opt);
  if (id == "7.3") return run_example_73(opt);
  if (id == "7.4") return run_example_74(opt);
  if (id == "5.4-catalog") return run_example_54(opt);
  if (id == "4.x-product") return run_example_4x(opt);
  throw Unsupported("unknown example id '" + id + "'");
}

inline ordered_json to_json(const std::vector<ExampleOutcome>& outcomes,
                            std::uint64_t seed) {
  ordered_json out;
  out["seed"] = seed;
  ordered_json results = ordered_json::array();
  bool all_pass = true, any_inconclusive = false;
  for (const auto& o : outcomes) {
    ordered_json jo;
    jo["example"] = o.id;
    jo["pass"] = o.pass;
    jo["inconclusive"] = o.inconclusive;
    jo["details"] = o.details;
    results.push_back(std::move(jo));
    all_pass = all_pass && o.pass;
    any_inconclusive = any_inconclusive || o.inconclusive;
  }
  out["results"] = std::move(results);
  out["all_pass"] = all_pass;
  out["any_inconclusive"] = any_inconclusive;
  return out;
}

}  // namespace normcoset
