// Command-line front end: classify normalizers, decompose balls into double
// cosets, analyze finite group algebras, and run the bundled verification
// catalog. All reports are JSON; a human-readable summary goes to stdout.
//
// Exit codes: 0 success, 2 inconclusive verdicts present, 1 error.

#include <cstdio>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "normcoset/normcoset.hpp"

namespace {

using namespace normcoset;

struct CommonOptions {
  std::string group;
  std::string subgroup;
  int radius = 3;
  std::uint64_t seed = 1;
  std::string out_path;
  std::size_t max_elements = kDefaultElementCap;
  std::size_t max_normal_subgroups = 4096;
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool needs_group) {
  auto* g = cmd->add_option("--group", opt.group,
                            "built-in group name or path to a group JSON file");
  if (needs_group) g->required();
  cmd->add_option("--subgroup", opt.subgroup,
                  "built-in subgroup name (default: the group's usual pair)");
  cmd->add_option("--radius", opt.radius, "exploration radius");
  cmd->add_option("--seed", opt.seed, "random seed for reproducible output");
  cmd->add_option("--out", opt.out_path, "write the JSON report to this path");
  cmd->add_option("--max-elements", opt.max_elements,
                  "hard cap on enumerated elements")
      ->envname("NORMCOSET_CAP");
  cmd->add_option("--max-normal-subgroups", opt.max_normal_subgroups,
                  "cap on enumerated normal subgroups");
}

bool looks_like_path(const std::string& name) {
  return name.find('/') != std::string::npos ||
         name.find(".json") != std::string::npos;
}

GroupSubgroupPair resolve_pair(const CommonOptions& opt) {
  if (looks_like_path(opt.group)) {
    GroupSubgroupPair pair = load_group_file(opt.group);
    if (!opt.subgroup.empty()) {
      pair.subgroup = builtin_subgroup(pair.group, opt.subgroup);
    }
    if (!pair.subgroup) {
      throw Unsupported(
          "group file has no \"subgroup\" entry and no --subgroup was given");
    }
    return pair;
  }
  return builtin_pair(opt.group, opt.subgroup);
}

void emit(const ordered_json& report, const CommonOptions& opt) {
  if (!opt.out_path.empty()) {
    write_report(report, opt.out_path);
  } else {
    std::cout << report.dump(2) << "\n";
  }
}

int cmd_normalizers(const CommonOptions& opt) {
  GroupSubgroupPair pair = resolve_pair(opt);
  BallClassification rep = normalizer_ball_report(*pair.group, *pair.subgroup,
                                                  opt.radius, opt.max_elements);
  ordered_json report;
  report["command"] = "normalizers";
  report["group"] = pair.group->name;
  report["subgroup"] = pair.subgroup->name;
  report["seed"] = opt.seed;
  report.update(to_json(*pair.group, rep));
  emit(report, opt);
  std::printf("%s / %s, radius %d: %zu elements, %zu two-sided, %zu one-sided"
              " only, %zu non-normalizing\n",
              pair.group->name.c_str(), pair.subgroup->name.c_str(), opt.radius,
              rep.ball.size(), rep.two_sided, rep.one_sided_only,
              rep.non_normalizing);
  return 0;
}

int cmd_bimodules(const CommonOptions& opt) {
  GroupSubgroupPair pair = resolve_pair(opt);
  BallDecomposition dec = full_ball_decomposition(*pair.group, *pair.subgroup,
                                                  opt.radius, opt.max_elements);
  ordered_json report;
  report["command"] = "bimodules";
  report["group"] = pair.group->name;
  report["subgroup"] = pair.subgroup->name;
  report["seed"] = opt.seed;
  report.update(to_json(*pair.group, dec));
  emit(report, opt);

  std::size_t exact = 0, infinite = 0, atleast = 0;
  for (const auto& c : dec.classes) {
    switch (c.verdict) {
      case CosetVerdict::ExactlyN: ++exact; break;
      case CosetVerdict::ApparentlyInfinite: ++infinite; break;
      case CosetVerdict::AtLeast: ++atleast; break;
    }
  }
  std::printf("%s / %s, radius %d: %zu double cosets (%zu exact, %zu apparently"
              " infinite, %zu at-least)\n",
              pair.group->name.c_str(), pair.subgroup->name.c_str(), opt.radius,
              dec.classes.size(), exact, infinite, atleast);
  return atleast > 0 ? 2 : 0;
}

int cmd_group_algebra(const CommonOptions& opt) {
  std::shared_ptr<const GroupSpec> group =
      looks_like_path(opt.group) ? load_group_file(opt.group).group
                                 : builtin_group(opt.group);
  FiniteView view = finite_view(*group);
  IdempotentOptions iopt;
  iopt.seed = opt.seed;
  CentralDecomposition dec = minimal_central_idempotents(view, iopt);
  FixedPointReport fixed = fixed_point_inclusion_report(view, iopt);

  ordered_json report;
  report["command"] = "group-algebra";
  report["group"] = group->name;
  report["seed"] = opt.seed;
  report.update(to_json(view, dec));
  report["fixed_point_inclusion"] = to_json(fixed);
  if (view.order() <= 200) {
    CommutatorReport comm = commutator_subgroup_report(
        view, 200, opt.max_normal_subgroups);
    report["abelian_quotient_normal_count"] =
        comm.abelian_quotient_normals.size();
    report["intersection_matches"] = comm.intersection_matches;
  }
  emit(report, opt);

  std::string verdict = fixed.regular ? "regular"
                        : fixed.singular ? "singular"
                                         : "intermediate";
  std::printf("%s: |G|=%llu, %zu idempotents, [G,G] size %zu, %s\n",
              group->name.c_str(),
              static_cast<unsigned long long>(view.order()),
              dec.idempotents.size(), fixed.commutator.size(),
              verdict.c_str());
  return 0;
}

int cmd_verify_paper(const CommonOptions& opt,
                     const std::vector<std::string>& example_ids,
                     bool radius_given) {
  VerifyOptions vopt;
  vopt.radius = radius_given ? opt.radius : -1;
  vopt.seed = opt.seed;
  vopt.cap = opt.max_elements;

  std::vector<std::string> ids =
      example_ids.empty() ? known_example_ids() : example_ids;
  std::vector<ExampleOutcome> outcomes;
  for (const auto& id : ids) {
    outcomes.push_back(run_example(id, vopt));
  }

  ordered_json report = to_json(outcomes, opt.seed);
  report["command"] = "verify-paper";
  emit(report, opt);

  bool all_pass = true, any_inconclusive = false;
  for (const auto& o : outcomes) {
    std::printf("[%s] %-12s (%.2fs)\n",
                o.pass ? "PASS" : (o.inconclusive ? "????" : "FAIL"),
                o.id.c_str(), o.seconds);
    all_pass = all_pass && o.pass;
    any_inconclusive = any_inconclusive || o.inconclusive;
  }
  if (all_pass) return 0;
  return any_inconclusive ? 2 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Group-level normalizer, coset-bimodule and group-algebra "
               "computations for subgroup pairs"};
  app.require_subcommand(1);

  CommonOptions norm_opt, bimod_opt, alg_opt, verify_opt;
  std::vector<std::string> example_ids;

  CLI::App* norm = app.add_subcommand(
      "normalizers", "classify Ball(r) into two-sided / one-sided / "
                     "non-normalizing elements");
  add_common(norm, norm_opt, true);

  CLI::App* bimod = app.add_subcommand(
      "bimodules", "partition Ball(r) into double cosets with left-coset "
                   "trace verdicts");
  add_common(bimod, bimod_opt, true);

  CLI::App* alg = app.add_subcommand(
      "group-algebra", "minimal central idempotents, commutator subgroup and "
                       "regular/singular verdict for a finite group");
  add_common(alg, alg_opt, true);

  CLI::App* verify = app.add_subcommand(
      "verify-paper", "run the bundled verification catalog end to end");
  add_common(verify, verify_opt, false);
  verify->add_option("--example", example_ids,
                     "example ids to run (default: all)");

  try {
    app.parse(argc, argv);
    if (norm->parsed()) return cmd_normalizers(norm_opt);
    if (bimod->parsed()) return cmd_bimodules(bimod_opt);
    if (alg->parsed()) return cmd_group_algebra(alg_opt);
    if (verify->parsed()) {
      return cmd_verify_paper(verify_opt, example_ids,
                              verify->count("--radius") > 0);
    }
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 1;
}
