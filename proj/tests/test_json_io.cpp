#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "normcoset/json_io.hpp"
#include "normcoset/verify.hpp"

using namespace normcoset;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& content)
      : path(name) {
    std::ofstream out(path, std::ios::binary);
    out << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("group definition files") {
  SUBCASE("finite table") {
    TempFile f("z3_group.json", R"({
      "name": "Z3",
      "family": "finite",
      "identity": 0,
      "table": [[0,1,2],[1,2,0],[2,0,1]],
      "generators": [1],
      "subgroup": {"kind": "members", "members": [0]}
    })");
    GroupSubgroupPair pair = load_group_file(f.path);
    CHECK(pair.group->table().order == 3);
    REQUIRE(pair.subgroup);
    CHECK(membership(*pair.subgroup, identity(*pair.group)));
    CHECK_FALSE(membership(*pair.subgroup, finite_element(1)));
  }

  SUBCASE("permutation generators") {
    TempFile f("s3_group.json", R"({
      "family": "finite",
      "permutation_generators": [[1,0,2],[1,2,0]]
    })");
    GroupSubgroupPair pair = load_group_file(f.path);
    CHECK(pair.group->table().order == 6);
  }

  SUBCASE("shift extension with subgroup and window") {
    TempFile f("fz_group.json", R"({
      "family": "free_by_z",
      "window": [-1, 1],
      "subgroup": {"kind": "hn", "n": 0}
    })");
    GroupSubgroupPair pair = load_group_file(f.path);
    REQUIRE(pair.subgroup);
    CHECK(membership(*pair.subgroup,
                     free_by_z_element(
                         reduce_word<long long>({{3, 1}}), 0)));
    CHECK_FALSE(membership(*pair.subgroup, free_by_z_element({}, 1)));
  }

  SUBCASE("product of free factors") {
    TempFile f("prod_group.json", R"({
      "family": "product",
      "left": {"family": "free", "rank": 3},
      "right": {"family": "free", "rank": 2},
      "subgroup": {
        "kind": "product",
        "left": {"kind": "free_factor", "generators": [0, 1]},
        "right": {"kind": "free_factor", "generators": [0]}
      }
    })");
    GroupSubgroupPair pair = load_group_file(f.path);
    REQUIRE(pair.subgroup);
    CHECK(membership(*pair.subgroup, identity(*pair.group)));
  }

  SUBCASE("malformed input is rejected") {
    TempFile bad_table("bad_table.json", R"({
      "family": "finite", "identity": 0, "table": [[0,1],[1,1]]
    })");
    CHECK_THROWS_AS(load_group_file(bad_table.path), ValidationError);

    TempFile no_family("no_family.json", R"({"rank": 2})");
    CHECK_THROWS_AS(load_group_file(no_family.path), ValidationError);

    CHECK_THROWS_AS(load_group_file("does_not_exist.json"), Error);
  }
}

TEST_CASE("report serialization") {
  auto g = builtin_group("Ex74");
  auto h = builtin_subgroup(g, "H");
  BallDecomposition dec = full_ball_decomposition(*g, *h, 2);
  ordered_json j = to_json(*g, dec);

  CHECK(j.contains("double_cosets"));
  for (const auto& cls : j["double_cosets"]) {
    CHECK(cls.contains("representative"));
    CHECK(cls.contains("verdict"));
    CHECK(cls.contains("left_coset_ids"));
    CHECK(cls["evidence"].contains("radii"));
    CHECK(cls["evidence"].contains("counts"));
    if (cls["verdict"] == "exactly_n") {
      CHECK(cls.contains("trace"));
      CHECK(cls["trace"].get<std::size_t>() >= 1);
    }
  }

  SUBCASE("byte-identical across repeated runs") {
    VerifyOptions opt;
    opt.radius = 2;
    std::vector<ExampleOutcome> a, b;
    for (const auto& id : known_example_ids()) {
      a.push_back(run_example(id, opt));
      b.push_back(run_example(id, opt));
    }
    CHECK(to_json(a, opt.seed).dump(2) == to_json(b, opt.seed).dump(2));
  }
}

TEST_CASE("verification catalog outcomes") {
  VerifyOptions opt;  // per-example default radii
  for (const auto& id : known_example_ids()) {
    ExampleOutcome o = run_example(id, opt);
    CHECK(o.pass);
    CHECK_FALSE(o.inconclusive);
  }

  SUBCASE("radius zero flags inconclusive") {
    VerifyOptions zero;
    zero.radius = 0;
    ExampleOutcome o = run_example("6.3", zero);
    CHECK_FALSE(o.pass);
    CHECK(o.inconclusive);
  }

  SUBCASE("unknown example id") {
    CHECK_THROWS_AS(run_example("9.9", VerifyOptions{}), Unsupported);
  }
}
