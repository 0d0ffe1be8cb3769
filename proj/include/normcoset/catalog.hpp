#pragma once

#include <memory>
#include <string>
#include <vector>

#include "normcoset/group.hpp"
#include "normcoset/subgroup.hpp"

namespace normcoset {

/// A named group together with an optional default subgroup, as resolved
/// from the built-in catalog.
struct GroupSubgroupPair {
  std::shared_ptr<const GroupSpec> group;
  std::shared_ptr<const SubgroupOracle> subgroup;  // may be null
};

namespace catalog_detail {

inline std::shared_ptr<const FiniteTable> table_s3() {
  static auto t = std::make_shared<const FiniteTable>(
      FiniteTable::from_permutations(3, {{1, 0, 2}, {1, 2, 0}}));
  return t;
}

inline std::shared_ptr<const FiniteTable> table_s4() {
  static auto t = std::make_shared<const FiniteTable>(
      FiniteTable::from_permutations(4, {{1, 0, 2, 3}, {1, 2, 3, 0}}));
  return t;
}

inline std::shared_ptr<const FiniteTable> table_a4() {
  static auto t = std::make_shared<const FiniteTable>(
      FiniteTable::from_permutations(4, {{1, 2, 0, 3}, {1, 0, 3, 2}}));
  return t;
}

inline std::shared_ptr<const FiniteTable> table_d4() {
  // Symmetries of the square 1234: the rotation and a diagonal reflection.
  static auto t = std::make_shared<const FiniteTable>(
      FiniteTable::from_permutations(4, {{1, 2, 3, 0}, {0, 3, 2, 1}}));
  return t;
}

inline std::shared_ptr<const FiniteTable> table_a5() {
  static auto t = std::make_shared<const FiniteTable>(
      FiniteTable::from_permutations(5, {{1, 2, 3, 4, 0}, {1, 2, 0, 3, 4}}));
  return t;
}

inline std::shared_ptr<const FiniteTable> table_q8() {
  static auto t =
      std::make_shared<const FiniteTable>(FiniteTable::quaternion8());
  return t;
}

inline std::shared_ptr<const FiniteTable> table_cyclic(std::uint32_t n) {
  return std::make_shared<const FiniteTable>(FiniteTable::cyclic(n));
}

inline std::shared_ptr<const FiniteTable> table_z2xz2() {
  static auto t = std::make_shared<const FiniteTable>(
      FiniteTable::direct_product(FiniteTable::cyclic(2), FiniteTable::cyclic(2)));
  return t;
}

/// Indices of the subgroup generated by permutation generators, resolved
/// against a permutation-built table by matching generator names.
inline std::vector<std::uint32_t> closure_of(
    const std::shared_ptr<const GroupSpec>& g,
    const std::vector<std::uint32_t>& gen_indices) {
  FiniteView v = finite_view(*g);
  return subgroup_closure(v, gen_indices);
}

inline std::uint32_t index_of_name(const FiniteTable& t, const std::string& name) {
  for (std::uint32_t i = 0; i < t.order; ++i) {
    if (t.names[i] == name) return i;
  }
  throw Unsupported("no element named '" + name + "'");
}

}  // namespace catalog_detail

inline std::vector<std::string> builtin_group_names() {
  return {"Z2",  "Z4", "Z2xZ2", "S3",   "S4",       "A4",
          "D4",  "Q8", "A5",    "A5xA5", "F2-in-F3", "F3",
          "Hn",  "Ex74", "HnxHn", "S3xS3"};
}

inline std::shared_ptr<const GroupSpec> builtin_group(const std::string& name) {
  using namespace catalog_detail;
  if (name == "Z2") return make_finite_group("Z2", table_cyclic(2));
  if (name == "Z4") return make_finite_group("Z4", table_cyclic(4));
  if (name == "Z2xZ2") return make_finite_group("Z2xZ2", table_z2xz2());
  if (name == "S3") return make_finite_group("S3", table_s3());
  if (name == "S4") return make_finite_group("S4", table_s4());
  if (name == "A4") return make_finite_group("A4", table_a4());
  if (name == "D4") return make_finite_group("D4", table_d4());
  if (name == "Q8") return make_finite_group("Q8", table_q8());
  if (name == "A5") return make_finite_group("A5", table_a5());
  if (name == "A5xA5") {
    return make_product_group(builtin_group("A5"), builtin_group("A5"));
  }
  if (name == "F3" || name == "F2-in-F3") return make_free_group("F3", 3);
  if (name == "Hn" || name == "FreeByZ") {
    return make_free_by_z_group("FreeByZ", -2, 2);
  }
  if (name == "Ex74") return make_ex74_group("Ex74", -2, 2);
  if (name == "HnxHn") {
    return make_product_group(builtin_group("Hn"), builtin_group("Hn"));
  }
  if (name == "S3xS3") {
    return make_product_group(builtin_group("S3"), builtin_group("S3"));
  }
  throw Unsupported("unknown built-in group '" + name + "'");
}

/// Resolves a subgroup by name for a built-in group: "A3" in S3, "A4" /
/// "D4" / "V4" in S4, "V4" in A4, "F2" in F3, "H<k>" in the shift
/// extension, "H" in the Z ⋊ Z2 extension, "e" (trivial) and "full" for any
/// finite group, and componentwise "<l>,<r>" names for products.
inline std::shared_ptr<const SubgroupOracle> builtin_subgroup(
    const std::shared_ptr<const GroupSpec>& g, const std::string& name) {
  using namespace catalog_detail;
  auto wrap = [](SubgroupOracle o) {
    return std::make_shared<const SubgroupOracle>(std::move(o));
  };

  if (const auto* fam = std::get_if<FiniteFamily>(&g->family)) {
    const FiniteTable& t = *fam->table;
    if (name == "e") {
      return wrap(make_finite_subgroup("e", g, {t.identity}));
    }
    if (name == "full") {
      std::vector<std::uint32_t> all(t.order);
      for (std::uint32_t i = 0; i < t.order; ++i) all[i] = i;
      return wrap(make_finite_subgroup("full", g, std::move(all)));
    }
    if (g->name == "S3" && name == "A3") {
      return wrap(make_finite_subgroup(
          "A3", g, closure_of(g, {index_of_name(t, "(1 2 3)")})));
    }
    if (g->name == "S4" && name == "A4") {
      return wrap(make_finite_subgroup(
          "A4", g,
          closure_of(g, {index_of_name(t, "(1 2 3)"),
                         index_of_name(t, "(1 2)(3 4)")})));
    }
    if (g->name == "S4" && name == "D4") {
      return wrap(make_finite_subgroup(
          "D4", g,
          closure_of(g, {index_of_name(t, "(1 2 3 4)"),
                         index_of_name(t, "(1 3)")})));
    }
    if ((g->name == "S4" || g->name == "A4") && name == "V4") {
      return wrap(make_finite_subgroup(
          "V4", g,
          closure_of(g, {index_of_name(t, "(1 2)(3 4)"),
                         index_of_name(t, "(1 3)(2 4)")})));
    }
    throw Unsupported("no built-in subgroup '" + name + "' in " + g->name);
  }
  if (std::holds_alternative<FreeFamily>(g->family)) {
    if (name == "F2") return wrap(make_free_factor("F2", g, {0, 1}));
    if (name == "F1" || name == "a") {
      return wrap(make_free_factor("<a>", g, {0}));
    }
    if (name == "even-a") {
      // Index-2 kernel counting the a-exponent mod 2 inside <a, b>.
      return wrap(make_exponent_kernel("even-a", g, {0, 1}, 0, 2));
    }
    throw Unsupported("no built-in subgroup '" + name + "' in " + g->name);
  }
  if (std::holds_alternative<FreeByZFamily>(g->family)) {
    if (name.size() >= 2 && name[0] == 'H') {
      return wrap(make_hn_subgroup(g, std::stoll(name.substr(1))));
    }
    throw Unsupported("no built-in subgroup '" + name + "' in " + g->name);
  }
  if (std::holds_alternative<Ex74Family>(g->family)) {
    if (name == "H") return wrap(make_ex74_subgroup(g));
    throw Unsupported("no built-in subgroup '" + name + "' in " + g->name);
  }
  const auto& fam = std::get<ProductFamily>(g->family);
  auto comma = name.find(',');
  if (comma == std::string::npos) {
    throw Unsupported("product subgroups are named '<left>,<right>'");
  }
  auto left = builtin_subgroup(fam.left, name.substr(0, comma));
  auto right = builtin_subgroup(fam.right, name.substr(comma + 1));
  return wrap(make_product_subgroup(*left, *right, g));
}

inline std::string default_subgroup_name(const GroupSpec& g) {
  if (g.name == "S3") return "A3";
  if (g.name == "S4") return "D4";
  if (g.name == "A4") return "V4";
  if (g.name == "F3") return "F2";
  if (g.name == "FreeByZ") return "H0";
  if (g.name == "Ex74") return "H";
  if (std::holds_alternative<ProductFamily>(g.family)) {
    const auto& fam = std::get<ProductFamily>(g.family);
    return default_subgroup_name(*fam.left) + "," +
           default_subgroup_name(*fam.right);
  }
  return "full";
}

/// Resolves "<group>" or "<group>" + explicit subgroup name into a pair.
inline GroupSubgroupPair builtin_pair(const std::string& group_name,
                                      const std::string& subgroup_name = "") {
  GroupSubgroupPair pair;
  pair.group = builtin_group(group_name);
  std::string sub = subgroup_name;
  if (sub.empty()) sub = default_subgroup_name(*pair.group);
  pair.subgroup = builtin_subgroup(pair.group, sub);
  return pair;
}

}  // namespace normcoset
