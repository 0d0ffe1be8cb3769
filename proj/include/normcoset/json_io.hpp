#pragma once

#include <fstream>
#include <memory>
#include <string>

#include <json.hpp>

#include "normcoset/catalog.hpp"
#include "normcoset/commutator.hpp"
#include "normcoset/cosets.hpp"
#include "normcoset/normalizer.hpp"

namespace normcoset {

using ordered_json = nlohmann::ordered_json;

/// Group definition files: a "family" tag plus family-specific fields, with
/// an optional embedded "subgroup" description. The shipped schema documents
/// the format (docs/group-schema.json).

namespace json_detail {

inline std::shared_ptr<const GroupSpec> parse_group(const ordered_json& j) {
  if (!j.contains("family")) {
    throw ValidationError("group definition needs a \"family\" tag");
  }
  const std::string family = j.at("family").get<std::string>();
  const std::string name = j.value("name", family);

  if (family == "finite") {
    std::shared_ptr<const FiniteTable> table;
    if (j.contains("table")) {
      auto rows = j.at("table").get<std::vector<std::vector<std::uint32_t>>>();
      std::vector<std::uint32_t> gens;
      if (j.contains("generators")) {
        gens = j.at("generators").get<std::vector<std::uint32_t>>();
      }
      std::vector<std::string> names;
      if (j.contains("names")) {
        names = j.at("names").get<std::vector<std::string>>();
      }
      table = std::make_shared<const FiniteTable>(FiniteTable::from_rows(
          std::move(rows), j.value("identity", 0u), std::move(gens),
          std::move(names)));
    } else if (j.contains("permutation_generators")) {
      auto gens = j.at("permutation_generators")
                      .get<std::vector<std::vector<std::uint32_t>>>();
      if (gens.empty()) {
        throw ValidationError("permutation generator list is empty");
      }
      const auto degree = j.contains("degree")
                              ? j.at("degree").get<std::uint32_t>()
                              : static_cast<std::uint32_t>(gens[0].size());
      table = std::make_shared<const FiniteTable>(
          FiniteTable::from_permutations(degree, gens));
    } else {
      throw ValidationError(
          "finite group needs a \"table\" or \"permutation_generators\"");
    }
    return make_finite_group(name, std::move(table));
  }
  if (family == "free") {
    return make_free_group(name, j.at("rank").get<int>());
  }
  if (family == "free_by_z" || family == "ex74") {
    long long lo = -2, hi = 2;
    if (j.contains("window")) {
      auto w = j.at("window").get<std::vector<long long>>();
      if (w.size() != 2) throw ValidationError("window must be [lo, hi]");
      lo = w[0];
      hi = w[1];
    }
    return family == "free_by_z" ? make_free_by_z_group(name, lo, hi)
                                 : make_ex74_group(name, lo, hi);
  }
  if (family == "product") {
    return make_product_group(parse_group(j.at("left")),
                              parse_group(j.at("right")));
  }
  throw ValidationError("unknown group family '" + family + "'");
}

inline std::shared_ptr<const SubgroupOracle> parse_subgroup(
    const ordered_json& j, const std::shared_ptr<const GroupSpec>& parent) {
  const std::string kind = j.at("kind").get<std::string>();
  const std::string name = j.value("name", kind);
  auto wrap = [](SubgroupOracle o) {
    return std::make_shared<const SubgroupOracle>(std::move(o));
  };
  if (kind == "members") {
    return wrap(make_finite_subgroup(
        name, parent, j.at("members").get<std::vector<std::uint32_t>>()));
  }
  if (kind == "free_factor") {
    return wrap(make_free_factor(
        name, parent, j.at("generators").get<std::vector<long long>>()));
  }
  if (kind == "hn") {
    return wrap(make_hn_subgroup(parent, j.at("n").get<long long>()));
  }
  if (kind == "ex74h") {
    return wrap(make_ex74_subgroup(parent));
  }
  if (kind == "exponent_kernel") {
    return wrap(make_exponent_kernel(
        name, parent, j.at("letters").get<std::vector<long long>>(),
        j.at("target").get<long long>(), j.at("modulus").get<long long>()));
  }
  if (kind == "product") {
    const auto& fam = std::get<ProductFamily>(parent->family);
    auto left = parse_subgroup(j.at("left"), fam.left);
    auto right = parse_subgroup(j.at("right"), fam.right);
    return wrap(make_product_subgroup(*left, *right, parent));
  }
  throw ValidationError("unknown subgroup kind '" + kind + "'");
}

}  // namespace json_detail

inline GroupSubgroupPair load_group_json(const ordered_json& j) {
  GroupSubgroupPair pair;
  pair.group = json_detail::parse_group(j);
  if (j.contains("subgroup")) {
    pair.subgroup = json_detail::parse_subgroup(j.at("subgroup"), pair.group);
  }
  return pair;
}

inline GroupSubgroupPair load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open group file '" + path + "'");
  ordered_json j;
  in >> j;
  return load_group_json(j);
}

/// Report serialization. All containers are emitted in deterministic order,
/// so identical inputs produce byte-identical files.

inline ordered_json to_json(const GroupSpec& g, const BallClassification& rep) {
  ordered_json out;
  out["ball_size"] = rep.ball.size();
  out["radius"] = rep.ball.radius;
  out["counts"] = {{"two_sided", rep.two_sided},
                   {"one_sided_only", rep.one_sided_only},
                   {"non_normalizing", rep.non_normalizing}};
  ordered_json elems = ordered_json::array();
  for (std::size_t i = 0; i < rep.ball.size(); ++i) {
    ordered_json e;
    e["element"] = to_string(g, rep.ball.elements[i]);
    e["verdict"] = to_string(rep.classes[i].verdict);
    if (rep.classes[i].witness) {
      e["witness"] = to_string(g, *rep.classes[i].witness);
    }
    elems.push_back(std::move(e));
  }
  out["elements"] = std::move(elems);
  return out;
}

inline ordered_json to_json(const GroupSpec& g, const DoubleCosetReport& rep) {
  ordered_json out;
  out["representative"] = to_string(g, rep.representative);
  out["verdict"] = to_string(rep.verdict);
  if (rep.verdict == CosetVerdict::ExactlyN) {
    out["trace"] = rep.n;
    out["rule"] = rep.rule;
  } else {
    out["left_cosets_at_least"] = rep.n;
  }
  ordered_json ids = ordered_json::array();
  for (const auto& id : rep.left_cosets_found) {
    ids.push_back(to_string(g, id.representative));
  }
  out["left_coset_ids"] = std::move(ids);
  out["evidence"] = {{"radii", rep.evidence_radii},
                     {"counts", rep.evidence_counts}};
  return out;
}

inline ordered_json to_json(const GroupSpec& g, const BallDecomposition& dec) {
  ordered_json out;
  out["ball_size"] = dec.ball.size();
  out["radius"] = dec.ball.radius;
  out["ball_complete"] = dec.ball_complete;
  ordered_json classes = ordered_json::array();
  bool all_exact = true;
  std::size_t total = 0;
  for (const auto& c : dec.classes) {
    classes.push_back(to_json(g, c));
    all_exact = all_exact && c.verdict == CosetVerdict::ExactlyN;
    total += c.n;
  }
  out["double_cosets"] = std::move(classes);
  if (all_exact) out["total_trace"] = total;
  return out;
}

inline ordered_json to_json(const FiniteView& view,
                            const CentralDecomposition& dec) {
  ordered_json out;
  out["order"] = view.order();
  out["class_count"] = dec.classes.count();
  ordered_json sizes = ordered_json::array();
  for (const auto& c : dec.classes.classes) sizes.push_back(c.size());
  out["class_sizes"] = std::move(sizes);
  ordered_json idems = ordered_json::array();
  for (const auto& e : dec.idempotents) {
    ordered_json je;
    je["trace"] = e.trace;
    je["dimension"] = e.dimension;
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : e.class_coeff) {
      coeffs.push_back(ordered_json::array({c.real(), c.imag()}));
    }
    je["class_coefficients"] = std::move(coeffs);
    idems.push_back(std::move(je));
  }
  out["idempotents"] = std::move(idems);
  return out;
}

inline ordered_json to_json(const FixedPointReport& rep) {
  ordered_json out;
  out["commutator_subgroup_size"] = rep.commutator.size();
  out["commutator_subgroup"] = rep.commutator;
  out["abelian"] = rep.abelian;
  out["regular"] = rep.regular;
  out["singular"] = rep.singular;
  out["idempotent_traces"] = rep.idempotent_traces;
  out["dimensions"] = rep.dimensions;
  return out;
}

inline void write_report(const ordered_json& j, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write report to '" + path + "'");
  out << j.dump(2) << "\n";
}

}  // namespace normcoset
