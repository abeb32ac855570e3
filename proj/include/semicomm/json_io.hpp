#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "semicomm/group.hpp"
#include "semicomm/linked_triple.hpp"
#include "semicomm/partition.hpp"
#include "semicomm/rees.hpp"
#include "semicomm/semigroup.hpp"

namespace semicomm {

using json = nlohmann::json;

struct InvalidInput : SemicommError {
  using SemicommError::SemicommError;
};

namespace io {

inline json table_to_json(const FiniteSemigroup& s) {
  return json(s.rows());
}

inline std::vector<std::vector<int>> table_from_json(const json& j) {
  if (!j.is_array()) {
    throw InvalidInput("\"table\" must be an array of rows");
  }
  std::vector<std::vector<int>> table;
  for (const auto& row : j) {
    if (!row.is_array()) {
      throw InvalidInput("table rows must be arrays");
    }
    table.push_back(row.get<std::vector<int>>());
  }
  return table;
}

inline json semigroup_to_json(const FiniteSemigroup& s) {
  json j{{"kind", "semigroup"}, {"order", s.order()}, {"table", table_to_json(s)}};
  if (!s.name().empty()) {
    j["name"] = s.name();
  }
  return j;
}

inline json group_to_json(const FiniteGroup& g) {
  json j{{"kind", "group"}, {"order", g.order()}, {"table", table_to_json(g.base())}};
  if (!g.name().empty()) {
    j["name"] = g.name();
  }
  return j;
}

inline FiniteGroup group_from_json(const json& j);

inline FiniteGroup named_group(const std::string& name, const json& j) {
  if (name == "cyclic") {
    return cyclic_group(j.value("param", 0));
  }
  if (name == "dihedral") {
    return dihedral_group(j.value("param", 0));
  }
  if (name == "quaternion8" || name == "q8") {
    return quaternion_group();
  }
  if (name == "symmetric") {
    return symmetric_group(j.value("param", 0));
  }
  if (name == "product") {
    if (!j.contains("factors") || !j["factors"].is_array() || j["factors"].size() < 2) {
      throw InvalidInput("named group \"product\" needs a \"factors\" array");
    }
    FiniteGroup acc = group_from_json(j["factors"][0]);
    for (std::size_t k = 1; k < j["factors"].size(); ++k) {
      acc = direct_product(acc, group_from_json(j["factors"][k]));
    }
    return acc;
  }
  throw InvalidInput("unknown group name \"" + name + "\"");
}

inline FiniteGroup group_from_json(const json& j) {
  if (!j.is_object()) {
    throw InvalidInput("group must be a JSON object");
  }
  if (j.contains("table")) {
    return FiniteGroup(table_from_json(j["table"]), j.value("name", std::string{}));
  }
  if (j.contains("name")) {
    return named_group(j["name"].get<std::string>(), j);
  }
  throw InvalidInput("group needs a \"table\" or a \"name\"");
}

struct ReesInput {
  FiniteGroup group;
  int i_size;
  int lambda_size;
  std::vector<std::vector<int>> p;
  bool was_normalized;  // false when the raw matrix needed normalization
};

inline ReesInput rees_from_json(const json& j, bool strict_normalized) {
  if (!j.contains("group") || !j.contains("I") || !j.contains("Lambda") || !j.contains("P")) {
    throw InvalidInput("rees object needs \"group\", \"I\", \"Lambda\" and \"P\"");
  }
  FiniteGroup g = group_from_json(j["group"]);
  int i_size = j["I"].get<int>();
  int lambda_size = j["Lambda"].get<int>();
  auto p = table_from_json(j["P"]);
  detail::check_sandwich_shape(g, i_size, lambda_size, p);
  bool normalized = true;
  for (int i = 0; i < i_size && normalized; ++i) {
    normalized = p[0][i] == g.identity();
  }
  for (int l = 0; l < lambda_size && normalized; ++l) {
    normalized = p[l][0] == g.identity();
  }
  if (!normalized) {
    if (strict_normalized) {
      throw InvalidInput("sandwich matrix is not normalized (--strict-normalized)");
    }
    p = normalize_sandwich(g, i_size, lambda_size, p).p;
  }
  return {std::move(g), i_size, lambda_size, std::move(p), normalized};
}

inline json rees_to_json(const ReesMatrixSemigroup& rs) {
  return json{{"kind", "rees"},
              {"group", group_to_json(rs.group())},
              {"I", rs.i_size()},
              {"Lambda", rs.lambda_size()},
              {"P", json(rs.sandwich())}};
}

// Any of the three algebra kinds, with a uniform view of the carrier table.
struct Algebra {
  std::variant<FiniteSemigroup, FiniteGroup, ReesMatrixSemigroup> value;
  bool rees_input_was_normalized = true;

  const FiniteSemigroup& flat() const {
    if (auto* s = std::get_if<FiniteSemigroup>(&value)) {
      return *s;
    }
    if (auto* g = std::get_if<FiniteGroup>(&value)) {
      return g->base();
    }
    return std::get<ReesMatrixSemigroup>(value).flattened();
  }

  const ReesMatrixSemigroup* rees() const {
    return std::get_if<ReesMatrixSemigroup>(&value);
  }

  std::string kind() const {
    if (std::holds_alternative<FiniteSemigroup>(value)) {
      return "semigroup";
    }
    return std::holds_alternative<FiniteGroup>(value) ? "group" : "rees";
  }
};

inline Algebra algebra_from_json(const json& j, bool strict_normalized = false) {
  if (!j.is_object() || !j.contains("kind")) {
    throw InvalidInput("algebra object needs a \"kind\"");
  }
  auto kind = j["kind"].get<std::string>();
  if (kind == "semigroup") {
    if (!j.contains("table")) {
      throw InvalidInput("semigroup needs a \"table\"");
    }
    auto s = make_semigroup(table_from_json(j["table"]), j.value("name", std::string{}));
    if (j.contains("order") && j["order"].get<int>() != s.order()) {
      throw InvalidInput("declared order does not match the table");
    }
    return {std::move(s)};
  }
  if (kind == "group") {
    auto g = group_from_json(j);
    if (j.contains("order") && j["order"].get<int>() != g.order()) {
      throw InvalidInput("declared order does not match the table");
    }
    return {std::move(g)};
  }
  if (kind == "rees") {
    auto in = rees_from_json(j, strict_normalized);
    Algebra a{ReesMatrixSemigroup(std::move(in.group), in.i_size, in.lambda_size,
                                  std::move(in.p))};
    a.rees_input_was_normalized = in.was_normalized;
    return a;
  }
  throw InvalidInput("unknown algebra kind \"" + kind + "\"");
}

// Congruence files: {"blocks": [[..]]} taken literally, {"pairs": [[a,b],..]}
// closed to a congruence on load.
struct CongruenceInput {
  Partition partition;
  bool closed_from_pairs = false;
};

inline CongruenceInput congruence_from_json(const json& j, const FiniteSemigroup& s) {
  if (!j.is_object()) {
    throw InvalidInput("congruence must be a JSON object");
  }
  if (j.contains("blocks")) {
    std::vector<std::vector<int>> blocks;
    for (const auto& b : j["blocks"]) {
      blocks.push_back(b.get<std::vector<int>>());
    }
    auto p = Partition::from_blocks(s.order(), blocks);
    auto check = is_congruence(s, p);
    if (!check.ok) {
      auto w = *check.witness;
      throw InvalidInput("blocks do not form a congruence: witness (" + std::to_string(w[0])
                         + "," + std::to_string(w[1]) + "," + std::to_string(w[2]) + ","
                         + std::to_string(w[3]) + ")");
    }
    return {std::move(p), false};
  }
  if (j.contains("pairs")) {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& pr : j["pairs"]) {
      if (!pr.is_array() || pr.size() != 2) {
        throw InvalidInput("pairs must be two-element arrays");
      }
      pairs.emplace_back(pr[0].get<int>(), pr[1].get<int>());
    }
    return {congruence_from_pairs(s, pairs, s.order()), true};
  }
  throw InvalidInput("congruence needs \"blocks\" or \"pairs\"");
}

inline json partition_to_json(const Partition& p) {
  return json{{"blocks", json(p.blocks())}};
}

inline json triple_to_json(const ReesMatrixSemigroup& rs, const LinkedTriple& t) {
  std::vector<int> normal;
  const auto& g = rs.group();
  for (int a = 0; a < g.order(); ++a) {
    if (t.rho_g.related(a, g.identity())) {
      normal.push_back(a);
    }
  }
  return json{{"I_blocks", json(t.rho_i.blocks())},
              {"G_normal", json(normal)},
              {"Lambda_blocks", json(t.rho_lambda.blocks())}};
}

inline LinkedTriple triple_from_json(const json& j, const ReesMatrixSemigroup& rs) {
  if (!j.contains("I_blocks") || !j.contains("G_normal") || !j.contains("Lambda_blocks")) {
    throw InvalidInput("triple needs \"I_blocks\", \"G_normal\" and \"Lambda_blocks\"");
  }
  auto to_blocks = [](const json& arr) {
    std::vector<std::vector<int>> out;
    for (const auto& b : arr) {
      out.push_back(b.get<std::vector<int>>());
    }
    return out;
  };
  auto members = j["G_normal"].get<std::vector<int>>();
  std::sort(members.begin(), members.end());
  NormalSubgroup n{std::move(members)};
  return LinkedTriple{Partition::from_blocks(rs.i_size(), to_blocks(j["I_blocks"])),
                      congruence_of_normal(rs.group(), n),
                      Partition::from_blocks(rs.lambda_size(), to_blocks(j["Lambda_blocks"]))};
}

}  // namespace io
}  // namespace semicomm
