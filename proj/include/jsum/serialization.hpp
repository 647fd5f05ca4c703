#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "jsum/errors.hpp"
#include "jsum/experiments.hpp"
#include "jsum/geometry.hpp"
#include "jsum/jvector.hpp"
#include "jsum/pexponent.hpp"
#include "jsum/subspace.hpp"
#include "jsum/vec.hpp"

namespace jsum {

using ordered_json = nlohmann::ordered_json;

inline ordered_json pexponent_to_json(PExponent p) {
  if (p.is_infinite()) return ordered_json("inf");
  return ordered_json(p.value());
}

inline PExponent pexponent_from_json(const ordered_json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return PExponent::infinity();
    throw PreconditionError("p: expected a number or the string \"inf\"");
  }
  if (!j.is_number()) {
    throw PreconditionError("p: expected a number or the string \"inf\"");
  }
  return PExponent(j.get<double>());
}

inline ordered_json vector_to_json(const Vector& v) {
  ordered_json j;
  j["ambient_dim"] = v.ambient_dim();
  j["coords"] = v.coords();
  return j;
}

inline Vector vector_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("ambient_dim") || !j.contains("coords")) {
    throw PreconditionError(
        "vector: expected {\"ambient_dim\": n, \"coords\": [...]}");
  }
  const auto dim = j.at("ambient_dim").get<std::size_t>();
  if (dim < 1) {
    throw PreconditionError("vector: ambient_dim must be positive");
  }
  auto coords = j.at("coords").get<std::vector<double>>();
  if (coords.size() != dim) {
    throw PreconditionError("vector: coords length must equal ambient_dim");
  }
  return Vector(std::move(coords));
}

inline ordered_json subspace_to_json(const Subspace& s) {
  ordered_json j;
  j["ambient_dim"] = s.ambient_dim();
  ordered_json basis = ordered_json::array();
  for (const Vector& b : s.basis()) basis.push_back(b.coords());
  j["basis"] = std::move(basis);
  return j;
}

inline Subspace subspace_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("ambient_dim") || !j.contains("basis")) {
    throw PreconditionError(
        "subspace: expected {\"ambient_dim\": n, \"basis\": [[...], ...]}");
  }
  const auto dim = j.at("ambient_dim").get<std::size_t>();
  std::vector<Vector> basis;
  for (const ordered_json& row : j.at("basis")) {
    auto coords = row.get<std::vector<double>>();
    if (coords.size() != dim) {
      throw PreconditionError("subspace: basis row length != ambient_dim");
    }
    basis.push_back(Vector(std::move(coords)));
  }
  return Subspace(std::move(basis));
}

inline ordered_json jvector_to_json(const JVector& x) {
  ordered_json j;
  j["p"] = pexponent_to_json(x.p());
  ordered_json entries = ordered_json::array();
  for (const Vector& e : x.explicit_entries()) entries.push_back(e.coords());
  j["entries"] = std::move(entries);
  if (x.tail() == TailMode::kZero) {
    j["tail"] = "zero";
  } else {
    j["tail"] = ordered_json{{"constant", x.tail_value().coords()}};
  }
  return j;
}

inline JVector jvector_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("entries") ||
      !j.contains("tail")) {
    throw PreconditionError(
        "jvector: expected {\"p\": ..., \"entries\": [[...], ...], "
        "\"tail\": \"zero\" | {\"constant\": [...]}}");
  }
  const PExponent p = pexponent_from_json(j.at("p"));
  std::vector<Vector> entries;
  for (const ordered_json& row : j.at("entries")) {
    entries.push_back(Vector(row.get<std::vector<double>>()));
  }
  const ordered_json& tail = j.at("tail");
  if (tail.is_string() && tail.get<std::string>() == "zero") {
    return JVector(p, std::move(entries), TailMode::kZero);
  }
  if (tail.is_object() && tail.contains("constant")) {
    const auto value = tail.at("constant").get<std::vector<double>>();
    if (entries.empty() || entries.back().coords() != value) {
      throw PreconditionError(
          "jvector: constant tail must equal the last explicit entry");
    }
    return JVector(p, std::move(entries), TailMode::kConstant);
  }
  throw PreconditionError(
      "jvector: tail must be \"zero\" or {\"constant\": [...]}");
}

inline Chain chain_from_json(const ordered_json& j) {
  if (!j.is_array()) {
    throw PreconditionError("chain: expected an integer array");
  }
  return Chain(j.get<std::vector<int>>());
}

inline ordered_json chain_to_json(const Chain& c) {
  return ordered_json(c.indices());
}

inline SubspacePair subspace_pair_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("inner") || !j.contains("outer") ||
      !j.contains("p")) {
    throw PreconditionError(
        "pair: expected {\"p\": ..., \"inner\": {...}, \"outer\": {...}}");
  }
  return SubspacePair(subspace_from_json(j.at("inner")),
                      subspace_from_json(j.at("outer")),
                      pexponent_from_json(j.at("p")));
}

inline SweepFamily sweep_family_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("kind")) {
    throw PreconditionError("family: expected {\"kind\": ...}");
  }
  SweepFamily f;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "rotation") {
    f.kind = SweepFamily::Kind::kRotation;
  } else if (kind == "nested") {
    f.kind = SweepFamily::Kind::kNested;
  } else if (kind == "random") {
    f.kind = SweepFamily::Kind::kRandom;
  } else {
    throw PreconditionError(
        "family: kind must be rotation, nested, or random");
  }
  if (j.contains("count")) f.count = j.at("count").get<int>();
  if (j.contains("ambient")) f.ambient = j.at("ambient").get<int>();
  if (j.contains("dim_u")) f.dim_u = j.at("dim_u").get<int>();
  if (j.contains("dim_v")) f.dim_v = j.at("dim_v").get<int>();
  if (j.contains("max_angle")) f.max_angle = j.at("max_angle").get<double>();
  return f;
}

inline ordered_json bound_pair_to_json(const BoundPair& b) {
  ordered_json j;
  j["lower"] = b.lower;
  j["upper"] = b.upper;
  j["certified_lower"] = b.certified_lower;
  j["certified_upper"] = b.certified_upper;
  return j;
}

/// Summary object emitted next to every CSV report: name, parameters,
/// seed, verdict, extremes, and the solver defaults the run used, so the
/// run is self-describing.
inline ordered_json report_summary_json(const ExperimentReport& rep) {
  ordered_json j;
  j["name"] = rep.name;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : rep.params) params[k] = v;
  j["params"] = std::move(params);
  j["seed"] = rep.seed;
  j["verdict"] = rep.verdict() ? "pass" : "fail";
  ordered_json extremes = ordered_json::object();
  for (const auto& [k, v] : rep.extremes) extremes[k] = v;
  j["extremes"] = std::move(extremes);
  j["rows"] = rep.rows.size();
  ordered_json defaults;
  defaults["dist_tol"] = 1e-8;
  defaults["dist_max_iter"] = 10000;
  defaults["nonconvex_tol"] = 1e-6;
  defaults["lowdisc_starts"] = SearchOptions{}.lowdisc_starts;
  defaults["random_starts"] = SearchOptions{}.random_starts;
  defaults["refine_iters"] = SearchOptions{}.refine_iters;
  j["defaults"] = std::move(defaults);
  return j;
}

}  // namespace jsum
