/*
 * Copyright 2026 the omac authors
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */
#include "omac/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace omac {

namespace {

using nlohmann::json;

json family_to_json(const FamilyTag& tag) {
  json j;
  j["name"] = tag.name;
  json params = json::object();
  for (const auto& [k, v] : tag.params) params[k] = v;
  j["params"] = params;
  return j;
}

json instance_json(const Instance& inst) {
  json j;
  j["version"] = 1;
  j["kind"] = inst.additive() ? "omac_additive" : "omac_xos";
  j["label"] = inst.label;
  if (inst.family) j["family"] = family_to_json(*inst.family);
  json agents = json::array();
  for (int i = 0; i < inst.size(); ++i) {
    json a;
    a["cost"] = inst.costs[static_cast<size_t>(i)].str();
    if (inst.additive()) a["weight"] = inst.reward.weights[static_cast<size_t>(i)].str();
    agents.push_back(a);
  }
  j["agents"] = agents;
  if (!inst.additive()) {
    json clauses = json::array();
    for (const auto& clause : inst.reward.clauses) {
      json row = json::array();
      for (const Rational& w : clause) row.push_back(w.str());
      clauses.push_back(row);
    }
    j["clauses"] = clauses;
  }
  return j;
}

json oks_json(const OksInstance& oks) {
  json j;
  j["version"] = 1;
  j["kind"] = "oks";
  j["label"] = oks.label;
  if (oks.family) j["family"] = family_to_json(*oks.family);
  j["budget"] = oks.budget.str();
  json items = json::array();
  for (const OksItem& it : oks.items) {
    json e;
    e["value"] = it.value.str();
    e["cost"] = it.cost.str();
    items.push_back(e);
  }
  j["items"] = items;
  return j;
}

[[noreturn]] void fail(const std::string& origin, const std::string& what) {
  throw std::runtime_error(origin + ": " + what);
}

Rational field_rational(const json& j, const char* field, const std::string& origin) {
  if (!j.contains(field) || !j[field].is_string()) {
    fail(origin, std::string("missing or non-string rational field '") + field + "'");
  }
  try {
    return parse_rational(j[field].get<std::string>());
  } catch (const std::exception& e) {
    fail(origin, std::string("bad rational in field '") + field + "': " + e.what());
  }
}

std::optional<FamilyTag> family_from_json(const json& j, const std::string& origin) {
  if (!j.contains("family")) return std::nullopt;
  const json& f = j["family"];
  FamilyTag tag;
  if (!f.contains("name") || !f["name"].is_string()) fail(origin, "family needs a name");
  tag.name = f["name"].get<std::string>();
  if (f.contains("params")) {
    for (auto it = f["params"].begin(); it != f["params"].end(); ++it) {
      if (!it.value().is_string()) fail(origin, "family params must be strings");
      tag.params[it.key()] = it.value().get<std::string>();
    }
  }
  return tag;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << text;
  if (!out) throw std::runtime_error("failed writing: " + path);
}

}  // namespace

std::string instance_to_json(const Instance& inst) { return instance_json(inst).dump(2) + "\n"; }

std::string oks_to_json(const OksInstance& oks) { return oks_json(oks).dump(2) + "\n"; }

void save_instance(const Instance& inst, const std::string& path) {
  write_text(path, instance_to_json(inst));
}

void save_oks_instance(const OksInstance& oks, const std::string& path) {
  write_text(path, oks_to_json(oks));
}

LoadedFile parse_file(const std::string& text, const std::string& origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(origin, std::string("not valid JSON: ") + e.what());
  }
  if (!j.contains("version") || !j["version"].is_number_integer() || j["version"] != 1) {
    fail(origin, "unsupported or missing version (expected 1)");
  }
  if (!j.contains("kind") || !j["kind"].is_string()) fail(origin, "missing kind");
  std::string kind = j["kind"].get<std::string>();

  LoadedFile out;
  out.kind = kind;
  if (kind == "omac_additive" || kind == "omac_xos") {
    Instance inst;
    inst.label = j.value("label", std::string());
    inst.family = family_from_json(j, origin);
    if (!j.contains("agents") || !j["agents"].is_array()) fail(origin, "missing agents array");
    std::vector<Rational> weights;
    for (const json& a : j["agents"]) {
      inst.costs.push_back(field_rational(a, "cost", origin));
      if (kind == "omac_additive") weights.push_back(field_rational(a, "weight", origin));
    }
    if (kind == "omac_additive") {
      inst.reward = RewardFunction::additive(std::move(weights));
    } else {
      if (!j.contains("clauses") || !j["clauses"].is_array() || j["clauses"].empty()) {
        fail(origin, "XOS instance needs a non-empty clauses array");
      }
      std::vector<std::vector<Rational>> clauses;
      for (const json& row : j["clauses"]) {
        if (!row.is_array() || row.size() != inst.costs.size()) {
          fail(origin, "clause " + std::to_string(clauses.size() + 1) +
                           " length does not match agent count");
        }
        std::vector<Rational> clause;
        for (const json& w : row) {
          if (!w.is_string()) fail(origin, "clause weights must be rational strings");
          try {
            clause.push_back(parse_rational(w.get<std::string>()));
          } catch (const std::exception& e) {
            fail(origin, std::string("bad clause weight: ") + e.what());
          }
        }
        clauses.push_back(std::move(clause));
      }
      inst.reward = RewardFunction::xos(std::move(clauses));
    }
    ValidationReport rep = validate(inst);
    if (!rep.ok()) fail(origin, "invalid instance: " + rep.errors.front());
    out.instance = std::move(inst);
  } else if (kind == "oks") {
    OksInstance oks;
    oks.label = j.value("label", std::string());
    oks.family = family_from_json(j, origin);
    oks.budget = field_rational(j, "budget", origin);
    if (!j.contains("items") || !j["items"].is_array()) fail(origin, "missing items array");
    for (const json& e : j["items"]) {
      oks.items.push_back({field_rational(e, "value", origin), field_rational(e, "cost", origin)});
    }
    ValidationReport rep = validate_oks(oks);
    if (!rep.ok()) fail(origin, "invalid OKS instance: " + rep.errors.front());
    out.oks = std::move(oks);
  } else {
    fail(origin, "unknown kind '" + kind + "'");
  }
  return out;
}

LoadedFile load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_file(buf.str(), path);
}

Instance load_instance(const std::string& path) {
  LoadedFile f = load_file(path);
  if (!f.instance) {
    throw std::runtime_error(path + ": expected an OMAC instance, found kind '" + f.kind + "'");
  }
  return *f.instance;
}

}  // namespace omac
