// JSON serialization for tableau proofs.
//
// Node format:
//   {"seq": "<sequent text>",
//    "just": "axiom:Ax5" | {"rule": "or.ant.pos", "path": "ant:/neg",
//                           "term"?: "<term text>", "eigen"?: "<name>"},
//    "children": [...]}
#pragma once

#include <json.hpp>

#include <string>

#include "sntab/error.hpp"
#include "sntab/parse.hpp"
#include "sntab/print.hpp"
#include "sntab/proof.hpp"

namespace sntab {

inline nlohmann::json proof_to_json(const TableauPtr& t) {
  nlohmann::json j;
  j["seq"] = print_sequent(t->seq);
  if (is_leaf(t)) {
    j["just"] = "axiom:" + axiom_name(leaf_just(t).kind);
  } else {
    const RuleApp& app = step_just(t).app;
    nlohmann::json just;
    just["rule"] = rule_name(app.rule);
    just["path"] = to_string(app.part);
    if (app.term) just["term"] = print_term(app.term);
    if (!app.eigen.empty()) just["eigen"] = app.eigen;
    j["just"] = std::move(just);
  }
  nlohmann::json kids = nlohmann::json::array();
  for (const TableauPtr& k : t->kids) kids.push_back(proof_to_json(k));
  j["children"] = std::move(kids);
  return j;
}

inline std::string proof_to_string(const TableauPtr& t) {
  return proof_to_json(t).dump(2) + "\n";
}

inline TableauPtr proof_from_json(const nlohmann::json& j, Signature& sig) {
  require(j.is_object() && j.contains("seq") && j.contains("just"),
          Errc::BadProof, "proof node must be an object with seq and just");
  Sequent s = parse_sequent(j["seq"].get<std::string>(), sig);
  std::vector<TableauPtr> kids;
  if (j.contains("children"))
    for (const nlohmann::json& k : j["children"])
      kids.push_back(proof_from_json(k, sig));
  const nlohmann::json& just = j["just"];
  if (just.is_string()) {
    std::string text = just.get<std::string>();
    require(text.rfind("axiom:", 0) == 0, Errc::BadProof,
            "string justification must be axiom:AxK, got '" + text + "'");
    auto k = parse_axiom_name(text.substr(6));
    require(k.has_value(), Errc::BadProof, "unknown axiom kind in '" + text + "'");
    require(kids.empty(), Errc::BadProof, "axiom leaf must have no children");
    return Tableau::leaf(std::move(s), *k);
  }
  require(just.is_object() && just.contains("rule") && just.contains("path"),
          Errc::BadProof, "rule justification needs rule and path");
  RuleApp app;
  auto rid = parse_rule_name(just["rule"].get<std::string>());
  require(rid.has_value(), Errc::BadProof,
          "unknown rule '" + just["rule"].get<std::string>() + "'");
  app.rule = *rid;
  app.part = parse_part_ref(just["path"].get<std::string>());
  if (just.contains("term"))
    app.term = parse_term(just["term"].get<std::string>(), sig);
  if (just.contains("eigen")) app.eigen = just["eigen"].get<std::string>();
  return Tableau::step(std::move(s), std::move(app), std::move(kids));
}

inline TableauPtr proof_from_string(const std::string& text, Signature& sig) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::BadProof, std::string("invalid JSON: ") + e.what());
  }
  return proof_from_json(j, sig);
}

}  // namespace sntab
