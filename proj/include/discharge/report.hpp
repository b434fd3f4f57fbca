#pragma once

// Report rendering: a human-readable text form and a stable structured JSON
// form.  Both are byte-deterministic for fixed inputs; wall-clock timings go
// to stderr, never into a report.

#include <json.hpp>

#include "discharge/verifier.hpp"

namespace discharge {

inline constexpr const char* kReportSchema = "discharge-report/1";

inline nlohmann::ordered_json transfer_json(const Transfer& t) {
  nlohmann::ordered_json j;
  j["payer"] = t.payer;
  j["payee"] = t.payee;
  j["amount"] = t.amount;
  j["rule"] = t.rule ? t.rule->text : "";
  if (!t.relay.empty()) j["relay"] = t.relay;
  return j;
}

inline nlohmann::ordered_json report_json(const VerificationReport& rep) {
  nlohmann::ordered_json j;
  j["schema"] = kReportSchema;
  j["lemma"] = rep.lemma;
  nlohmann::ordered_json params;
  params["semantics"] = semantics_name(rep.semantics);
  params["reflection"] = rep.reflection;
  if (rep.dmax > 0) params["dmax"] = rep.dmax;
  params["constraints"] = kConstraintSetVersion;
  params["rules_hash"] = rep.rules_hash;
  params["configs_hash"] = rep.configs_hash;
  params["config_count"] = rep.config_count;
  params["max_violations"] = rep.max_violations;
  j["parameters"] = params;
  j["checked_count"] = rep.checked;
  j["violation_count"] = rep.violation_count;
  nlohmann::ordered_json vs = nlohmann::ordered_json::array();
  for (const Violation& v : rep.violations) {
    nlohmann::ordered_json jv;
    jv["descriptor"] = v.descriptor;
    jv["net"] = v.quantity;
    jv["bound"] = v.bound;
    nlohmann::ordered_json ts = nlohmann::ordered_json::array();
    for (const Transfer& t : v.transfers) ts.push_back(transfer_json(t));
    jv["transfers"] = ts;
    vs.push_back(jv);
  }
  j["violations"] = vs;
  j["status"] = rep.ok() ? "verified" : "violations";
  return j;
}

inline std::string report_text(const VerificationReport& rep) {
  std::string out;
  out += "lemma: " + rep.lemma + "\n";
  out += "parameters: semantics=" + std::string(semantics_name(rep.semantics)) +
         " reflection=" + (rep.reflection ? "on" : "off");
  if (rep.dmax > 0) out += " dmax=" + std::to_string(rep.dmax);
  out += " constraints=" + std::string(kConstraintSetVersion) + "\n";
  out += "rules: " + rep.rules_hash + "\n";
  out += "configs: " + rep.configs_hash + " (" + std::to_string(rep.config_count) +
         " after closure)\n";
  out += "checked: " + std::to_string(rep.checked) + "\n";
  out += "violations: " + std::to_string(rep.violation_count) + "\n";
  for (const Violation& v : rep.violations) {
    out += "  " + v.descriptor + "  net=" + std::to_string(v.quantity) +
           "/60 bound=" + std::to_string(v.bound) + "/60\n";
    for (const Transfer& t : v.transfers) {
      out += "    " + t.payer + " -> " + t.payee + "  " + std::to_string(t.amount) +
             "/60";
      if (t.rule) out += "  (" + t.rule->text + ")";
      if (!t.relay.empty()) out += "  via " + t.relay;
      out.push_back('\n');
    }
  }
  out += rep.ok() ? "status: verified\n" : "status: violations\n";
  return out;
}

inline std::string explanation_text(const Explanation& ex) {
  std::string out = "descriptor: " + encode(ex.ring) + "\n";
  if (ex.inconsistency)
    out += "consistency: violates C" + std::to_string(ex.inconsistency->constraint) +
           " at position " + std::to_string(ex.inconsistency->position) + "\n";
  else
    out += "consistency: ok\n";
  Charge in = 0, outflow = 0;
  for (const Transfer& t : ex.breakdown.inflows) in += t.amount;
  for (const Transfer& t : ex.breakdown.outflows) outflow += t.amount;
  out += "outflows:\n";
  for (const Transfer& t : ex.breakdown.outflows) {
    out += "  " + t.payer + " -> " + t.payee + "  " + std::to_string(t.amount) + "/60  (" +
           (t.rule ? t.rule->text : "") + ")";
    if (!t.relay.empty()) out += "  via " + t.relay;
    out.push_back('\n');
  }
  out += "inflows:\n";
  for (const Transfer& t : ex.breakdown.inflows)
    out += "  " + t.payer + " -> " + t.payee + "  " + std::to_string(t.amount) + "/60  (" +
           (t.rule ? t.rule->text : "") + ")\n";
  out += "sent-received: " + std::to_string(outflow - in) + "/60\n";
  out += "matched configurations:";
  if (ex.matched_configs.empty()) out += " none";
  for (const std::string& c : ex.matched_configs) out += " " + c;
  out.push_back('\n');
  return out;
}

inline nlohmann::ordered_json explanation_json(const Explanation& ex) {
  nlohmann::ordered_json j;
  j["schema"] = kReportSchema;
  j["descriptor"] = encode(ex.ring);
  if (ex.inconsistency) {
    j["consistent"] = false;
    j["violated_constraint"] = "C" + std::to_string(ex.inconsistency->constraint);
    j["position"] = ex.inconsistency->position;
  } else {
    j["consistent"] = true;
  }
  Charge in = 0, outflow = 0;
  nlohmann::ordered_json ts = nlohmann::ordered_json::array();
  for (const Transfer& t : ex.breakdown.outflows) {
    outflow += t.amount;
    ts.push_back(transfer_json(t));
  }
  for (const Transfer& t : ex.breakdown.inflows) {
    in += t.amount;
    ts.push_back(transfer_json(t));
  }
  j["transfers"] = ts;
  j["sent_minus_received"] = outflow - in;
  j["matched_configs"] = ex.matched_configs;
  return j;
}

}  // namespace discharge
