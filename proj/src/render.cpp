#include "twostack/render.hpp"

#include <cstdio>
#include <sstream>

namespace twostack::render {

namespace {

using canon::EventKind;
using canon::Move;
using canon::OutputSource;
using canon::RejectReason;
using nlohmann::json;

const char* source_name(OutputSource source) {
  switch (source) {
    case OutputSource::Input: return "input";
    case OutputSource::A: return "A";
    case OutputSource::B: return "B";
  }
  return "?";
}

std::string joined_rule_names(const std::vector<canon::RuleId>& rules, const char* sep) {
  std::string out;
  for (size_t i = 0; i < rules.size(); ++i) {
    if (i) out += sep;
    out += canon::rule_name(rules[i]);
  }
  return out;
}

json rule_names_json(const std::vector<canon::RuleId>& rules) {
  json arr = json::array();
  for (canon::RuleId r : rules) arr.push_back(canon::rule_name(r));
  return arr;
}

std::string event_line(const canon::TraceEvent& e) {
  std::ostringstream line;
  switch (e.kind) {
    case EventKind::Output:
      line << "OUT " << e.token << " (" << source_name(e.source) << ")";
      break;
    case EventKind::FillA:
      line << "FILL " << e.token;
      break;
    case EventKind::Rule:
      line << "RULE " << joined_rule_names(e.rules, "+") << " -> ";
      if (e.move == Move::A_TO_B_X_TO_A)
        line << "a:" << e.a << " to B, x:" << e.token << " to A";
      else
        line << "a:" << e.a << " kept, x:" << e.token << " to B";
      break;
  }
  return line.str();
}

std::string reject_line(const canon::Verdict& verdict) {
  if (verdict.reason == RejectReason::Contradiction)
    return "REJECT CONTRADICTION {" + joined_rule_names(verdict.contradiction_rules, ", ") + "}";
  return "REJECT BURIED_IN_B " + std::to_string(verdict.buried_token);
}

}  // namespace

std::string trace_text(const Permutation& target, const canon::Verdict& verdict) {
  std::ostringstream out;
  out << "TARGET " << to_string(target) << "\n";
  for (const auto& e : verdict.trace.events) out << event_line(e) << "\n";
  if (verdict.accepted) {
    out << "CODEWORD " << verdict.trace.codeword << "\n";
    out << "ACCEPT\n";
  } else {
    out << reject_line(verdict) << "\n";
  }
  return out.str();
}

nlohmann::json trace_json(const Permutation& target, const canon::Verdict& verdict) {
  json events = json::array();
  for (const auto& e : verdict.trace.events) {
    switch (e.kind) {
      case EventKind::Output:
        events.push_back({{"kind", "output"}, {"token", e.token}, {"source", source_name(e.source)}});
        break;
      case EventKind::FillA:
        events.push_back({{"kind", "fill_a"}, {"token", e.token}});
        break;
      case EventKind::Rule:
        events.push_back({{"kind", "rule"},
                          {"rules", rule_names_json(e.rules)},
                          {"move", e.move == Move::A_TO_B_X_TO_A ? "a_to_b_x_to_a" : "keep_a_x_to_b"},
                          {"a", e.a},
                          {"x", e.token}});
        break;
    }
  }
  json out = {{"target", to_string(target)}, {"accepted", verdict.accepted}, {"events", events}};
  if (verdict.accepted) {
    out["codeword"] = verdict.trace.codeword;
  } else if (verdict.reason == RejectReason::Contradiction) {
    out["reason"] = "contradiction";
    out["rules"] = rule_names_json(verdict.contradiction_rules);
  } else {
    out["reason"] = "buried_in_b";
    out["buried_token"] = verdict.buried_token;
  }
  return out;
}

std::string report_text(const basis::TheoremReport& report) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof line, "%-7s %-12s %-11s %-10s %-10s %s\n", "length", "total",
                "generable", "accepted", "avoiders", "disagreements");
  out << line;
  for (const auto& row : report.lengths) {
    std::snprintf(line, sizeof line, "%-7d %-12llu %-11llu %-10llu %-10llu %zu\n", row.length,
                  static_cast<unsigned long long>(row.total),
                  static_cast<unsigned long long>(row.generable),
                  static_cast<unsigned long long>(row.accepted),
                  static_cast<unsigned long long>(row.avoiders), row.disagreements.size());
    out << line;
  }
  for (const auto& row : report.lengths)
    for (const auto& p : row.disagreements) out << "DISAGREE " << to_string(p) << "\n";
  out << (report.agreed() ? "AGREED\n" : "DISAGREEMENT FOUND\n");
  return out.str();
}

nlohmann::json report_json(const basis::TheoremReport& report) {
  json lengths = json::array();
  for (const auto& row : report.lengths) {
    json disagreements = json::array();
    for (const auto& p : row.disagreements) disagreements.push_back(to_string(p));
    lengths.push_back({{"length", row.length},
                       {"total", row.total},
                       {"generable", row.generable},
                       {"accepted", row.accepted},
                       {"avoiders", row.avoiders},
                       {"disagreements", disagreements}});
  }
  return {{"lengths", lengths}, {"agreed", report.agreed()}};
}

std::string enumerate_text(const machine::EnumerateResult& result, bool count_only) {
  std::ostringstream out;
  if (count_only) {
    out << result.count << "\n";
    return out.str();
  }
  for (const auto& p : result.members) out << to_string(p) << "\n";
  return out.str();
}

nlohmann::json enumerate_json(const machine::EnumerateResult& result, bool count_only) {
  json out = {{"n", result.n}, {"total", result.total}, {"count", result.count}};
  if (!count_only) {
    json members = json::array();
    for (const auto& p : result.members) members.push_back(to_string(p));
    out["members"] = members;
  }
  return out;
}

std::string mined_text(const std::vector<MinedLength>& mined) {
  std::ostringstream out;
  for (const auto& group : mined)
    for (const auto& p : group.elements) out << to_string(p) << "\n";
  return out.str();
}

nlohmann::json mined_json(const std::vector<MinedLength>& mined) {
  json lengths = json::array();
  for (const auto& group : mined) {
    json elements = json::array();
    for (const auto& p : group.elements) elements.push_back(to_string(p));
    lengths.push_back({{"length", group.length}, {"elements", elements}});
  }
  return {{"lengths", lengths}};
}

std::string check_text(const CheckResult& result) {
  std::ostringstream out;
  out << to_string(result.perm);
  for (size_t i = 0; i < result.methods.size(); ++i)
    out << " " << result.methods[i] << "=" << (result.answers[i] ? "true" : "false");
  out << "\n";
  return out.str();
}

nlohmann::json check_json(const CheckResult& result) {
  json results = json::object();
  for (size_t i = 0; i < result.methods.size(); ++i)
    results[result.methods[i]] = static_cast<bool>(result.answers[i]);
  return {{"perm", to_string(result.perm)}, {"results", results}, {"agree", result.all_agree()}};
}

std::string contains_text(const Permutation& p, const Permutation& q,
                          const std::optional<std::vector<int>>& witness) {
  std::ostringstream out;
  (void)p;
  (void)q;
  if (!witness) {
    out << "false\n";
    return out.str();
  }
  out << "true";
  for (int pos : *witness) out << " " << pos;
  out << "\n";
  return out.str();
}

nlohmann::json contains_json(const Permutation& p, const Permutation& q,
                             const std::optional<std::vector<int>>& witness) {
  json out = {{"p", to_string(p)}, {"q", to_string(q)}, {"contains", witness.has_value()}};
  if (witness) out["witness"] = *witness;
  return out;
}

}  // namespace twostack::render
