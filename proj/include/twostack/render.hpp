// Text and JSON renderings of traces, theorem reports, enumerations and the
// other command outputs. Text and JSON carry the same semantic content.
#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "twostack/basis.hpp"
#include "twostack/canon.hpp"
#include "twostack/machine.hpp"

namespace twostack::render {

// One event per line, a CODEWORD line for the letters applied, and a final
// ACCEPT or REJECT line.
std::string trace_text(const Permutation& target, const canon::Verdict& verdict);
nlohmann::json trace_json(const Permutation& target, const canon::Verdict& verdict);

// Aligned per-length table followed by any disagreements, one per line.
std::string report_text(const basis::TheoremReport& report);
nlohmann::json report_json(const basis::TheoremReport& report);

// Count only, or one member per line.
std::string enumerate_text(const machine::EnumerateResult& result, bool count_only);
nlohmann::json enumerate_json(const machine::EnumerateResult& result, bool count_only);

struct MinedLength {
  int length = 0;
  std::vector<Permutation> elements;
};

// One element per line, lengths in ascending order.
std::string mined_text(const std::vector<MinedLength>& mined);
nlohmann::json mined_json(const std::vector<MinedLength>& mined);

struct CheckResult {
  Permutation perm;
  // Parallel vectors: method name ("alg", "brute", "avoid") and its answer.
  std::vector<std::string> methods;
  std::vector<bool> answers;
  bool all_agree() const {
    for (bool a : answers)
      if (a != answers.front()) return false;
    return true;
  }
};

std::string check_text(const CheckResult& result);
nlohmann::json check_json(const CheckResult& result);

std::string contains_text(const Permutation& p, const Permutation& q,
                          const std::optional<std::vector<int>>& witness);
nlohmann::json contains_json(const Permutation& p, const Permutation& q,
                             const std::optional<std::vector<int>>& witness);

}  // namespace twostack::render
