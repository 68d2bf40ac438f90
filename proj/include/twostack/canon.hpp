// The deterministic generation algorithm: rule evaluation, the run loop with
// accept/reject verdicts, and the instrumentation hooks its property checks use.
#pragma once

#include <string>
#include <vector>

#include "twostack/machine.hpp"
#include "twostack/perm.hpp"

namespace twostack::canon {

enum class RuleId { R1_1, R1_2, R2_1, R2_2, R3_1, R3_2 };

// "1.1", "1.2", ... for rendering.
std::string rule_name(RuleId rule);

// KEEP_A_X_TO_B routes x through A's free slot onto B (letters "rl"), leaving a
// in place; A_TO_B_X_TO_A sends a to B and x to A (letters "lr").
enum class Move { KEEP_A_X_TO_B, A_TO_B_X_TO_A };

struct RuleHit {
  RuleId rule;
  Move move;
};

// Evaluates Rules 1.1-2.2 against the state; when none of the four applies,
// returns the single applicable Rule-3 prescription instead. Requires stack A
// to hold exactly one token and the next required output token to lie in the
// unread input strictly after the next input token; throws std::logic_error
// otherwise.
std::vector<RuleHit> applicable_rules(const machine::MachineState& state, const Permutation& target);

enum class EventKind { Output, FillA, Rule };
enum class OutputSource { Input, A, B };

struct TraceEvent {
  EventKind kind;
  // Output/FillA: the token moved. Rule: the next input token x.
  int token = 0;
  OutputSource source = OutputSource::Input;  // Output events only
  std::vector<RuleId> rules;                  // Rule events: the agreeing set
  Move move = Move::KEEP_A_X_TO_B;            // Rule events only
  int a = 0;                                  // Rule events: the token on A
};

struct Trace {
  std::vector<TraceEvent> events;
  std::string codeword;  // replaying it on the machine reproduces the target (accepts only)
};

enum class RejectReason { None, Contradiction, BuriedInB };

struct Verdict {
  bool accepted = false;
  RejectReason reason = RejectReason::None;
  std::vector<RuleId> contradiction_rules;  // Contradiction: at least one per Move
  int buried_token = 0;                     // BuriedInB: the unreachable token
  Trace trace;                              // populated when a trace was requested
};

// Instrumentation for property checks; default callbacks do nothing.
struct RunObserver {
  virtual ~RunObserver() = default;
  // Top of every loop iteration, before that iteration acts.
  virtual void iteration_start(const machine::MachineState&) {}
  // After each single machine letter the run applies.
  virtual void after_letter(char, const machine::MachineState&) {}
};

// Runs the algorithm loop: emit when the required token is at hand, refill A
// the moment it empties, otherwise act on the rules; reject on contradictory
// prescriptions or on a required token buried in B. Once the input is consumed
// the remaining tokens flush in target order (a stall there is a logic error,
// not a verdict).
Verdict run_algorithm(const Permutation& target, bool trace_wanted = true,
                      RunObserver* observer = nullptr);

// True iff stack B read top to bottom occurs in left-to-right target order.
bool check_well_ordered(const machine::MachineState& state, const Permutation& target);

// States at iteration starts where A sits empty while B holds tokens. Every
// such state should only arise for targets containing 4132 or 4231.
std::vector<machine::MachineState> cd_configuration_scan(const Permutation& target);

// The rules of all Rule events in order, flattened.
std::vector<RuleId> rule_sequence(const Verdict& verdict);

}  // namespace twostack::canon
