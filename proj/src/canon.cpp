#include "twostack/canon.hpp"

#include <algorithm>
#include <stdexcept>

namespace twostack::canon {

std::string rule_name(RuleId rule) {
  switch (rule) {
    case RuleId::R1_1: return "1.1";
    case RuleId::R1_2: return "1.2";
    case RuleId::R2_1: return "2.1";
    case RuleId::R2_2: return "2.2";
    case RuleId::R3_1: return "3.1";
    case RuleId::R3_2: return "3.2";
  }
  return "?";
}

namespace {

std::vector<int> position_table(const Permutation& target) {
  std::vector<int> pos(static_cast<size_t>(target.size()) + 1, 0);
  for (int p = 1; p <= target.size(); ++p) pos[static_cast<size_t>(target.value_at(p))] = p;
  return pos;
}

std::vector<RuleHit> evaluate_rules(const machine::MachineState& state, const Permutation& target,
                                    const std::vector<int>& pos) {
  if (state.stack_a.size() != 1)
    throw std::logic_error("applicable_rules: stack A must hold exactly one token");
  const int out_len = static_cast<int>(state.output.size());
  if (out_len >= state.n) throw std::logic_error("applicable_rules: output already complete");
  const int a = state.stack_a.back();
  const int x = state.next_input;
  const int y = target.value_at(out_len + 1);
  if (x > state.n || y <= x)
    throw std::logic_error("applicable_rules: next required token must be unread and beyond x");

  // Tokens strictly between x and y by value; the input arrives in value
  // order, so all of them are still unread here.
  int beyond_a = 0, beyond_x = 0;
  for (int v = x + 1; v < y; ++v) {
    if (pos[static_cast<size_t>(a)] < pos[static_cast<size_t>(v)]) ++beyond_a;
    if (pos[static_cast<size_t>(x)] < pos[static_cast<size_t>(v)]) ++beyond_x;
  }

  std::vector<RuleHit> hits;
  if (beyond_a >= 2) hits.push_back({RuleId::R1_1, Move::KEEP_A_X_TO_B});
  if (beyond_x >= 2) hits.push_back({RuleId::R1_2, Move::A_TO_B_X_TO_A});
  if (!state.stack_b.empty()) {
    const int b = state.stack_b.back();
    if (pos[static_cast<size_t>(b)] < pos[static_cast<size_t>(a)])
      hits.push_back({RuleId::R2_1, Move::KEEP_A_X_TO_B});
    if (pos[static_cast<size_t>(b)] < pos[static_cast<size_t>(x)])
      hits.push_back({RuleId::R2_2, Move::A_TO_B_X_TO_A});
  }
  if (!hits.empty()) return hits;

  static const Permutation p312 = unchecked_permutation({3, 1, 2});
  // Rule-3 contiguity is judged against tokens still to be read, which are
  // exactly the values above x (the input arrives in value order). Tokens at or
  // below x are already placed and cannot interleave the subinterval, so only
  // larger values can break contiguity; x itself is the exempt entry.
  const auto contiguous_for_run = [&](int end) {
    int lo = target.size() + 1, hi = 0;
    for (int p = pos[static_cast<size_t>(y)]; p <= end; ++p) {
      lo = std::min(lo, target.value_at(p));
      hi = std::max(hi, target.value_at(p));
    }
    for (int p = end + 1; p <= target.size(); ++p) {
      const int v = target.value_at(p);
      if (v > x && lo < v && v < hi) return false;
    }
    return true;
  };
  const int pos_y = pos[static_cast<size_t>(y)];
  if (pos[static_cast<size_t>(a)] < pos[static_cast<size_t>(x)]) {
    const int end = pos[static_cast<size_t>(a)];
    const bool exception = contiguous_for_run(end) && segment_avoids(target, pos_y, end, p312);
    hits.push_back({RuleId::R3_1, exception ? Move::A_TO_B_X_TO_A : Move::KEEP_A_X_TO_B});
  } else {
    const int end = pos[static_cast<size_t>(x)];
    const bool exception = contiguous_for_run(end) && segment_avoids(target, pos_y, end, p312);
    hits.push_back({RuleId::R3_2, exception ? Move::KEEP_A_X_TO_B : Move::A_TO_B_X_TO_A});
  }
  return hits;
}

}  // namespace

std::vector<RuleHit> applicable_rules(const machine::MachineState& state, const Permutation& target) {
  return evaluate_rules(state, target, position_table(target));
}

Verdict run_algorithm(const Permutation& target, bool trace_wanted, RunObserver* observer) {
  const int n = target.size();
  const std::vector<int> pos = position_table(target);

  machine::MachineState st = machine::MachineState::initial(n);
  st.stack_a.reserve(2);
  st.stack_b.reserve(static_cast<size_t>(n));
  st.output.reserve(static_cast<size_t>(n));

  Verdict verdict;
  auto apply = [&](const char* letters) {
    for (const char* c = letters; *c != '\0'; ++c) {
      switch (*c) {
        case 'r': st.stack_a.push_back(st.next_input++); break;
        case 'l':
          st.stack_b.push_back(st.stack_a.back());
          st.stack_a.pop_back();
          break;
        case 'm':
          st.output.push_back(st.stack_b.back());
          st.stack_b.pop_back();
          break;
      }
      if (observer) observer->after_letter(*c, st);
      if (trace_wanted) verdict.trace.codeword.push_back(*c);
    }
  };

  while (static_cast<int>(st.output.size()) < n) {
    if (observer) observer->iteration_start(st);
    const int t = target.value_at(static_cast<int>(st.output.size()) + 1);

    if (!st.input_exhausted() && t == st.next_input) {
      apply("rlm");
      if (trace_wanted) verdict.trace.events.push_back({EventKind::Output, t, OutputSource::Input, {}, {}, 0});
      continue;
    }
    if (!st.stack_a.empty() && st.stack_a.back() == t) {
      apply("lm");
      if (trace_wanted) verdict.trace.events.push_back({EventKind::Output, t, OutputSource::A, {}, {}, 0});
      continue;
    }
    if (!st.stack_b.empty() && st.stack_b.back() == t) {
      apply("m");
      if (trace_wanted) verdict.trace.events.push_back({EventKind::Output, t, OutputSource::B, {}, {}, 0});
      continue;
    }

    // The flush after the input runs out can only emit; a miss above means the
    // required token is unreachable, which the run discipline rules out.
    if (st.input_exhausted()) throw std::logic_error("flush stalled: required token unreachable");

    if (st.stack_a.empty()) {
      const int x = st.next_input;
      apply("r");
      if (trace_wanted) verdict.trace.events.push_back({EventKind::FillA, x, OutputSource::Input, {}, {}, 0});
      continue;
    }

    if (std::find(st.stack_b.begin(), st.stack_b.end(), t) != st.stack_b.end()) {
      verdict.reason = RejectReason::BuriedInB;
      verdict.buried_token = t;
      return verdict;
    }

    const std::vector<RuleHit> hits = evaluate_rules(st, target, pos);
    bool keep = false, move = false;
    for (const RuleHit& h : hits) (h.move == Move::KEEP_A_X_TO_B ? keep : move) = true;
    if (keep && move) {
      verdict.reason = RejectReason::Contradiction;
      for (const RuleHit& h : hits) verdict.contradiction_rules.push_back(h.rule);
      return verdict;
    }
    const Move chosen = hits.front().move;
    if (trace_wanted) {
      TraceEvent event{EventKind::Rule, st.next_input, OutputSource::Input, {}, chosen, st.stack_a.back()};
      for (const RuleHit& h : hits) event.rules.push_back(h.rule);
      verdict.trace.events.push_back(std::move(event));
    }
    apply(chosen == Move::KEEP_A_X_TO_B ? "rl" : "lr");
  }

  verdict.accepted = true;
  return verdict;
}

bool check_well_ordered(const machine::MachineState& state, const Permutation& target) {
  const std::vector<int> pos = position_table(target);
  const auto& b = state.stack_b;
  for (size_t i = 1; i < b.size(); ++i)
    if (pos[static_cast<size_t>(b[i - 1])] < pos[static_cast<size_t>(b[i])]) return false;
  return true;
}

std::vector<machine::MachineState> cd_configuration_scan(const Permutation& target) {
  struct Scanner : RunObserver {
    std::vector<machine::MachineState> flagged;
    void iteration_start(const machine::MachineState& state) override {
      if (state.stack_a.empty() && !state.stack_b.empty()) flagged.push_back(state);
    }
  } scanner;
  run_algorithm(target, false, &scanner);
  return std::move(scanner.flagged);
}

std::vector<RuleId> rule_sequence(const Verdict& verdict) {
  std::vector<RuleId> rules;
  for (const TraceEvent& e : verdict.trace.events)
    if (e.kind == EventKind::Rule) rules.insert(rules.end(), e.rules.begin(), e.rules.end());
  return rules;
}

}  // namespace twostack::canon
