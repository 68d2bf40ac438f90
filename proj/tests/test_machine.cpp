#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "twostack/machine.hpp"

using namespace twostack;
using machine::MachineConfig;
using machine::MachineState;

TEST_CASE("letters map to characters and back") {
  CHECK(machine::letter_from_char('r') == machine::Letter::Rho);
  CHECK(machine::letter_from_char('l') == machine::Letter::Lambda);
  CHECK(machine::letter_from_char('m') == machine::Letter::Mu);
  CHECK(machine::char_from_letter(machine::Letter::Mu) == 'm');
  CHECK_THROWS_AS(machine::letter_from_char('x'), std::invalid_argument);
}

TEST_CASE("single steps move tokens between the right places") {
  MachineState s = MachineState::initial(3);
  CHECK(s.next_input == 1);
  s = machine::step(s, machine::Letter::Rho);
  CHECK(s.stack_a == std::vector<int>{1});
  CHECK(s.next_input == 2);
  s = machine::step(s, machine::Letter::Rho);
  CHECK(s.stack_a == std::vector<int>{1, 2});
  s = machine::step(s, machine::Letter::Lambda);
  CHECK(s.stack_a == std::vector<int>{1});
  CHECK(s.stack_b == std::vector<int>{2});
  s = machine::step(s, machine::Letter::Mu);
  CHECK(s.output == std::vector<int>{2});
  CHECK_FALSE(s.input_exhausted());
}

TEST_CASE("illegal moves throw with the violated constraint") {
  MachineState s = MachineState::initial(1);
  CHECK_THROWS_WITH_AS(machine::step(s, machine::Letter::Lambda), "lambda: stack A empty",
                       machine::MoveError);
  CHECK_THROWS_WITH_AS(machine::step(s, machine::Letter::Mu), "mu: stack B empty",
                       machine::MoveError);
  s = machine::step(s, machine::Letter::Rho);
  CHECK_THROWS_WITH_AS(machine::step(s, machine::Letter::Rho), "rho: input exhausted",
                       machine::MoveError);

  MachineState t = MachineState::initial(3);
  t = machine::step(t, machine::Letter::Rho);
  t = machine::step(t, machine::Letter::Rho);
  CHECK_THROWS_WITH_AS(machine::step(t, machine::Letter::Rho), "rho: stack A at capacity 2",
                       machine::MoveError);
  t = machine::step(t, machine::Letter::Lambda);
  const MachineConfig bounded{2, 1};
  CHECK_THROWS_WITH_AS(machine::step(t, machine::Letter::Lambda, bounded),
                       "lambda: stack B at capacity 1", machine::MoveError);
}

TEST_CASE("codeword counting constraints") {
  CHECK(machine::codeword_counts_valid(3, "rlmrlmrlm"));
  CHECK(machine::codeword_counts_valid(3, "rrllrlmmm"));
  CHECK_FALSE(machine::codeword_counts_valid(3, "lr"));          // lambda before any rho
  CHECK_FALSE(machine::codeword_counts_valid(3, "rm"));          // mu before any lambda
  CHECK_FALSE(machine::codeword_counts_valid(3, "rrr"));         // three tokens in a depth-2 stack
  CHECK_FALSE(machine::codeword_counts_valid(2, "rlmrlmr"));     // more rhos than input tokens
  CHECK(machine::codeword_counts_valid(3, "rrl"));
  CHECK_FALSE(machine::codeword_counts_valid(3, "rlrlrl", MachineConfig{2, 1}));
  CHECK(machine::codeword_counts_valid(3, "rlrmlrml", MachineConfig{2, 1}));
}

TEST_CASE("apply_codeword replays complete runs") {
  CHECK(machine::apply_codeword(3, "rlmrlmrlm") == Permutation({1, 2, 3}));
  CHECK(machine::apply_codeword(2, "rrlmlm") == Permutation({2, 1}));
  CHECK(machine::apply_codeword(3, "rlrrlmmlm") == Permutation({3, 1, 2}));
  CHECK(machine::apply_codeword(0, "") == Permutation());
}

TEST_CASE("apply_codeword reports the first offending letter, 1-based") {
  try {
    machine::apply_codeword(3, "rlx");
    FAIL("expected a codeword error");
  } catch (const machine::CodewordError& e) {
    CHECK(e.position == 3);
  }
  try {
    machine::apply_codeword(3, "rrrl");
    FAIL("expected a codeword error");
  } catch (const machine::CodewordError& e) {
    CHECK(e.position == 3);
  }
  try {
    machine::apply_codeword(3, "rlm");
    FAIL("expected a codeword error");
  } catch (const machine::CodewordError& e) {
    CHECK(e.position == 3);  // the position where the word ran dry
    CHECK(std::string(e.what()).find("incomplete") != std::string::npos);
  }
}

TEST_CASE("search witnesses replay to their targets, exhaustive to length 6") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& vals : oracles::all_perms(n)) {
      const Permutation p(vals);
      const auto witness = machine::generable(p);
      if (witness) {
        CAPTURE(to_string(p));
        CHECK(machine::apply_codeword(n, *witness) == p);
      }
    }
  }
}

TEST_CASE("search agrees with the naive simulation on several machine shapes") {
  struct Shape {
    int depth1;
    std::optional<int> depth2;
  };
  const Shape shapes[] = {{2, std::nullopt}, {1, std::nullopt}, {3, std::nullopt}, {2, 1}, {2, 2}};
  for (const Shape& shape : shapes) {
    const MachineConfig config{shape.depth1, shape.depth2};
    for (int n = 1; n <= 5; ++n) {
      const auto truth = oracles::generable_set_brute(n, shape.depth1, shape.depth2);
      for (const auto& vals : oracles::all_perms(n)) {
        CAPTURE(shape.depth1);
        CAPTURE(n);
        CAPTURE(to_string(Permutation(vals)));
        CHECK(machine::generable(Permutation(vals), config).has_value() ==
              (truth.count(vals) > 0));
      }
    }
  }
}

TEST_CASE("witnesses are deterministic") {
  const Permutation p = parse_permutation("52314");
  const auto w1 = machine::generable(p);
  const auto w2 = machine::generable(p);
  REQUIRE(w1.has_value());
  CHECK(*w1 == *w2);
  CHECK(*machine::generable(parse_permutation("312")) == "rlrrlmmlm");
}

TEST_CASE("enumerate counts the class and is oblivious to worker count") {
  machine::EnumerateOptions one_job;
  one_job.jobs = 1;
  machine::EnumerateOptions three_jobs;
  three_jobs.jobs = 3;
  const auto a = machine::enumerate_generable(6, {}, one_job);
  const auto b = machine::enumerate_generable(6, {}, three_jobs);
  CHECK(a.total == 720);
  CHECK(a.count == 592);
  CHECK(a.members.size() == 592);
  CHECK(a.members == b.members);
  CHECK(std::is_sorted(a.members.begin(), a.members.end()));

  machine::EnumerateOptions count_only;
  count_only.count_only = true;
  const auto c = machine::enumerate_generable(6, {}, count_only);
  CHECK(c.count == 592);
  CHECK(c.members.empty());

  const auto empty = machine::enumerate_generable(0, {}, count_only);
  CHECK(empty.total == 1);
  CHECK(empty.count == 1);
}

TEST_CASE("enumerate refuses lengths beyond the cap unless overridden") {
  CHECK_THROWS_AS(machine::enumerate_generable(11), std::invalid_argument);
  CHECK_THROWS_AS(machine::generable(Permutation(std::vector<int>{14, 13, 12, 11, 10, 9, 8, 7, 6,
                                                                  5, 4, 3, 2, 1})),
                  std::invalid_argument);
  machine::EnumerateOptions unsafe;
  unsafe.unsafe = true;
  unsafe.count_only = true;
  CHECK_THROWS_AS(machine::enumerate_generable(14, {}, unsafe), std::invalid_argument);
}

TEST_CASE("depth-1 machine reduces to the single-stack class") {
  // With a depth-1 first stack every token must pass straight through, so the
  // machine is one unbounded stack: exactly the 312-avoiders survive.
  const Permutation p312 = parse_permutation("312");
  for (int n = 1; n <= 5; ++n) {
    for (const auto& vals : oracles::all_perms(n)) {
      const Permutation p(vals);
      CHECK(machine::generable(p, MachineConfig{1, std::nullopt}).has_value() == avoids(p, p312));
    }
  }
}
