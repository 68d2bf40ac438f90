// Semantics of a bounded stack feeding a second stack: single moves, codeword
// replay, and exhaustive generability search.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "twostack/perm.hpp"

namespace twostack::machine {

// rho: input -> stack A, lambda: A -> B, mu: B -> output.
enum class Letter : char { Rho = 'r', Lambda = 'l', Mu = 'm' };

Letter letter_from_char(char c);
char char_from_letter(Letter l);

struct MachineConfig {
  // Maximum tokens simultaneously in stack A, pass-through slot included.
  int depth1 = 2;
  // Maximum tokens in stack B; unbounded when absent.
  std::optional<int> depth2;
};

struct MachineState {
  int n = 0;
  int next_input = 1;  // n+1 once the input is exhausted
  std::vector<int> stack_a;  // bottom -> top
  std::vector<int> stack_b;  // bottom -> top
  std::vector<int> output;

  static MachineState initial(int n);
  bool input_exhausted() const { return next_input > n; }
};

struct MoveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Position (1-based) of the first letter whose move is illegal, plus why.
struct CodewordError : std::runtime_error {
  size_t position;
  CodewordError(size_t pos, const std::string& what)
      : std::runtime_error("codeword letter " + std::to_string(pos) + ": " + what), position(pos) {}
};

// Applies one letter. Throws MoveError naming the violated constraint.
MachineState step(MachineState state, Letter letter, const MachineConfig& config = {});

// True iff every prefix of `word` satisfies the counting constraints for a
// length-n run: #lambda <= #rho, #mu <= #lambda, #rho <= #lambda + depth1,
// #rho <= n, and #lambda - #mu <= depth2 when bounded.
bool codeword_counts_valid(int n, const std::string& word, const MachineConfig& config = {});

// Runs a complete codeword from the initial state and returns the output
// permutation. Throws CodewordError on the first offending position, or if the
// word leaves tokens unemitted.
Permutation apply_codeword(int n, const std::string& word, const MachineConfig& config = {});

// Longest supported permutation for the exhaustive search (state packing bound).
inline constexpr int kMaxSearchLength = 13;

// Exhaustive search for a codeword generating `target`; sound and complete for
// the given config. The witness is deterministic: depth-first over moves in the
// fixed order mu, lambda, rho.
std::optional<std::string> generable(const Permutation& target, const MachineConfig& config = {});

struct EnumerateOptions {
  int cap = 10;        // refuse lengths beyond this unless unsafe
  bool unsafe = false;
  bool count_only = false;
  int jobs = 0;        // 0 = hardware concurrency
};

struct EnumerateResult {
  int n = 0;
  uint64_t total = 0;   // n!
  uint64_t count = 0;   // generable permutations of length n
  std::vector<Permutation> members;  // sorted; empty when count_only
};

// Exactly the length-n permutations for which generable() finds a witness.
EnumerateResult enumerate_generable(int n, const MachineConfig& config = {},
                                    const EnumerateOptions& options = {});

}  // namespace twostack::machine
