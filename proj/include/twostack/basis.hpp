// The 20-element obstruction set, avoidance checking, minimal-obstruction
// mining from a membership oracle, and the add-3/append-213 lifting.
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "twostack/machine.hpp"
#include "twostack/perm.hpp"

namespace twostack::basis {

struct BasisSet {
  std::vector<Permutation> elements;  // sorted by (length, values)
};

// The canonical constant: 20 permutations of lengths 5 through 8, an antichain
// closed under swapping the entries of value 1 and 2.
const BasisSet& basis_table();

// True iff p contains no element of the basis.
bool avoids_basis(const Permutation& p, const BasisSet& basis = basis_table());

using MemberOracle = std::function<bool(const Permutation&)>;

struct MineOptions {
  // Re-verify minimality against every proper pattern instead of trusting the
  // oracle's set to be closed under containment.
  bool strict = false;
  int jobs = 0;  // 0 = hardware concurrency
};

// The length-n permutations sigma with member(sigma) false and every one-entry
// deletion of sigma a member. For a pattern-closed set these are exactly the
// minimal non-members.
std::vector<Permutation> mine_basis(const MemberOracle& member, int n, const MineOptions& options = {});

// Each entry of sigma increased by 3, followed by the entries 2, 1, 3.
Permutation lemma1_extend(const Permutation& sigma);

// The permutation with the entries of value 1 and 2 interchanged.
Permutation swap_values_one_two(const Permutation& p);

struct LengthReport {
  int length = 0;
  uint64_t total = 0;
  uint64_t generable = 0;
  uint64_t accepted = 0;
  uint64_t avoiders = 0;
  std::vector<Permutation> disagreements;  // predicates differ; expected empty
};

struct TheoremReport {
  std::vector<LengthReport> lengths;  // lengths 1..n_max in order
  bool agreed() const {
    for (const auto& l : lengths)
      if (!l.disagreements.empty()) return false;
    return true;
  }
};

struct VerifyOptions {
  int cap = 10;
  bool unsafe = false;
  int jobs = 0;
};

// Exhaustively evaluates the three membership predicates (machine search,
// deterministic algorithm, basis avoidance) for every permutation of each
// length 1..n_max and tabulates counts plus any disagreements.
TheoremReport verify_theorem(int n_max, const machine::MachineConfig& config = {},
                             const VerifyOptions& options = {});

}  // namespace twostack::basis
