#include "twostack/basis.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "twostack/canon.hpp"
#include "twostack/permiter.hpp"

namespace twostack::basis {

const BasisSet& basis_table() {
  static const BasisSet table = [] {
    const char* words[] = {
        "51234", "51243", "51423", "52134", "52143", "52413",
        "645123", "645213",
        "416235", "416253", "426135", "426153",
        "4137256", "4137265", "4175623",
        "4237156", "4237165", "4275613",
        "41386725", "42386715",
    };
    BasisSet set;
    for (const char* w : words) set.elements.push_back(parse_permutation(w));
    return set;
  }();
  return table;
}

bool avoids_basis(const Permutation& p, const BasisSet& basis) {
  for (const Permutation& b : basis.elements) {
    if (b.size() > p.size()) continue;
    if (contains(p, b)) return false;
  }
  return true;
}

namespace {

// Every pattern of p obtained by deleting at least one entry is a member.
bool all_proper_patterns_member(const MemberOracle& member, const Permutation& p) {
  const int n = p.size();
  std::set<Permutation> seen;
  std::vector<int> word;
  for (uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    word.clear();
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) word.push_back(p.value_at(i + 1));
    Permutation pattern = standardize(word);
    if (!seen.insert(pattern).second) continue;
    if (!member(pattern)) return false;
  }
  return true;
}

}  // namespace

std::vector<Permutation> mine_basis(const MemberOracle& member, int n, const MineOptions& options) {
  if (n < 0) throw std::invalid_argument("mine_basis: negative length");
  if (n == 0) return {};

  std::vector<std::vector<Permutation>> chunks(static_cast<size_t>(resolve_jobs(options.jobs)) * 8 + 1);
  parallel_rank_chunks(n, options.jobs, [&](int c, uint64_t lo, uint64_t hi) {
    auto& found = chunks[static_cast<size_t>(c)];
    for_rank_range(n, lo, hi, [&](const std::vector<int>& vals, uint64_t) {
      Permutation p = unchecked_permutation(vals);
      if (member(p)) return;
      for (int i = 1; i <= n; ++i)
        if (!member(delete_entry(p, i))) return;
      if (options.strict && !all_proper_patterns_member(member, p)) return;
      found.push_back(std::move(p));
    });
  });

  std::vector<Permutation> result;
  for (auto& chunk : chunks)
    for (auto& p : chunk) result.push_back(std::move(p));
  return result;
}

Permutation lemma1_extend(const Permutation& sigma) {
  std::vector<int> vals;
  vals.reserve(static_cast<size_t>(sigma.size()) + 3);
  for (int v : sigma.values()) vals.push_back(v + 3);
  vals.push_back(2);
  vals.push_back(1);
  vals.push_back(3);
  return unchecked_permutation(std::move(vals));
}

Permutation swap_values_one_two(const Permutation& p) {
  std::vector<int> vals = p.values();
  for (int& v : vals) {
    if (v == 1) v = 2;
    else if (v == 2) v = 1;
  }
  return unchecked_permutation(std::move(vals));
}

TheoremReport verify_theorem(int n_max, const machine::MachineConfig& config,
                             const VerifyOptions& options) {
  const int cap = std::min(options.unsafe ? machine::kMaxSearchLength : options.cap,
                           machine::kMaxSearchLength);
  if (n_max < 1) throw std::invalid_argument("verify_theorem: n_max must be at least 1");
  if (n_max > cap)
    throw std::invalid_argument("verify_theorem: length " + std::to_string(n_max) +
                                " exceeds the cap of " + std::to_string(cap) +
                                (cap < machine::kMaxSearchLength ? "; pass the unsafe override to raise it" : ""));

  TheoremReport report;
  for (int n = 1; n <= n_max; ++n) {
    LengthReport row;
    row.length = n;
    row.total = factorial(n);

    struct Chunk {
      uint64_t generable = 0, accepted = 0, avoiders = 0;
      std::vector<Permutation> disagreements;
    };
    std::vector<Chunk> chunks(static_cast<size_t>(resolve_jobs(options.jobs)) * 8 + 1);

    parallel_rank_chunks(n, options.jobs, [&](int c, uint64_t lo, uint64_t hi) {
      Chunk& chunk = chunks[static_cast<size_t>(c)];
      for_rank_range(n, lo, hi, [&](const std::vector<int>& vals, uint64_t) {
        Permutation p = unchecked_permutation(vals);
        const bool gen = machine::generable(p, config).has_value();
        const bool acc = canon::run_algorithm(p, false).accepted;
        const bool avo = avoids_basis(p);
        if (gen) ++chunk.generable;
        if (acc) ++chunk.accepted;
        if (avo) ++chunk.avoiders;
        if (gen != acc || acc != avo) chunk.disagreements.push_back(std::move(p));
      });
    });

    for (auto& chunk : chunks) {
      row.generable += chunk.generable;
      row.accepted += chunk.accepted;
      row.avoiders += chunk.avoiders;
      for (auto& p : chunk.disagreements) row.disagreements.push_back(std::move(p));
    }
    report.lengths.push_back(std::move(row));
  }
  return report;
}

}  // namespace twostack::basis
