// Permutation values, pattern containment and the contiguity predicates.
#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace twostack {

// A permutation of {1..n}, stored as its value sequence. Length 0 is allowed.
class Permutation {
public:
  Permutation() = default;

  // Validates that values form a bijection onto {1..n}; throws std::invalid_argument.
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(vals_.size()); }
  bool empty() const { return vals_.empty(); }

  // 1-based positional access, matching the conventions used throughout.
  int value_at(int pos) const { return vals_[static_cast<size_t>(pos - 1)]; }

  const std::vector<int>& values() const { return vals_; }

  bool operator==(const Permutation& o) const { return vals_ == o.vals_; }
  bool operator!=(const Permutation& o) const { return vals_ != o.vals_; }
  bool operator<(const Permutation& o) const { return vals_ < o.vals_; }

private:
  struct unchecked_tag {};
  Permutation(std::vector<int> values, unchecked_tag) : vals_(std::move(values)) {}
  friend Permutation unchecked_permutation(std::vector<int>);

  std::vector<int> vals_;
};

// Internal fast path for values already known to be a bijection.
Permutation unchecked_permutation(std::vector<int> values);

// A subinterval [start..end] (1-based, inclusive) with an optional exempt value
// for the right-contiguity test.
struct IntervalSpec {
  int start = 1;
  int end = 1;
  std::optional<int> modulo;
};

// The unique permutation order-isomorphic to `word`. Entries must be distinct.
Permutation standardize(std::span<const int> word);
Permutation standardize(const std::vector<int>& word);

// True iff some subsequence of p is order isomorphic to q.
bool contains(const Permutation& p, const Permutation& q);
inline bool avoids(const Permutation& p, const Permutation& q) { return !contains(p, q); }

// Lexicographically least witness positions (1-based), or nullopt.
std::optional<std::vector<int>> containment_witness(const Permutation& p, const Permutation& q);

// Remove position i (1-based) and standardize the remainder.
Permutation delete_entry(const Permutation& p, int i);

// With tau = p[start..end] and beta = p[end+1..n]: true iff no entry of beta lies
// in [min(tau), max(tau)], except an entry equal to spec.modulo.
bool right_contiguous(const Permutation& p, const IntervalSpec& spec);

// True iff standardize(p[start..end]) avoids q.
bool segment_avoids(const Permutation& p, int start, int end, const Permutation& q);

// Text format: compact digit string for n <= 9 ("52314"), comma-separated for
// n > 9 ("10,3,1,2"). Mixed forms are rejected. Throws std::invalid_argument.
Permutation parse_permutation(const std::string& text);
std::string to_string(const Permutation& p);

}  // namespace twostack

template <>
struct std::hash<twostack::Permutation> {
  size_t operator()(const twostack::Permutation& p) const noexcept {
    size_t h = 0x811c9dc5u;
    for (int v : p.values()) h = (h ^ static_cast<size_t>(v)) * 0x01000193u;
    return h;
  }
};
