// Lexicographic iteration over all permutations of 1..n, Lehmer ranking, and a
// deterministic parallel chunk driver used by the enumeration entry points.
#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <numeric>
#include <thread>
#include <vector>

namespace twostack {

inline uint64_t factorial(int n) {
  uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<uint64_t>(i);
  return f;
}

// Lexicographic rank of a permutation of 1..n (0-based).
inline uint64_t lehmer_rank(const std::vector<int>& vals) {
  const int n = static_cast<int>(vals.size());
  uint64_t rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (vals[static_cast<size_t>(j)] < vals[static_cast<size_t>(i)]) ++smaller;
    rank = rank * static_cast<uint64_t>(n - i) + static_cast<uint64_t>(smaller);
  }
  return rank;
}

// Inverse of lehmer_rank.
inline std::vector<int> lehmer_unrank(int n, uint64_t rank) {
  std::vector<int> pool(static_cast<size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> out;
  out.reserve(static_cast<size_t>(n));
  uint64_t f = factorial(n);
  for (int i = n; i >= 1; --i) {
    f /= static_cast<uint64_t>(i);
    const auto idx = static_cast<size_t>(rank / f);
    rank %= f;
    out.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<long>(idx));
  }
  return out;
}

// Calls fn(values) for every permutation of 1..n in lexicographic order.
template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
  std::vector<int> vals(static_cast<size_t>(n));
  std::iota(vals.begin(), vals.end(), 1);
  if (n == 0) {
    fn(vals);
    return;
  }
  do {
    fn(vals);
  } while (std::next_permutation(vals.begin(), vals.end()));
}

inline int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(chunk_index, first_rank, last_rank) over equal contiguous rank ranges
// covering all n! permutations, distributing chunks over `jobs` threads. Chunk
// results must be merged by the caller in chunk order; that keeps the outcome
// independent of the thread count.
template <typename Fn>
void parallel_rank_chunks(int n, int jobs, Fn&& fn) {
  const uint64_t total = factorial(n);
  jobs = resolve_jobs(jobs);
  const int chunks = std::max<int>(1, std::min<uint64_t>(total, static_cast<uint64_t>(jobs) * 8));
  auto run_chunk = [&](int c) {
    const uint64_t lo = total * static_cast<uint64_t>(c) / static_cast<uint64_t>(chunks);
    const uint64_t hi = total * static_cast<uint64_t>(c + 1) / static_cast<uint64_t>(chunks);
    if (lo < hi) fn(c, lo, hi);
  };
  if (jobs <= 1 || chunks <= 1) {
    for (int c = 0; c < chunks; ++c) run_chunk(c);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  for (int t = 0; t < std::min(jobs, chunks); ++t) {
    pool.emplace_back([&] {
      for (int c = next.fetch_add(1); c < chunks; c = next.fetch_add(1)) run_chunk(c);
    });
  }
  for (auto& th : pool) th.join();
}

// Iterates permutations with ranks in [first, last) in lexicographic order.
template <typename Fn>
void for_rank_range(int n, uint64_t first, uint64_t last, Fn&& fn) {
  if (first >= last) return;
  std::vector<int> vals = lehmer_unrank(n, first);
  for (uint64_t r = first; r < last; ++r) {
    fn(vals, r);
    if (r + 1 < last) std::next_permutation(vals.begin(), vals.end());
  }
}

}  // namespace twostack
