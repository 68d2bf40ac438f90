#include "twostack/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace twostack {

Permutation::Permutation(std::vector<int> values) : vals_(std::move(values)) {
  const int n = static_cast<int>(vals_.size());
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (int v : vals_) {
    if (v < 1 || v > n || seen[static_cast<size_t>(v)])
      throw std::invalid_argument("not a permutation of 1..n");
    seen[static_cast<size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return unchecked_permutation(std::move(v));
}

Permutation unchecked_permutation(std::vector<int> values) {
  return Permutation(std::move(values), Permutation::unchecked_tag{});
}

Permutation standardize(std::span<const int> word) {
  const size_t n = word.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return word[static_cast<size_t>(a)] < word[static_cast<size_t>(b)]; });
  std::vector<int> out(n);
  for (size_t rank = 0; rank < n; ++rank) {
    const size_t pos = static_cast<size_t>(order[rank]);
    if (rank > 0 && word[pos] == word[static_cast<size_t>(order[rank - 1])])
      throw std::invalid_argument("standardize: duplicate entries");
    out[pos] = static_cast<int>(rank) + 1;
  }
  return unchecked_permutation(std::move(out));
}

Permutation standardize(const std::vector<int>& word) {
  return standardize(std::span<const int>(word));
}

namespace {

// Backtracking subsequence match trying positions in increasing order, so the
// first complete match is the lexicographically least witness. Prunes branches
// with fewer remaining entries than pattern letters.
bool match_from(const std::vector<int>& p, const std::vector<int>& q, size_t qi, size_t from,
                std::vector<int>& picked) {
  if (qi == q.size()) return true;
  for (size_t i = from; i + (q.size() - qi) <= p.size(); ++i) {
    bool ok = true;
    for (size_t j = 0; j < qi && ok; ++j) {
      const bool perm_less = p[static_cast<size_t>(picked[j] - 1)] < p[i];
      const bool pat_less = q[j] < q[qi];
      ok = (perm_less == pat_less);
    }
    if (!ok) continue;
    picked.push_back(static_cast<int>(i) + 1);
    if (match_from(p, q, qi + 1, i + 1, picked)) return true;
    picked.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> containment_witness(const Permutation& p, const Permutation& q) {
  if (q.size() > p.size()) return std::nullopt;
  std::vector<int> picked;
  picked.reserve(static_cast<size_t>(q.size()));
  if (match_from(p.values(), q.values(), 0, 0, picked)) return picked;
  return std::nullopt;
}

bool contains(const Permutation& p, const Permutation& q) {
  return containment_witness(p, q).has_value();
}

Permutation delete_entry(const Permutation& p, int i) {
  if (i < 1 || i > p.size()) throw std::out_of_range("delete_entry: position out of range");
  const int gone = p.value_at(i);
  std::vector<int> out;
  out.reserve(static_cast<size_t>(p.size()) - 1);
  for (int pos = 1; pos <= p.size(); ++pos) {
    if (pos == i) continue;
    const int v = p.value_at(pos);
    out.push_back(v > gone ? v - 1 : v);
  }
  return unchecked_permutation(std::move(out));
}

bool right_contiguous(const Permutation& p, const IntervalSpec& spec) {
  if (spec.start < 1 || spec.start > spec.end || spec.end > p.size())
    throw std::invalid_argument("right_contiguous: invalid interval");
  if (spec.modulo && (*spec.modulo < 1 || *spec.modulo > p.size()))
    throw std::invalid_argument("right_contiguous: modulo outside value range");
  int lo = p.value_at(spec.start), hi = lo;
  for (int pos = spec.start + 1; pos <= spec.end; ++pos) {
    lo = std::min(lo, p.value_at(pos));
    hi = std::max(hi, p.value_at(pos));
  }
  for (int pos = spec.end + 1; pos <= p.size(); ++pos) {
    const int v = p.value_at(pos);
    if (v >= lo && v <= hi && !(spec.modulo && v == *spec.modulo)) return false;
  }
  return true;
}

bool segment_avoids(const Permutation& p, int start, int end, const Permutation& q) {
  if (start < 1 || start > end || end > p.size())
    throw std::invalid_argument("segment_avoids: invalid range");
  const auto& v = p.values();
  const auto seg = standardize(std::span<const int>(v.data() + (start - 1), static_cast<size_t>(end - start + 1)));
  return !contains(seg, q);
}

Permutation parse_permutation(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty permutation text");
  std::vector<int> vals;
  if (s.find(',') != std::string::npos) {
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return isdigit(static_cast<unsigned char>(c)); }))
        throw std::invalid_argument("bad permutation token '" + tok + "' in '" + text + "'");
      vals.push_back(std::stoi(tok));
    }
    if (s.back() == ',') throw std::invalid_argument("trailing comma in '" + text + "'");
  } else {
    for (char c : s) {
      if (!isdigit(static_cast<unsigned char>(c)) || c == '0')
        throw std::invalid_argument("bad character '" + std::string(1, c) + "' in permutation '" + text + "'");
      vals.push_back(c - '0');
    }
  }
  return Permutation(std::move(vals));  // validates bijection
}

std::string to_string(const Permutation& p) {
  std::string out;
  if (p.size() <= 9) {
    for (int v : p.values()) out.push_back(static_cast<char>('0' + v));
  } else {
    for (int pos = 1; pos <= p.size(); ++pos) {
      if (pos > 1) out.push_back(',');
      out += std::to_string(p.value_at(pos));
    }
  }
  return out;
}

}  // namespace twostack
