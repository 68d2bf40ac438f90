#include "twostack/machine.hpp"

#include <algorithm>
#include <unordered_set>

#include "twostack/permiter.hpp"

namespace twostack::machine {

Letter letter_from_char(char c) {
  switch (c) {
    case 'r': return Letter::Rho;
    case 'l': return Letter::Lambda;
    case 'm': return Letter::Mu;
    default: throw std::invalid_argument("codeword letters are r, l, m; got '" + std::string(1, c) + "'");
  }
}

char char_from_letter(Letter l) { return static_cast<char>(l); }

MachineState MachineState::initial(int n) {
  MachineState s;
  s.n = n;
  s.next_input = 1;
  return s;
}

MachineState step(MachineState state, Letter letter, const MachineConfig& config) {
  switch (letter) {
    case Letter::Rho:
      if (state.input_exhausted()) throw MoveError("rho: input exhausted");
      if (static_cast<int>(state.stack_a.size()) >= config.depth1)
        throw MoveError("rho: stack A at capacity " + std::to_string(config.depth1));
      state.stack_a.push_back(state.next_input++);
      break;
    case Letter::Lambda:
      if (state.stack_a.empty()) throw MoveError("lambda: stack A empty");
      if (config.depth2 && static_cast<int>(state.stack_b.size()) >= *config.depth2)
        throw MoveError("lambda: stack B at capacity " + std::to_string(*config.depth2));
      state.stack_b.push_back(state.stack_a.back());
      state.stack_a.pop_back();
      break;
    case Letter::Mu:
      if (state.stack_b.empty()) throw MoveError("mu: stack B empty");
      state.output.push_back(state.stack_b.back());
      state.stack_b.pop_back();
      break;
  }
  return state;
}

bool codeword_counts_valid(int n, const std::string& word, const MachineConfig& config) {
  int rho = 0, lambda = 0, mu = 0;
  for (char c : word) {
    switch (c) {
      case 'r': ++rho; break;
      case 'l': ++lambda; break;
      case 'm': ++mu; break;
      default: return false;
    }
    if (lambda > rho || mu > lambda) return false;
    if (rho > lambda + config.depth1) return false;
    if (rho > n) return false;
    if (config.depth2 && lambda - mu > *config.depth2) return false;
  }
  return true;
}

Permutation apply_codeword(int n, const std::string& word, const MachineConfig& config) {
  MachineState state = MachineState::initial(n);
  for (size_t i = 0; i < word.size(); ++i) {
    Letter letter;
    try {
      letter = letter_from_char(word[i]);
    } catch (const std::invalid_argument& e) {
      throw CodewordError(i + 1, e.what());
    }
    try {
      state = step(std::move(state), letter, config);
    } catch (const MoveError& e) {
      throw CodewordError(i + 1, e.what());
    }
  }
  if (static_cast<int>(state.output.size()) != n)
    throw CodewordError(word.size(), "incomplete: " + std::to_string(state.output.size()) +
                                         " of " + std::to_string(n) + " tokens emitted");
  return unchecked_permutation(std::move(state.output));
}

namespace {

// Depth-first search over machine configurations with the output forced to be
// a prefix of the target. States are packed into 64 bits: one nibble for the
// next input token, then stack A bottom->top, a 0xF separator, then stack B
// bottom->top. Tokens never exceed 13, so nibble values stay below the
// separator. The emitted count is determined by (next_input, A, B) and needs
// no slot of its own.
class GenerableSearch {
public:
  GenerableSearch(const Permutation& target, const MachineConfig& config)
      : config_(config), n_(target.size()) {
    pos_.assign(static_cast<size_t>(n_) + 1, 0);
    targ_.assign(static_cast<size_t>(n_), 0);
    for (int p = 1; p <= n_; ++p) {
      targ_[static_cast<size_t>(p - 1)] = target.value_at(p);
      pos_[static_cast<size_t>(target.value_at(p))] = p;
    }
    a_.reserve(static_cast<size_t>(std::min(config.depth1, n_)));
    b_.reserve(static_cast<size_t>(n_));
    failed_.reserve(1024);
  }

  std::optional<std::string> run() {
    if (n_ == 0) return std::string{};
    next_input_ = 1;
    emitted_ = 0;
    word_.clear();
    if (dfs()) return word_;
    return std::nullopt;
  }

private:
  uint64_t pack() const {
    uint64_t key = static_cast<uint64_t>(next_input_);
    for (int v : a_) key = (key << 4) | static_cast<uint64_t>(v);
    key = (key << 4) | 0xFull;
    for (int v : b_) key = (key << 4) | static_cast<uint64_t>(v);
    return key;
  }

  bool dfs() {
    if (emitted_ == n_) return true;
    const uint64_t key = pack();
    if (failed_.count(key) > 0) return false;
    const int needed = targ_[static_cast<size_t>(emitted_)];

    if (!b_.empty() && b_.back() == needed) {
      // Forced: emitting now commutes with rho, and any lambda here would bury
      // the token due out next. Nothing else is worth trying.
      b_.pop_back();
      ++emitted_;
      word_.push_back('m');
      if (dfs()) return true;
      word_.pop_back();
      --emitted_;
      b_.push_back(needed);
    } else {
      // lambda -- never bury a token that is due out before the one pushed, so
      // B stays ordered top-to-bottom by due time.
      if (!a_.empty() && (!config_.depth2 || static_cast<int>(b_.size()) < *config_.depth2)) {
        const int t = a_.back();
        if (b_.empty() || pos_[static_cast<size_t>(t)] < pos_[static_cast<size_t>(b_.back())]) {
          a_.pop_back();
          b_.push_back(t);
          word_.push_back('l');
          if (dfs()) return true;
          word_.pop_back();
          b_.pop_back();
          a_.push_back(t);
        }
      }

      // rho
      if (next_input_ <= n_ && static_cast<int>(a_.size()) < config_.depth1) {
        a_.push_back(next_input_++);
        word_.push_back('r');
        if (dfs()) return true;
        word_.pop_back();
        a_.pop_back();
        --next_input_;
      }
    }

    failed_.insert(key);
    return false;
  }

  MachineConfig config_;
  int n_;
  int next_input_ = 1;
  int emitted_ = 0;
  std::vector<int> targ_, pos_, a_, b_;
  std::string word_;
  std::unordered_set<uint64_t> failed_;
};

}  // namespace

std::optional<std::string> generable(const Permutation& target, const MachineConfig& config) {
  if (config.depth1 < 1) throw std::invalid_argument("depth1 must be >= 1");
  if (target.size() > kMaxSearchLength)
    throw std::invalid_argument("generable: length " + std::to_string(target.size()) +
                                " exceeds the search limit of " + std::to_string(kMaxSearchLength));
  GenerableSearch search(target, config);
  return search.run();
}

EnumerateResult enumerate_generable(int n, const MachineConfig& config, const EnumerateOptions& options) {
  const int cap = std::min(options.unsafe ? kMaxSearchLength : options.cap, kMaxSearchLength);
  if (n < 0) throw std::invalid_argument("enumerate_generable: negative length");
  if (n > cap)
    throw std::invalid_argument("enumerate_generable: length " + std::to_string(n) +
                                " exceeds the cap of " + std::to_string(cap) +
                                (cap < kMaxSearchLength ? "; pass the unsafe override to raise it" : ""));
  EnumerateResult result;
  result.n = n;
  result.total = factorial(n);

  struct Chunk {
    uint64_t count = 0;
    std::vector<Permutation> members;
  };
  std::vector<Chunk> chunks(static_cast<size_t>(resolve_jobs(options.jobs)) * 8 + 1);

  parallel_rank_chunks(n, options.jobs, [&](int c, uint64_t lo, uint64_t hi) {
    Chunk& chunk = chunks[static_cast<size_t>(c)];
    for_rank_range(n, lo, hi, [&](const std::vector<int>& vals, uint64_t) {
      Permutation p = unchecked_permutation(vals);
      if (generable(p, config)) {
        ++chunk.count;
        if (!options.count_only) chunk.members.push_back(std::move(p));
      }
    });
  });

  for (auto& chunk : chunks) {
    result.count += chunk.count;
    for (auto& p : chunk.members) result.members.push_back(std::move(p));
  }
  return result;
}

}  // namespace twostack::machine
