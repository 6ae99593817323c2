#include "succession/enumeration.hpp"

#include <future>
#include <string>
#include <thread>

namespace succession {

namespace {

// Partition counts are accumulated in uint64, which holds up to 20!; past
// n = 21 the search would not terminate in a lifetime anyway.
constexpr int kMaxEnumerableN = 21;

std::uint64_t bit_of(int v) { return std::uint64_t{1} << (v - 1); }

std::vector<int> successor_table(const ShiftProblem& problem) {
  std::vector<int> succ(static_cast<std::size_t>(problem.n()) + 1, 0);
  for (int j = 1; j <= problem.n(); ++j) {
    if (auto s = successor(problem, j)) succ[static_cast<std::size_t>(j)] = *s;
  }
  return succ;
}

void check_guard(const EnumerationConfig& config) {
  const int n = config.problem.n();
  if (n > config.max_n_guard) {
    throw GuardError("n=" + std::to_string(n) + " exceeds the enumeration guard (" +
                     std::to_string(config.max_n_guard) +
                     "); raise EnumerationConfig::max_n_guard to override (the CLI reads "
                     "SUCCESSION_MAX_GUARD)");
  }
  if (n > kMaxEnumerableN) {
    throw GuardError("n=" + std::to_string(n) + " exceeds the hard enumeration limit (" +
                     std::to_string(kMaxEnumerableN) + ")");
  }
}

std::uint64_t count_completions(int n, const std::vector<int>& succ, std::uint64_t used,
                                int last, int depth) {
  if (depth == n) return 1;
  const int banned = succ[static_cast<std::size_t>(last)];
  std::uint64_t total = 0;
  for (int v = 1; v <= n; ++v) {
    if ((used & bit_of(v)) != 0 || v == banned) continue;
    total += count_completions(n, succ, used | bit_of(v), v, depth + 1);
  }
  return total;
}

}  // namespace

bool contains_forbidden_succession(std::span<const int> perm, const ShiftProblem& problem) {
  const int n = problem.n();
  if (static_cast<int>(perm.size()) != n) {
    throw std::invalid_argument("expected a permutation of [" + std::to_string(n) + "], got " +
                                std::to_string(perm.size()) + " elements");
  }
  std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
  std::string out_of_range;
  for (int v : perm) {
    if (v < 1 || v > n) {
      out_of_range += (out_of_range.empty() ? "" : ", ") + std::to_string(v);
    } else {
      ++seen[static_cast<std::size_t>(v)];
    }
  }
  std::string duplicates;
  std::string missing;
  for (int v = 1; v <= n; ++v) {
    if (seen[static_cast<std::size_t>(v)] > 1) {
      duplicates += (duplicates.empty() ? "" : ", ") + std::to_string(v);
    } else if (seen[static_cast<std::size_t>(v)] == 0) {
      missing += (missing.empty() ? "" : ", ") + std::to_string(v);
    }
  }
  if (!out_of_range.empty() || !duplicates.empty() || !missing.empty()) {
    std::string msg = "not a permutation of [" + std::to_string(n) + "]:";
    if (!out_of_range.empty()) msg += " out of range {" + out_of_range + "}";
    if (!duplicates.empty()) msg += " duplicate {" + duplicates + "}";
    if (!missing.empty()) msg += " missing {" + missing + "}";
    throw std::invalid_argument(msg);
  }

  const std::vector<int> succ = successor_table(problem);
  for (std::size_t i = 0; i + 1 < perm.size(); ++i) {
    if (succ[static_cast<std::size_t>(perm[i])] == perm[i + 1]) return true;
  }
  return false;
}

std::vector<BigCount> partitioned_counts(const EnumerationConfig& config) {
  check_guard(config);
  const int n = config.problem.n();
  const std::vector<int> succ = successor_table(config.problem);

  const auto count_from = [n, &succ](int first) {
    return count_completions(n, succ, bit_of(first), first, 1);
  };

  std::vector<BigCount> counts(static_cast<std::size_t>(n));
  const bool parallel = n >= 9 && std::thread::hardware_concurrency() > 1;
  if (parallel) {
    std::vector<std::future<std::uint64_t>> parts;
    parts.reserve(static_cast<std::size_t>(n));
    for (int first = 1; first <= n; ++first) {
      parts.push_back(std::async(std::launch::async, count_from, first));
    }
    for (int first = 1; first <= n; ++first) {
      counts[static_cast<std::size_t>(first - 1)] = BigCount(parts[static_cast<std::size_t>(first - 1)].get());
    }
  } else {
    for (int first = 1; first <= n; ++first) {
      counts[static_cast<std::size_t>(first - 1)] = BigCount(count_from(first));
    }
  }
  return counts;
}

BigCount count_by_enumeration(const EnumerationConfig& config) {
  BigCount total = 0;
  for (const BigCount& part : partitioned_counts(config)) total += part;
  return total;
}

namespace {

int checked_n(const EnumerationConfig& config) {
  check_guard(config);
  return config.problem.n();
}

}  // namespace

AvoiderStream::AvoiderStream(const EnumerationConfig& config)
    : n_(checked_n(config)),
      succ_(successor_table(config.problem)),
      limit_(config.stream_limit),
      cursor_(static_cast<std::size_t>(n_) + 1, 0) {
  prefix_.reserve(static_cast<std::size_t>(n_));
}

void AvoiderStream::pop() {
  const int v = prefix_.back();
  prefix_.pop_back();
  used_ &= ~bit_of(v);
  // cursor_[depth] keeps the popped value so the next attempt resumes past it
}

std::optional<std::vector<int>> AvoiderStream::next() {
  if (done_) return std::nullopt;
  if (limit_ && yielded_ >= *limit_) {
    done_ = true;
    return std::nullopt;
  }
  if (static_cast<int>(prefix_.size()) == n_) pop();  // resume after a yield

  while (true) {
    const int depth = static_cast<int>(prefix_.size());
    if (depth == n_) {
      ++yielded_;
      return prefix_;
    }
    const int banned = depth == 0 ? 0 : succ_[static_cast<std::size_t>(prefix_.back())];
    int v = cursor_[static_cast<std::size_t>(depth)] + 1;
    while (v <= n_ && ((used_ & bit_of(v)) != 0 || v == banned)) ++v;
    if (v <= n_) {
      cursor_[static_cast<std::size_t>(depth)] = v;
      cursor_[static_cast<std::size_t>(depth) + 1] = 0;
      prefix_.push_back(v);
      used_ |= bit_of(v);
    } else if (depth == 0) {
      done_ = true;
      return std::nullopt;
    } else {
      pop();
    }
  }
}

std::vector<std::vector<int>> collect_avoiders(const EnumerationConfig& config) {
  AvoiderStream stream(config);
  std::vector<std::vector<int>> result;
  while (auto perm = stream.next()) result.push_back(std::move(*perm));
  return result;
}

}  // namespace succession
