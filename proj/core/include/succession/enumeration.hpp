#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "succession/big_count.hpp"
#include "succession/problem.hpp"

namespace succession {

/// Thrown when an enumeration request exceeds its size guard.
class GuardError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct EnumerationConfig {
  ShiftProblem problem;
  /// Enumeration refuses n above this unless the caller raises it. The
  /// default keeps a full count under a minute (11! ~ 4e7 leaves). The CLI
  /// maps the SUCCESSION_MAX_GUARD environment variable onto this field.
  int max_n_guard = 11;
  /// Cap on the number of permutations a stream yields; nullopt = unlimited.
  std::optional<std::uint64_t> stream_limit;
};

/// True iff some adjacent pair of the one-line notation is a forbidden edge.
/// Adjacency is strictly linear: position n does not wrap to position 1, even
/// for modular problems (the modular part is in the edge set, not the word).
/// Throws std::invalid_argument, listing duplicates and gaps, if perm is not
/// a permutation of [n].
bool contains_forbidden_succession(std::span<const int> perm, const ShiftProblem& problem);

/// Avoider counts split by first element: entry i counts avoiders whose
/// one-line notation starts with i+1. Partitions are searched independently
/// (concurrently for larger n); the split is also the unit tests' handle on
/// the partitioned search.
std::vector<BigCount> partitioned_counts(const EnumerationConfig& config);

/// Number of permutations of [n] avoiding every forbidden succession,
/// counted by backtracking (placements pruned the moment a banned pair forms;
/// S_n is never materialized).
BigCount count_by_enumeration(const EnumerationConfig& config);

/// Lazy lexicographic stream of the avoiding permutations.
class AvoiderStream {
public:
  explicit AvoiderStream(const EnumerationConfig& config);

  /// Next avoider in strict lexicographic order, or nullopt when exhausted
  /// (or the stream limit has been reached).
  std::optional<std::vector<int>> next();

private:
  void pop();

  int n_;
  std::vector<int> succ_;
  std::optional<std::uint64_t> limit_;
  std::uint64_t yielded_ = 0;
  std::vector<int> prefix_;
  std::vector<int> cursor_;  // cursor_[d] = last value tried at depth d
  std::uint64_t used_ = 0;
  bool done_ = false;
};

inline AvoiderStream enumerate_avoiders(const EnumerationConfig& config) {
  return AvoiderStream(config);
}

/// Drains the stream into a vector (honoring config.stream_limit).
std::vector<std::vector<int>> collect_avoiders(const EnumerationConfig& config);

}  // namespace succession
