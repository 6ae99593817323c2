#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace succession {

enum class Variant { linear, modular };

/// A k-shift succession-avoidance instance: permutations of [n], written in
/// one-line notation, that must avoid the adjacent pairs j(j+k). The linear
/// variant forbids j(j+k) for 1 <= j <= n-k only; the modular variant forbids
/// j(j+k) mod n for every j in [n], writing n instead of 0 after the wrap.
///
/// Elements are 1-based throughout. Requires 1 <= k < n; k = 0 (the
/// derangement board) and k >= n are rejected rather than treated as
/// degenerate instances.
class ShiftProblem {
public:
  ShiftProblem(int n, int k, Variant variant);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  Variant variant() const noexcept { return variant_; }
  bool modular() const noexcept { return variant_ == Variant::modular; }

  friend bool operator==(const ShiftProblem&, const ShiftProblem&) = default;

private:
  int n_;
  int k_;
  Variant variant_;
};

/// The banned successor of j: j+k on the linear board (nullopt once j+k > n),
/// (j+k-1 mod n)+1 on the circular one, which never runs off the board.
/// Throws std::domain_error when j or k is out of range.
std::optional<int> successor(int n, int k, Variant variant, int j);
std::optional<int> successor(const ShiftProblem& problem, int j);

/// The full set of forbidden ordered pairs of a problem, with O(1) successor
/// lookup. Every element appears at most once as a first coordinate and at
/// most once as a second coordinate, so the edges form a partial functional
/// graph: n-k disjoint path edges in the linear variant, n edges covering
/// every element in the modular one.
class ForbiddenEdgeSet {
public:
  explicit ForbiddenEdgeSet(const ShiftProblem& problem);

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }

  /// Edges sorted by first coordinate.
  const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }

  /// The banned successor of a, if a has one. a must be in [n].
  std::optional<int> successor_of(int a) const;

  bool contains(int a, int b) const;

private:
  int n_;
  std::vector<int> succ_;  // 1-based; 0 = no banned successor
  std::vector<std::pair<int, int>> edges_;
};

ForbiddenEdgeSet forbidden_edges(const ShiftProblem& problem);

}  // namespace succession
