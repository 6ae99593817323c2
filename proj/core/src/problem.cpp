#include "succession/problem.hpp"

#include <stdexcept>
#include <string>

namespace succession {

namespace {

void check_bounds(int n, int k, Variant variant) {
  if (n < 1) {
    throw std::domain_error("n must be at least 1 (got n=" + std::to_string(n) + ")");
  }
  if (variant == Variant::modular && n < 2) {
    throw std::domain_error("n must be at least 2 for the modular variant (got n=" +
                            std::to_string(n) + ")");
  }
  if (k < 1 || k >= n) {
    throw std::domain_error("k must satisfy 1 <= k < n (got k=" + std::to_string(k) +
                            ", n=" + std::to_string(n) + ")");
  }
}

}  // namespace

ShiftProblem::ShiftProblem(int n, int k, Variant variant) : n_(n), k_(k), variant_(variant) {
  check_bounds(n, k, variant);
}

std::optional<int> successor(int n, int k, Variant variant, int j) {
  check_bounds(n, k, variant);
  if (j < 1 || j > n) {
    throw std::domain_error("j must satisfy 1 <= j <= n (got j=" + std::to_string(j) +
                            ", n=" + std::to_string(n) + ")");
  }
  if (variant == Variant::linear) {
    if (j + k > n) return std::nullopt;
    return j + k;
  }
  return (j + k - 1) % n + 1;
}

std::optional<int> successor(const ShiftProblem& problem, int j) {
  return successor(problem.n(), problem.k(), problem.variant(), j);
}

ForbiddenEdgeSet::ForbiddenEdgeSet(const ShiftProblem& problem)
    : n_(problem.n()), succ_(static_cast<std::size_t>(problem.n()) + 1, 0) {
  for (int j = 1; j <= n_; ++j) {
    if (auto s = successor(problem, j)) {
      succ_[static_cast<std::size_t>(j)] = *s;
      edges_.emplace_back(j, *s);
    }
  }
}

std::optional<int> ForbiddenEdgeSet::successor_of(int a) const {
  if (a < 1 || a > n_) {
    throw std::domain_error("element must satisfy 1 <= a <= n (got a=" + std::to_string(a) +
                            ", n=" + std::to_string(n_) + ")");
  }
  const int s = succ_[static_cast<std::size_t>(a)];
  if (s == 0) return std::nullopt;
  return s;
}

bool ForbiddenEdgeSet::contains(int a, int b) const {
  if (a < 1 || a > n_ || b < 1 || b > n_) return false;
  return succ_[static_cast<std::size_t>(a)] == b;
}

ForbiddenEdgeSet forbidden_edges(const ShiftProblem& problem) {
  return ForbiddenEdgeSet(problem);
}

}  // namespace succession
