#include "succession/cycles.hpp"

#include <numeric>

#include "succession/problem.hpp"

namespace succession {

namespace {

// Bounds are the modular ones: n >= 2, 1 <= k < n.
void check(int n, int k) { ShiftProblem probe(n, k, Variant::modular); (void)probe; }

}  // namespace

CycleDecomposition cycle_decomposition(int n, int k) {
  check(n, k);
  const int g = std::gcd(n, k);
  return CycleDecomposition{std::vector<int>(static_cast<std::size_t>(g), n / g), g};
}

int max_cycle_length(int n, int k) {
  check(n, k);
  return n / std::gcd(n, k);
}

std::vector<std::vector<int>> power_cycles(int n, int k) {
  check(n, k);
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::vector<std::vector<int>> cycles;
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    int j = start;
    do {
      seen[static_cast<std::size_t>(j)] = true;
      cycle.push_back(j);
      j = (j + k - 1) % n + 1;
    } while (j != start);
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

ForbiddenChain longest_forbidden_chain(int n, int k) {
  check(n, k);
  const int m = n / std::gcd(n, k);
  std::vector<int> witness;
  witness.reserve(static_cast<std::size_t>(m));
  int j = 1;
  for (int i = 0; i < m; ++i) {
    witness.push_back(j);
    j = (j + k - 1) % n + 1;
  }
  return ForbiddenChain{m - 1, std::move(witness)};
}

}  // namespace succession
